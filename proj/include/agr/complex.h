#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "agr/agrarian_map.h"
#include "agr/error.h"
#include "agr/matrix.h"
#include "agr/presentation.h"
#include "agr/words.h"

namespace agr {

// Bounded complex of based free modules over a field object F.  The
// differential d_n: C_n -> C_{n-1} is stored as a rank(n-1) x rank(n) matrix
// acting on column vectors.
template <class F>
class ChainComplex {
 public:
  ChainComplex(F field, int min_deg, std::vector<int> ranks, std::vector<Matrix<F>> diffs,
               std::vector<std::vector<std::string>> labels = {})
      : field_(std::move(field)),
        min_deg_(min_deg),
        ranks_(std::move(ranks)),
        diffs_(std::move(diffs)),
        labels_(std::move(labels)) {
    if (ranks_.empty()) ranks_.push_back(0);
    if (diffs_.size() + 1 != ranks_.size())
      fail(ErrorCode::ComplexNotChain, "expected one differential per adjacent degree pair");
    for (size_t k = 0; k < diffs_.size(); ++k) {
      if (diffs_[k].rows() != ranks_[k] || diffs_[k].cols() != ranks_[k + 1])
        fail(ErrorCode::ComplexNotChain, "differential shape does not match the ranks");
    }
    for (size_t k = 0; k + 1 < diffs_.size(); ++k)
      if (!(diffs_[k] * diffs_[k + 1]).is_zero())
        fail(ErrorCode::ComplexNotChain, "d does not square to zero");
    if (labels_.empty()) labels_.resize(ranks_.size());
    if (labels_.size() != ranks_.size())
      fail(ErrorCode::ComplexNotChain, "labels do not match the degree range");
    for (size_t k = 0; k < labels_.size(); ++k) {
      if (labels_[k].empty()) {
        for (int i = 0; i < ranks_[k]; ++i)
          labels_[k].push_back("e" + std::to_string(min_deg_ + static_cast<int>(k)) + "_" +
                               std::to_string(i));
      }
      if (static_cast<int>(labels_[k].size()) != ranks_[k])
        fail(ErrorCode::ComplexNotChain, "label count does not match the rank");
    }
  }

  static ChainComplex zero(const F& field) { return ChainComplex(field, 0, {0}, {}); }

  const F& field() const { return field_; }
  int min_deg() const { return min_deg_; }
  int max_deg() const { return min_deg_ + static_cast<int>(ranks_.size()) - 1; }

  int rank(int n) const {
    if (n < min_deg() || n > max_deg()) return 0;
    return ranks_[static_cast<size_t>(n - min_deg_)];
  }

  int total_rank() const {
    int s = 0;
    for (int r : ranks_) s += r;
    return s;
  }

  // d_n: C_n -> C_{n-1}; zero-shaped outside the stored range.
  Matrix<F> diff(int n) const {
    if (n <= min_deg() || n > max_deg()) return Matrix<F>(field_, rank(n - 1), rank(n));
    return diffs_[static_cast<size_t>(n - min_deg_ - 1)];
  }

  const std::vector<std::string>& labels(int n) const {
    static const std::vector<std::string> empty;
    if (n < min_deg() || n > max_deg()) return empty;
    return labels_[static_cast<size_t>(n - min_deg_)];
  }

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    if (a.min_deg_ != b.min_deg_ || a.ranks_ != b.ranks_) return false;
    for (size_t k = 0; k < a.diffs_.size(); ++k)
      if (a.diffs_[k] != b.diffs_[k]) return false;
    return true;
  }

 private:
  F field_;
  int min_deg_;
  std::vector<int> ranks_;
  std::vector<Matrix<F>> diffs_;
  std::vector<std::vector<std::string>> labels_;
};

// Degreewise map f_n: from_n -> to_n commuting with the differentials.
template <class F>
class ChainMap {
 public:
  ChainMap(ChainComplex<F> from, ChainComplex<F> to, std::map<int, Matrix<F>> components)
      : from_(std::move(from)), to_(std::move(to)), components_(std::move(components)) {
    for (const auto& [n, m] : components_)
      if (m.rows() != to_.rank(n) || m.cols() != from_.rank(n))
        fail(ErrorCode::NotAChainMap, "component shape mismatch in degree " + std::to_string(n));
    for (int n = from_.min_deg(); n <= from_.max_deg() + 1; ++n) {
      Matrix<F> lhs = to_.diff(n) * component(n);
      Matrix<F> rhs = component(n - 1) * from_.diff(n);
      if (!(lhs - rhs).is_zero())
        fail(ErrorCode::NotAChainMap, "components do not commute with d in degree " +
                                          std::to_string(n));
    }
  }

  const ChainComplex<F>& from() const { return from_; }
  const ChainComplex<F>& to() const { return to_; }

  Matrix<F> component(int n) const {
    auto it = components_.find(n);
    if (it != components_.end()) return it->second;
    return Matrix<F>(from_.field(), to_.rank(n), from_.rank(n));
  }

  static ChainMap identity(const ChainComplex<F>& c) {
    std::map<int, Matrix<F>> comps;
    for (int n = c.min_deg(); n <= c.max_deg(); ++n)
      comps.emplace(n, Matrix<F>::identity(c.field(), c.rank(n)));
    return ChainMap(c, c, std::move(comps));
  }

  static ChainMap zero(const ChainComplex<F>& from, const ChainComplex<F>& to) {
    return ChainMap(from, to, {});
  }

 private:
  ChainComplex<F> from_, to_;
  std::map<int, Matrix<F>> components_;
};

// Degree shift by +1 with negated differentials.
template <class F>
ChainComplex<F> suspension(const ChainComplex<F>& c) {
  std::vector<int> ranks;
  std::vector<Matrix<F>> diffs;
  std::vector<std::vector<std::string>> labels;
  for (int n = c.min_deg(); n <= c.max_deg(); ++n) {
    ranks.push_back(c.rank(n));
    labels.push_back(c.labels(n));
    if (n > c.min_deg()) diffs.push_back(-c.diff(n));
  }
  return ChainComplex<F>(c.field(), c.min_deg() + 1, std::move(ranks), std::move(diffs),
                         std::move(labels));
}

template <class F>
ChainComplex<F> direct_sum(const ChainComplex<F>& a, const ChainComplex<F>& b) {
  if (a.field() != b.field()) fail(ErrorCode::FieldMismatch, "summands over different fields");
  int lo = std::min(a.min_deg(), b.min_deg());
  int hi = std::max(a.max_deg(), b.max_deg());
  std::vector<int> ranks;
  std::vector<Matrix<F>> diffs;
  std::vector<std::vector<std::string>> labels;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(a.rank(n) + b.rank(n));
    std::vector<std::string> lab = a.labels(n);
    for (const std::string& s : b.labels(n)) lab.push_back(s + "'");
    labels.push_back(std::move(lab));
    if (n == lo) continue;
    Matrix<F> d(a.field(), a.rank(n - 1) + b.rank(n - 1), a.rank(n) + b.rank(n));
    Matrix<F> da = a.diff(n), db = b.diff(n);
    for (int i = 0; i < da.rows(); ++i)
      for (int j = 0; j < da.cols(); ++j) d.at(i, j) = da.at(i, j);
    for (int i = 0; i < db.rows(); ++i)
      for (int j = 0; j < db.cols(); ++j) d.at(a.rank(n - 1) + i, a.rank(n) + j) = db.at(i, j);
    diffs.push_back(std::move(d));
  }
  return ChainComplex<F>(a.field(), lo, std::move(ranks), std::move(diffs), std::move(labels));
}

// cone_n = from_{n-1} (+) to_n with differential [[-c, 0], [f, d]].
template <class F>
ChainComplex<F> mapping_cone(const ChainMap<F>& f) {
  const ChainComplex<F>& c = f.from();
  const ChainComplex<F>& d = f.to();
  const F& field = c.field();
  int lo = std::min(c.min_deg() + 1, d.min_deg());
  int hi = std::max(c.max_deg() + 1, d.max_deg());
  std::vector<int> ranks;
  std::vector<Matrix<F>> diffs;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(c.rank(n - 1) + d.rank(n));
    if (n == lo) continue;
    int rows_c = c.rank(n - 2), rows_d = d.rank(n - 1);
    int cols_c = c.rank(n - 1), cols_d = d.rank(n);
    Matrix<F> block(field, rows_c + rows_d, cols_c + cols_d);
    Matrix<F> dc = c.diff(n - 1), fd = f.component(n - 1), dd = d.diff(n);
    for (int i = 0; i < rows_c; ++i)
      for (int j = 0; j < cols_c; ++j) block.at(i, j) = field.neg(dc.at(i, j));
    for (int i = 0; i < rows_d; ++i)
      for (int j = 0; j < cols_c; ++j) block.at(rows_c + i, j) = fd.at(i, j);
    for (int i = 0; i < rows_d; ++i)
      for (int j = 0; j < cols_d; ++j) block.at(rows_c + i, cols_c + j) = dd.at(i, j);
    diffs.push_back(std::move(block));
  }
  return ChainComplex<F>(field, lo, std::move(ranks), std::move(diffs));
}

// The two structural chain maps realising 0 -> to -> cone(f) -> Σ from -> 0.
template <class F>
ChainMap<F> cone_inclusion(const ChainMap<F>& f) {
  ChainComplex<F> cone = mapping_cone(f);
  const ChainComplex<F>& d = f.to();
  std::map<int, Matrix<F>> comps;
  for (int n = d.min_deg(); n <= d.max_deg(); ++n) {
    Matrix<F> inc(d.field(), cone.rank(n), d.rank(n));
    int offset = f.from().rank(n - 1);
    for (int i = 0; i < d.rank(n); ++i) inc.at(offset + i, i) = d.field().one();
    comps.emplace(n, std::move(inc));
  }
  return ChainMap<F>(d, cone, std::move(comps));
}

template <class F>
ChainMap<F> cone_projection(const ChainMap<F>& f) {
  ChainComplex<F> cone = mapping_cone(f);
  ChainComplex<F> sus = suspension(f.from());
  std::map<int, Matrix<F>> comps;
  for (int n = sus.min_deg(); n <= sus.max_deg(); ++n) {
    Matrix<F> proj(cone.field(), sus.rank(n), cone.rank(n));
    for (int i = 0; i < sus.rank(n); ++i) proj.at(i, i) = cone.field().one();
    comps.emplace(n, std::move(proj));
  }
  return ChainMap<F>(cone, sus, std::move(comps));
}

// Direct sum with the elementary two-term complex (+-1): D -> D placed in
// degrees (degree+1, degree); the chain-level stabilisation move.
template <class F>
ChainComplex<F> elementary_expansion(const ChainComplex<F>& c, int degree, bool negative = false) {
  const F& field = c.field();
  Matrix<F> d(field, 1, 1);
  d.at(0, 0) = negative ? field.neg(field.one()) : field.one();
  ChainComplex<F> e(field, degree, {1, 1}, {std::move(d)});
  return direct_sum(c, e);
}

// The presentation 2-complex over the integral group ring of the ambient
// free group: d1 has one column (s - 1) per generator, d2 has Fox-derivative
// entries with rows indexed by generators and columns by relators.
struct SymbolicComplex {
  Presentation pres;
  // d1[j] = s_j - 1; d2[i][j] = fox_derivative(relator j, generator i).
  std::vector<GroupRingSum> d1;
  std::vector<std::vector<GroupRingSum>> d2;

  int rank(int n) const {
    if (n == 0) return 1;
    if (n == 1) return pres.ngens();
    if (n == 2) return pres.nrels();
    return 0;
  }
};

inline SymbolicComplex presentation_complex(const Presentation& p) {
  SymbolicComplex c{p, {}, {}};
  for (int j = 0; j < p.ngens(); ++j) {
    GroupRingSum col;
    col.add(FreeWord::generator(j), 1);
    col.add(FreeWord(), -1);
    c.d1.push_back(std::move(col));
  }
  c.d2.assign(static_cast<size_t>(p.ngens()), {});
  for (int i = 0; i < p.ngens(); ++i)
    for (int j = 0; j < p.nrels(); ++j)
      c.d2[static_cast<size_t>(i)].push_back(
          fox_derivative(p.relators()[static_cast<size_t>(j)], i));
  return c;
}

// D (x) C_*: pushes every entry through the agrarian map and checks the
// result is a complex, which certifies the Fox identities along the way.
template <class F>
ChainComplex<F> specialize(const SymbolicComplex& c, const AgrarianMap<F>& alpha) {
  if (alpha.ngens() != c.pres.ngens())
    fail(ErrorCode::UnknownGenerator, "map does not cover the presentation's generators");
  const F& field = alpha.field();
  int g = c.pres.ngens(), r = c.pres.nrels();
  Matrix<F> d1(field, 1, g), d2(field, g, r);
  for (int j = 0; j < g; ++j) d1.at(0, j) = alpha.push_forward(c.d1[static_cast<size_t>(j)]);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < r; ++j)
      d2.at(i, j) = alpha.push_forward(c.d2[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  if (!(d1 * d2).is_zero())
    fail(ErrorCode::ComplexNotChain, "specialised Fox matrix does not form a complex");
  std::vector<std::vector<std::string>> labels(3);
  labels[0] = {"pt"};
  labels[1] = c.pres.names();
  for (int j = 0; j < r; ++j) labels[2].push_back("r" + std::to_string(j + 1));
  return ChainComplex<F>(field, 0, {1, g, r}, {std::move(d1), std::move(d2)}, std::move(labels));
}

}  // namespace agr
