#pragma once

#include <map>
#include <string>
#include <vector>

#include "agr/error.h"

namespace agr {

// Freely reduced word in a free group. Letters are nonzero ints: +k is
// generator k-1, -k its inverse. The constructor reduces, so representation
// is canonical.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters) { append(letters); }

  static FreeWord generator(int index, int power = 1) {
    FreeWord w;
    int letter = power >= 0 ? index + 1 : -(index + 1);
    for (int i = std::abs(power); i > 0; --i) w.letters_.push_back(letter);
    return w;
  }

  const std::vector<int>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  size_t length() const { return letters_.size(); }

  FreeWord inverse() const {
    FreeWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
    return w;
  }

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord w = a;
    w.append(b.letters_);
    return w;
  }
  FreeWord& operator*=(const FreeWord& o) { return *this = *this * o; }

  // Net exponent sum of each generator, sized to `ngens`.
  std::vector<long long> exponent_sums(int ngens) const {
    std::vector<long long> e(ngens, 0);
    for (int l : letters_) {
      int g = std::abs(l) - 1;
      if (g >= ngens) fail(ErrorCode::UnknownGenerator, "letter outside generator range");
      e[g] += l > 0 ? 1 : -1;
    }
    return e;
  }

  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }
  friend bool operator<(const FreeWord& a, const FreeWord& b) {
    return a.letters_ < b.letters_;
  }

 private:
  void append(const std::vector<int>& more) {
    for (int l : more) {
      if (l == 0) fail(ErrorCode::Internal, "zero letter in a free word");
      if (!letters_.empty() && letters_.back() == -l) letters_.pop_back();
      else letters_.push_back(l);
    }
  }

  std::vector<int> letters_;
};

// Formal integer combination of free-group elements.
class GroupRingSum {
 public:
  GroupRingSum() = default;

  static GroupRingSum of(const FreeWord& w, long long c = 1) {
    GroupRingSum s;
    s.add(w, c);
    return s;
  }

  const std::map<FreeWord, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const FreeWord& w, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend GroupRingSum operator+(const GroupRingSum& a, const GroupRingSum& b) {
    GroupRingSum r = a;
    for (auto& [w, c] : b.terms_) r.add(w, c);
    return r;
  }
  friend GroupRingSum operator-(const GroupRingSum& a, const GroupRingSum& b) {
    GroupRingSum r = a;
    for (auto& [w, c] : b.terms_) r.add(w, -c);
    return r;
  }
  // Left translation g * sum.
  friend GroupRingSum operator*(const FreeWord& g, const GroupRingSum& s) {
    GroupRingSum r;
    for (auto& [w, c] : s.terms_) r.add(g * w, c);
    return r;
  }

  friend bool operator==(const GroupRingSum& a, const GroupRingSum& b) {
    return a.terms_ == b.terms_;
  }

  // Sum of coefficients: image under the augmentation map.
  long long augmentation() const {
    long long s = 0;
    for (auto& [w, c] : terms_) s += c;
    return s;
  }

 private:
  std::map<FreeWord, long long> terms_;
};

// Fox derivative d/dg of a word, valued in the integral group ring of the
// free group: d(uv) = d(u) + u d(v), d(g) = 1, d(g^{-1}) = -g^{-1}.
inline GroupRingSum fox_derivative(const FreeWord& w, int gen) {
  GroupRingSum d;
  FreeWord prefix;
  for (int l : w.letters()) {
    int g = std::abs(l) - 1;
    if (g == gen) {
      if (l > 0) {
        d.add(prefix, 1);
      } else {
        d.add(prefix * FreeWord::generator(gen, -1), -1);
      }
    }
    prefix *= FreeWord(std::vector<int>{l});
    // prefix stays freely reduced; FreeWord multiplication reduces.
  }
  return d;
}

}  // namespace agr
