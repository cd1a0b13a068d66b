#pragma once

#include <string>
#include <utility>
#include <vector>

#include "agr/error.h"
#include "agr/presentation.h"
#include "agr/rational.h"
#include "agr/words.h"

namespace agr {

enum class MapKind { Augmentation, Abelianisation, TwistedUnivariate };

inline const char* map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::Augmentation: return "augmentation";
    case MapKind::Abelianisation: return "abelianisation";
    case MapKind::TwistedUnivariate: return "twisted-univariate";
  }
  return "unknown";
}

// A choice of unit images for the generators of a presentation, landing in a
// (skew) field F.  Words push forward multiplicatively, integral group-ring
// sums additively on top of that.
template <class F>
class AgrarianMap {
 public:
  using Elem = typename F::Elem;

  AgrarianMap(F field, MapKind kind, std::vector<Elem> images)
      : field_(std::move(field)), kind_(kind), images_(std::move(images)) {
    inverses_.reserve(images_.size());
    for (const Elem& im : images_) {
      if (field_.is_zero(im))
        fail(ErrorCode::ZeroElement, "generator images must be units");
      inverses_.push_back(field_.inv(im));
    }
  }

  const F& field() const { return field_; }
  MapKind kind() const { return kind_; }
  int ngens() const { return static_cast<int>(images_.size()); }
  const std::vector<Elem>& images() const { return images_; }

  const Elem& image(int gen) const {
    check_gen(gen);
    return images_[static_cast<size_t>(gen)];
  }

  Elem push_forward_word(const FreeWord& w) const {
    Elem r = field_.one();
    for (int l : w.letters()) {
      int g = std::abs(l) - 1;
      check_gen(g);
      const Elem& factor = l > 0 ? images_[static_cast<size_t>(g)]
                                 : inverses_[static_cast<size_t>(g)];
      r = field_.mul(r, factor);
    }
    return r;
  }

  Elem push_forward(const GroupRingSum& s) const {
    Elem r = field_.zero();
    for (const auto& [w, c] : s.terms()) {
      Elem term = field_.mul(field_.constant(Rational(static_cast<long>(c))),
                             push_forward_word(w));
      r = field_.add(r, term);
    }
    return r;
  }

  // Every relator must map to 1 for the images to define a map on the group.
  void check_relators(const Presentation& p) const {
    if (p.ngens() != ngens())
      fail(ErrorCode::UnknownGenerator, "image count does not match the presentation");
    for (int i = 0; i < p.nrels(); ++i) {
      Elem v = push_forward_word(p.relators()[static_cast<size_t>(i)]);
      if (!field_.eq(v, field_.one()))
        fail(ErrorCode::RelatorNotKilled,
             "relator " + p.word_str(p.relators()[static_cast<size_t>(i)]) +
                 " does not map to 1");
    }
  }

 private:
  void check_gen(int g) const {
    if (g < 0 || g >= ngens())
      fail(ErrorCode::UnknownGenerator, "word uses a generator outside the presentation");
  }

  F field_;
  MapKind kind_;
  std::vector<Elem> images_;
  std::vector<Elem> inverses_;
};

}  // namespace agr
