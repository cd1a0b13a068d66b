#pragma once

#include <gmpxx.h>

#include <vector>

#include "agr/presentation.h"

namespace agr {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Smith normal form U A V = D with U tracked (V is not needed by callers).
// diag holds the nonzero invariant factors, positive and each dividing the
// next; rank is their count. Rows of U beyond `rank` span the left kernel.
struct SmithResult {
  IntMatrix U;
  std::vector<mpz_class> diag;
  int rank = 0;
};

SmithResult smith_left(IntMatrix A);

// Row Hermite normal form: unimodular row operations only. Pivots are
// positive, entries above a pivot lie in [0, pivot), zero rows sink to the
// bottom. This is the canonical representative of the row space.
IntMatrix hnf_rows(IntMatrix P);

// Free abelianisation data of a presentation: G^ab has free rank `rank`,
// and generator i maps to images[i] in Z^rank. The projection matrix is
// canonicalised by row Hermite form, so images are presentation-invariant.
// torsion lists the invariant factors > 1 of the torsion part.
struct Abelianization {
  int rank = 0;
  std::vector<std::vector<long long>> images;
  std::vector<long long> torsion;
};

Abelianization abelianize(const Presentation& p);

}  // namespace agr
