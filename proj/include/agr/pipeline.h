#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agr/agrarian_map.h"
#include "agr/complex.h"
#include "agr/invariants.h"
#include "agr/polytope.h"
#include "agr/presentation.h"

namespace agr {

// Canonical rational maps attached to a presentation: the abelianisation
// sends each generator to the monomial of its image in the free part of
// G^ab, the augmentation sends every generator to 1.
AgrarianMap<FunctionField> abelianisation_map(const Presentation& p);
AgrarianMap<FunctionField> augmentation_map(const Presentation& p);

// Record for one generator s_i of a deficiency-1 presentation: the minor A_i
// of the Fox Jacobian with the s_i row removed, its determinant, and the
// candidate polytope difference P(det A_i) - P(alpha(s_i) - 1).
struct GeneratorCandidate {
  std::string generator;
  bool admissible = false;  // alpha(s_i) != 1, so characters with phi(s_i) != 0 exist
  bool singular = false;    // admissible but det A_i = 0; candidate skipped
  RationalFunction determinant;
  std::optional<IntegralPolytope> det_polytope;
  std::optional<IntegralPolytope> letter_polytope;
  std::optional<PolytopeDifference> candidate;
};

struct PipelineReport {
  Presentation presentation;
  AgrarianMap<FunctionField> map;
  BettiReport acyclicity;
  std::vector<GeneratorCandidate> generators;
  // Representative of the translation class, taken from the first admissible
  // generator with a nonsingular minor.
  std::optional<PolytopeDifference> agrarian_polytope;
  // Honest polytope form of the class, present when det A_i divided by
  // alpha(s_i) - 1 is a Laurent polynomial; normalised to the origin.
  std::optional<IntegralPolytope> single_polytope;
  bool consistency = false;
};

// Deficiency-1 pipeline over a rational map: build the presentation complex,
// specialise, require acyclicity, then form the row-deleted minors and their
// candidate polytope differences and cross-check that all admissible
// candidates agree modulo translation.
PipelineReport run_pipeline(const Presentation& p, const AgrarianMap<FunctionField>& alpha);

// The agrarian polytope of an acyclic based complex: the polytope
// homomorphism applied to the inverse of the torsion, so that suspension
// conventions cancel and the pipeline identity holds on the nose.
PolytopeDifference torsion_polytope(const ChainComplex<FunctionField>& c);
PolytopeDifference torsion_polytope(const ChainComplex<SkewField>& c);

// Marked-polytope BNS query.  The marking is caller-supplied data; its
// polytope must match the pipeline's polytope, either the reduced single
// polytope or the plus part of the stored representative, up to translation.
bool bns_query(const PipelineReport& report, const Character& phi, const MarkedPolytope& marking);

}  // namespace agr
