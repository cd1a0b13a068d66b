#include "agr/pipeline.h"

#include <utility>

#include "agr/matrix.h"
#include "agr/smith.h"

namespace agr {

namespace {

// Newton polytope of a Laurent polynomial given as a reduced fraction with
// monomial denominator: the numerator hull shifted by the denominator
// exponent.
IntegralPolytope laurent_polytope(const RationalFunction& x) {
  if (x.den().terms().size() != 1)
    fail(ErrorCode::Internal, "expected a Laurent polynomial in the pipeline");
  const Monomial& d = x.den().terms().front().first;
  LatticePoint shift(d.size());
  for (size_t i = 0; i < d.size(); ++i) shift[i] = -static_cast<long long>(d[i]);
  return translated(newton_polytope(x.num()), shift);
}

IntegralPolytope normalised_to_origin(const IntegralPolytope& p) {
  LatticePoint shift = p.min_vertex();
  for (long long& c : shift) c = -c;
  return translated(p, shift);
}

}  // namespace

AgrarianMap<FunctionField> abelianisation_map(const Presentation& p) {
  Abelianization ab = abelianize(p);
  FunctionField F(ab.rank);
  std::vector<RationalFunction> images;
  images.reserve(static_cast<size_t>(p.ngens()));
  for (const auto& exps : ab.images) images.push_back(F.monomial(Rational(1), exps));
  return AgrarianMap<FunctionField>(F, MapKind::Abelianisation, std::move(images));
}

AgrarianMap<FunctionField> augmentation_map(const Presentation& p) {
  FunctionField F(0);
  std::vector<RationalFunction> images(static_cast<size_t>(p.ngens()), F.one());
  return AgrarianMap<FunctionField>(F, MapKind::Augmentation, std::move(images));
}

PipelineReport run_pipeline(const Presentation& p, const AgrarianMap<FunctionField>& alpha) {
  if (p.deficiency() != 1)
    fail(ErrorCode::WrongDeficiency, "pipeline needs a deficiency-1 presentation");
  alpha.check_relators(p);

  ChainComplex<FunctionField> c = specialize(presentation_complex(p), alpha);
  BettiReport betti = betti_numbers(c);
  if (!betti.acyclic) detail::fail_not_acyclic(betti);

  const FunctionField& F = alpha.field();
  PipelineReport report{p, alpha, std::move(betti), {}, {}, {}, true};
  Matrix<FunctionField> jacobian = c.diff(2);

  int admissible = 0, usable = 0;
  for (int i = 0; i < p.ngens(); ++i) {
    GeneratorCandidate rec;
    rec.generator = p.names()[static_cast<size_t>(i)];
    rec.determinant = F.zero();
    RationalFunction letter = F.sub(alpha.image(i), F.one());
    rec.admissible = !letter.is_zero();
    if (!rec.admissible) {
      report.generators.push_back(std::move(rec));
      continue;
    }
    ++admissible;
    rec.determinant = dieudonne_det_canonical(jacobian.drop_row(i));
    if (rec.determinant.is_zero()) {
      rec.singular = true;
      report.generators.push_back(std::move(rec));
      continue;
    }
    ++usable;
    rec.det_polytope = laurent_polytope(rec.determinant);
    rec.letter_polytope = laurent_polytope(letter);
    rec.candidate = difference_of(*rec.det_polytope, *rec.letter_polytope);
    if (!report.agrarian_polytope) {
      report.agrarian_polytope = *rec.candidate;
      RationalFunction quotient = rec.determinant / letter;
      if (quotient.den().terms().size() == 1)
        report.single_polytope = normalised_to_origin(newton_polytope(quotient.num()));
    }
    report.generators.push_back(std::move(rec));
  }

  if (admissible == 0)
    fail(ErrorCode::NoAdmissibleGenerator, "every generator maps to the identity");
  if (usable == 0)
    fail(ErrorCode::SingularMinor, "every admissible minor has zero determinant");

  for (const GeneratorCandidate& a : report.generators) {
    if (!a.candidate) continue;
    if (!difference_equal(*a.candidate, *report.agrarian_polytope, true))
      report.consistency = false;
  }
  return report;
}

PolytopeDifference torsion_polytope(const ChainComplex<FunctionField>& c) {
  TorsionValue<FunctionField> nf = torsion_normal_form(c.field(), torsion(c));
  // The polytope consumes the inverse of the chain-level torsion; with this
  // orientation the pipeline identity holds on the nose.
  return polytope_hom(c.field().inv(nf.representative));
}

PolytopeDifference torsion_polytope(const ChainComplex<SkewField>& c) {
  TorsionValue<SkewField> nf = torsion_normal_form(c.field(), torsion(c));
  return polytope_hom(c.field().inv(nf.representative));
}

bool bns_query(const PipelineReport& report, const Character& phi, const MarkedPolytope& marking) {
  if (phi.is_zero()) fail(ErrorCode::ZeroCharacter, "bns query of the zero character");
  bool matches = report.single_polytope &&
                 translation_equal(marking.polytope(), *report.single_polytope);
  if (!matches && report.agrarian_polytope)
    matches = translation_equal(marking.polytope(), report.agrarian_polytope->plus);
  if (!matches)
    fail(ErrorCode::PolytopeMismatch, "marking polytope does not match the agrarian polytope");
  return marked_membership(marking, phi);
}

}  // namespace agr
