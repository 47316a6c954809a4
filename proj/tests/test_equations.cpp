#include <doctest.h>

#include "ale/equations.hpp"
#include "ale/serialize.hpp"
#include "test_util.hpp"

using namespace ale;

namespace {

Poly sig(int n) { return Poly(SymbolId::sigma(n)); }
Poly pi2() { return Poly(SymbolId::pi_sq()); }

const ExpansionTerms& terms() {
  static const ExpansionTerms t = build_expansion_terms();
  return t;
}

const ReferenceTable& reference() {
  static const ReferenceTable ref = load_reference_table(std::string(ALE_DATA_DIR) +
                                                         "/constants_table.txt");
  return ref;
}

bool reference_satisfies(const std::vector<Equation>& eqs) {
  for (const auto& eq : eqs)
    if (!reference().substitute(eq.lhs.poly()).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("sigma reduction of the identity combinations") {
  CHECK(sigma_reduce(Rational(3) * sig(1) + Rational(6) * sig(2) + Rational(6) * sig(3) + sig(4)) ==
        pi2() * Rational(1, 4));
  CHECK(sigma_reduce(Rational(3) * sig(1) - Rational(6) * sig(2) - Rational(6) * sig(3) + sig(4))
            .is_zero());
  CHECK(sigma_reduce(Rational(24) * sig(1) + Rational(8) * sig(4)) == pi2());
  CHECK_THROWS_AS(sigma_reduce(sig(1)), SigmaResidue);
  CHECK_THROWS_AS(sigma_reduce(Poly(SymbolId::cconst(1))), SigmaResidue);
}

TEST_CASE("sigma split separates the surviving coefficients") {
  Poly e = Poly(SymbolId::con(1, 2, 3, 4)) * sig(1) + Rational(8) * sig(4);
  auto parts = sigma_split(e);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].second == "sigma1");
  CHECK(parts[0].first == Poly(SymbolId::con(1, 2, 3, 4)) - Poly(Rational(24)));
  CHECK(parts[1].second == "pi2");
  CHECK(parts[1].first == Poly(Rational(1)));
}

TEST_CASE("boundary integrals of the harmonic-function family all vanish") {
  auto ints = assemble_harmonic_boundary(terms());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      INFO("Int[", i + 1, ",", j + 1, "]");
      CHECK(ints[i][j].is_zero());
    }
}

TEST_CASE("boundary integrals vanish trivially with zero parameters") {
  ExpansionTerms z = build_expansion_terms(build_h_plus(SymParam3::zero()));
  auto ints = assemble_harmonic_boundary(z);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(ints[i][j].is_zero());
}

TEST_CASE("assembled equations are linear with the expected degrees") {
  for (const auto& eqs : {assemble_differential(terms()), assemble_divergence(terms())})
    for (const auto& eq : eqs) {
      const Poly& p = eq.lhs.poly();
      CHECK(p.degree_in_kind(SymbolKind::Con) <= 1);
      CHECK(p.degree_in_kind(SymbolKind::Zeta) <= 1);
      CHECK(p.degree_in_kind(SymbolKind::Xi) <= 1);
      CHECK(p.degree_in_kind(SymbolKind::CVol) <= 1);
      CHECK(p.degree_in_kind(SymbolKind::Sigma) == 0);
      CHECK(p.total_degree() == 1);
    }
}

TEST_CASE("differential family alone pins the diagonal volume constants") {
  LinearSystem sys;
  sys.families = {Family::Differential};
  sys.equations = assemble_differential(terms());
  SolutionTable partial = solve_system(sys);
  for (int i = 1; i <= 4; ++i) CHECK(partial.at(i, i, i, i) == Poly(SymbolId::cvol()));
  // the (1,1) block of the display: 2(mu~ + Con part) + d(-eta~ + CVol/r^2) = 0
  // is what the equations encode; check one reproduction directly
  Form total = Rational(2) * terms().tomega[0][0];
  total += exterior_d(Form::scalar(RadialRational(Poly(SymbolId::cvol()), 1) - terms().eta[0][0]));
  // substituting the reference table must kill every coefficient
  for (int l = 1; l <= 4; ++l) {
    RadialRational c = total.coefficient(IndexSet::single(l));
    Poly residue;
    for (const auto& [geo, par] : c.numerator().collect_by_geometric())
      if (!reference().substitute(par).is_zero()) residue += par;
    CHECK(residue.is_zero());
  }
}

TEST_CASE("homogeneous specialization forces zero constants") {
  // with zeta = xi = 0 the differential system sends the CVol-free
  // constants' combinations to zero; solve and check a sample
  ExpansionTerms z = build_expansion_terms(build_h_plus(SymParam3::zero()));
  LinearSystem sys;
  sys.families = {Family::Differential};
  sys.equations = assemble_differential(z);
  SolutionTable t = solve_system(sys);
  // Con[1,1,2,3]-type entries become 0 outright (their zeta/xi source is gone)
  CHECK(t.at(1, 1, 2, 3).is_zero());
  CHECK(t.at(1, 1, 1, 1) == Poly(SymbolId::cvol()));
}

TEST_CASE("divergence-free contraction contributes nothing on its own") {
  const auto& t = terms();
  for (int i1 = 1; i1 <= 4; ++i1)
    for (int i2 = 1; i2 <= 4; ++i2) {
      RadialRational sum;
      for (int j = 1; j <= 4; ++j) sum = sum + Poly::geom(i1) * t.h.at(i2, j).derivative(j);
      CHECK(sum.is_zero());
    }
}

TEST_CASE("pairing equations: trivial tuples and the Type III cross-check") {
  const auto& t = terms();
  // identical tuples difference is zero
  Poly d = laplacian_pairing_integral(t, 1, 2, 1, 2) - laplacian_pairing_integral(t, 1, 2, 1, 2);
  CHECK(d.is_zero());
  // the (1,1,2,2) vs (2,2,1,1) difference is satisfied by the reference table
  Poly diff =
      laplacian_pairing_integral(t, 1, 1, 2, 2) - laplacian_pairing_integral(t, 2, 2, 1, 1);
  for (auto& [piece, tag] : sigma_split(diff)) CHECK(reference().substitute(piece).is_zero());
}

TEST_CASE("laplacian-pairing differences carry sigma residuals, covariant ones do not") {
  // The antisymmetrized Laplacian-pairing integrals retain sigma1/sigma2
  // coefficients after eliminating sigma3 and sigma4; those coefficients are
  // genuine equations (they vanish on the solution), not assembly errors.
  // The covariant-derivative family reduces to Pi2 alone.
  const auto& t = terms();
  Poly lap_diff =
      laplacian_pairing_integral(t, 1, 1, 1, 2) - laplacian_pairing_integral(t, 1, 2, 1, 1);
  auto lap_parts = sigma_split(lap_diff);
  bool lap_has_sigma = false;
  for (auto& [piece, tag] : lap_parts) lap_has_sigma |= (tag != "pi2");
  CHECK(lap_has_sigma);
  CHECK_THROWS_AS(sigma_reduce(lap_diff), SigmaResidue);

  Poly cov_diff =
      covariant_pairing_integral(t, 1, 1, 1, 2) - covariant_pairing_integral(t, 1, 2, 1, 1);
  for (auto& [piece, tag] : sigma_split(cov_diff)) CHECK(tag == "pi2");
}

TEST_CASE("reference table satisfies the differential and divergence families") {
  CHECK(reference_satisfies(assemble_differential(terms())));
  CHECK(reference_satisfies(assemble_divergence(terms())));
}

TEST_CASE("solver is deterministic and reports inconsistency") {
  LinearSystem sys;
  sys.families = {Family::Differential};
  sys.equations = assemble_differential(terms());
  SolutionTable a = solve_system(sys), b = solve_system(sys);
  CHECK(emit_table(a) == emit_table(b));

  // inconsistent toy system: Con[1,1,1,1] = CVol and Con[1,1,1,1] = 0
  LinearSystem bad;
  bad.families = {Family::Differential};
  bad.equations.push_back(
      {LinExpr(Poly(SymbolId::con(1, 1, 1, 1)) - Poly(SymbolId::cvol())), "toy:a"});
  bad.equations.push_back({LinExpr(Poly(SymbolId::con(1, 1, 1, 1))), "toy:b"});
  CHECK_THROWS_AS(solve_system(bad), InconsistentSystem);
}

TEST_CASE("corrupting one reference sign is reported by name") {
  ReferenceTable ref = reference();
  // flip the sign of the zeta12 coefficient in Con[1,1,2,3]
  SymbolId victim = SymbolId::con(1, 1, 2, 3);
  ref.rules[victim] = -ref.rules[victim];
  LinearSystem sys;
  sys.families = {Family::Differential};
  sys.equations = assemble_differential(terms());
  SolutionTable solved = solve_system(sys);
  TableCheckReport rep = check_paper_table(ref, sys, solved);
  CHECK(!rep.ok());
  CHECK(std::find(rep.unimplied_rules.begin(), rep.unimplied_rules.end(), victim.name()) !=
        rep.unimplied_rules.end());
  // the untouched table satisfies the same equations, and the victim rule
  // is implied once the sign is restored (the partial system leaves other
  // rules legitimately undetermined)
  TableCheckReport good = check_paper_table(reference(), sys, solved);
  CHECK(good.violated_equations.empty());
  CHECK(std::find(good.unimplied_rules.begin(), good.unimplied_rules.end(), victim.name()) ==
        good.unimplied_rules.end());
}

TEST_CASE("reference free unknowns are the 21 undetermined constants") {
  auto free = reference().free_unknowns();
  CHECK(free.size() == 21);
  // spot checks straight from the table's right-hand sides
  CHECK(std::find(free.begin(), free.end(), SymbolId::con(1, 2, 1, 2)) != free.end());
  CHECK(std::find(free.begin(), free.end(), SymbolId::con(3, 4, 3, 4)) != free.end());
  CHECK(std::find(free.begin(), free.end(), SymbolId::con(1, 1, 1, 1)) == free.end());
}

TEST_CASE("the jointly solved table reproduces the published rows") {
  // full four-family solve, shared across the assertions below
  static const SolutionTable solved = [] {
    LinearSystem sys = assemble_system(terms(), {Family::Differential, Family::Divergence,
                                                 Family::LaplacianPairing,
                                                 Family::CovariantPairing});
    return solve_system(sys);
  }();
  auto zeta = [](int a, int b) { return Poly(SymbolId::zeta(a, b)); };
  auto xi = [](int a, int b) { return Poly(SymbolId::xi(a, b)); };
  Poly cvol(SymbolId::cvol());

  // diagonal constants carry exactly the volume term
  for (int i = 1; i <= 4; ++i) CHECK(solved.at(i, i, i, i) == cvol);

  // three-equal-index constants vanish
  CHECK(solved.at(1, 1, 1, 2).is_zero());
  CHECK(solved.at(2, 1, 1, 1).is_zero());
  CHECK(solved.at(3, 3, 4, 3).is_zero());

  // the paired-index combination
  CHECK(solved.at(1, 1, 2, 2) ==
        cvol - Rational(1, 9) * zeta(1, 1) + Rational(1, 18) * zeta(2, 2) +
            Rational(1, 18) * zeta(3, 3) - Rational(1, 9) * xi(1, 1) +
            Rational(1, 18) * xi(2, 2) + Rational(1, 18) * xi(3, 3));
  CHECK(solved.at(1, 1, 2, 2) == solved.at(2, 2, 1, 1));
  CHECK(solved.at(1, 1, 2, 2) == solved.at(3, 3, 4, 4));

  // mixed pairs determine only the sum of the two arrangements
  Poly pair_sum = solved.substitute(Poly(SymbolId::con(1, 2, 2, 1)) +
                                    Poly(SymbolId::con(1, 2, 1, 2)));
  CHECK(pair_sum == Rational(1, 9) * zeta(1, 1) - Rational(1, 18) * zeta(2, 2) -
                        Rational(1, 18) * zeta(3, 3) + Rational(1, 9) * xi(1, 1) -
                        Rational(1, 18) * xi(2, 2) - Rational(1, 18) * xi(3, 3));

  // one-pair-two-singles constants
  CHECK(solved.at(1, 1, 2, 3) == Rational(-1, 18) * zeta(1, 2) + Rational(-1, 18) * xi(1, 2));
  CHECK(solved.at(1, 1, 2, 3) == solved.at(3, 2, 1, 1));

  // all-distinct constants determine sums of arrangements
  Poly distinct_sum = solved.substitute(Poly(SymbolId::con(1, 2, 4, 3)) +
                                        Poly(SymbolId::con(1, 2, 3, 4)));
  CHECK(distinct_sum == Rational(1, 6) * zeta(2, 2) - Rational(1, 6) * zeta(3, 3) -
                            Rational(1, 6) * xi(2, 2) + Rational(1, 6) * xi(3, 3));
  CHECK(solved.substitute(Poly(SymbolId::con(1, 2, 3, 4)) - Poly(SymbolId::con(4, 3, 2, 1)))
            .is_zero());
}

TEST_CASE("covariant pairing of a tuple with itself vanishes") {
  Poly d = covariant_pairing_integral(terms(), 1, 2, 1, 2) -
           covariant_pairing_integral(terms(), 1, 2, 1, 2);
  CHECK(d.is_zero());
  // and swapped arguments negate the difference
  Poly a = covariant_pairing_integral(terms(), 1, 1, 2, 2) -
           covariant_pairing_integral(terms(), 2, 2, 1, 1);
  Poly b = covariant_pairing_integral(terms(), 2, 2, 1, 1) -
           covariant_pairing_integral(terms(), 1, 1, 2, 2);
  CHECK((a + b).is_zero());
}
