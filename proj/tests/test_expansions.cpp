#include <doctest.h>

#include "ale/expansions.hpp"
#include "test_util.hpp"

using namespace ale;
using ale::testing::Rng;

namespace {

const ExpansionTerms& terms() {
  static const ExpansionTerms t = build_expansion_terms();
  return t;
}

// geometer's sign: Delta = -sum_k d_k^2
RadialRational flat_laplacian(const RadialRational& f) {
  RadialRational lap;
  for (int k = 1; k <= 4; ++k) lap = lap + f.derivative(k).derivative(k);
  return -lap;
}

Tensor2 specialized_h(Rng& rng) {
  SymParam3 z, xi;
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 3; ++b) {
      z.set(a, b, Poly(rng.rational()));
      xi.set(a, b, Poly(rng.rational()));
    }
  return build_h_plus(z) + build_h_minus(xi);
}

}  // namespace

TEST_CASE("eta~ solves Delta eta~ = 2h for all components") {
  const auto& t = terms();
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) {
      CHECK(flat_laplacian(t.eta[i - 1][j - 1]) == Rational(2) * t.h.at(i, j));
      if (!t.eta[i - 1][j - 1].is_zero())
        CHECK(t.eta[i - 1][j - 1].homogeneity_degree() == -2);
    }
}

TEST_CASE("eta~ vanishes with zero parameters") {
  Tensor2 zero = build_h_plus(SymParam3::zero());
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(eta_tilde(zero, i, j).is_zero());
}

TEST_CASE("L has harmonic degree -5 coefficients") {
  const auto& t = terms();
  for (int i1 = 1; i1 <= 4; ++i1)
    for (int i2 = 1; i2 <= 4; ++i2)
      for (int l = 1; l <= 4; ++l) {
        RadialRational c = t.L[i1 - 1][i2 - 1].coefficient(IndexSet::single(l));
        if (c.is_zero()) continue;
        CHECK(c.homogeneity_degree() == -5);
        RadialRational lap;
        for (int k = 1; k <= 4; ++k) lap = lap + c.derivative(k).derivative(k);
        CHECK(lap.is_zero());
      }
}

TEST_CASE("mu~ solves Delta mu~ = L componentwise") {
  const auto& t = terms();
  for (int i1 = 1; i1 <= 4; ++i1)
    for (int i2 = 1; i2 <= 4; ++i2)
      for (int l = 1; l <= 4; ++l) {
        RadialRational mu = t.mu[i1 - 1][i2 - 1].coefficient(IndexSet::single(l));
        RadialRational L = t.L[i1 - 1][i2 - 1].coefficient(IndexSet::single(l));
        CHECK(flat_laplacian(mu) == L);
        if (!mu.is_zero()) CHECK(mu.homogeneity_degree() == -3);
      }
}

TEST_CASE("L and mu~ vanish with zero parameters") {
  Tensor2 zero = build_h_plus(SymParam3::zero());
  CHECK(L_form(zero, 1, 2).is_zero());
  CHECK(mu_tilde(zero, 3, 4).is_zero());
}

TEST_CASE("L is jointly linear in the parameters") {
  Rng rng(101);
  for (int trial = 0; trial < 5; ++trial) {
    Tensor2 a = specialized_h(rng), b = specialized_h(rng);
    Tensor2 sum = a + b;
    for (int l = 1; l <= 4; ++l) {
      Form la = L_form(a, 1, 2), lb = L_form(b, 1, 2), ls = L_form(sum, 1, 2);
      CHECK(ls.coefficient(IndexSet::single(l)) ==
            la.coefficient(IndexSet::single(l)) + lb.coefficient(IndexSet::single(l)));
    }
  }
}

TEST_CASE("u carries the volume term only on the diagonal") {
  const auto& t = terms();
  // u_11 = x1^2 - eta~_11 + CVol/r^2
  RadialRational expect =
      RadialRational(Poly::geom(1) * Poly::geom(1)) - t.eta[0][0] +
      RadialRational(Poly(SymbolId::cvol()), 1);
  CHECK(t.u[0][0] == expect);
  // u_12 = x1 x2 - eta~_12, no 1/r^2 term
  RadialRational expect12 = RadialRational(Poly::geom(1) * Poly::geom(2)) - t.eta[0][1];
  CHECK(t.u[0][1] == expect12);
  CHECK(!t.u[0][1].numerator().contains_symbol(SymbolId::cvol()));
}

TEST_CASE("omega reduces to the leading term without parameters and constants") {
  Tensor2 zero = build_h_plus(SymParam3::zero());
  for (int i1 = 1; i1 <= 4; ++i1)
    for (int i2 = 1; i2 <= 4; ++i2) {
      Form om = omega_form(zero, i1, i2);
      // strip the Con terms: specialize every Con symbol to zero
      Form lead;
      for (const auto& [s, c] : om.terms()) {
        Poly kept;
        for (const auto& [m, coeff] : c.numerator().terms())
          if (m.degree_in_kind(SymbolKind::Con) == 0) kept += Poly(m, coeff);
        if (!kept.is_zero()) lead += Form(s, RadialRational(kept, c.denominator_exponent()));
      }
      CHECK(lead == Form(IndexSet::single(i2), RadialRational(Poly::geom(i1))));
    }
}

TEST_CASE("t~omega is affine in Con with each basis coefficient exactly once") {
  const auto& t = terms();
  for (int i1 = 1; i1 <= 4; ++i1)
    for (int i2 = 1; i2 <= 4; ++i2)
      for (int l = 1; l <= 4; ++l) {
        RadialRational c = t.tomega[i1 - 1][i2 - 1].coefficient(IndexSet::single(l));
        CHECK(c.numerator().degree_in_kind(SymbolKind::Con) == 1);
        for (int k = 1; k <= 4; ++k) {
          // the coefficient of Con[i1,i2,k,l] must be exactly x^k r^(2m-2...)
          Poly coeff = c.numerator().coefficient_of_linear(SymbolId::con(i1, i2, k, l));
          RadialRational val(coeff, c.denominator_exponent());
          CHECK(val == RadialRational(Poly::geom(k), 2));
        }
      }
}

TEST_CASE("leading Christoffel symbols") {
  const auto& t = terms();
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    int i = rng.uniform(1, 4), j = rng.uniform(1, 4), k = rng.uniform(1, 4);
    CHECK(t.gamma[i - 1][j - 1][k - 1] == t.gamma[j - 1][i - 1][k - 1]);
  }
  // contraction Gamma^k_{kj} = (1/2) sum_k h_kk|j = 0 by trace-freeness
  for (int j = 1; j <= 4; ++j) {
    RadialRational contraction;
    for (int k = 1; k <= 4; ++k) contraction = contraction + t.gamma[k - 1][j - 1][k - 1];
    CHECK(contraction.is_zero());
  }
  Tensor2 zero = build_h_plus(SymParam3::zero());
  CHECK(christoffel_leading(zero, 1, 2, 3).is_zero());
}
