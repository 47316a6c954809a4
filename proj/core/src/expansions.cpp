#include "ale/expansions.hpp"

namespace ale {

RadialRational eta_tilde(const Tensor2& h, int i, int j) {
  return Rational(1, 4) * h.at(i, j).times_r2_power(1);
}

Form L_form(const Tensor2& h, int i1, int i2) {
  // g = h_{i1 i2} + sum_j x^{i1} h_{i2 j | j}
  RadialRational g = h.at(i1, i2);
  for (int j = 1; j <= 4; ++j)
    g = g + Poly::geom(i1) * h.at(i2, j).derivative(j);
  Form out;
  for (int k = 1; k <= 4; ++k) out += Form(IndexSet::single(k), g.derivative(k));
  for (int i = 1; i <= 4; ++i) {
    RadialRational acc;
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          int c = ((i1 == l && i2 == k) ? 1 : 0) - ((i1 == k && i2 == l) ? 1 : 0);
          if (c == 0) continue;
          RadialRational inner;
          if (i == k) inner = inner + h.at(j, l);
          if (j == l) inner = inner + h.at(i, k);
          if (inner.is_zero()) continue;
          acc = acc + Rational(c) * inner.derivative(j);
        }
    if (!acc.is_zero()) out += Form(IndexSet::single(i), acc);
  }
  return out;
}

Form mu_tilde(const Tensor2& h, int i1, int i2) {
  Form out;
  for (const auto& [s, c] : L_form(h, i1, i2).terms())
    out += Form(s, Rational(1, 12) * c.times_r2_power(1));
  return out;
}

Form tomega_form(const Tensor2& h, int i1, int i2) {
  Form out = mu_tilde(h, i1, i2);
  for (int l = 1; l <= 4; ++l) {
    Poly numer;
    for (int k = 1; k <= 4; ++k) {
      Monomial m = Monomial::var(SymbolId::con(i1, i2, k, l)).times(Monomial::var(SymbolId::geom(k)));
      numer += Poly(m, Rational(1));
    }
    out += Form(IndexSet::single(l), RadialRational(numer, 2));
  }
  return out;
}

Form omega_form(const Tensor2& h, int i1, int i2) {
  Form lead(IndexSet::single(i2), RadialRational(Poly::geom(i1)));
  return lead - tomega_form(h, i1, i2);
}

RadialRational u_func(const Tensor2& h, int i, int j) {
  RadialRational out(Poly::geom(i) * Poly::geom(j));
  out = out - eta_tilde(h, i, j);
  if (i == j) out = out + RadialRational(Poly(SymbolId::cvol()), 1);
  return out;
}

RadialRational christoffel_leading(const Tensor2& h, int i, int j, int k) {
  RadialRational g =
      h.at(i, k).derivative(j) + h.at(j, k).derivative(i) - h.at(i, j).derivative(k);
  return Rational(1, 2) * g;
}

ExpansionTerms build_expansion_terms() {
  Tensor2 h = build_h_plus(SymParam3::zeta_symbols()) + build_h_minus(SymParam3::xi_symbols());
  return build_expansion_terms(h);
}

ExpansionTerms build_expansion_terms(const Tensor2& h) {
  ExpansionTerms t;
  t.h = h;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      t.eta[i - 1][j - 1] = eta_tilde(h, i, j);
      t.L[i - 1][j - 1] = L_form(h, i, j);
      Form mu;
      for (const auto& [s, c] : t.L[i - 1][j - 1].terms())
        mu += Form(s, Rational(1, 12) * c.times_r2_power(1));
      t.mu[i - 1][j - 1] = mu;
      Form tom = mu;
      for (int l = 1; l <= 4; ++l) {
        Poly numer;
        for (int k = 1; k <= 4; ++k)
          numer += Poly(Monomial::var(SymbolId::con(i, j, k, l)).times(Monomial::var(SymbolId::geom(k))),
                        Rational(1));
        tom += Form(IndexSet::single(l), RadialRational(numer, 2));
      }
      t.tomega[i - 1][j - 1] = tom;
      t.omega[i - 1][j - 1] = Form(IndexSet::single(j), RadialRational(Poly::geom(i))) - tom;
      t.u[i - 1][j - 1] = u_func(h, i, j);
      for (int k = 1; k <= 4; ++k) t.gamma[i - 1][j - 1][k - 1] = christoffel_leading(h, i, j, k);
    }
  return t;
}

}  // namespace ale
