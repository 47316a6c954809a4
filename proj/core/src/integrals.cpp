#include "ale/integrals.hpp"

#include <algorithm>
#include <vector>

namespace ale {

Poly classify_face_integral(const RadialRational& restricted, int m, int axis) {
  if (m != 3 && m != 4) throw WeightMismatch("classifier weight must be 3 or 4");
  if (restricted.denominator_exponent() != m && !restricted.is_zero())
    throw WeightMismatch("denominator exponent " +
                         std::to_string(restricted.denominator_exponent()) +
                         " does not match classifier weight " + std::to_string(m));
  const int max_degree = (m == 3) ? 3 : 5;
  Poly out;
  for (const auto& [mono, coeff] : restricted.numerator().terms()) {
    auto [geo, par] = mono.split_geometric();
    if (geo.exponent(SymbolId::geom(axis)) != 0)
      throw WeightMismatch("restricted axis variable still present");
    if (geo.total_degree() > max_degree)
      throw DegreeOverflow("numerator degree " + std::to_string(geo.total_degree()) +
                           " exceeds weight-" + std::to_string(m) + " table");
    bool odd = false;
    std::vector<int> evens;
    for (const auto& [sym, e] : geo.factors()) {
      if (e % 2) {
        odd = true;
        break;
      }
      evens.push_back(e);
    }
    if (odd) continue;
    std::sort(evens.begin(), evens.end());
    SymbolId cls = SymbolId::cconst(1);
    if (m == 3) {
      if (evens.empty())
        cls = SymbolId::cconst(1);
      else if (evens == std::vector<int>{2})
        cls = SymbolId::cconst(2);
      else
        continue;
    } else {
      if (evens.empty())
        cls = SymbolId::sigma(4);
      else if (evens == std::vector<int>{2})
        cls = SymbolId::sigma(3);
      else if (evens == std::vector<int>{4})
        cls = SymbolId::sigma(1);
      else if (evens == std::vector<int>{2, 2})
        cls = SymbolId::sigma(2);
      else
        continue;
    }
    out += Poly(par.times(Monomial::var(cls)), coeff);
  }
  return out;
}

Poly integrate_over_cube_boundary(const Form& w, int m) {
  Poly out;
  if (w.is_zero()) return out;
  if (w.grade() != 3) throw GradeMismatch("cube-boundary integration expects a grade-3 form");
  // Lift every coefficient to denominator weight m while still on R^4; the
  // face substitution afterwards changes what r^2 means, so the order
  // matters.
  Form lifted;
  for (const auto& [s, c] : w.terms()) {
    if (c.denominator_exponent() > m)
      throw WeightMismatch("coefficient weight " + std::to_string(c.denominator_exponent()) +
                           " exceeds classifier weight " + std::to_string(m));
    lifted += Form(s, RadialRational::unreduced(c.numerator_at(m), m));
  }
  for (int p = 1; p <= 4; ++p) {
    out += classify_face_integral(face_flux(lifted, p, +1), m, p);
    out -= classify_face_integral(face_flux(lifted, p, -1), m, p);
  }
  return out;
}

namespace {

Poly eval_at_signs(const Poly& p, const Rational& scale) {
  Poly sum;
  for (int mask = 0; mask < 16; ++mask) {
    std::array<Rational, 4> pt;
    for (int k = 0; k < 4; ++k) pt[k] = (mask & (1 << k)) ? -scale : scale;
    sum += p.evaluate_geom(pt);
  }
  return sum;
}

Poly eval_at_units(const Poly& p) {
  Poly sum;
  for (int k = 0; k < 4; ++k)
    for (int s : {1, -1}) {
      std::array<Rational, 4> pt{Rational(0), Rational(0), Rational(0), Rational(0)};
      pt[k] = s;
      sum += p.evaluate_geom(pt);
    }
  return sum;
}

}  // namespace

Poly operator_F_eval(const Poly& p) {
  Poly g1 = eval_at_signs(p, 1);
  Poly g2 = p.evaluate_geom({Rational(0), Rational(0), Rational(0), Rational(0)});
  Poly c1(SymbolId::cconst(1)), c2(SymbolId::cconst(2));
  return g1 * Rational(1, 16) * c1 + g2 * (c2 - c1);
}

Poly operator_G_eval(const Poly& p) {
  Poly g1 = eval_at_signs(p, 1);
  Poly g2 = p.evaluate_geom({Rational(0), Rational(0), Rational(0), Rational(0)});
  Poly g3 = eval_at_signs(p, 2);
  Poly g4 = eval_at_units(p);
  Poly s1(SymbolId::sigma(1)), s2(SymbolId::sigma(2)), s3(SymbolId::sigma(3)), s4(SymbolId::sigma(4));
  Poly out = g1 * (s1 * Rational(-1, 12) + s2 * Rational(1, 16) + s3 * Rational(1, 12));
  out += g2 * (s1 * Rational(-11, 4) + s2 * Rational(3) + s3 * Rational(-5, 4) + s4);
  out += g3 * (s1 * Rational(1, 192) + s3 * Rational(-1, 192));
  out += g4 * (s1 * Rational(1, 2) + s2 * Rational(-1, 2));
  return out;
}

}  // namespace ale
