#include <doctest.h>

#include "ale/radial.hpp"
#include "test_util.hpp"

using namespace ale;
using ale::testing::Rng;

namespace {
Poly x(int k) { return Poly::geom(k); }
Poly sym(SymbolId s) { return Poly(s); }
}  // namespace

TEST_CASE("rational canonical form") {
  Rational q = Rational(6) / Rational(-4);
  CHECK(num(q) == -3);
  CHECK(den(q) == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(den(Rational(0)) == 1);
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("x"));
  CHECK(!parse_rational(""));
}

TEST_CASE("symbol ordering matches the documented global order") {
  std::vector<SymbolId> order{
      SymbolId::geom(1),       SymbolId::geom(4),        SymbolId::zeta(1, 1),
      SymbolId::zeta(3, 3),    SymbolId::xi(1, 1),       SymbolId::xi(3, 3),
      SymbolId::cvol(),        SymbolId::con(1, 1, 1, 1), SymbolId::con(4, 4, 4, 4),
      SymbolId::sigma(1),      SymbolId::sigma(4),       SymbolId::cconst(1),
      SymbolId::cconst(2),     SymbolId::pi_sq()};
  for (std::size_t i = 0; i + 1 < order.size(); ++i) CHECK(order[i] < order[i + 1]);
  CHECK(SymbolId::zeta(2, 1) == SymbolId::zeta(1, 2));  // stored sorted
  CHECK(SymbolId::con(2, 3, 1, 4).con_index() == std::array<int, 4>{2, 3, 1, 4});
}

TEST_CASE("symbol names round-trip through parse") {
  std::vector<SymbolId> all;
  for (int k = 1; k <= 4; ++k) all.push_back(SymbolId::geom(k));
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 3; ++b) {
      all.push_back(SymbolId::zeta(a, b));
      all.push_back(SymbolId::xi(a, b));
    }
  all.push_back(SymbolId::cvol());
  all.push_back(SymbolId::con(1, 2, 3, 4));
  all.push_back(SymbolId::sigma(2));
  all.push_back(SymbolId::cconst(1));
  all.push_back(SymbolId::pi_sq());
  for (SymbolId s : all) CHECK(SymbolId::parse(s.name()) == s);
  CHECK(!SymbolId::parse("zeta21"));
  CHECK(!SymbolId::parse("Con[0,1,1,1]"));
  CHECK(!SymbolId::parse("x5"));
}

TEST_CASE("polynomial arithmetic on the worked examples") {
  // (x1 + x2)(x1 - x2) = x1^2 - x2^2
  Poly prod = (x(1) + x(2)) * (x(1) - x(2));
  CHECK(prod == x(1) * x(1) - x(2) * x(2));
  // p * 0 = 0
  Rng rng(11);
  for (int i = 0; i < 20; ++i) CHECK((rng.geometric_poly(5, 4) * Poly()).is_zero());
  // like-term collection across parameter coefficients
  Poly collected = sym(SymbolId::zeta(1, 1)) * x(1) + sym(SymbolId::xi(1, 1)) * x(1);
  CHECK(collected == (sym(SymbolId::zeta(1, 1)) + sym(SymbolId::xi(1, 1))) * x(1));
  CHECK(collected.term_count() == 2);
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(7);
  std::vector<SymbolId> syms{SymbolId::geom(1), SymbolId::geom(2), SymbolId::geom(3),
                             SymbolId::geom(4), SymbolId::zeta(1, 2), SymbolId::cvol()};
  for (int i = 0; i < 1000; ++i) {
    Poly a = rng.poly(syms, 4, 3), b = rng.poly(syms, 4, 3), c = rng.poly(syms, 4, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("partial derivative treats parameter symbols as constants") {
  // d1 (x1^2 x3) = 2 x1 x3
  CHECK((x(1) * x(1) * x(3)).derivative(1) == Rational(2) * x(1) * x(3));
  // d2 r^2 = 2 x2
  CHECK(r2_poly().derivative(2) == Rational(2) * x(2));
  // d3 (zeta11 x3^2) = 2 zeta11 x3
  Poly p = sym(SymbolId::zeta(1, 1)) * x(3) * x(3);
  CHECK(p.derivative(3) == Rational(2) * sym(SymbolId::zeta(1, 1)) * x(3));
}

TEST_CASE("radial derivative follows the quotient rule") {
  // d_j (1/r^2) = -2 x^j / r^4
  for (int j = 1; j <= 4; ++j) {
    RadialRational f(Poly(Rational(1)), 1);
    CHECK(f.derivative(j) == RadialRational(Rational(-2) * x(j), 2));
  }
  // d_1 (x1 / r^4) = (r^2 - 4 x1^2) / r^6
  RadialRational g(x(1), 2);
  CHECK(g.derivative(1) == RadialRational(r2_poly() - Rational(4) * x(1) * x(1), 3));
  // constants die
  CHECK(RadialRational(Poly(Rational(3))).derivative(2).is_zero());
}

TEST_CASE("canonicalization divides out maximal powers of r^2") {
  CHECK(RadialRational(r2_poly() * x(1), 2) == RadialRational(x(1), 1));
  CHECK(RadialRational(r2_poly(), 1) == RadialRational(Poly(Rational(1))));
  RadialRational plain{x(1)};
  CHECK(plain.denominator_exponent() == 0);
  CHECK(plain.numerator() == x(1));
  // zero value normalizes the exponent away
  CHECK(RadialRational(Poly(), 3).denominator_exponent() == 0);
}

TEST_CASE("canonicalization is idempotent and value-preserving") {
  Rng rng(23);
  for (int i = 0; i < 400; ++i) {
    Poly numerator = rng.geometric_poly(5, 4);
    int lift = rng.uniform(0, 2);
    for (int k = 0; k < lift; ++k) numerator = numerator * r2_poly();
    int m = rng.uniform(0, 4);
    RadialRational a(numerator, m);
    RadialRational again(a.numerator(), a.denominator_exponent());
    CHECK(a == again);
    // cross-multiplied value check against the unreduced pair
    Poly lhs = a.numerator();
    for (int k = 0; k < m - a.denominator_exponent(); ++k) lhs = lhs * r2_poly();
    CHECK(lhs == numerator);
    CHECK(m >= a.denominator_exponent());
  }
}

TEST_CASE("mixed partials commute on random radial rationals") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    RadialRational f = rng.radial();
    int j = rng.uniform(1, 4), k = rng.uniform(1, 4);
    CHECK(f.derivative(j).derivative(k) == f.derivative(k).derivative(j));
  }
}

TEST_CASE("homogeneity degree and the Euler identity") {
  CHECK(RadialRational(x(1), 1).homogeneity_degree() == -1);
  CHECK(!RadialRational(Poly(Rational(1)) + x(1), 1).homogeneity_degree());
  CHECK(!RadialRational().homogeneity_degree());

  Rng rng(31);
  int found = 0;
  for (int i = 0; i < 500 || found < 50; ++i) {
    REQUIRE(i < 5000);
    RadialRational f = rng.radial(4, 3, 3);
    auto d = f.homogeneity_degree();
    if (!d) continue;
    ++found;
    RadialRational euler;
    for (int k = 1; k <= 4; ++k) euler = euler + x(k) * f.derivative(k);
    CHECK(euler == Rational(*d) * f);
  }
}

TEST_CASE("exact r^2 division detects non-multiples") {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    Poly q = rng.geometric_poly(4, 3);
    Poly p = q * r2_poly();
    auto quot = p.divided_by_r2();
    REQUIRE(quot);
    CHECK(*quot == q);
    if (!q.is_zero()) {
      // x1 alone is never a multiple of r^2
      CHECK(!(p + x(1)).divided_by_r2());
    }
  }
}

TEST_CASE("parameter symbols never reach the denominator") {
  RadialRational f(sym(SymbolId::zeta(1, 2)) * x(1), 2);
  CHECK(f.denominator_exponent() == 2);
  for (const auto& [m, c] : f.numerator().terms())
    for (const auto& [s, e] : m.factors())
      CHECK((s.is_geometric() || s == SymbolId::zeta(1, 2)));
}
