#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ale/rational.hpp"
#include "ale/symbol.hpp"

namespace ale {

// Canonical monomial: factors sorted by SymbolId, exponents >= 1.
class Monomial {
 public:
  using Entry = std::pair<SymbolId, int>;

  Monomial() = default;
  static Monomial var(SymbolId s, int exp = 1);

  Monomial times(const Monomial& o) const;
  int exponent(SymbolId s) const;
  int total_degree() const;
  int geometric_degree() const;
  int degree_in_kind(SymbolKind k) const;

  bool is_one() const { return factors_.empty(); }
  const std::vector<Entry>& factors() const { return factors_; }

  /// Splits into the coordinate part and the parameter (non-coordinate) part.
  std::pair<Monomial, Monomial> split_geometric() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Entry> factors_;
};

// Sparse multivariate polynomial over exact rationals. Zero coefficients are
// never stored; equality is structural.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c);
  explicit Poly(SymbolId s);
  Poly(Monomial m, Rational c);

  static Poly geom(int k) { return Poly(SymbolId::geom(k)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly& operator*=(const Rational& c);
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  bool operator==(const Poly&) const = default;

  /// Formal partial derivative in x^k; every non-coordinate symbol is a
  /// constant.
  Poly derivative(int k) const;

  /// x^k := value (exact).
  Poly substitute_geom(int k, const Rational& value) const;
  /// All four coordinates replaced at once.
  Poly evaluate_geom(const std::array<Rational, 4>& point) const;

  int total_degree() const;
  int geometric_degree() const;
  /// Degree of the polynomial in all symbols of one kind combined.
  int degree_in_kind(SymbolKind k) const;
  /// The common geometric degree of all terms, or nullopt if mixed / zero.
  std::optional<int> homogeneous_geometric_degree() const;

  bool contains_symbol(SymbolId s) const;
  /// Coefficient polynomial of a symbol that occurs at most linearly;
  /// throws std::logic_error when a higher power shows up.
  Poly coefficient_of_linear(SymbolId s) const;
  /// Terms free of the symbol.
  Poly without_symbol(SymbolId s) const;
  /// Replaces every occurrence of the symbol by the given value (powers via
  /// repeated multiplication).
  Poly substitute_symbol(SymbolId s, const Poly& value) const;

  /// Exact division by r^2 = (x1)^2 + ... + (x4)^2, or nullopt when the
  /// remainder is nonzero. Long division in x4, which is valid because r^2
  /// is monic in x4.
  std::optional<Poly> divided_by_r2() const;

  /// Groups terms by coordinate monomial: every value is a polynomial in
  /// parameter symbols only. Used to turn "this vanishes identically" into
  /// one linear equation per coordinate monomial.
  std::map<Monomial, Poly> collect_by_geometric() const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// (x1)^2 + (x2)^2 + (x3)^2 + (x4)^2.
const Poly& r2_poly();

}  // namespace ale
