#pragma once

#include <optional>

#include "ale/poly.hpp"

namespace ale {

// A polynomial numerator over a power of r^2: value = num / r^(2m).
// Canonical form: m = 0 or r^2 does not divide num (exact polynomial
// division), and num = 0 implies m = 0. Parameter symbols may appear in the
// numerator only. This is closed under +, *, and d/dx^k, which is all the
// pipeline ever needs of a "rational function".
class RadialRational {
 public:
  RadialRational() = default;
  explicit RadialRational(Poly numerator) : num_(std::move(numerator)) {}
  RadialRational(Poly numerator, int m);

  static RadialRational constant(Rational c) { return RadialRational(Poly(std::move(c))); }

  /// Builds num / r^(2m) without canonicalizing. Only for values already in
  /// canonical form or living on a cube face, where r^2 is not the ambient
  /// polynomial and dividing it out would change the value.
  static RadialRational unreduced(Poly num, int m);

  const Poly& numerator() const { return num_; }
  int denominator_exponent() const { return m_; }
  bool is_zero() const { return num_.is_zero(); }

  RadialRational operator+(const RadialRational& o) const;
  RadialRational operator-(const RadialRational& o) const;
  RadialRational operator*(const RadialRational& o) const;
  RadialRational operator-() const;
  friend RadialRational operator*(const Poly& p, const RadialRational& f) {
    return RadialRational(p * f.num_, f.m_);
  }
  friend RadialRational operator*(const Rational& c, const RadialRational& f) {
    return RadialRational(f.num_ * c, f.m_);
  }
  bool operator==(const RadialRational&) const = default;

  /// d/dx^k via the quotient rule:
  /// d(P/r^2m) = (dP * r^2 - 2m x^k P) / r^(2m+2), then canonicalized.
  RadialRational derivative(int k) const;

  /// Multiplies the value by r^(2s); s may be negative only down to what the
  /// canonical denominator allows.
  RadialRational times_r2_power(int s) const;

  /// Numerator lifted to denominator exponent exactly `m` (no
  /// canonicalization of the result). Throws if the canonical exponent
  /// already exceeds m.
  Poly numerator_at(int m) const;

  /// x^k := value substituted into the numerator; the denominator exponent is
  /// kept. The result lives on the face, where r^2 means
  /// value^2 + sum of the remaining squares, so it is deliberately NOT
  /// canonicalized (r^2 no longer divides like a polynomial there).
  RadialRational restrict_geom(int k, const Rational& value) const;

  /// d - 2m when every numerator term has geometric degree d; nullopt for 0
  /// or mixed degrees.
  std::optional<int> homogeneity_degree() const;

  std::string to_string() const;

 private:
  static RadialRational raw(Poly num, int m);  // no canonicalization
  Poly num_;
  int m_ = 0;
};

}  // namespace ale
