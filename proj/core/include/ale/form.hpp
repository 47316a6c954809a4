#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ale/radial.hpp"

namespace ale {

// Strictly increasing subset of {1,2,3,4}, stored as a 4-bit mask. The
// canonical label of one wedge basis element dx^{i1} ^ ... ^ dx^{ik}.
class IndexSet {
 public:
  IndexSet() = default;
  static IndexSet empty() { return IndexSet(); }
  static IndexSet of(std::initializer_list<int> indices);
  static IndexSet full() { return IndexSet(0b1111); }
  static IndexSet single(int k);
  /// The complement within {1,2,3,4}.
  IndexSet complement() const { return IndexSet(static_cast<std::uint8_t>(~mask_ & 0b1111)); }

  bool contains(int k) const { return mask_ & (1u << (k - 1)); }
  int grade() const;
  bool disjoint(IndexSet o) const { return (mask_ & o.mask_) == 0; }
  IndexSet unite(IndexSet o) const { return IndexSet(static_cast<std::uint8_t>(mask_ | o.mask_)); }

  /// Sign of merging two disjoint sorted index blocks into one sorted block:
  /// (-1)^(number of transpositions).
  static int merge_sign(IndexSet a, IndexSet b);

  auto operator<=>(const IndexSet&) const = default;
  std::uint8_t mask() const { return mask_; }
  std::string to_string() const;  // "dx1^dx3" style; "1" for the empty set

 private:
  explicit IndexSet(std::uint8_t mask) : mask_(mask) {}
  std::uint8_t mask_ = 0;
};

// Exterior-algebra element on R^4 with RadialRational coefficients, stored
// on the canonical increasing basis. Mixed grades are allowed; most of the
// pipeline uses pure grade 1 or 3.
class Form {
 public:
  Form() = default;
  Form(IndexSet basis, RadialRational coeff);
  static Form scalar(RadialRational f) { return Form(IndexSet::empty(), std::move(f)); }
  static Form dx(int k) { return Form(IndexSet::single(k), RadialRational::constant(1)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexSet, RadialRational>& terms() const { return terms_; }
  RadialRational coefficient(IndexSet s) const;
  /// -1 if empty, the common grade if pure, -2 if mixed.
  int grade() const;

  Form& operator+=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b);
  Form operator-() const;
  friend Form operator*(const RadialRational& c, const Form& w);
  friend Form operator*(const Rational& c, const Form& w);
  bool operator==(const Form&) const = default;

  std::string to_string() const;

 private:
  void add_term(IndexSet s, const RadialRational& c);
  std::map<IndexSet, RadialRational> terms_;
};

/// Graded anticommutative product.
Form wedge(const Form& a, const Form& b);

/// Exterior derivative; coefficients via RadialRational::derivative.
Form exterior_d(const Form& f);

/// Euclidean Hodge star on R^4 with epsilon_{1234} = +1:
/// *(dx^I) = sign * dx^(complement of I).
Form hodge_star_flat(const Form& f);

struct GradeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Face value of a grade-3 form on the cube face x^p = side:
/// (-1)^(p-1) times the coefficient of the index set omitting p, with
/// x^p := side substituted. On the face, r^2 is implicitly
/// 1 + sum of the remaining squares.
RadialRational face_flux(const Form& w, int p, int side);

/// gamma_p = (-1)^(p-1) dx^1 ^ ... ^ (omit dx^p) ^ ... ^ dx^4.
Form gamma_form(int p);

}  // namespace ale
