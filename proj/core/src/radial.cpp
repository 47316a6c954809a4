#include "ale/radial.hpp"

#include <stdexcept>

namespace ale {

RadialRational RadialRational::unreduced(Poly num, int m) {
  if (m < 0) throw std::invalid_argument("negative denominator exponent");
  if (num.is_zero()) m = 0;
  return raw(std::move(num), m);
}

RadialRational RadialRational::raw(Poly num, int m) {
  RadialRational f;
  f.num_ = std::move(num);
  f.m_ = f.num_.is_zero() ? 0 : m;
  return f;
}

RadialRational::RadialRational(Poly numerator, int m) : num_(std::move(numerator)), m_(m) {
  if (m_ < 0) throw std::invalid_argument("negative denominator exponent");
  if (num_.is_zero()) {
    m_ = 0;
    return;
  }
  while (m_ > 0) {
    auto q = num_.divided_by_r2();
    if (!q) break;
    num_ = std::move(*q);
    --m_;
  }
}

RadialRational RadialRational::operator+(const RadialRational& o) const {
  int m = std::max(m_, o.m_);
  return RadialRational(numerator_at(m) + o.numerator_at(m), m);
}

RadialRational RadialRational::operator-(const RadialRational& o) const {
  int m = std::max(m_, o.m_);
  return RadialRational(numerator_at(m) - o.numerator_at(m), m);
}

RadialRational RadialRational::operator*(const RadialRational& o) const {
  return RadialRational(num_ * o.num_, m_ + o.m_);
}

RadialRational RadialRational::operator-() const { return raw(-num_, m_); }

RadialRational RadialRational::derivative(int k) const {
  if (num_.is_zero()) return RadialRational();
  Poly dnum = num_.derivative(k) * r2_poly();
  dnum -= Poly(Monomial::var(SymbolId::geom(k)), Rational(2 * m_)) * num_;
  return RadialRational(std::move(dnum), m_ + 1);
}

RadialRational RadialRational::times_r2_power(int s) const {
  if (num_.is_zero() || s == 0) return *this;
  if (s < 0) return RadialRational(num_, m_ - s);  // raises the exponent
  if (s <= m_) return RadialRational(num_, m_ - s);
  Poly lifted = num_;
  for (int i = 0; i < s - m_; ++i) lifted = lifted * r2_poly();
  return raw(std::move(lifted), 0);
}

Poly RadialRational::numerator_at(int m) const {
  if (num_.is_zero()) return Poly();
  if (m < m_) throw std::logic_error("cannot lower canonical denominator exponent");
  Poly out = num_;
  for (int i = 0; i < m - m_; ++i) out = out * r2_poly();
  return out;
}

RadialRational RadialRational::restrict_geom(int k, const Rational& value) const {
  return raw(num_.substitute_geom(k, value), m_);
}

std::optional<int> RadialRational::homogeneity_degree() const {
  auto d = num_.homogeneous_geometric_degree();
  if (!d) return std::nullopt;
  return *d - 2 * m_;
}

std::string RadialRational::to_string() const {
  if (m_ == 0) return num_.to_string();
  return "(" + num_.to_string() + ") / r^" + std::to_string(2 * m_);
}

}  // namespace ale
