#include "ale/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ale {

Monomial Monomial::var(SymbolId s, int exp) {
  Monomial m;
  if (exp < 0) throw std::invalid_argument("negative exponent");
  if (exp > 0) m.factors_.push_back({s, exp});
  return m;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->first < b->first)
      out.factors_.push_back(*a++);
    else if (b->first < a->first)
      out.factors_.push_back(*b++);
    else {
      out.factors_.push_back({a->first, a->second + b->second});
      ++a, ++b;
    }
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.factors_.insert(out.factors_.end(), b, o.factors_.end());
  return out;
}

int Monomial::exponent(SymbolId s) const {
  for (const auto& [sym, e] : factors_)
    if (sym == s) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [sym, e] : factors_) d += e;
  return d;
}

int Monomial::geometric_degree() const { return degree_in_kind(SymbolKind::GeomVar); }

int Monomial::degree_in_kind(SymbolKind k) const {
  int d = 0;
  for (const auto& [sym, e] : factors_)
    if (sym.kind() == k) d += e;
  return d;
}

std::pair<Monomial, Monomial> Monomial::split_geometric() const {
  Monomial geo, par;
  for (const auto& f : factors_)
    (f.first.is_geometric() ? geo : par).factors_.push_back(f);
  return {geo, par};
}

Poly::Poly(Rational c) {
  if (c != 0) terms_.emplace(Monomial(), std::move(c));
}
Poly::Poly(SymbolId s) { terms_.emplace(Monomial::var(s), Rational(1)); }
Poly::Poly(Monomial m, Rational c) {
  if (c != 0) terms_.emplace(std::move(m), std::move(c));
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

Poly Poly::derivative(int k) const {
  const SymbolId xk = SymbolId::geom(k);
  Poly out;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(xk);
    if (e == 0) continue;
    Monomial reduced;
    for (const auto& f : m.factors()) {
      if (f.first == xk) {
        if (e > 1) reduced = reduced.times(Monomial::var(xk, e - 1));
      } else {
        reduced = reduced.times(Monomial::var(f.first, f.second));
      }
    }
    out.add_term(reduced, c * e);
  }
  return out;
}

Poly Poly::substitute_geom(int k, const Rational& value) const {
  const SymbolId xk = SymbolId::geom(k);
  Poly out;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(xk);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    Rational scale = 1;
    for (int i = 0; i < e; ++i) scale *= value;
    if (scale == 0) continue;
    Monomial reduced;
    for (const auto& f : m.factors())
      if (f.first != xk) reduced = reduced.times(Monomial::var(f.first, f.second));
    out.add_term(reduced, c * scale);
  }
  return out;
}

Poly Poly::evaluate_geom(const std::array<Rational, 4>& point) const {
  Poly out = *this;
  for (int k = 1; k <= 4; ++k) out = out.substitute_geom(k, point[k - 1]);
  return out;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

int Poly::geometric_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.geometric_degree());
  return d;
}

int Poly::degree_in_kind(SymbolKind k) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in_kind(k));
  return d;
}

std::optional<int> Poly::homogeneous_geometric_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.geometric_degree();
  for (const auto& [m, c] : terms_)
    if (m.geometric_degree() != d) return std::nullopt;
  return d;
}

bool Poly::contains_symbol(SymbolId s) const {
  for (const auto& [m, coeff] : terms_)
    if (m.exponent(s) > 0) return true;
  return false;
}

Poly Poly::coefficient_of_linear(SymbolId s) const {
  Poly out;
  for (const auto& [m, coeff] : terms_) {
    int e = m.exponent(s);
    if (e == 0) continue;
    if (e > 1) throw std::logic_error("symbol occurs nonlinearly: " + s.name());
    Monomial rest;
    for (const auto& f : m.factors())
      if (f.first != s) rest = rest.times(Monomial::var(f.first, f.second));
    out.add_term(rest, coeff);
  }
  return out;
}

Poly Poly::without_symbol(SymbolId s) const {
  Poly out;
  for (const auto& [m, coeff] : terms_)
    if (m.exponent(s) == 0) out.add_term(m, coeff);
  return out;
}

Poly Poly::substitute_symbol(SymbolId s, const Poly& value) const {
  Poly out;
  for (const auto& [m, coeff] : terms_) {
    int e = m.exponent(s);
    if (e == 0) {
      out.add_term(m, coeff);
      continue;
    }
    Monomial rest;
    for (const auto& f : m.factors())
      if (f.first != s) rest = rest.times(Monomial::var(f.first, f.second));
    Poly term(rest, coeff);
    for (int i = 0; i < e; ++i) term = term * value;
    out += term;
  }
  return out;
}

std::optional<Poly> Poly::divided_by_r2() const {
  if (is_zero()) return Poly();
  const SymbolId x4 = SymbolId::geom(4);
  // bucket by x4 exponent; coefficients are polynomials without x4
  std::map<int, Poly> buckets;
  int maxdeg = 0;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(x4);
    maxdeg = std::max(maxdeg, e);
    Monomial rest;
    for (const auto& f : m.factors())
      if (f.first != x4) rest = rest.times(Monomial::var(f.first, f.second));
    buckets[e].add_term(rest, c);
  }
  Poly s;  // r^2 - x4^2
  for (int k = 1; k <= 3; ++k) s += Poly(Monomial::var(SymbolId::geom(k), 2), Rational(1));
  Poly quotient;
  for (int d = maxdeg; d >= 2; --d) {
    auto it = buckets.find(d);
    if (it == buckets.end() || it->second.is_zero()) continue;
    Poly c = it->second;
    buckets.erase(it);
    quotient += c * Poly(Monomial::var(x4, d - 2), Rational(1));
    Poly carry = c * s;
    for (const auto& [m, coeff] : carry.terms()) buckets[d - 2].add_term(m, -coeff);
  }
  for (const auto& [d, rem] : buckets)
    if (!rem.is_zero()) return std::nullopt;
  return quotient;
}

std::map<Monomial, Poly> Poly::collect_by_geometric() const {
  std::map<Monomial, Poly> out;
  for (const auto& [m, c] : terms_) {
    auto [geo, par] = m.split_geometric();
    out[geo].add_term(par, c);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool need_sep = (a != 1) || m.is_one();
    if (need_sep) os << ale::to_string(a);
    for (const auto& [sym, e] : m.factors()) {
      if (need_sep) os << "*";
      need_sep = true;
      os << sym.name();
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

const Poly& r2_poly() {
  static const Poly r2 = [] {
    Poly p;
    for (int k = 1; k <= 4; ++k) p += Poly(Monomial::var(SymbolId::geom(k), 2), Rational(1));
    return p;
  }();
  return r2;
}

}  // namespace ale
