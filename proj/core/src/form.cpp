#include "ale/form.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ale {

IndexSet IndexSet::of(std::initializer_list<int> indices) {
  std::uint8_t m = 0;
  for (int k : indices) {
    if (k < 1 || k > 4) throw std::out_of_range("index set entry");
    m |= static_cast<std::uint8_t>(1u << (k - 1));
  }
  return IndexSet(m);
}

IndexSet IndexSet::single(int k) { return of({k}); }

int IndexSet::grade() const { return std::popcount(mask_); }

int IndexSet::merge_sign(IndexSet a, IndexSet b) {
  // count pairs (i in a, j in b) with i > j
  int inversions = 0;
  for (int i = 1; i <= 4; ++i) {
    if (!a.contains(i)) continue;
    for (int j = 1; j < i; ++j)
      if (b.contains(j)) ++inversions;
  }
  return inversions % 2 ? -1 : 1;
}

std::string IndexSet::to_string() const {
  if (mask_ == 0) return "1";
  std::string s;
  for (int k = 1; k <= 4; ++k) {
    if (!contains(k)) continue;
    if (!s.empty()) s += "^";
    s += "dx" + std::to_string(k);
  }
  return s;
}

Form::Form(IndexSet basis, RadialRational coeff) { add_term(basis, coeff); }

RadialRational Form::coefficient(IndexSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? RadialRational() : it->second;
}

int Form::grade() const {
  if (terms_.empty()) return -1;
  int g = terms_.begin()->first.grade();
  for (const auto& [s, c] : terms_)
    if (s.grade() != g) return -2;
  return g;
}

void Form::add_term(IndexSet s, const RadialRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

Form operator-(Form a, const Form& b) {
  for (const auto& [s, c] : b.terms_) a.add_term(s, -c);
  return a;
}

Form Form::operator-() const {
  Form out;
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
  return out;
}

Form operator*(const RadialRational& c, const Form& w) {
  Form out;
  for (const auto& [s, f] : w.terms_) out.add_term(s, c * f);
  return out;
}

Form operator*(const Rational& c, const Form& w) {
  return RadialRational::constant(c) * w;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (s.grade() > 0) os << " " << s.to_string();
  }
  return os.str();
}

Form wedge(const Form& a, const Form& b) {
  Form out;
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      if (!sa.disjoint(sb)) continue;
      int sign = IndexSet::merge_sign(sa, sb);
      RadialRational c = ca * cb;
      if (sign < 0) c = -c;
      out += Form(sa.unite(sb), c);
    }
  }
  return out;
}

Form exterior_d(const Form& f) {
  Form out;
  for (const auto& [s, c] : f.terms()) {
    for (int k = 1; k <= 4; ++k) {
      if (s.contains(k)) continue;
      RadialRational dc = c.derivative(k);
      if (dc.is_zero()) continue;
      int sign = IndexSet::merge_sign(IndexSet::single(k), s);
      out += Form(s.unite(IndexSet::single(k)), sign < 0 ? -dc : dc);
    }
  }
  return out;
}

Form hodge_star_flat(const Form& f) {
  Form out;
  for (const auto& [s, c] : f.terms()) {
    IndexSet comp = s.complement();
    // *(dx^I) = eps(I, I^c) dx^(I^c) with the flat metric and eps_1234 = +1,
    // which is exactly the merge sign of (I, I^c).
    int sign = IndexSet::merge_sign(s, comp);
    out += Form(comp, sign < 0 ? -c : c);
  }
  return out;
}

RadialRational face_flux(const Form& w, int p, int side) {
  if (w.grade() != 3 && !w.is_zero())
    throw GradeMismatch("face_flux expects a grade-3 form");
  if (p < 1 || p > 4 || (side != 1 && side != -1))
    throw std::out_of_range("face_flux face parameters");
  RadialRational c = w.coefficient(IndexSet::single(p).complement());
  RadialRational restricted = c.restrict_geom(p, Rational(side));
  return (p % 2 == 0) ? -restricted : restricted;
}

Form gamma_form(int p) {
  Rational sign = (p % 2 == 0) ? -1 : 1;
  return Form(IndexSet::single(p).complement(), RadialRational::constant(sign));
}

}  // namespace ale
