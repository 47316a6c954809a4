#include "ale/metric.hpp"

#include <stdexcept>

namespace ale {

namespace {

using Mat = ComplexStructureTriple::Mat;

Mat matmul(const Mat& a, const Mat& b) {
  Mat out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int s = 0;
      for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
      out[i][j] = s;
    }
  return out;
}

// coefficient vector of J^T x (0-based component k)
std::array<Poly, 4> jt_x(const Mat& J) {
  std::array<Poly, 4> v;
  for (int m = 0; m < 4; ++m) {
    Poly p;
    for (int k = 0; k < 4; ++k) {
      if (J[k][m] == 0) continue;
      p += Poly(Monomial::var(SymbolId::geom(k + 1)), Rational(J[k][m]));
    }
    v[m] = p;
  }
  return v;
}

Tensor2 build_from(const std::array<std::array<Poly, 4>, 3>& v, const SymParam3& par) {
  // A[a][b] componentwise products v[a][i]*v[b][j]
  auto A = [&](int a, int b, int i, int j) { return v[a - 1][i] * v[b - 1][j]; };
  Tensor2 h;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Poly m;
      // diagonal parameter entries: 2 A_aa - A_bb - A_cc
      const int others[3][2] = {{2, 3}, {1, 3}, {1, 2}};
      for (int a = 1; a <= 3; ++a) {
        Poly t = Rational(2) * A(a, a, i, j) - A(others[a - 1][0], others[a - 1][0], i, j) -
                 A(others[a - 1][1], others[a - 1][1], i, j);
        m += par.at(a, a) * t;
      }
      // off-diagonal entries: A_ab + A_ba
      const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
      for (const auto& p : pairs) {
        Poly t = A(p[0], p[1], i, j) + A(p[1], p[0], i, j);
        m += par.at(p[0], p[1]) * t;
      }
      h.at(i + 1, j + 1) = RadialRational(m * Rational(-2, 3), 3);
    }
  }
  return h;
}

}  // namespace

const ComplexStructureTriple& ComplexStructureTriple::standard() {
  static const ComplexStructureTriple t = [] {
    ComplexStructureTriple out;
    out.J[0] = {{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}};
    out.J[1] = {{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}};
    out.J[2] = matmul(out.J[0], out.J[1]);
    return out;
  }();
  return t;
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
  Tensor2 out;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) out.at(i, j) = at(i, j) + o.at(i, j);
  return out;
}

SymParam3 SymParam3::zeta_symbols() {
  SymParam3 s;
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 3; ++b) s.set(a, b, Poly(SymbolId::zeta(a, b)));
  return s;
}

SymParam3 SymParam3::xi_symbols() {
  SymParam3 s;
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 3; ++b) s.set(a, b, Poly(SymbolId::xi(a, b)));
  return s;
}

SymParam3 SymParam3::zero() { return SymParam3{}; }

namespace {
int pair_slot(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > 3) throw std::out_of_range("SymParam3 index");
  static constexpr int slot[4][4] = {{-1, -1, -1, -1}, {-1, 0, 1, 2}, {-1, -1, 3, 4}, {-1, -1, -1, 5}};
  return slot[a][b];
}
}  // namespace

const Poly& SymParam3::at(int a, int b) const { return entries_[pair_slot(a, b)]; }
void SymParam3::set(int a, int b, Poly value) { entries_[pair_slot(a, b)] = std::move(value); }

Form build_alpha(int j) {
  if (j < 1 || j > 3) throw std::out_of_range("alpha index");
  auto v = jt_x(ComplexStructureTriple::standard().J[j - 1]);
  Form out;
  for (int k = 0; k < 4; ++k) out += Form(IndexSet::single(k + 1), RadialRational(v[k]));
  return out;
}

Tensor2 build_h_plus(const SymParam3& z) {
  std::array<std::array<Poly, 4>, 3> v;
  for (int a = 0; a < 3; ++a) v[a] = jt_x(ComplexStructureTriple::standard().J[a]);
  return build_from(v, z);
}

Tensor2 build_h_minus(const SymParam3& xi) {
  std::array<std::array<Poly, 4>, 3> v;
  for (int a = 0; a < 3; ++a) {
    auto base = jt_x(ComplexStructureTriple::standard().J[a]);
    // m_alpha = R^T J^T R x: substitute x -> Rx, then flip components 2..4
    for (int m = 0; m < 4; ++m) {
      Poly p = base[m];
      for (int k = 2; k <= 4; ++k) {
        // x^k -> -x^k: decompose p = p0 + x^k p1 (linear in x^k here)
        Poly flipped;
        for (const auto& [mon, c] : p.terms()) {
          int e = mon.exponent(SymbolId::geom(k));
          Rational cc = (e % 2 == 0) ? c : -c;
          flipped += Poly(mon, cc);
        }
        p = flipped;
      }
      if (m >= 1) p = -p;
      v[a][m] = p;
    }
  }
  return build_from(v, xi);
}

MetricReport validate_h(const Tensor2& h) {
  MetricReport rep;
  auto fail = [&](const std::string& what) {
    if (rep.first_failure.empty()) rep.first_failure = what;
  };

  rep.symmetric = true;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      if (!(h.at(i, j) == h.at(j, i))) rep.symmetric = false;
  if (!rep.symmetric) fail("symmetry h_ij = h_ji");

  RadialRational trace;
  for (int k = 1; k <= 4; ++k) trace = trace + h.at(k, k);
  rep.trace_zero = trace.is_zero();
  if (!rep.trace_zero) fail("trace sum_k h_kk = 0");

  for (int i = 1; i <= 4; ++i) {
    RadialRational div;
    for (int k = 1; k <= 4; ++k) div = div + h.at(k, i).derivative(k);
    rep.divergence_zero[i - 1] = div.is_zero();
    if (!div.is_zero()) fail("divergence sum_k d_k h_k" + std::to_string(i) + " = 0");
  }

  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      RadialRational lap;
      for (int k = 1; k <= 4; ++k) lap = lap + h.at(i, j).derivative(k).derivative(k);
      rep.laplacian_zero[i - 1][j - 1] = lap.is_zero();
      if (!lap.is_zero())
        fail("flat Laplacian of h_" + std::to_string(i) + std::to_string(j) + " = 0");
    }

  rep.degree_ok = true;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const auto& c = h.at(i, j);
      if (c.is_zero()) continue;
      auto d = c.homogeneity_degree();
      if (!d || *d != -4) {
        rep.degree_ok = false;
        fail("homogeneity degree -4 of h_" + std::to_string(i) + std::to_string(j));
      }
    }
  return rep;
}

void require_valid(const Tensor2& h) {
  MetricReport rep = validate_h(h);
  if (!rep.ok()) throw ValidationFailure(rep.first_failure);
}

}  // namespace ale
