#include "ale/quadrature.hpp"

#include <cmath>
#include <vector>

namespace ale {

namespace {

struct GaussRule {
  std::vector<double> nodes;    // on [-1,1]
  std::vector<double> weights;
};

// Newton iteration on Legendre polynomials; standard Golub-free construction.
GaussRule gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = 0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
      }
      pp = n * (x * p0 - p1) / (x * x - 1);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1 - x * x) * pp * pp);
  }
  return rule;
}

double box3_once(const std::function<double(double, double, double)>& f,
                 const std::array<double, 3>& lo, const std::array<double, 3>& hi, int n) {
  GaussRule g = gauss_legendre(n);
  std::array<std::vector<double>, 3> xs, ws;
  for (int d = 0; d < 3; ++d) {
    xs[d].resize(n);
    ws[d].resize(n);
    double mid = 0.5 * (hi[d] + lo[d]), half = 0.5 * (hi[d] - lo[d]);
    for (int i = 0; i < n; ++i) {
      xs[d][i] = mid + half * g.nodes[i];
      ws[d][i] = half * g.weights[i];
    }
  }
  double sum = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double wij = ws[0][i] * ws[1][j];
      double partial = 0;
      for (int k = 0; k < n; ++k) partial += ws[2][k] * f(xs[0][i], xs[1][j], xs[2][k]);
      sum += wij * partial;
    }
  return sum;
}

constexpr int kMaxNodes = 256;

}  // namespace

QuadratureResult integrate_box3(const std::function<double(double, double, double)>& f,
                                const std::array<double, 3>& lo, const std::array<double, 3>& hi,
                                double tol) {
  double prev = box3_once(f, lo, hi, 8);
  for (int n = 16; n <= kMaxNodes; n *= 2) {
    double cur = box3_once(f, lo, hi, n);
    double err = std::abs(cur - prev);
    if (err < tol) return {cur, err, n};
    prev = cur;
  }
  throw NoConvergence("box integral did not converge at " + std::to_string(kMaxNodes) +
                      " nodes per axis");
}

namespace {

// compiled evaluation of a numeric polynomial in x2, x3, x4
struct CompiledPoly {
  struct Term {
    double c;
    int e2, e3, e4;
  };
  std::vector<Term> terms;

  explicit CompiledPoly(const Poly& p) {
    for (const auto& [m, coeff] : p.terms()) {
      Term t{};
      t.c = static_cast<double>(num(coeff)) / static_cast<double>(den(coeff));
      for (const auto& [sym, e] : m.factors()) {
        if (!sym.is_geometric())
          throw std::invalid_argument("numeric integrand must have numeric coefficients");
        switch (sym.geom_index()) {
          case 2: t.e2 = e; break;
          case 3: t.e3 = e; break;
          case 4: t.e4 = e; break;
          default: throw std::invalid_argument("face numerator must use x2, x3, x4");
        }
      }
      terms.push_back(t);
    }
  }

  double operator()(double a, double b, double c) const {
    double s = 0;
    for (const auto& t : terms) {
      double v = t.c;
      for (int i = 0; i < t.e2; ++i) v *= a;
      for (int i = 0; i < t.e3; ++i) v *= b;
      for (int i = 0; i < t.e4; ++i) v *= c;
      s += v;
    }
    return s;
  }
};

}  // namespace

QuadratureResult numeric_cube_integral(const Poly& numerator, int m, double tol) {
  if (m < 1 || m > 4) throw std::invalid_argument("weight m out of range");
  CompiledPoly p(numerator);
  auto f = [&, m](double a, double b, double c) {
    double r2 = 1.0 + a * a + b * b + c * c;
    double w = 1.0;
    for (int i = 0; i < m; ++i) w *= r2;
    return p(a, b, c) / w;
  };
  return integrate_box3(f, {-1, -1, -1}, {1, 1, 1}, tol);
}

QuadratureResult numeric_boundary_flux(
    const std::function<double(int, const std::array<double, 4>&)>& f, double rho, double tol) {
  QuadratureResult total{0, 0, 0};
  for (int j = 1; j <= 4; ++j) {
    for (int side : {1, -1}) {
      auto face = [&, j, side](double a, double b, double c) {
        std::array<double, 4> x{};
        int slot = 0;
        for (int k = 1; k <= 4; ++k) {
          if (k == j) {
            x[k - 1] = side * rho;
          } else {
            x[k - 1] = (slot == 0 ? a : slot == 1 ? b : c);
            ++slot;
          }
        }
        return f(j, x);
      };
      QuadratureResult r = integrate_box3(face, {-rho, -rho, -rho}, {rho, rho, rho}, tol);
      total.value += side * r.value;
      total.estimated_error += r.estimated_error;
      total.nodes_used = std::max(total.nodes_used, r.nodes_used);
    }
  }
  return total;
}

QuadratureResult flux_identity_check(double rho, double tol) {
  return numeric_boundary_flux(
      [](int j, const std::array<double, 4>& x) {
        double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
        return -2.0 * x[j - 1] / (r2 * r2);
      },
      rho, tol);
}

double sphere_integrand_Q(double t1, double t2, double t3) {
  double s1 = std::sin(t1), c1 = std::cos(t1);
  double s2 = std::sin(t2), c2 = std::cos(t2);
  double s1sq = s1 * s1;
  double inner = s1sq * s1sq * (0.25 * s2 * s2 * s2 * s2 * (std::cos(4 * t3) + 3) + c2 * c2 * c2 * c2) +
                 c1 * c1 * c1 * c1;
  return s1sq * s2 * inner;
}

QuadratureResult sphere_integral_Q(double tol) {
  return integrate_box3([](double a, double b, double c) { return sphere_integrand_Q(a, b, c); },
                        {0, 0, 0}, {M_PI, M_PI, 2 * M_PI}, tol);
}

}  // namespace ale
