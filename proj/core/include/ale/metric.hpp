#pragma once

#include <array>
#include <string>

#include "ale/form.hpp"

namespace ale {

// The standard complex-structure triple on R^4, as integer matrices with
// J3 = J1 * J2. Each J is orthogonal with J^2 = -Id.
struct ComplexStructureTriple {
  using Mat = std::array<std::array<int, 4>, 4>;
  std::array<Mat, 3> J;
  static const ComplexStructureTriple& standard();
};

// 4x4 matrix of RadialRational; indices are 1-based in the accessors.
class Tensor2 {
 public:
  const RadialRational& at(int i, int j) const { return m_[i - 1][j - 1]; }
  RadialRational& at(int i, int j) { return m_[i - 1][j - 1]; }
  Tensor2 operator+(const Tensor2& o) const;
  bool operator==(const Tensor2&) const = default;

 private:
  std::array<std::array<RadialRational, 4>, 4> m_;
};

// Symmetric 3x3 parameter matrix; entries are polynomials in parameter
// symbols (usually a single zeta_ab or xi_ab, but rational specializations
// are allowed for tests).
class SymParam3 {
 public:
  static SymParam3 zeta_symbols();
  static SymParam3 xi_symbols();
  static SymParam3 zero();

  const Poly& at(int a, int b) const;
  void set(int a, int b, Poly value);

 private:
  // entries for (1,1),(1,2),(1,3),(2,2),(2,3),(3,3)
  std::array<Poly, 6> entries_;
};

/// alpha_j: the grade-1 form with coefficient vector J_j^T x, j = 1..3.
Form build_alpha(int j);

/// Leading metric perturbation h^+ with parameter matrix z:
/// h^+ = -2/(3 r^6) * [ z11 (2 A11 - A22 - A33) + ... + z12 (A12 + A21) + ... ]
/// where A_ab = alpha_a (x) alpha_b componentwise.
Tensor2 build_h_plus(const SymParam3& z);

/// The pullback construction under the reflection diag(1,-1,-1,-1), with
/// parameter matrix xi.
Tensor2 build_h_minus(const SymParam3& xi);

struct MetricReport {
  bool trace_zero = false;
  std::array<bool, 4> divergence_zero{};
  std::array<std::array<bool, 4>, 4> laplacian_zero{};
  bool degree_ok = false;  // every nonzero component homogeneous of degree -4
  bool symmetric = false;
  std::string first_failure;  // empty when everything holds
  bool ok() const { return first_failure.empty(); }
};

/// Checks trace, divergence, componentwise flat Laplacian, homogeneity
/// degree -4 and symmetry, all as exact polynomial identities.
MetricReport validate_h(const Tensor2& h);

struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws ValidationFailure naming the first violated identity.
void require_valid(const Tensor2& h);

}  // namespace ale
