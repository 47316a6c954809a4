#pragma once

#include "ale/metric.hpp"

namespace ale {

/// eta~_ij = h_ij r^2 / 4, the harmonic-function correction term.
/// Satisfies -sum_k d_k^2 eta~_ij = 2 h_ij exactly.
RadialRational eta_tilde(const Tensor2& h, int i, int j);

/// The grade-1 form L_{i1 i2}: the leading term of the rough Laplacian of
/// x^{i1} dx^{i2},
///   L = sum_k d_k( h_{i1 i2} + sum_j x^{i1} h_{i2 j | j} ) dx^k
///     + sum_{i,j,k,l} (d_{i1 l} d_{i2 k} - d_{i1 k} d_{i2 l})
///                     d_j( d_{ik} h_{jl} + h_{ik} d_{jl} ) dx^i.
/// The divergence-free contractions are assembled as written, not
/// pre-simplified.
Form L_form(const Tensor2& h, int i1, int i2);

/// mu~_{i1 i2} = L_{i1 i2} r^2 / 12; satisfies -sum_k d_k^2 mu~ = L exactly.
Form mu_tilde(const Tensor2& h, int i1, int i2);

/// t~omega_{i1 i2} = mu~_{i1 i2} + sum_{k,l} Con[i1,i2,k,l] x^k / r^4 dx^l.
Form tomega_form(const Tensor2& h, int i1, int i2);

/// omega_{i1 i2} = x^{i1} dx^{i2} - t~omega_{i1 i2} (exterior chart, cutoff
/// identically 1).
Form omega_form(const Tensor2& h, int i1, int i2);

/// u_ii = (x^i)^2 - eta~_ii + CVol / r^2;  u_ij = x^i x^j - eta~_ij (i != j).
RadialRational u_func(const Tensor2& h, int i, int j);

/// Leading-order Christoffel symbol Gamma_ij^k =
/// (h_{ik|j} + h_{jk|i} - h_{ij|k}) / 2.
RadialRational christoffel_leading(const Tensor2& h, int i, int j, int k);

// All correction terms for one parameter choice, built once and shared
// read-only by the equation assembly.
struct ExpansionTerms {
  Tensor2 h;
  std::array<std::array<RadialRational, 4>, 4> eta;
  std::array<std::array<Form, 4>, 4> L;
  std::array<std::array<Form, 4>, 4> mu;
  std::array<std::array<Form, 4>, 4> tomega;
  std::array<std::array<Form, 4>, 4> omega;
  std::array<std::array<RadialRational, 4>, 4> u;
  // gamma[i][j][k] = Gamma_ij^k, symmetric in (i,j)
  std::array<std::array<std::array<RadialRational, 4>, 4>, 4> gamma;

  const Form& tomega_at(int i1, int i2) const { return tomega[i1 - 1][i2 - 1]; }
  const Form& mu_at(int i1, int i2) const { return mu[i1 - 1][i2 - 1]; }
};

/// Builds every term from h = h^+(zeta) + h^-(xi) with fully symbolic
/// parameters.
ExpansionTerms build_expansion_terms();
ExpansionTerms build_expansion_terms(const Tensor2& h);

}  // namespace ale
