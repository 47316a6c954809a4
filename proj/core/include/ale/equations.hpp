#pragma once

#include <iosfwd>
#include <vector>

#include "ale/expansions.hpp"
#include "ale/integrals.hpp"

namespace ale {

struct SigmaResidue : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TableMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Affine expression in parameter symbols (zeta, xi, CVol, Con, Pi2); no
// coordinate variables. The assembled restriction equations are all of this
// shape, linear and homogeneous in the joint symbol set.
class LinExpr {
 public:
  LinExpr() = default;
  explicit LinExpr(Poly p);
  const Poly& poly() const { return expr_; }
  bool is_zero() const { return expr_.is_zero(); }
  bool operator==(const LinExpr&) const = default;

 private:
  Poly expr_;
};

enum class Family {
  HarmonicBoundary,
  Differential,
  Divergence,
  LaplacianPairing,
  CovariantPairing,
};
std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct Equation {
  LinExpr lhs;        // lhs == 0
  std::string label;  // stable provenance key, e.g. "differential[1,2]:dx3:x1*x2^2"
};

struct LinearSystem {
  std::vector<Equation> equations;
  std::vector<Family> families;
};

/// Substitutes sigma4 -> Pi2/8 - 3 sigma1 and sigma3 -> Pi2/48 - sigma2 (the
/// unique solution of the two boundary-integral identities for sigma3 and
/// sigma4). Throws SigmaResidue if sigma1 or sigma2 coefficients survive the
/// substitution; the Pi2-carrying result is returned unnormalized.
Poly sigma_reduce(const Poly& e);

/// Same substitution, but the surviving sigma1 / sigma2 coefficients become
/// equations of their own instead of an error: returns the nonzero members
/// of { coeff(sigma1), coeff(sigma2), coeff(Pi2) }, tagged "sigma1",
/// "sigma2", "pi2". The antisymmetrized Laplacian-pairing differences do
/// carry such residuals; they vanish only on the solution subspace, so they
/// are constraints, not assembly errors.
std::vector<std::pair<Poly, std::string>> sigma_split(const Poly& e);

/// Boundary integrals of the harmonic-function corrections:
/// Int[i][j] as polynomials in c1, c2 (expected identically zero).
std::array<std::array<Poly, 4>, 4> assemble_harmonic_boundary(const ExpansionTerms& t);

std::vector<Equation> assemble_differential(const ExpansionTerms& t);
std::vector<Equation> assemble_divergence(const ExpansionTerms& t);
std::vector<Equation> assemble_laplacian_pairing(const ExpansionTerms& t);
std::vector<Equation> assemble_covariant_pairing(const ExpansionTerms& t);

/// The grade-3 pairing integrand for one ordered tuple and its classified
/// boundary integral (exposed for tests).
Form laplacian_pairing_integrand(const ExpansionTerms& t, int i1, int i2, int i3, int i4);
Poly laplacian_pairing_integral(const ExpansionTerms& t, int i1, int i2, int i3, int i4);
Form covariant_pairing_integrand(const ExpansionTerms& t, int i1, int i2, int i3, int i4);
Poly covariant_pairing_integral(const ExpansionTerms& t, int i1, int i2, int i3, int i4);

LinearSystem assemble_system(const ExpansionTerms& t, const std::vector<Family>& families);

// Affine solution of the joint system: every Con symbol mapped to an
// expression in the parameters and the free Con unknowns (free unknowns map
// to themselves).
struct SolutionTable {
  std::map<SymbolId, Poly> value;     // all 256 Con symbols
  std::vector<SymbolId> free_unknowns;

  const Poly& at(int i, int j, int k, int l) const;
  /// Substitutes this table into an affine expression.
  Poly substitute(const Poly& p) const;
};

/// Deterministic exact Gauss-Jordan elimination over the rationals.
/// Unknowns are the 256 Con symbols in lexicographic order; parameters ride
/// along affinely and are never divided by. Pivot choice: lowest-index
/// unknown, then fewest unknowns in the row, then assembly order.
/// Throws InconsistentSystem on a nonzero parameter-only equation.
SolutionTable solve_system(const LinearSystem& s);

// A reference table: rules Con[t] -> affine expression, with the unknowns
// that never appear on a left-hand side acting as free symbols.
struct ReferenceTable {
  std::map<SymbolId, Poly> rules;
  std::vector<SymbolId> free_unknowns() const;
  /// Substitutes the rules into an affine expression (free unknowns stay).
  Poly substitute(const Poly& p) const;
};

struct TableCheckReport {
  std::size_t equations_checked = 0;
  std::vector<std::string> violated_equations;   // labels
  std::size_t rules_checked = 0;
  std::vector<std::string> unimplied_rules;      // "Con[i,j,k,l]" keys
  std::size_t reference_free_count = 0;
  std::size_t solver_free_count = 0;
  bool ok() const {
    return violated_equations.empty() && unimplied_rules.empty() &&
           reference_free_count == solver_free_count;
  }
};

/// Mutual-implication check between a reference table and the assembled
/// system: (a) the reference satisfies every equation exactly, (b) every
/// reference rule is implied by the solved RREF, (c) the free-unknown counts
/// agree.
TableCheckReport check_paper_table(const ReferenceTable& ref, const LinearSystem& s,
                                   const SolutionTable& solved);

}  // namespace ale
