#pragma once

#include <iosfwd>
#include <string>

#include "ale/equations.hpp"

namespace ale {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical text rendering of an affine expression: terms in monomial order,
// rationals as "p" or "p/q", e.g.
//   -1/9*zeta11 + 1/18*zeta22 + CVol - Con[1,2,1,2]
// The grammar accepted by parse_expression is exactly what emit_expression
// produces (plus arbitrary spacing).
std::string emit_expression(const Poly& p);
Poly parse_expression(std::string_view text);

// --- equation system format -------------------------------------------------
// eqsys-format 1
// families differential,divergence
// equations <count>
// <label> : <expression>
// (one line per equation; every expression equals zero)
std::string emit_system(const LinearSystem& s);
LinearSystem parse_system(std::string_view text);

// --- solution / reference table format ---------------------------------------
// table-format 1
// free Con[a,b,c,d] ...          (optional)
// Con[i,j,k,l] = <expression>    (any subset of the 256 constants)
// A SolutionTable emits all 256 rows (free unknowns as themselves); a
// reference table lists only the bound constants, the absent ones being free.
std::string emit_table(const SolutionTable& t);
SolutionTable parse_solution_table(std::string_view text);
ReferenceTable parse_reference_table(std::string_view text);

/// Loads a reference table from a file. When the file carries a
/// "checksum fnv1a64 <hex>" header line, the digest of the remaining lines
/// is verified first.
ReferenceTable load_reference_table(const std::string& path);

/// FNV-1a 64-bit digest, used to pin the shipped reference table.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace ale
