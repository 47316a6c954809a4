#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ale {

enum class SymbolKind : std::uint8_t {
  GeomVar,  // coordinate x^k, k = 1..4
  Zeta,     // zeta_ab, 1 <= a <= b <= 3
  Xi,       // xi_ab, 1 <= a <= b <= 3
  CVol,     // the combination -V/(2 pi^2), a single free symbol
  Con,      // Con[i,j,k,l], i,j,k,l in 1..4
  Sigma,    // sigma_n, n = 1..4 (face integrals, weight r^-8)
  CConst,   // c_n, n = 1..2 (face integrals, weight r^-6)
  PiSq,     // pi^2
};

// Interned symbol identifier with a fixed global ordering:
//   x1..x4 < zeta11..zeta33 < xi11..xi33 < CVol < Con[1,1,1,1]..Con[4,4,4,4]
//   < sigma1..sigma4 < c1,c2 < Pi2.
// Canonical forms of monomials and the solver's pivoting both assume this
// order, so it must never change.
class SymbolId {
 public:
  static SymbolId geom(int k);
  static SymbolId zeta(int a, int b);  // unordered (a,b); stored sorted
  static SymbolId xi(int a, int b);
  static SymbolId cvol();
  static SymbolId con(int i, int j, int k, int l);
  static SymbolId sigma(int n);
  static SymbolId cconst(int n);
  static SymbolId pi_sq();

  SymbolKind kind() const;
  bool is_geometric() const { return kind() == SymbolKind::GeomVar; }

  /// GeomVar: the coordinate index 1..4.
  int geom_index() const;
  /// Zeta/Xi: the (a,b) pair with a <= b.
  std::array<int, 2> pair_index() const;
  /// Con: the (i,j,k,l) tuple.
  std::array<int, 4> con_index() const;
  /// Sigma/CConst: the 1-based index.
  int seq_index() const;

  /// "x1", "zeta12", "xi33", "CVol", "Con[1,2,3,4]", "sigma1", "c2", "Pi2".
  std::string name() const;
  static std::optional<SymbolId> parse(std::string_view text);

  auto operator<=>(const SymbolId&) const = default;
  std::uint16_t code() const { return code_; }

 private:
  explicit SymbolId(std::uint16_t code) : code_(code) {}
  std::uint16_t code_;
};

/// Sign of the permutation sorting the sequence; 0 if entries repeat.
/// epsilon(1,2,3,4) = +1.
int levi_civita(int a, int b, int c, int d);
int permutation_sign(const int* idx, int n);

}  // namespace ale
