#include "ale/symbol.hpp"

#include <charconv>
#include <stdexcept>

namespace ale {

namespace {

// Code layout (total 280 symbols):
//   [0,4)     x1..x4
//   [4,10)    zeta: (1,1),(1,2),(1,3),(2,2),(2,3),(3,3)
//   [10,16)   xi, same pair order
//   16        CVol
//   [17,273)  Con in lexicographic (i,j,k,l) order
//   [273,277) sigma1..sigma4
//   [277,279) c1, c2
//   279       Pi2
constexpr std::uint16_t kZetaBase = 4;
constexpr std::uint16_t kXiBase = 10;
constexpr std::uint16_t kCVol = 16;
constexpr std::uint16_t kConBase = 17;
constexpr std::uint16_t kSigmaBase = 273;
constexpr std::uint16_t kCConstBase = 277;
constexpr std::uint16_t kPiSq = 279;

int sym_pair_offset(int a, int b) {
  // (1,1)->0 (1,2)->1 (1,3)->2 (2,2)->3 (2,3)->4 (3,3)->5
  static constexpr int off[4][4] = {{-1, -1, -1, -1},
                                    {-1, 0, 1, 2},
                                    {-1, -1, 3, 4},
                                    {-1, -1, -1, 5}};
  if (a < 1 || b < 1 || a > 3 || b > 3) throw std::out_of_range("symmetric pair index");
  if (a > b) std::swap(a, b);
  return off[a][b];
}

}  // namespace

SymbolId SymbolId::geom(int k) {
  if (k < 1 || k > 4) throw std::out_of_range("geometric index");
  return SymbolId(static_cast<std::uint16_t>(k - 1));
}
SymbolId SymbolId::zeta(int a, int b) {
  return SymbolId(static_cast<std::uint16_t>(kZetaBase + sym_pair_offset(a, b)));
}
SymbolId SymbolId::xi(int a, int b) {
  return SymbolId(static_cast<std::uint16_t>(kXiBase + sym_pair_offset(a, b)));
}
SymbolId SymbolId::cvol() { return SymbolId(kCVol); }
SymbolId SymbolId::con(int i, int j, int k, int l) {
  for (int v : {i, j, k, l})
    if (v < 1 || v > 4) throw std::out_of_range("Con index");
  int off = ((i - 1) * 4 + (j - 1)) * 16 + (k - 1) * 4 + (l - 1);
  return SymbolId(static_cast<std::uint16_t>(kConBase + off));
}
SymbolId SymbolId::sigma(int n) {
  if (n < 1 || n > 4) throw std::out_of_range("sigma index");
  return SymbolId(static_cast<std::uint16_t>(kSigmaBase + n - 1));
}
SymbolId SymbolId::cconst(int n) {
  if (n < 1 || n > 2) throw std::out_of_range("c index");
  return SymbolId(static_cast<std::uint16_t>(kCConstBase + n - 1));
}
SymbolId SymbolId::pi_sq() { return SymbolId(kPiSq); }

SymbolKind SymbolId::kind() const {
  if (code_ < kZetaBase) return SymbolKind::GeomVar;
  if (code_ < kXiBase) return SymbolKind::Zeta;
  if (code_ < kCVol) return SymbolKind::Xi;
  if (code_ == kCVol) return SymbolKind::CVol;
  if (code_ < kSigmaBase) return SymbolKind::Con;
  if (code_ < kCConstBase) return SymbolKind::Sigma;
  if (code_ < kPiSq) return SymbolKind::CConst;
  return SymbolKind::PiSq;
}

int SymbolId::geom_index() const {
  if (kind() != SymbolKind::GeomVar) throw std::logic_error("not a coordinate symbol");
  return code_ + 1;
}

std::array<int, 2> SymbolId::pair_index() const {
  static constexpr std::array<int, 2> pairs[6] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  if (kind() == SymbolKind::Zeta) return pairs[code_ - kZetaBase];
  if (kind() == SymbolKind::Xi) return pairs[code_ - kXiBase];
  throw std::logic_error("not a symmetric-matrix symbol");
}

std::array<int, 4> SymbolId::con_index() const {
  if (kind() != SymbolKind::Con) throw std::logic_error("not a Con symbol");
  int off = code_ - kConBase;
  return {off / 64 + 1, off / 16 % 4 + 1, off / 4 % 4 + 1, off % 4 + 1};
}

int SymbolId::seq_index() const {
  if (kind() == SymbolKind::Sigma) return code_ - kSigmaBase + 1;
  if (kind() == SymbolKind::CConst) return code_ - kCConstBase + 1;
  throw std::logic_error("not an indexed constant symbol");
}

std::string SymbolId::name() const {
  switch (kind()) {
    case SymbolKind::GeomVar:
      return "x" + std::to_string(geom_index());
    case SymbolKind::Zeta: {
      auto [a, b] = pair_index();
      return "zeta" + std::to_string(a) + std::to_string(b);
    }
    case SymbolKind::Xi: {
      auto [a, b] = pair_index();
      return "xi" + std::to_string(a) + std::to_string(b);
    }
    case SymbolKind::CVol:
      return "CVol";
    case SymbolKind::Con: {
      auto t = con_index();
      return "Con[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
             std::to_string(t[2]) + "," + std::to_string(t[3]) + "]";
    }
    case SymbolKind::Sigma:
      return "sigma" + std::to_string(seq_index());
    case SymbolKind::CConst:
      return "c" + std::to_string(seq_index());
    case SymbolKind::PiSq:
      return "Pi2";
  }
  return "?";
}

std::optional<SymbolId> SymbolId::parse(std::string_view s) {
  auto digit = [](char c) -> int { return (c >= '1' && c <= '9') ? c - '0' : -1; };
  if (s == "CVol") return cvol();
  if (s == "Pi2") return pi_sq();
  if (s.size() == 2 && s[0] == 'x') {
    int k = digit(s[1]);
    if (k >= 1 && k <= 4) return geom(k);
    return std::nullopt;
  }
  if (s.size() == 2 && s[0] == 'c') {
    int n = digit(s[1]);
    if (n >= 1 && n <= 2) return cconst(n);
    return std::nullopt;
  }
  if (s.size() == 6 && s.substr(0, 4) == "zeta") {
    int a = digit(s[4]), b = digit(s[5]);
    if (a >= 1 && b >= a && b <= 3) return zeta(a, b);
    return std::nullopt;
  }
  if (s.size() == 4 && s.substr(0, 2) == "xi") {
    int a = digit(s[2]), b = digit(s[3]);
    if (a >= 1 && b >= a && b <= 3) return xi(a, b);
    return std::nullopt;
  }
  if (s.size() == 6 && s.substr(0, 5) == "sigma") {
    int n = digit(s[5]);
    if (n >= 1 && n <= 4) return sigma(n);
    return std::nullopt;
  }
  if (s.size() == 12 && s.substr(0, 4) == "Con[" && s.back() == ']') {
    int i = digit(s[4]), j = digit(s[6]), k = digit(s[8]), l = digit(s[10]);
    if (s[5] != ',' || s[7] != ',' || s[9] != ',') return std::nullopt;
    if (i < 1 || j < 1 || k < 1 || l < 1 || i > 4 || j > 4 || k > 4 || l > 4) return std::nullopt;
    return con(i, j, k, l);
  }
  return std::nullopt;
}

int permutation_sign(const int* idx, int n) {
  int sign = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

int levi_civita(int a, int b, int c, int d) {
  int idx[4] = {a, b, c, d};
  return permutation_sign(idx, 4);
}

}  // namespace ale
