#include "ale/rational.hpp"

namespace ale {

std::string to_string(const Rational& q) {
  std::string s = num(q).str();
  if (den(q) != 1) s += "/" + den(q).str();
  return s;
}

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(text)) return std::nullopt;
      return Rational(BigInt(std::string(text)));
    }
    auto n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!is_int(n) || !is_int(d)) return std::nullopt;
    BigInt dd{std::string(d)};
    if (dd == 0) return std::nullopt;
    return Rational(BigInt(std::string(n)), dd);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace ale
