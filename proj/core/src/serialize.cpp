#include "ale/serialize.hpp"

#include <fstream>
#include <sstream>

namespace ale {

std::string emit_expression(const Poly& p) { return p.to_string(); }

namespace {

struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    return s[pos++];
  }

  Rational number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    auto q = parse_rational(s.substr(start, pos - start));
    if (!q) throw ParseError("bad rational at '" + std::string(s.substr(start)) + "'");
    return *q;
  }

  SymbolId symbol() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '[' ||
                              s[pos] == ']' || s[pos] == ','))
      ++pos;
    auto sym = SymbolId::parse(s.substr(start, pos - start));
    if (!sym) throw ParseError("unknown symbol '" + std::string(s.substr(start, pos - start)) + "'");
    return *sym;
  }
};

}  // namespace

Poly parse_expression(std::string_view text) {
  Scanner sc{text};
  Poly out;
  bool first = true;
  while (!sc.done()) {
    Rational sign = 1;
    char c = sc.peek();
    if (c == '+' || c == '-') {
      sc.take();
      if (c == '-') sign = -1;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    Rational coeff = 1;
    Monomial mono;
    bool expect_factor = true;
    bool coeff_taken = false;
    while (expect_factor) {
      char n = sc.peek();
      if (std::isdigit(static_cast<unsigned char>(n)) && !coeff_taken) {
        coeff = sc.number();
        coeff_taken = true;
      } else if (std::isalpha(static_cast<unsigned char>(n)) || n == 'C') {
        SymbolId sym = sc.symbol();
        int exp = 1;
        if (sc.peek() == '^') {
          sc.take();
          Rational e = sc.number();
          if (den(e) != 1 || num(e) <= 0) throw ParseError("bad exponent");
          exp = static_cast<int>(num(e));
        }
        mono = mono.times(Monomial::var(sym, exp));
      } else {
        throw ParseError("expected factor in '" + std::string(text) + "'");
      }
      if (sc.peek() == '*') {
        sc.take();
        continue;
      }
      expect_factor = false;
    }
    out += Poly(mono, sign * coeff);
  }
  return out;
}

std::string emit_system(const LinearSystem& s) {
  std::ostringstream os;
  os << "eqsys-format 1\n";
  os << "families ";
  for (std::size_t i = 0; i < s.families.size(); ++i)
    os << (i ? "," : "") << family_name(s.families[i]);
  os << "\n";
  os << "equations " << s.equations.size() << "\n";
  for (const auto& eq : s.equations)
    os << eq.label << " : " << emit_expression(eq.lhs.poly()) << "\n";
  return os.str();
}

LinearSystem parse_system(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  LinearSystem out;
  if (!std::getline(is, line) || line != "eqsys-format 1")
    throw ParseError("missing eqsys-format header");
  if (!std::getline(is, line) || line.rfind("families ", 0) != 0)
    throw ParseError("missing families line");
  std::string fams = line.substr(9);
  std::size_t start = 0;
  while (start <= fams.size() && !fams.empty()) {
    auto comma = fams.find(',', start);
    std::string name = fams.substr(start, comma == std::string::npos ? comma : comma - start);
    auto f = parse_family(name);
    if (!f) throw ParseError("unknown family '" + name + "'");
    out.families.push_back(*f);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (!std::getline(is, line) || line.rfind("equations ", 0) != 0)
    throw ParseError("missing equations line");
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto sep = line.find(" : ");
    if (sep == std::string::npos) throw ParseError("bad equation line: " + line);
    out.equations.push_back(
        {LinExpr(parse_expression(std::string_view(line).substr(sep + 3))), line.substr(0, sep)});
  }
  return out;
}

std::string emit_table(const SolutionTable& t) {
  std::ostringstream os;
  os << "table-format 1\n";
  os << "free";
  for (SymbolId s : t.free_unknowns) os << " " << s.name();
  os << "\n";
  for (const auto& [sym, expr] : t.value)
    os << sym.name() << " = " << emit_expression(expr) << "\n";
  return os.str();
}

namespace {

void parse_table_lines(std::string_view text, std::map<SymbolId, Poly>& rules,
                       std::vector<SymbolId>* free_list) {
  std::istringstream is{std::string(text)};
  std::string line;
  // leading comments and the checksum line may precede the header
  bool header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("checksum ", 0) == 0) continue;
    header = (line == "table-format 1");
    break;
  }
  if (!header) throw ParseError("missing table-format header");
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("checksum ", 0) == 0) continue;
    if (line.rfind("free", 0) == 0 && (line.size() == 4 || line[4] == ' ')) {
      if (free_list) {
        std::istringstream fs(line.substr(4));
        std::string name;
        while (fs >> name) {
          auto sym = SymbolId::parse(name);
          if (!sym) throw ParseError("bad symbol in free line: " + name);
          free_list->push_back(*sym);
        }
      }
      continue;
    }
    auto sep = line.find(" = ");
    if (sep == std::string::npos) throw ParseError("bad table line: " + line);
    auto sym = SymbolId::parse(std::string_view(line).substr(0, sep));
    if (!sym || sym->kind() != SymbolKind::Con)
      throw ParseError("table key must be a Con symbol: " + line);
    Poly rhs = parse_expression(std::string_view(line).substr(sep + 3));
    if (!rules.emplace(*sym, std::move(rhs)).second)
      throw ParseError("duplicate table row for " + sym->name());
  }
}

}  // namespace

SolutionTable parse_solution_table(std::string_view text) {
  SolutionTable t;
  parse_table_lines(text, t.value, &t.free_unknowns);
  return t;
}

ReferenceTable parse_reference_table(std::string_view text) {
  ReferenceTable t;
  std::vector<SymbolId> declared_free;
  parse_table_lines(text, t.rules, &declared_free);
  // a self-row Con[x] = Con[x] carries no constraint; drop it
  for (auto it = t.rules.begin(); it != t.rules.end();) {
    if (it->second == Poly(it->first))
      it = t.rules.erase(it);
    else
      ++it;
  }
  return t;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

ReferenceTable load_reference_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open reference table: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // verify the pinned digest when present: it covers everything after the
  // checksum line
  auto pos = text.find("checksum fnv1a64 ");
  if (pos != std::string::npos) {
    auto eol = text.find('\n', pos);
    std::string hex = text.substr(pos + 17, eol - pos - 17);
    std::string rest = text.substr(eol + 1);
    std::uint64_t want = std::stoull(hex, nullptr, 16);
    if (fnv1a64(rest) != want)
      throw ParseError("reference table checksum mismatch: " + path);
  }
  return parse_reference_table(text);
}

}  // namespace ale
