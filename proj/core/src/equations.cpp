#include "ale/equations.hpp"

#include <algorithm>
#include <sstream>

namespace ale {

namespace {

std::string index_pair(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

std::string tuple_label(int i1, int i2, int i3, int i4) {
  return std::to_string(i1) + "," + std::to_string(i2) + "," + std::to_string(i3) + "," +
         std::to_string(i4);
}

std::string monomial_key(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [sym, e] : m.factors()) {
    if (!s.empty()) s += "*";
    s += sym.name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

void validate_equation(const Poly& p, const std::string& label) {
  if (p.degree_in_kind(SymbolKind::Con) > 1)
    throw std::logic_error("equation not linear in Con: " + label);
  for (const auto& [m, c] : p.terms()) {
    if (m.geometric_degree() != 0)
      throw std::logic_error("coordinate variable left in equation: " + label);
    if (m.total_degree() != 1)
      throw std::logic_error("equation term not linear: " + label + " term " + monomial_key(m));
  }
}

/// Turns "this RadialRational vanishes identically" into one linear equation
/// per coordinate monomial of the canonical numerator.
void numerator_equations(const RadialRational& f, const std::string& prefix,
                         std::vector<Equation>& out) {
  for (const auto& [geo, coeff] : f.numerator().collect_by_geometric()) {
    std::string label = prefix + ":" + monomial_key(geo);
    validate_equation(coeff, label);
    out.push_back({LinExpr(coeff), label});
  }
}

const Poly& pi2_sym() {
  static const Poly p{SymbolId::pi_sq()};
  return p;
}

}  // namespace

LinExpr::LinExpr(Poly p) : expr_(std::move(p)) {
  if (expr_.geometric_degree() != 0)
    throw std::logic_error("LinExpr must not contain coordinate variables");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::HarmonicBoundary: return "harmonic-boundary";
    case Family::Differential: return "differential";
    case Family::Divergence: return "divergence";
    case Family::LaplacianPairing: return "laplacian-pairing";
    case Family::CovariantPairing: return "covariant-pairing";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::HarmonicBoundary, Family::Differential, Family::Divergence,
                   Family::LaplacianPairing, Family::CovariantPairing})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

Poly sigma_reduce(const Poly& e) {
  if (e.degree_in_kind(SymbolKind::Sigma) > 1)
    throw SigmaResidue("expression of degree > 1 in the sigma symbols");
  if (e.degree_in_kind(SymbolKind::CConst) > 0)
    throw SigmaResidue("c symbols cannot be sigma-reduced");
  Poly s3sub = Poly(SymbolId::pi_sq()) * Rational(1, 48) - Poly(SymbolId::sigma(2));
  Poly s4sub = Poly(SymbolId::pi_sq()) * Rational(1, 8) - Poly(SymbolId::sigma(1)) * Rational(3);
  Poly reduced = e.substitute_symbol(SymbolId::sigma(3), s3sub)
                     .substitute_symbol(SymbolId::sigma(4), s4sub);
  for (int n : {1, 2}) {
    Poly c = reduced.coefficient_of_linear(SymbolId::sigma(n));
    if (!c.is_zero())
      throw SigmaResidue("sigma" + std::to_string(n) +
                         " coefficient survives reduction: " + c.to_string());
  }
  return reduced;
}

std::vector<std::pair<Poly, std::string>> sigma_split(const Poly& e) {
  Poly s3sub = Poly(SymbolId::pi_sq()) * Rational(1, 48) - Poly(SymbolId::sigma(2));
  Poly s4sub = Poly(SymbolId::pi_sq()) * Rational(1, 8) - Poly(SymbolId::sigma(1)) * Rational(3);
  Poly reduced = e.substitute_symbol(SymbolId::sigma(3), s3sub)
                     .substitute_symbol(SymbolId::sigma(4), s4sub);
  Poly c1 = reduced.coefficient_of_linear(SymbolId::sigma(1));
  Poly c2 = reduced.coefficient_of_linear(SymbolId::sigma(2));
  Poly cp = reduced.coefficient_of_linear(SymbolId::pi_sq());
  Poly rest = reduced - c1 * Poly(SymbolId::sigma(1)) - c2 * Poly(SymbolId::sigma(2)) -
              cp * pi2_sym();
  if (!rest.is_zero())
    throw SigmaResidue("pairing equation has terms free of sigma and Pi2: " + rest.to_string());
  std::vector<std::pair<Poly, std::string>> out;
  if (!c1.is_zero()) out.emplace_back(c1, "sigma1");
  if (!c2.is_zero()) out.emplace_back(c2, "sigma2");
  if (!cp.is_zero()) out.emplace_back(cp, "pi2");
  return out;
}

std::array<std::array<Poly, 4>, 4> assemble_harmonic_boundary(const ExpansionTerms& t) {
  std::array<std::array<Poly, 4>, 4> out;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      Form w;
      for (int l = 1; l <= 4; ++l) {
        RadialRational q = t.eta[i - 1][j - 1].derivative(l);
        for (int k = 1; k <= 4; ++k) {
          Poly dkx = (Poly::geom(i) * Poly::geom(j)).derivative(k);
          if (dkx.is_zero()) continue;
          q = q + dkx * t.h.at(k, l);
        }
        w += RadialRational(q) * gamma_form(l);
      }
      out[i - 1][j - 1] = integrate_over_cube_boundary(w, 3);
    }
  return out;
}

std::vector<Equation> assemble_differential(const ExpansionTerms& t) {
  std::vector<Equation> out;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) {
      Form du = exterior_d(Form::scalar(t.u[i - 1][j - 1]));
      Form residue = du - t.omega[i - 1][j - 1] - t.omega[j - 1][i - 1];
      for (int l = 1; l <= 4; ++l) {
        RadialRational c = residue.coefficient(IndexSet::single(l));
        numerator_equations(c, "differential[" + index_pair(i, j) + "]:dx" + std::to_string(l),
                            out);
      }
    }
  return out;
}

std::vector<Equation> assemble_divergence(const ExpansionTerms& t) {
  std::vector<Equation> out;
  for (int i1 = 1; i1 <= 4; ++i1)
    for (int i2 = 1; i2 <= 4; ++i2) {
      RadialRational d = t.h.at(i1, i2);
      for (int l = 1; l <= 4; ++l)
        d = d + t.tomega[i1 - 1][i2 - 1].coefficient(IndexSet::single(l)).derivative(l);
      for (int j = 1; j <= 4; ++j) d = d + Poly::geom(i1) * t.h.at(i2, j).derivative(j);
      numerator_equations(d, "divergence[" + index_pair(i1, i2) + "]", out);
    }
  return out;
}

Form laplacian_pairing_integrand(const ExpansionTerms& t, int i1, int i2, int i3, int i4) {
  Form out;
  for (int j1 = 1; j1 <= 4; ++j1)
    for (int j2 = 1; j2 <= 4; ++j2)
      for (int j3 = 1; j3 <= 4; ++j3)
        for (int j4 = j3 + 1; j4 <= 4; ++j4) {
          int sgn1 = levi_civita(j1, j2, j3, j4);
          if (sgn1 == 0) continue;
          for (int tt = 1; tt <= 4; ++tt) {
            int idx[3] = {j3, j4, tt};
            int sgn2 = permutation_sign(idx, 3);
            if (sgn2 == 0) continue;
            RadialRational term;
            if (i1 == j1 && i2 == j2)
              term = term + t.tomega[i3 - 1][i4 - 1].coefficient(IndexSet::single(tt));
            if (i4 == tt) {
              RadialRational inner =
                  t.tomega[i1 - 1][i2 - 1].coefficient(IndexSet::single(j2)).derivative(j1);
              if (i1 == j1) inner = inner + t.h.at(i2, j2);
              if (i2 == j2) inner = inner + t.h.at(i1, j1);
              term = term + Poly::geom(i3) * inner;
            }
            if (term.is_zero()) continue;
            if (sgn1 * sgn2 > 0) term = -term;  // overall factor (-1)
            out += Form(IndexSet::of({j3, j4, tt}), term);
          }
        }
  return out;
}

Poly laplacian_pairing_integral(const ExpansionTerms& t, int i1, int i2, int i3, int i4) {
  return integrate_over_cube_boundary(laplacian_pairing_integrand(t, i1, i2, i3, i4), 4);
}

Form covariant_pairing_integrand(const ExpansionTerms& t, int i1, int i2, int i3, int i4) {
  Form out;
  for (int j = 1; j <= 4; ++j) {
    RadialRational v;
    if (i3 == j) v = v + t.tomega[i1 - 1][i2 - 1].coefficient(IndexSet::single(i4));
    RadialRational inner =
        t.tomega[i3 - 1][i4 - 1].coefficient(IndexSet::single(i2)).derivative(j);
    inner = inner + Poly::geom(i3) * t.gamma[i2 - 1][j - 1][i4 - 1];
    v = v + Poly::geom(i1) * inner;
    if (i2 == i4) v = v + Poly::geom(i1) * t.h.at(i3, j);
    if (i3 == j) v = v + Poly::geom(i1) * t.h.at(i2, i4);
    if (v.is_zero()) continue;
    out += (-v) * gamma_form(j);
  }
  return out;
}

Poly covariant_pairing_integral(const ExpansionTerms& t, int i1, int i2, int i3, int i4) {
  return integrate_over_cube_boundary(covariant_pairing_integrand(t, i1, i2, i3, i4), 4);
}

namespace {

using IntegralFn = Poly (*)(const ExpansionTerms&, int, int, int, int);

std::vector<Equation> assemble_pairing(const ExpansionTerms& t, IntegralFn integral,
                                       const std::string& family) {
  std::map<std::array<int, 4>, Poly> integrals;
  auto integral_of = [&](int a, int b, int c, int d) -> const Poly& {
    auto key = std::array<int, 4>{a, b, c, d};
    auto it = integrals.find(key);
    if (it == integrals.end()) it = integrals.emplace(key, integral(t, a, b, c, d)).first;
    return it->second;
  };
  std::vector<Equation> out;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c)
        for (int d = 1; d <= 4; ++d) {
          if (std::array{a, b} >= std::array{c, d}) continue;  // swapped pair is the negation
          Poly diff = integral_of(a, b, c, d) - integral_of(c, d, a, b);
          for (auto& [piece, tag] : sigma_split(diff)) {
            std::string label = family + "[" + tuple_label(a, b, c, d) + "]:" + tag;
            validate_equation(piece, label);
            out.push_back({LinExpr(piece), label});
          }
        }
  return out;
}

}  // namespace

std::vector<Equation> assemble_laplacian_pairing(const ExpansionTerms& t) {
  return assemble_pairing(t, &laplacian_pairing_integral, "laplacian-pairing");
}

std::vector<Equation> assemble_covariant_pairing(const ExpansionTerms& t) {
  return assemble_pairing(t, &covariant_pairing_integral, "covariant-pairing");
}

LinearSystem assemble_system(const ExpansionTerms& t, const std::vector<Family>& families) {
  LinearSystem s;
  s.families = families;
  for (Family f : families) {
    std::vector<Equation> eqs;
    switch (f) {
      case Family::HarmonicBoundary: {
        // contributes no Con constraints; the integrals are asserted zero
        auto ints = assemble_harmonic_boundary(t);
        for (int i = 1; i <= 4; ++i)
          for (int j = 1; j <= 4; ++j)
            if (!ints[i - 1][j - 1].is_zero())
              eqs.push_back({LinExpr(ints[i - 1][j - 1]),
                             "harmonic-boundary[" + index_pair(i, j) + "]"});
        break;
      }
      case Family::Differential: eqs = assemble_differential(t); break;
      case Family::Divergence: eqs = assemble_divergence(t); break;
      case Family::LaplacianPairing: eqs = assemble_laplacian_pairing(t); break;
      case Family::CovariantPairing: eqs = assemble_covariant_pairing(t); break;
    }
    s.equations.insert(s.equations.end(), eqs.begin(), eqs.end());
  }
  return s;
}

const Poly& SolutionTable::at(int i, int j, int k, int l) const {
  return value.at(SymbolId::con(i, j, k, l));
}

Poly SolutionTable::substitute(const Poly& p) const {
  Poly out = p;
  for (const auto& [sym, expr] : value) {
    if (!out.contains_symbol(sym)) continue;
    out = out.coefficient_of_linear(sym) * expr + out.without_symbol(sym);
  }
  return out;
}

SolutionTable solve_system(const LinearSystem& s) {
  struct Row {
    std::map<SymbolId, Rational> con;  // unknown coefficients
    Poly rhs;                          // parameter part (same side: con + rhs = 0)
    std::string label;
  };
  std::vector<Row> rows;
  rows.reserve(s.equations.size());
  for (const auto& eq : s.equations) {
    Row r;
    r.label = eq.label;
    for (const auto& [m, c] : eq.lhs.poly().terms()) {
      SymbolId sym = m.factors().front().first;
      if (sym.kind() == SymbolKind::Con)
        r.con[sym] = c;
      else
        r.rhs += Poly(m, c);
    }
    if (!r.rhs.is_zero() || !r.con.empty()) rows.push_back(std::move(r));
  }

  std::vector<Row> pivot_rows;
  std::vector<SymbolId> pivot_syms;
  // all 256 Con symbols in lexicographic order
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          SymbolId u = SymbolId::con(i, j, k, l);
          // pick the shortest live row whose lowest unknown is u
          int best = -1;
          std::size_t best_len = 0;
          for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].con.empty()) continue;
            if (rows[r].con.begin()->first != u) continue;
            if (best < 0 || rows[r].con.size() < best_len) {
              best = static_cast<int>(r);
              best_len = rows[r].con.size();
            }
          }
          if (best < 0) continue;
          Row piv = std::move(rows[best]);
          rows.erase(rows.begin() + best);
          Rational lead = piv.con.begin()->second;
          for (auto& [sym, c] : piv.con) c /= lead;
          piv.rhs *= Rational(1) / lead;
          auto eliminate = [&](Row& r) {
            auto it = r.con.find(u);
            if (it == r.con.end()) return;
            Rational f = it->second;
            for (const auto& [sym, c] : piv.con) {
              auto jt = r.con.find(sym);
              Rational v = (jt == r.con.end() ? Rational(0) : jt->second) - f * c;
              if (v == 0) {
                if (jt != r.con.end()) r.con.erase(jt);
              } else if (jt == r.con.end()) {
                r.con.emplace(sym, v);
              } else {
                jt->second = v;
              }
            }
            r.rhs -= piv.rhs * f;
          };
          for (auto& r : rows) eliminate(r);
          for (auto& r : pivot_rows) eliminate(r);
          pivot_rows.push_back(std::move(piv));
          pivot_syms.push_back(u);
        }

  for (const auto& r : rows) {
    if (r.con.empty() && !r.rhs.is_zero())
      throw InconsistentSystem("parameter-only equation from " + r.label + ": " +
                               r.rhs.to_string() + " = 0");
    if (!r.con.empty())
      throw InconsistentSystem("unreduced row survived elimination: " + r.label);
  }

  SolutionTable table;
  std::vector<SymbolId> all;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) all.push_back(SymbolId::con(i, j, k, l));
  for (SymbolId u : all) {
    auto it = std::find(pivot_syms.begin(), pivot_syms.end(), u);
    if (it == pivot_syms.end()) {
      table.free_unknowns.push_back(u);
      table.value[u] = Poly(u);
      continue;
    }
    const Row& r = pivot_rows[static_cast<std::size_t>(it - pivot_syms.begin())];
    Poly expr = -r.rhs;
    for (const auto& [sym, c] : r.con)
      if (sym != u) expr -= Poly(Monomial::var(sym), c);
    table.value[u] = expr;
  }
  return table;
}

std::vector<SymbolId> ReferenceTable::free_unknowns() const {
  std::vector<SymbolId> out;
  for (const auto& [sym, expr] : rules)
    for (const auto& [m, c] : expr.terms())
      for (const auto& [s, e] : m.factors())
        if (s.kind() == SymbolKind::Con && !rules.count(s) &&
            std::find(out.begin(), out.end(), s) == out.end())
          out.push_back(s);
  // Con symbols with no rule at all are free even if unreferenced
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          SymbolId s = SymbolId::con(i, j, k, l);
          if (!rules.count(s) && std::find(out.begin(), out.end(), s) == out.end())
            out.push_back(s);
        }
  std::sort(out.begin(), out.end());
  return out;
}

Poly ReferenceTable::substitute(const Poly& p) const {
  Poly out = p;
  for (const auto& [sym, expr] : rules) {
    if (!out.contains_symbol(sym)) continue;
    out = out.coefficient_of_linear(sym) * expr + out.without_symbol(sym);
  }
  return out;
}

TableCheckReport check_paper_table(const ReferenceTable& ref, const LinearSystem& s,
                                   const SolutionTable& solved) {
  TableCheckReport rep;
  for (const auto& eq : s.equations) {
    ++rep.equations_checked;
    if (!ref.substitute(eq.lhs.poly()).is_zero()) rep.violated_equations.push_back(eq.label);
  }
  for (const auto& [sym, expr] : ref.rules) {
    ++rep.rules_checked;
    Poly relation = Poly(sym) - expr;
    if (!solved.substitute(relation).is_zero()) rep.unimplied_rules.push_back(sym.name());
  }
  rep.reference_free_count = ref.free_unknowns().size();
  rep.solver_free_count = solved.free_unknowns.size();
  return rep;
}

}  // namespace ale
