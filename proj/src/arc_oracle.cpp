#include "motivic/arc_oracle.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "motivic/error.hpp"

namespace motivic {

MonomialFunction parse_monomial(const std::string& text, const std::vector<std::string>& unit_vars,
                                const std::string& base) {
  MonomialFunction f;
  f.base = base;
  static const std::regex factor(R"(\s*\*?\s*([A-Za-z_][A-Za-z0-9_]*)(\s*\^\s*(\d+))?)");
  std::size_t pos = 0;
  std::smatch m;
  while (pos < text.size()) {
    auto begin = text.cbegin() + static_cast<std::ptrdiff_t>(pos);
    if (std::all_of(begin, text.cend(), [](unsigned char c) { return std::isspace(c); })) break;
    if (!std::regex_search(begin, text.cend(), m, factor, std::regex_constants::match_continuous)) {
      throw Error(ErrorKind::UnsupportedShape, "not a monomial: \"" + text + "\"");
    }
    MonomialVariable v;
    v.name = m[1];
    v.exponent = m[3].matched ? std::stoi(m[3]) : 1;
    for (const auto& existing : f.variables) {
      if (existing.name == v.name) throw Error(ErrorKind::UnsupportedShape, "variable '" + v.name + "' repeated");
    }
    f.variables.push_back(v);
    pos += static_cast<std::size_t>(m.length(0));
  }
  if (f.variables.empty()) throw Error(ErrorKind::UnsupportedShape, "empty monomial");
  for (const auto& u : unit_vars) {
    bool found = false;
    for (auto& v : f.variables) {
      if (v.name == u) {
        v.unit = true;
        found = true;
      }
    }
    if (!found) {
      MonomialVariable v;
      v.name = u;
      v.unit = true;
      f.variables.push_back(v);
    }
  }
  return f;
}

ArcClass arc_class(const Registry& reg, const MonomialFunction& f, int n) {
  if (n < 1) throw Error(ErrorKind::ValidationFailed, "arc order must be positive");
  const MonomialVariable* z = nullptr;
  for (const auto& v : f.variables) {
    if (v.exponent < 0) throw Error(ErrorKind::UnsupportedShape, "negative exponent on '" + v.name + "'");
    if (v.unit || v.exponent == 0) continue;
    if (z) {
      throw Error(ErrorKind::UnsupportedShape,
                  "more than one vanishing variable ('" + z->name + "', '" + v.name + "')");
    }
    z = &v;
  }
  ArcClass out{Motive(f.base), 0};
  // f is a unit on U: no arc has positive order.
  if (!z) return out;
  const int a = z->exponent;
  if (n % a != 0) return out;
  const int k = n / a;

  // Arcs mod t^{n+1}: z = c_k t^k + ... + c_n t^n with c_k^a Π u_j^{b_j} = 1.
  // Every other variable keeps its constant term (a point of U_0) and has n
  // free higher coefficients; z has n - k free ones above c_k.
  CoverEquation eq;
  eq.order = a;
  for (const auto& v : f.variables) {
    if (v.unit && v.exponent != 0) eq.units[v.name] = v.exponent;
  }
  eq = eq.normalized();
  const SymbolDecl* cover = reg.find_cover(f.base, eq);
  if (!cover) {
    std::string desc = "mu_" + std::to_string(a);
    for (const auto& [u, e] : eq.units) desc += " twisted by " + u + "^" + std::to_string(e);
    throw Error(ErrorKind::UnknownName, "no registered cover " + desc + " on '" + f.base + "'");
  }
  if (cover->symbol.order != a) {
    throw Error(ErrorKind::ValidationFailed, "cover '" + cover->symbol.name + "' does not have order " + std::to_string(a));
  }
  const long free = (n - k) + static_cast<long>(n) * (f.dim() - 1);
  out.value = reg.symbol_motive(*cover, f.base).scaled(HalfLaurent::tate(2 * free));
  out.cover_order = a;
  return out;
}

std::vector<ArcClass> zeta_truncated(const Registry& reg, const MonomialFunction& f, int k) {
  std::vector<ArcClass> out;
  out.push_back({Motive(f.base), 0});
  for (int n = 1; n <= k; ++n) {
    auto c = arc_class(reg, f, n);
    c.value = c.value.scaled(HalfLaurent::tate(-2LL * n * f.dim()));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace motivic
