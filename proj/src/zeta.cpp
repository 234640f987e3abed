#include "motivic/zeta.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "motivic/error.hpp"
#include "motivic/render.hpp"

namespace motivic {

const Divisor& ResolutionData::divisor(int id) const {
  for (const auto& d : divisors) {
    if (d.id == id) return d;
  }
  throw Error(ErrorKind::UnknownName, "divisor " + std::to_string(id) + " is not declared");
}

namespace {

std::string subset_name(const std::vector<int>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s + "}";
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string r;
  for (std::size_t i = 0; i < items.size(); ++i) r += (i ? sep : "") + items[i];
  return r;
}

// (L - 1)^p
HalfLaurent lm1(int p) { return (HalfLaurent::tate(2) - HalfLaurent(1)).pow(static_cast<unsigned>(p)); }

std::string render_factor(int N, int nu) {
  const std::string t = N == 1 ? "T" : "T^" + std::to_string(N);
  const std::string num = render_tate(-2 * nu) + " " + t;
  return "(" + num + ")/(1 - " + num + ")";
}

CriticalValue default_value(const ResolutionData& r) {
  CriticalValue c;
  c.critical_space = r.base;
  return c;
}

CriticalValue find_value(const ResolutionData& r, const std::string& value) {
  for (const auto& c : r.critical_values) {
    if (c.value == value) return c;
  }
  if (value == "0" && r.critical_values.empty()) return default_value(r);
  throw Error(ErrorKind::UnknownName, "critical value '" + value + "' is not declared for '" + r.name + "'");
}

void require_valid(const Registry& reg, const ResolutionData& r) {
  auto diags = validate_resolution(reg, r);
  if (!diags.empty()) throw Error(ErrorKind::ValidationFailed, join(diags, "; "));
}

}  // namespace

std::vector<std::string> validate_resolution(const Registry& reg, const ResolutionData& r) {
  std::vector<std::string> diags;
  if (!reg.has_space(r.base)) {
    diags.push_back("base space '" + r.base + "' is not registered");
    return diags;
  }
  if (r.ambient_dim < 1) diags.push_back("ambient dimension must be positive");
  if (r.constant) {
    if (!r.divisors.empty() || !r.strata.empty()) diags.push_back("constant function carries resolution data");
    return diags;
  }
  std::set<int> ids;
  for (const auto& d : r.divisors) {
    if (!ids.insert(d.id).second) diags.push_back("divisor " + std::to_string(d.id) + " declared twice");
    if (d.N < 1 || d.nu < 1) diags.push_back("divisor " + std::to_string(d.id) + " needs N >= 1 and nu >= 1");
    if (d.boundary && (d.N != 1 || d.nu != 1)) {
      diags.push_back("boundary divisor " + std::to_string(d.id) + " must have N = nu = 1");
    }
  }
  std::set<std::vector<int>> seen;
  for (const auto& s : r.strata) {
    const auto I = subset_name(s.divisors);
    if (s.divisors.empty()) {
      diags.push_back("stratum with empty divisor set");
      continue;
    }
    if (!std::is_sorted(s.divisors.begin(), s.divisors.end()) ||
        std::adjacent_find(s.divisors.begin(), s.divisors.end()) != s.divisors.end()) {
      diags.push_back("stratum " + I + " lists divisors unsorted or repeated");
    }
    if (!seen.insert(s.divisors).second) diags.push_back("stratum " + I + " declared twice");
    int g = 0;
    bool known = true;
    for (int id : s.divisors) {
      if (!ids.count(id)) {
        diags.push_back("stratum " + I + " refers to undeclared divisor " + std::to_string(id));
        known = false;
        continue;
      }
      g = std::gcd(g, r.divisor(id).N);
    }
    if (known && g != s.cover_order) {
      diags.push_back("stratum " + I + " has cover order " + std::to_string(s.cover_order) + " but gcd of N is " +
                      std::to_string(g));
    }
    if (s.cover_symbol) {
      try {
        const auto& decl = reg.resolve_symbol(*s.cover_symbol, r.base);
        if (decl.symbol.order != s.cover_order) {
          diags.push_back("stratum " + I + " cover symbol '" + *s.cover_symbol + "' has order " +
                          std::to_string(decl.symbol.order) + ", expected " + std::to_string(s.cover_order));
        }
      } catch (const Error&) {
        diags.push_back("stratum " + I + " cover symbol '" + *s.cover_symbol + "' is not registered");
      }
    } else if (s.cover_order > 1) {
      diags.push_back("stratum " + I + " has no registered cover data");
    }
    if (s.cls.space() != r.base) {
      diags.push_back("stratum " + I + " class is not over '" + r.base + "'");
    } else {
      for (const auto& d : reg.validate(s.cls)) diags.push_back("stratum " + I + ": " + d);
      for (const auto& [key, c] : s.cls.terms()) {
        for (const auto& sym : key.monomial) {
          if (sym.monodromic() && s.cover_order % sym.order != 0) {
            diags.push_back("stratum " + I + " class carries a mu_" + std::to_string(sym.order) +
                            " action incompatible with cover order " + std::to_string(s.cover_order));
          }
        }
      }
    }
  }
  for (const auto& c : r.critical_values) {
    if (!reg.has_space(c.critical_space)) {
      diags.push_back("critical value " + c.value + ": space '" + c.critical_space + "' is not registered");
    }
    if (c.resolution) {
      for (const auto& d : validate_resolution(reg, *c.resolution)) diags.push_back("critical value " + c.value + ": " + d);
    }
  }
  for (const auto& [label, morph] : r.points) {
    if (!reg.has_morphism(morph)) {
      diags.push_back("point '" + label + "' uses unregistered morphism '" + morph + "'");
    } else if (reg.morphism(morph).target != r.base || !reg.is_point(reg.morphism(morph).source)) {
      diags.push_back("point '" + label + "' morphism does not map a point into '" + r.base + "'");
    }
  }
  return diags;
}

std::string RationalMotive::render() const {
  if (terms.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& t : terms) {
    std::string s;
    if (t.lm1_power > 0) {
      s += "(L - 1)";
      if (t.lm1_power > 1) s += "^" + std::to_string(t.lm1_power);
      s += " * ";
    }
    const bool compound = t.label.find(" + ") != std::string::npos || t.label.find(" - ") != std::string::npos;
    s += compound ? "(" + t.label + ")" : t.label;
    for (const auto& [N, nu] : t.factors) s += " * " + render_factor(N, nu);
    parts.push_back(s);
  }
  return join(parts, " + ");
}

RationalMotive zeta_function(const Registry& reg, const ResolutionData& r) {
  require_valid(reg, r);
  RationalMotive z;
  z.space = r.base;
  if (r.constant) return z;
  for (const auto& s : r.strata) {
    if (s.cls.is_zero()) continue;
    RationalTerm t;
    t.coefficient = s.cls;
    t.label = s.label.empty() ? render(s.cls, reg) : s.label;
    t.lm1_power = static_cast<int>(s.divisors.size()) - 1;
    t.cover_order = s.cover_order;
    for (int id : s.divisors) {
      const auto& d = r.divisor(id);
      t.factors.emplace_back(d.N, d.nu);
    }
    z.terms.push_back(std::move(t));
  }
  return z;
}

namespace {

// Truncated power series in T with HalfLaurent coefficients.
using Series = std::vector<HalfLaurent>;

Series series_mul(const Series& a, const Series& b, int k) {
  Series r(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= k; ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// Σ_{j≥1} L^{-jν} T^{jN}, truncated at T^k.
Series factor_series(int N, int nu, int k) {
  Series r(static_cast<std::size_t>(k + 1));
  for (int j = 1; j * N <= k; ++j) r[j * N] = HalfLaurent::tate(-2LL * j * nu);
  return r;
}

Series term_series(const RationalTerm& t, int k) {
  Series s(static_cast<std::size_t>(k + 1));
  s[0] = lm1(t.lm1_power);
  for (const auto& [N, nu] : t.factors) s = series_mul(s, factor_series(N, nu, k), k);
  return s;
}

}  // namespace

std::vector<Motive> expand_series(const RationalMotive& z, int k) {
  if (k < 0) k = 0;
  std::vector<Motive> out(static_cast<std::size_t>(k + 1), Motive(z.space));
  for (const auto& t : z.terms) {
    const auto s = term_series(t, k);
    for (int n = 0; n <= k; ++n) {
      if (!s[n].is_zero()) out[n] += t.coefficient.scaled(s[n]);
    }
  }
  return out;
}

std::vector<std::set<int>> series_cover_orders(const RationalMotive& z, int k) {
  if (k < 0) k = 0;
  std::vector<std::set<int>> out(static_cast<std::size_t>(k + 1));
  for (const auto& t : z.terms) {
    const auto s = term_series(t, k);
    for (int n = 0; n <= k; ++n) {
      if (!s[n].is_zero()) out[n].insert(t.cover_order);
    }
  }
  return out;
}

Motive constant_term_at_infinity(const RationalMotive& z) {
  // With u = T^{-1}: L^{-ν}T^N/(1 - L^{-ν}T^N) = -1 - Σ_{j≥1} L^{jν} u^{jN}.
  // Multiply the u-series of every factor and read off u^0.
  constexpr int depth = 2;
  Motive total(z.space);
  for (const auto& t : z.terms) {
    Series s(depth + 1);
    s[0] = lm1(t.lm1_power);
    for (const auto& [N, nu] : t.factors) {
      Series f(depth + 1);
      f[0] = HalfLaurent(-1);
      for (int j = 1; j * N <= depth; ++j) f[j * N] = -HalfLaurent::tate(2LL * j * nu);
      s = series_mul(s, f, depth);
    }
    total += t.coefficient.scaled(s[0]);
  }
  return total;
}

Motive nearby_cycle(const Registry& reg, const ResolutionData& r) {
  require_valid(reg, r);
  if (r.constant) return Motive(r.base);
  // -lim_{T→∞}: every factor goes to -1.
  Motive mf(r.base);
  for (const auto& t : zeta_function(reg, r).terms) {
    const int sign = t.factors.size() % 2 == 0 ? 1 : -1;
    mf -= t.coefficient.scaled(lm1(t.lm1_power) * HalfLaurent(sign));
  }
  return mf;
}

namespace {

Motive unnormalized_vanishing(const Registry& reg, const ResolutionData& r) {
  return Motive::one(r.base) - nearby_cycle(reg, r);
}

}  // namespace

Motive vanishing_cycle(const Registry& reg, const ResolutionData& r, const std::string& value) {
  const auto c = find_value(r, value);
  const ResolutionData& res = c.resolution ? *c.resolution : r;
  const Motive diff = unnormalized_vanishing(reg, res);
  Motive restricted(c.critical_space);
  if (c.restriction) {
    if (!reg.has_morphism(*c.restriction)) {
      throw Error(ErrorKind::MissingRestriction, "restriction '" + *c.restriction + "' is not registered");
    }
    try {
      restricted = reg.pullback(*c.restriction, diff);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MissingTransport) throw;
      throw Error(ErrorKind::MissingRestriction, std::string(e.what()));
    }
  } else if (c.critical_space == res.base) {
    restricted = diff;
  } else {
    throw Error(ErrorKind::MissingRestriction,
                "no restriction from '" + res.base + "' to '" + c.critical_space + "' for value " + c.value);
  }
  if (c.complement) {
    auto diags = support_check(reg, r, value);
    if (!diags.empty()) throw Error(ErrorKind::ValidationFailed, join(diags, "; "));
  }
  return restricted.scaled(HalfLaurent::tate(-res.ambient_dim));
}

std::vector<std::string> support_check(const Registry& reg, const ResolutionData& r, const std::string& value) {
  const auto c = find_value(r, value);
  const ResolutionData& res = c.resolution ? *c.resolution : r;
  std::vector<std::string> diags;
  if (!c.complement) return diags;
  const Motive off = reg.pullback(*c.complement, unnormalized_vanishing(reg, res));
  if (!off.is_zero()) {
    diags.push_back("[U_" + c.value + "] - MF does not vanish off the critical locus: " + render(off, reg));
  }
  return diags;
}

Motive milnor_fibre_at(const Registry& reg, const ResolutionData& r, const std::string& point) {
  const Motive mf = nearby_cycle(reg, r);
  Motive at(reg.point());
  auto it = r.points.find(point);
  if (it != r.points.end()) {
    try {
      at = reg.pullback(it->second, mf);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MissingTransport) throw;
      throw Error(ErrorKind::MissingRestriction, std::string(e.what()));
    }
  } else if (reg.is_point(r.base)) {
    at = mf.relabeled(reg.point());
  } else {
    throw Error(ErrorKind::MissingRestriction, "no point '" + point + "' declared on '" + r.base + "'");
  }
  return (Motive::one(at.space()) - at).scaled(HalfLaurent::tate(-r.ambient_dim));
}

}  // namespace motivic
