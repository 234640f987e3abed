#pragma once

#include <string>
#include <vector>

#include "motivic/motive.hpp"
#include "motivic/registry.hpp"

namespace motivic {

struct MonomialVariable {
  std::string name;
  int exponent = 0;
  bool unit = false;  // constrained to G_m
};

// f = Π x_i^{a_i} on U = A^{affine} × G_m^{units}. `base` is the registered
// space standing for U_0, where the arc covers live.
struct MonomialFunction {
  std::vector<MonomialVariable> variables;
  std::string base;

  int dim() const { return static_cast<int>(variables.size()); }
};

// Parses "x^2*y" / "x^2 y" / "z^3"; variables listed in `unit_vars` are units.
MonomialFunction parse_monomial(const std::string& text, const std::vector<std::string>& unit_vars,
                                const std::string& base);

struct ArcClass {
  Motive value;
  int cover_order = 0;  // 0 when the class is empty
};

// [𝔘_{n,1}] by direct parametrisation of truncated arcs.
ArcClass arc_class(const Registry& reg, const MonomialFunction& f, int n);
// Coefficients of T^0 .. T^k of Σ [𝔘_{n,1}] L^{-n dim U} T^n.
std::vector<ArcClass> zeta_truncated(const Registry& reg, const MonomialFunction& f, int k);

}  // namespace motivic
