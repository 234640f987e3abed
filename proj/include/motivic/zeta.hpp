#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "motivic/motive.hpp"
#include "motivic/registry.hpp"

namespace motivic {

struct Divisor {
  int id = 0;
  int N = 1;
  int nu = 1;
  // Closure of a component of the preimage of U_0 \ X_0.
  bool boundary = false;
};

// Ẽ_I° with its μ_{m_I} action, as a class over the base.
struct Stratum {
  std::vector<int> divisors;  // sorted ids, nonempty
  int cover_order = 1;
  std::optional<std::string> cover_symbol;
  Motive cls;
  std::string label;  // as written in the input, for display
};

struct ResolutionData;

struct CriticalValue {
  std::string value = "0";
  std::string critical_space;               // X_c
  std::optional<std::string> restriction;   // registered morphism X_c -> U_c
  std::optional<std::string> complement;    // registered morphism (U_c \ X_c) -> U_c
  // Resolution of f - c when c ≠ 0; the enclosing data is used otherwise.
  std::shared_ptr<const ResolutionData> resolution;
};

struct ResolutionData {
  std::string name;
  int ambient_dim = 1;  // dim U
  std::string base;     // U_0 (or U_c), a registered space
  bool constant = false;
  std::vector<Divisor> divisors;
  std::vector<Stratum> strata;
  std::vector<CriticalValue> critical_values;
  std::map<std::string, std::string> points;  // label -> morphism pt -> base

  const Divisor& divisor(int id) const;
};

// Σ (L-1)^{lm1} ⊙ coefficient ⊙ Π factor(N, ν), factor(N, ν) = L^{-ν}T^N / (1 - L^{-ν}T^N).
struct RationalTerm {
  Motive coefficient;
  std::string label;
  int lm1_power = 0;
  int cover_order = 1;
  std::vector<std::pair<int, int>> factors;  // (N, ν)
};

struct RationalMotive {
  std::string space;
  std::vector<RationalTerm> terms;

  std::string render() const;
};

std::vector<std::string> validate_resolution(const Registry& reg, const ResolutionData& r);

RationalMotive zeta_function(const Registry& reg, const ResolutionData& r);
// Coefficients of T^0 .. T^k.
std::vector<Motive> expand_series(const RationalMotive& z, int k);
// Cover orders of the strata contributing to each coefficient of T^0 .. T^k.
std::vector<std::set<int>> series_cover_orders(const RationalMotive& z, int k);
// Constant term of the expansion in T^{-1}, computed term by term from the
// T^{-1}-series of each factor rather than by substitution.
Motive constant_term_at_infinity(const RationalMotive& z);

Motive nearby_cycle(const Registry& reg, const ResolutionData& r);
Motive vanishing_cycle(const Registry& reg, const ResolutionData& r, const std::string& value = "0");
// Diagnostics when [U_c] - MF does not vanish off X_c.
std::vector<std::string> support_check(const Registry& reg, const ResolutionData& r, const std::string& value = "0");
Motive milnor_fibre_at(const Registry& reg, const ResolutionData& r, const std::string& point);

}  // namespace motivic
