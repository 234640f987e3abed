#pragma once

#include <string>
#include <vector>

#include "motivic/motive.hpp"
#include "motivic/registry.hpp"

namespace motivic {

struct FixedComponent {
  std::string id;
  std::vector<int> weights;  // nonzero G_m-weights on T_xX at a representative point
  Motive motive;             // over the point; 1 for an isolated fixed point
};

// dim (T_xX)_+ - dim (T_xX)_-. Throws ZeroWeight.
int virtual_index(const std::vector<int>& weights);

// Σ L^{-ind_i/2} ⊙ motive_i over the point.
Motive localize_sum(const Registry& reg, const std::vector<FixedComponent>& components);

struct LocalizationCheck {
  bool pass = false;
  Motive sum;
  Motive direct;
  Motive diff;  // sum - direct
  std::string report;
};

LocalizationCheck localization_check(const Registry& reg, const std::vector<FixedComponent>& components,
                                     const Motive& direct);

}  // namespace motivic
