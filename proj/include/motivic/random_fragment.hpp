#pragma once

#include <random>
#include <string>

#include "motivic/bundle.hpp"
#include "motivic/half_laurent.hpp"
#include "motivic/motive.hpp"
#include "motivic/registry.hpp"

namespace motivic {

// Random elements of the decidable fragment, for property checks.
class FragmentGenerator {
 public:
  explicit FragmentGenerator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  HalfLaurent half_laurent(int max_terms = 3, int max_exp = 8, int max_coeff = 5);
  Bits bits(std::size_t dim);
  // Registry with space "X" carrying `dim` generators, trivial symbols A, B, C
  // on X, a μ_3 symbol M on X and the Z2 cover mu_2 on the point.
  static Registry world(std::size_t dim = 8);
  // Terms use trivial symbols, Υ-classes and L-powers; with `monodromic` some
  // terms also carry M (so at most one ⊙ factor should be generated that way).
  Motive motive(const Registry& world, bool monodromic = false, int max_terms = 4);
  // Only trivial symbols, no Υ, whole L-powers.
  Motive plain_motive(const Registry& world, int max_terms = 4);

 private:
  std::mt19937_64 rng_;
};

}  // namespace motivic
