#include "motivic/random_fragment.hpp"

#include <algorithm>

namespace motivic {

HalfLaurent FragmentGenerator::half_laurent(int max_terms, int max_exp, int max_coeff) {
  HalfLaurent h;
  const int n = uniform(1, max_terms);
  for (int i = 0; i < n; ++i) {
    int c = uniform(-max_coeff, max_coeff);
    if (c == 0) c = 1;
    h += HalfLaurent::monomial(c, uniform(-max_exp, max_exp));
  }
  return h;
}

Bits FragmentGenerator::bits(std::size_t dim) {
  Bits b(dim);
  for (std::size_t i = 0; i < dim; ++i) b[i] = coin();
  return b;
}

Registry FragmentGenerator::world(std::size_t dim) {
  Registry reg;
  SpaceDecl x;
  x.name = "X";
  x.dim = 2;
  for (std::size_t i = 0; i < dim; ++i) x.generators.push_back("g" + std::to_string(i + 1));
  reg.add_space(x);
  for (const char* name : {"A", "B", "C"}) {
    SymbolDecl d;
    d.symbol = {name, "X", 1};
    reg.add_symbol(d);
  }
  SymbolDecl m;
  m.symbol = {"M", "X", 3};
  m.underlying = Motive::constant("X", HalfLaurent(3));
  reg.add_symbol(m);
  SymbolDecl mu2;
  mu2.symbol = {"mu_2", "pt", 2};
  mu2.z2_cover = BundleClass("pt", std::size_t{0});
  mu2.underlying = Motive::constant("pt", HalfLaurent(2));
  reg.add_symbol(mu2);
  return reg;
}

Motive FragmentGenerator::motive(const Registry& world, bool monodromic, int max_terms) {
  const auto dim = world.bundle_dim("X");
  Motive m("X");
  const int n = uniform(0, max_terms);
  static const char* names[] = {"A", "B", "C"};
  for (int i = 0; i < n; ++i) {
    Monomial mono;
    const int k = uniform(0, 2);
    for (int j = 0; j < k; ++j) mono.push_back({names[uniform(0, 2)], "X", 1});
    if (monodromic && coin()) mono.push_back({"M", "X", 3});
    std::sort(mono.begin(), mono.end());
    m.add_term(TermKey{mono, trimmed(coin() ? bits(dim) : Bits{})}, half_laurent());
  }
  if (coin()) m = mot_odot(m, world.symbol_motive("mu_2", "X")) + m;
  return m;
}

Motive FragmentGenerator::plain_motive(const Registry& world, int max_terms) {
  (void)world;
  Motive m("X");
  const int n = uniform(0, max_terms);
  static const char* names[] = {"A", "B", "C"};
  for (int i = 0; i < n; ++i) {
    Monomial mono;
    const int k = uniform(0, 2);
    for (int j = 0; j < k; ++j) mono.push_back({names[uniform(0, 2)], "X", 1});
    std::sort(mono.begin(), mono.end());
    HalfLaurent c;
    for (int t = uniform(1, 3); t > 0; --t) c += HalfLaurent::monomial(uniform(-4, 4), 2 * uniform(-4, 4));
    m.add_term(TermKey{mono, {}}, c);
  }
  return m;
}

}  // namespace motivic
