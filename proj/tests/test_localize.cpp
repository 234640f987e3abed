#include <doctest.h>

#include <algorithm>

#include "motivic/localize.hpp"
#include "motivic/random_fragment.hpp"
#include "support.hpp"

using namespace motivic;

TEST_CASE("virtual index counts signs of weights") {
  CHECK(virtual_index({}) == 0);
  CHECK(virtual_index({1, -1}) == 0);
  CHECK(virtual_index({3, 2, -5}) == 1);
  CHECK(virtual_index({-1, -1, -2}) == -3);
  CHECK(kind_of([] { virtual_index({1, 0}); }) == ErrorKind::ZeroWeight);
}

TEST_CASE("localized sum weights each component by L^(-ind/2)") {
  Registry reg;
  const std::vector<FixedComponent> comps{{"a", {1}, Motive::one("pt")},
                                          {"b", {-1, -1}, Motive::tate("pt", 2)},
                                          {"c", {2, -3}, Motive::constant("pt", HalfLaurent(5))}};
  const auto expected = Motive::tate("pt", -1) + Motive::tate("pt", 4) + Motive::constant("pt", HalfLaurent(5));
  CHECK(localize_sum(reg, comps) == expected);
  SpaceDecl x;
  x.name = "X";
  reg.add_space(x);
  CHECK(kind_of([&] { localize_sum(reg, {{"x", {1}, Motive::one("X")}}); }) == ErrorKind::SpaceMismatch);
}

TEST_CASE("z1 z2 with the hyperbolic weights") {
  const auto job = fixture("z1z2");
  const auto& fp = *job.fixed_points;
  const auto check = localization_check(job.registry, fp.components, *fp.direct);
  CHECK(check.pass);
  CHECK(check.report == "sum = 1; direct = 1");
  auto skew = fp.components;
  skew[0].weights = {1, 1};
  const auto bad = localization_check(job.registry, skew, *fp.direct);
  CHECK_FALSE(bad.pass);
  CHECK(bad.diff == Motive::tate("pt", -2) - Motive::one("pt"));
  CHECK(bad.report == "sum = L^-1; direct = 1; diff = -1 + L^-1");
}

TEST_CASE("two isolated points") {
  const auto job = fixture("two_points");
  const auto& fp = *job.fixed_points;
  CHECK(localize_sum(job.registry, fp.components) == Motive::constant("pt", HalfLaurent::monomial(2, -1)));
  CHECK(localization_check(job.registry, fp.components, *fp.direct).pass);
}

TEST_CASE("virtual index ignores order and cancelling pairs") {
  FragmentGenerator gen(41);
  for (int i = 0; i < 1000; ++i) {
    std::vector<int> w;
    for (int k = gen.uniform(0, 6); k > 0; --k) w.push_back(gen.coin() ? gen.uniform(1, 5) : -gen.uniform(1, 5));
    const int ind = virtual_index(w);
    auto shuffled = w;
    std::shuffle(shuffled.begin(), shuffled.end(), gen.rng());
    CHECK(virtual_index(shuffled) == ind);
    const int c = gen.uniform(1, 9);
    shuffled.push_back(c);
    shuffled.push_back(-c);
    CHECK(virtual_index(shuffled) == ind);
  }
}

TEST_CASE("localized sums are additive and vanish on no components") {
  Registry reg;
  CHECK(localize_sum(reg, {}).is_zero());
  const std::vector<FixedComponent> a{{"a", {1, 2}, Motive::tate("pt", 2)}};
  const std::vector<FixedComponent> b{{"b", {-1}, Motive::constant("pt", HalfLaurent(3))}, {"c", {}, Motive::one("pt")}};
  auto ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  CHECK(localize_sum(reg, ab) == localize_sum(reg, a) + localize_sum(reg, b));
}
