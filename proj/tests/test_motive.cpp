#include <doctest.h>

#include "motivic/error.hpp"
#include "motivic/motive.hpp"
#include "motivic/random_fragment.hpp"
#include "support.hpp"

using namespace motivic;

namespace {

const Symbol A{"A", "X", 1};
const Symbol B{"B", "X", 1};
const Symbol M{"M", "X", 3};

}  // namespace

TEST_CASE("normal form sorts monomials and trims bundles") {
  Motive m = Motive::from_raw("X", {{{B, A}, {true, false, false}, HalfLaurent(2)},
                                    {{A, B}, {true}, HalfLaurent(-2)},
                                    {{A}, {}, HalfLaurent::tate(1)}});
  CHECK(m.size() == 1);
  CHECK(m.terms().begin()->first.monomial == Monomial{A});
  CHECK(m.normalized() == m);
}

TEST_CASE("odot unions monomials and adds bundle classes") {
  const auto a = mot_odot(Motive::symbol("X", A), Motive::upsilon("X", {true, false}));
  const auto b = mot_odot(Motive::symbol("X", B), Motive::upsilon("X", {true, true}));
  const auto ab = mot_odot(a, b);
  REQUIRE(ab.size() == 1);
  const auto& [key, coeff] = *ab.terms().begin();
  CHECK(key.monomial == Monomial{A, B});
  CHECK(key.bundle == Bits{false, true});
  CHECK(coeff.is_one());
}

TEST_CASE("Y(P) squares to one") {
  const auto y = Motive::upsilon("X", {false, true, true});
  CHECK(mot_odot(y, y) == Motive::one("X"));
  CHECK(Motive::upsilon("X", {}) == Motive::one("X"));
}

TEST_CASE("two monodromic opaque factors are undecidable") {
  const auto m = Motive::symbol("X", M);
  CHECK(kind_of([&] { mot_odot(m, m); }) == ErrorKind::OdotUndecidable);
  CHECK_NOTHROW(mot_odot(m, Motive::symbol("X", A)));
}

TEST_CASE("fibre product needs a plain side") {
  const auto half = Motive::tate("X", 1);
  CHECK(kind_of([&] { mot_dot(half, half); }) == ErrorKind::DotUndefined);
  CHECK(kind_of([&] { mot_dot(Motive::upsilon("X", {true}), Motive::upsilon("X", {true})); }) ==
        ErrorKind::DotUndefined);
  CHECK(mot_dot(Motive::tate("X", 2), half) == Motive::tate("X", 3));
  CHECK(mot_dot(Motive::symbol("X", A), Motive::symbol("X", M)) ==
        mot_odot(Motive::symbol("X", A), Motive::symbol("X", M)));
}

TEST_CASE("base spaces must agree") {
  CHECK(kind_of([] { mot_add(Motive::one("X"), Motive::one("Y")); }) == ErrorKind::SpaceMismatch);
  CHECK(kind_of([] { mot_odot(Motive::one("X"), Motive::one("Y")); }) == ErrorKind::SpaceMismatch);
}

TEST_CASE("odot powers") {
  const auto x = Motive::constant("X", HalfLaurent(1) - HalfLaurent::tate(1));
  CHECK(odot_pow(x, 0) == Motive::one("X"));
  CHECK(odot_pow(x, 3) == mot_odot(x, mot_odot(x, x)));
  CHECK(odot_pow(Motive::upsilon("X", {true}), 5) == Motive::upsilon("X", {true}));
}

TEST_CASE("plainness") {
  CHECK(Motive::tate("X", 4).is_plain());
  CHECK_FALSE(Motive::tate("X", 1).is_plain());
  CHECK_FALSE(Motive::upsilon("X", {true}).is_plain());
  CHECK_FALSE(Motive::symbol("X", M).is_plain());
  CHECK(Motive::symbol("X", M).has_monodromic_symbols());
}

TEST_CASE("ring laws on random fragment elements") {
  FragmentGenerator gen(11);
  const auto world = FragmentGenerator::world();
  for (int i = 0; i < 1000; ++i) {
    const auto a = gen.motive(world, true), b = gen.motive(world), c = gen.motive(world);
    CHECK(mot_odot(a, b) == mot_odot(b, a));
    CHECK(mot_odot(mot_odot(a, b), c) == mot_odot(a, mot_odot(b, c)));
    CHECK(mot_odot(a, b - c) == mot_odot(a, b) - mot_odot(a, c));
    CHECK(a + (-a) == Motive::zero("X"));
    CHECK(mot_odot(a, Motive::one("X")) == a);
  }
}
