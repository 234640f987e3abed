#include <doctest.h>

#include "motivic/arc_oracle.hpp"
#include "support.hpp"

using namespace motivic;

namespace {

// Exponent of L in a single-term class c ⊙ [mu_a]: strip the cover and read L^e.
HalfLaurent::Exponent tate_exponent(const Registry& reg, const Motive& m, int a) {
  const auto cover = reg.symbol_motive("mu_" + std::to_string(a), "pt");
  for (HalfLaurent::Exponent e = -200; e <= 200; e += 2) {
    if (m == cover.scaled(HalfLaurent::tate(e))) return e / 2;
  }
  FAIL("not a Tate twist of the cover");
  return 0;
}

}  // namespace

TEST_CASE("parsing monomials") {
  const auto f = parse_monomial("x^2*y", {"y"}, "Gm");
  REQUIRE(f.dim() == 2);
  CHECK(f.variables[0].name == "x");
  CHECK(f.variables[0].exponent == 2);
  CHECK_FALSE(f.variables[0].unit);
  CHECK(f.variables[1].exponent == 1);
  CHECK(f.variables[1].unit);
  CHECK(parse_monomial("x^2 w^2", {}, "pt").dim() == 2);
  CHECK(parse_monomial("z^3", {"u"}, "pt").dim() == 2);
  CHECK(kind_of([] { parse_monomial("x + y", {}, "pt"); }) == ErrorKind::UnsupportedShape);
  CHECK(kind_of([] { parse_monomial("x*x", {}, "pt"); }) == ErrorKind::UnsupportedShape);
  CHECK(kind_of([] { parse_monomial("", {}, "pt"); }) == ErrorKind::UnsupportedShape);
}

TEST_CASE("z^2 arcs by hand") {
  const auto job = fixture("z2");
  const auto& reg = job.registry;
  const auto f = parse_monomial("z^2", {}, "pt");
  const auto four = arc_class(reg, f, 4);
  CHECK(four.value == reg.symbol_motive("mu_2", "pt").scaled(HalfLaurent::tate(4)));
  CHECK(four.cover_order == 2);
  CHECK(arc_class(reg, f, 3).value.is_zero());
  CHECK(arc_class(reg, f, 3).cover_order == 0);
  CHECK(kind_of([&] { arc_class(reg, f, 0); }) == ErrorKind::ValidationFailed);
}

TEST_CASE("z^3 truncated series is supported on multiples of 3") {
  const auto job = fixture("z3");
  const auto& reg = job.registry;
  const auto series = zeta_truncated(reg, *job.monomial, 9);
  REQUIRE(series.size() == 10);
  for (int n = 0; n <= 9; ++n) {
    CAPTURE(n);
    if (n > 0 && n % 3 == 0) {
      CHECK(series[n].value == reg.symbol_motive("mu_3", "pt").scaled(HalfLaurent::tate(-2 * (n / 3))));
      CHECK(series[n].cover_order == 3);
    } else {
      CHECK(series[n].value.is_zero());
    }
  }
}

TEST_CASE("homogeneity: nothing unless a divides n") {
  for (int a : {2, 3, 4}) {
    const auto job = fixture("z" + std::to_string(a));
    for (int n = 1; n <= 40; ++n) {
      if (n % a == 0) continue;
      CHECK(arc_class(job.registry, *job.monomial, n).value.is_zero());
    }
  }
}

TEST_CASE("growth law: constant exponent gap between consecutive multiples") {
  for (int a : {2, 3, 4}) {
    const auto job = fixture("z" + std::to_string(a));
    const auto& reg = job.registry;
    const auto gap = tate_exponent(reg, arc_class(reg, *job.monomial, 2 * a).value, a) -
                     tate_exponent(reg, arc_class(reg, *job.monomial, a).value, a);
    CHECK(gap == a - 1);
    for (int m = 3; m <= 12; ++m) {
      const auto d = tate_exponent(reg, arc_class(reg, *job.monomial, a * m).value, a) -
                     tate_exponent(reg, arc_class(reg, *job.monomial, a * (m - 1)).value, a);
      CHECK(d == gap);
    }
  }
}

TEST_CASE("x^2 y: the cover is the double cover c^2 y = 1 over Gm") {
  const auto job = fixture("x2y");
  const auto& reg = job.registry;
  const auto two = arc_class(reg, *job.monomial, 2);
  // x = c1 t + c2 t^2, y = y0 + y1 t + y2 t^2: free c2, y1, y2.
  CHECK(two.value == reg.symbol_motive("P", "Gm").scaled(HalfLaurent::tate(6)));
  CHECK(two.cover_order == 2);
}

TEST_CASE("unsupported and unregistered shapes") {
  const auto job = fixture("z2");
  const auto two = parse_monomial("x*y", {}, "pt");
  CHECK(kind_of([&] { arc_class(job.registry, two, 2); }) == ErrorKind::UnsupportedShape);
  const auto five = parse_monomial("z^5", {}, "pt");
  CHECK(kind_of([&] { arc_class(job.registry, five, 5); }) == ErrorKind::UnknownName);
  CHECK(arc_class(job.registry, five, 4).value.is_zero());
  const auto unit_only = parse_monomial("y", {"y"}, "pt");
  CHECK(arc_class(job.registry, unit_only, 3).value.is_zero());
}
