#include <doctest.h>

#include <fstream>

#include "motivic/parse.hpp"
#include "motivic/render.hpp"
#include "motivic/zeta.hpp"
#include "support.hpp"

using namespace motivic;

namespace {

// Coefficient of T^n for z^a on A^1, by hand: Σ over the single divisor gives
// [mu_a] L^{-j} at n = j a.
Motive z_power_coefficient(const Registry& reg, int a, int n) {
  if (n == 0 || n % a != 0) return Motive::zero("pt");
  return reg.symbol_motive("mu_" + std::to_string(a), "pt").scaled(HalfLaurent::tate(-2 * (n / a)));
}

}  // namespace

TEST_CASE("z^a series against the closed form") {
  for (int a : {2, 3, 4}) {
    const auto job = fixture("z" + std::to_string(a));
    const auto z = zeta_function(job.registry, *job.resolution);
    const auto series = expand_series(z, 12);
    REQUIRE(series.size() == 13);
    for (int n = 0; n <= 12; ++n) {
      CAPTURE(a);
      CAPTURE(n);
      CHECK(series[n] == z_power_coefficient(job.registry, a, n));
    }
  }
}

TEST_CASE("series lengths at the edges") {
  const auto job = fixture("z2");
  const auto z = zeta_function(job.registry, *job.resolution);
  CHECK(expand_series(z, 0) == std::vector<Motive>{Motive::zero("pt")});
  const RationalMotive empty{"pt", {}};
  for (const auto& c : expand_series(empty, 5)) CHECK(c.is_zero());
}

TEST_CASE("nearby cycles of z^a") {
  for (int a : {2, 3, 4}) {
    const auto job = fixture("z" + std::to_string(a));
    const auto mf = nearby_cycle(job.registry, *job.resolution);
    CHECK(mf == job.registry.symbol_motive("mu_" + std::to_string(a), "pt"));
  }
}

TEST_CASE("substitution agrees with the constant term of the T^-1 expansion") {
  for (const char* name : {"z2", "z3", "x2y", "x2_line", "x2_line_blowup", "z1z2"}) {
    const auto job = fixture(name);
    const auto z = zeta_function(job.registry, *job.resolution);
    CAPTURE(name);
    CHECK(constant_term_at_infinity(z) == -nearby_cycle(job.registry, *job.resolution));
  }
}

TEST_CASE("a constant function has zero nearby cycle") {
  const auto job = fixture("constant");
  CHECK(nearby_cycle(job.registry, *job.resolution).is_zero());
}

TEST_CASE("malformed strata are diagnosed") {
  const auto job = fixture("malformed_strata");
  const auto diags = validate_resolution(job.registry, *job.resolution);
  CHECK(diags.size() == 3);
  CHECK(kind_of([&] { nearby_cycle(job.registry, *job.resolution); }) == ErrorKind::ValidationFailed);
  for (const char* name : {"z2", "z3", "z4", "x2", "x2y", "x2_line", "x2_line_blowup", "z1z2", "etale_f", "etale_g"}) {
    const auto ok = fixture(name);
    CAPTURE(name);
    CHECK(validate_resolution(ok.registry, *ok.resolution).empty());
  }
}

TEST_CASE("a redundant blow-up does not change the nearby cycle") {
  const auto plain = fixture("x2_line");
  const auto blown = fixture("x2_line_blowup");
  const auto a = nearby_cycle(plain.registry, *plain.resolution);
  const auto b = nearby_cycle(blown.registry, *blown.resolution);
  CHECK(render(a, plain.registry) == render(b, blown.registry));
  CHECK(a == b);
  // The zeta functions themselves differ.
  CHECK(zeta_function(plain.registry, *plain.resolution).terms.size() !=
        zeta_function(blown.registry, *blown.resolution).terms.size());
}

TEST_CASE("vanishing cycles pull back along an etale map") {
  const auto f = fixture("etale_f");
  const auto g = fixture("etale_g");
  const auto mf = vanishing_cycle(f.registry, *f.resolution);
  const auto mg = vanishing_cycle(g.registry, *g.resolution);
  CHECK(mg == mot_odot(Motive::tate("Gm", -1), g.registry.upsilon(g.registry.bundle("Gm", {"p1"}))));
  CHECK(g.registry.pullback("phi_X", mg) == mf);
  CHECK(mf == Motive::tate("Gw", -1));
}

TEST_CASE("z^2 vanishing cycle and Milnor fibre") {
  const auto job = fixture("z2");
  CHECK(vanishing_cycle(job.registry, *job.resolution) == Motive::one("pt"));
  CHECK(kind_of([&] { vanishing_cycle(job.registry, *job.resolution, "5"); }) == ErrorKind::UnknownName);
}

TEST_CASE("support of the vanishing cycle of z1 z2") {
  const auto job = fixture("z1z2");
  const auto& reg = job.registry;
  CHECK(support_check(reg, *job.resolution).empty());
  CHECK(vanishing_cycle(reg, *job.resolution) == Motive::one("o"));
  const auto mf = nearby_cycle(reg, *job.resolution);
  // Off the origin the nearby cycle is the class of U_0 \ X_0 itself.
  CHECK(reg.pullback("U0mo_in_U0", Motive::one("U0") - mf).is_zero());
}

TEST_CASE("missing restriction tables surface as MissingRestriction") {
  std::ifstream in(std::string(MOTIVIC_TEST_FIXTURES) + "/z1z2.json");
  auto j = Json::parse(in);
  for (auto& m : j["registry"]["morphisms"]) {
    if (m["name"] == "o_in_U0") m["pullback"]["symbols"].erase("o");
  }
  j.erase("fixed_points");
  const auto job = job_from_json(j);
  CHECK(kind_of([&] { vanishing_cycle(job.registry, *job.resolution); }) == ErrorKind::MissingRestriction);
}

TEST_CASE("Milnor fibres at points of the critical locus") {
  const auto f = fixture("x2");
  const auto g = fixture("x2y");
  CHECK(milnor_fibre_at(f.registry, *f.resolution, "y0") == Motive::tate("pt", -1));
  CHECK(milnor_fibre_at(g.registry, *g.resolution, "y0") == Motive::tate("pt", -1));
  auto slice = *g.resolution;
  slice.ambient_dim = 1;
  CHECK(milnor_fibre_at(g.registry, slice, "y0") == Motive::one("pt"));
  CHECK(kind_of([&] { milnor_fibre_at(g.registry, *g.resolution, "elsewhere"); }) == ErrorKind::MissingRestriction);
}
