#include <doctest.h>

#include "motivic/random_fragment.hpp"
#include "motivic/stabilize.hpp"
#include "support.hpp"

using namespace motivic;

namespace {

Registry chain_world() {
  Registry reg;
  for (const char* name : {"X", "Y", "Z"}) {
    SpaceDecl s;
    s.name = name;
    s.dim = 2;
    s.generators = {std::string(name) + "1", std::string(name) + "2"};
    reg.add_space(s);
  }
  MorphismDecl xy;
  xy.name = "xy";
  xy.source = "X";
  xy.target = "Y";
  xy.pullback.generators = {{"Y1", BundleClass("X", Bits{true, true})}, {"Y2", BundleClass("X", Bits{false, true})}};
  reg.add_morphism(xy);
  MorphismDecl yz;
  yz.name = "yz";
  yz.source = "Y";
  yz.target = "Z";
  yz.pullback.generators = {{"Z1", BundleClass("Y", Bits{false, true})}, {"Z2", BundleClass("Y", Bits{true, false})}};
  reg.add_morphism(yz);
  return reg;
}

}  // namespace

TEST_CASE("Thom-Sebastiani powers of the z^2 vanishing cycle") {
  const auto job = fixture("z2");
  const auto mf = vanishing_cycle(job.registry, *job.resolution);
  for (unsigned n = 1; n <= 10; ++n) CHECK(thom_sebastiani_power(job.registry, mf, n) == Motive::one("pt"));
  const auto ts = fixture("ts_z2");
  CHECK(ts.ts->power == 10);
  CHECK(kind_of([&] { thom_sebastiani_power(job.registry, mf, 0); }) == ErrorKind::ValidationFailed);
}

TEST_CASE("Thom-Sebastiani of half powers adds exponents") {
  Registry reg;
  for (int a = -6; a <= 6; ++a) {
    for (int b = -6; b <= 6; ++b) {
      CHECK(thom_sebastiani(reg, Motive::tate("pt", a), Motive::tate("pt", b)) == Motive::tate("pt", a + b));
    }
  }
}

TEST_CASE("quadratic form motive ignores the rank") {
  const auto reg = chain_world();
  const auto det = reg.bundle("X", {"X2"});
  const auto expected = mot_odot(Motive::tate("X", -2), reg.upsilon(det));
  for (int r = 1; r <= 8; ++r) CHECK(quadratic_form_motive(reg, {"X", r, det}) == expected);
  CHECK(kind_of([&] { quadratic_form_motive(reg, {"X", 0, det}); }) == ErrorKind::ValidationFailed);
  CHECK(kind_of([&] { quadratic_form_motive(reg, {"Y", 1, det}); }) == ErrorKind::SpaceMismatch);
}

TEST_CASE("twisting by a quadratic form: both routes agree") {
  const auto reg = chain_world();
  FragmentGenerator gen(17);
  for (int i = 0; i < 1000; ++i) {
    const BundleClass det("Y", gen.bits(2));
    const QuadraticBundleDatum d{"Y", gen.uniform(1, 5), det};
    const auto mf = mot_odot(Motive::constant("X", gen.half_laurent()), Motive::upsilon("X", trimmed(gen.bits(2))));
    CHECK(twist_by_quadratic(reg, mf, d, std::string("xy")) == twist_by_determinant(reg, mf, d, std::string("xy")));
    const auto here = mot_odot(Motive::constant("Y", gen.half_laurent()), Motive::upsilon("Y", trimmed(gen.bits(2))));
    CHECK(twist_by_quadratic(reg, here, d) == twist_by_determinant(reg, here, d));
  }
  const auto mf = Motive::one("X");
  CHECK(kind_of([&] { twist_by_quadratic(reg, mf, {"Y", 1, reg.zero_bundle("Y")}); }) == ErrorKind::MissingTransport);
}

TEST_CASE("stabilized pullback multiplies by Y(P)") {
  const auto reg = chain_world();
  const EmbeddingDatum e{"U", "V", 1, 3, reg.bundle("X", {"X1"}), std::nullopt};
  const auto mf = Motive::tate("X", -1);
  CHECK(stabilize_pullback(reg, mf, e) == mot_odot(mf, Motive::upsilon("X", {true})));
  const EmbeddingDatum shrink{"U", "V", 3, 1, reg.zero_bundle("X"), std::nullopt};
  CHECK(kind_of([&] { stabilize_pullback(reg, mf, shrink); }) == ErrorKind::ValidationFailed);
}

TEST_CASE("composite embeddings carry P_Phi + Phi^* P_Psi, associatively") {
  const auto reg = chain_world();
  FragmentGenerator gen(23);
  for (int i = 0; i < 1000; ++i) {
    const EmbeddingDatum phi{"U", "V", 1, 2, BundleClass("X", gen.bits(2)), reg.morphism("xy")};
    const EmbeddingDatum psi{"V", "W", 2, 3, BundleClass("Y", gen.bits(2)), reg.morphism("yz")};
    const EmbeddingDatum chi{"W", "T", 3, 5, BundleClass("Z", gen.bits(2)), std::nullopt};
    const auto left = compose_embeddings(reg, compose_embeddings(reg, phi, psi), chi);
    const auto right = compose_embeddings(reg, phi, compose_embeddings(reg, psi, chi));
    CHECK(left.p_phi == right.p_phi);
    const auto direct = bundle_tensor(phi.p_phi, reg.bundle_pullback("xy", psi.p_phi));
    CHECK(compose_embeddings(reg, phi, psi).p_phi == direct);
    // Pulling back MF along the composite equals pulling back twice.
    const auto mf = Motive::tate("X", gen.uniform(-4, 4));
    const auto comp = compose_embeddings(reg, phi, psi);
    CHECK(stabilize_pullback(reg, mf, comp) ==
          mot_odot(stabilize_pullback(reg, mf, phi), reg.upsilon(reg.bundle_pullback("xy", psi.p_phi))));
  }
  const EmbeddingDatum a{"U", "V", 1, 2, reg.zero_bundle("X"), std::nullopt};
  const EmbeddingDatum b{"W", "T", 2, 3, reg.zero_bundle("X"), std::nullopt};
  CHECK(kind_of([&] { compose_embeddings(reg, a, b); }) == ErrorKind::ValidationFailed);
}
