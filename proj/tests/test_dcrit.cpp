#include <doctest.h>

#include <algorithm>

#include "motivic/dcrit.hpp"
#include "motivic/random_fragment.hpp"
#include "support.hpp"

using namespace motivic;

namespace {

constexpr std::size_t kGens = 3;

struct RandomAtlas {
  Registry reg;
  Atlas atlas;
};

std::string region_name(int i) { return "R" + std::to_string(i); }

// Charts R0..R{n-1} and one overlap per pair. Restrictions are random; the
// chart classes are then solved for so that every overlap condition holds.
RandomAtlas consistent_atlas(FragmentGenerator& gen, int n) {
  RandomAtlas out;
  auto& reg = out.reg;
  auto add_space = [&](const std::string& name) {
    SpaceDecl s;
    s.name = name;
    s.dim = 1;
    for (std::size_t g = 0; g < kGens; ++g) s.generators.push_back(name + "g" + std::to_string(g));
    reg.add_space(s);
  };
  std::vector<BundleClass> total;  // mf class + Q per chart
  for (int i = 0; i < n; ++i) {
    add_space(region_name(i));
    total.emplace_back(region_name(i), gen.bits(kGens));
  }
  const int half = gen.uniform(-3, 3);
  out.atlas.oriented = true;
  for (int i = 0; i < n; ++i) {
    const BundleClass q(region_name(i), gen.bits(kGens));
    const auto m = bundle_tensor(total[i], q);
    out.atlas.regions.push_back(region_name(i));
    out.atlas.charts.push_back({"c" + std::to_string(i), region_name(i), 1,
                                mot_odot(Motive::tate(region_name(i), half), reg.upsilon(m)), q});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto ov = region_name(i) + region_name(j);
      add_space(ov);
      auto make = [&](int target) {
        MorphismDecl f;
        f.name = ov + "_to_" + region_name(target);
        f.source = ov;
        f.target = region_name(target);
        f.kind = MorphismKind::OpenInclusion;
        for (std::size_t g = 0; g < kGens; ++g) {
          f.pullback.generators.emplace(region_name(target) + "g" + std::to_string(g), BundleClass(ov, gen.bits(kGens)));
        }
        return f;
      };
      auto fa = make(i);
      auto fb = make(j);
      auto pull = [&](const MorphismDecl& f, const BundleClass& t) {
        BundleClass r(ov, kGens);
        for (std::size_t g = 0; g < kGens; ++g) {
          if (t.bit(g)) r = bundle_tensor(r, f.pullback.generators.at(t.space() + "g" + std::to_string(g)));
        }
        return r;
      };
      // Make fb^* total_j = fa^* total_i by moving one generator image.
      auto solve = [&](MorphismDecl& f, const BundleClass& t, const BundleClass& want) {
        std::size_t pivot = 0;
        while (!t.bit(pivot)) ++pivot;
        auto& slot = f.pullback.generators.at(t.space() + "g" + std::to_string(pivot));
        slot = bundle_tensor(slot, bundle_tensor(pull(f, t), want));
      };
      if (!total[j].is_trivial()) {
        solve(fb, total[j], pull(fa, total[i]));
      } else if (!total[i].is_trivial()) {
        solve(fa, total[i], BundleClass(ov, kGens));
      }
      reg.add_morphism(fa);
      reg.add_morphism(fb);
      const auto& a = out.atlas.chart("c" + std::to_string(i));
      const auto& b = out.atlas.chart("c" + std::to_string(j));
      const std::string ra = ov + "_to_" + region_name(i), rb = ov + "_to_" + region_name(j);
      const BundleClass qt(ov, gen.bits(kGens));
      OverlapDatum o;
      o.name = "o" + std::to_string(i) + std::to_string(j);
      o.chart_a = a.id;
      o.chart_b = b.id;
      o.region = ov;
      o.restrict_a = ra;
      o.restrict_b = rb;
      o.q_t = qt;
      o.p_phi = bundle_tensor(qt, reg.bundle_pullback(ra, a.q));
      o.p_psi = bundle_tensor(qt, reg.bundle_pullback(rb, b.q));
      o.shared_mf = mot_odot(reg.pullback(ra, a.mf), reg.upsilon(o.p_phi));
      out.atlas.regions.push_back(ov);
      out.atlas.overlaps.push_back(o);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("the shipped two-chart atlas glues") {
  const auto job = fixture("two_chart_atlas");
  const auto& reg = job.registry;
  CHECK(check_orientation(reg, *job.atlas).empty());
  const auto g = glue(reg, *job.atlas);
  CHECK(g.values.at("RA") == mot_odot(Motive::tate("RA", -1), Motive::upsilon("RA", {true})));
  CHECK(g.values.at("RAB") == reg.pullback("ab_to_a", g.values.at("RA")));
  CHECK(g.values.at("RAB") == reg.pullback("ab_to_b", g.values.at("RB")));
  CHECK(g.ledger.size() == 1);
  const auto total = pushforward_to_point(reg, g, job.atlas->scissor);
  CHECK(total.space() == "pt");
  CHECK(total.size() == 3);
  CHECK(kind_of([&] { pushforward_to_point(reg, g, {}); }) == ErrorKind::MissingScissorTable);
}

TEST_CASE("an unoriented atlas is refused") {
  const auto job = fixture("two_chart_atlas");
  auto atlas = *job.atlas;
  atlas.oriented = false;
  CHECK(kind_of([&] { glue(job.registry, atlas); }) == ErrorKind::OrientationMissing);
}

TEST_CASE("descent failures name the overlap and both sides") {
  const auto job = fixture("two_chart_atlas");
  auto atlas = *job.atlas;
  atlas.overlaps[0].q_t = bundle_tensor(atlas.overlaps[0].q_t, job.registry.bundle("RAB", {"c1"}));
  try {
    glue(job.registry, atlas);
    FAIL("glued");
  } catch (const DescentFailure& e) {
    CHECK(e.overlap() == "AB");
    CHECK(e.lhs() != e.rhs());
    CHECK(e.kind() == ErrorKind::DescentFailure);
  }
}

TEST_CASE("random consistent atlases glue, independent of order") {
  FragmentGenerator gen(29);
  for (int i = 0; i < 1000; ++i) {
    auto [reg, atlas] = consistent_atlas(gen, gen.uniform(2, 4));
    CHECK(check_orientation(reg, atlas).empty());
    const auto g = glue(reg, atlas);
    CHECK(g.values.size() == atlas.regions.size());
    std::shuffle(atlas.charts.begin(), atlas.charts.end(), gen.rng());
    std::shuffle(atlas.overlaps.begin(), atlas.overlaps.end(), gen.rng());
    CHECK(glue(reg, atlas).values == g.values);
    // Every overlap value is the restriction of both chart values.
    for (const auto& o : atlas.overlaps) {
      CHECK(g.values.at(o.region) == reg.pullback(o.restrict_a, g.values.at(atlas.chart(o.chart_a).region)));
      CHECK(g.values.at(o.region) == reg.pullback(o.restrict_b, g.values.at(atlas.chart(o.chart_b).region)));
    }
  }
}

TEST_CASE("locality: gluing a sub-atlas gives the restricted values") {
  FragmentGenerator gen(31);
  for (int i = 0; i < 100; ++i) {
    auto [reg, atlas] = consistent_atlas(gen, 3);
    const auto whole = glue(reg, atlas);
    Atlas sub;
    sub.oriented = true;
    sub.charts = {atlas.chart("c0"), atlas.chart("c1")};
    for (const auto& o : atlas.overlaps) {
      if (o.chart_a != "c2" && o.chart_b != "c2") sub.overlaps.push_back(o);
    }
    const auto part = glue(reg, sub);
    for (const auto& [region, value] : part.values) CHECK(whole.values.at(region) == value);
  }
}

TEST_CASE("random atlases reject a flipped shared orientation") {
  FragmentGenerator gen(37);
  for (int i = 0; i < 1000; ++i) {
    auto [reg, atlas] = consistent_atlas(gen, 2);
    auto& qt = atlas.overlaps[0].q_t;
    const auto bit = static_cast<std::size_t>(gen.uniform(0, kGens - 1));
    qt.set(bit, !qt.bit(bit));
    CHECK(kind_of([&] { glue(reg, atlas); }) == ErrorKind::DescentFailure);
  }
}

TEST_CASE("chart data on the wrong space is a mismatch") {
  const auto job = fixture("two_chart_atlas");
  auto atlas = *job.atlas;
  atlas.charts[0].q = job.registry.zero_bundle("RB");
  CHECK(kind_of([&] { glue(job.registry, atlas); }) == ErrorKind::SpaceMismatch);
}
