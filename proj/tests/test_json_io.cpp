#include <doctest.h>

#include <filesystem>

#include "motivic/random_fragment.hpp"
#include "motivic/render.hpp"
#include "support.hpp"

using namespace motivic;

TEST_CASE("every shipped fixture loads") {
  for (const auto& entry : std::filesystem::directory_iterator(MOTIVIC_TEST_FIXTURES)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    CHECK_NOTHROW(load_job(entry.path().string()));
  }
}

TEST_CASE("unknown fields are rejected") {
  const Json job = Json::parse(R"({"schema": "motivic-job/1", "registry": {"spaces": [], "colour": 1}})");
  CHECK(kind_of([&] { job_from_json(job); }) == ErrorKind::Schema);
  const Json top = Json::parse(R"({"schema": "motivic-job/1", "extra": true})");
  CHECK(kind_of([&] { job_from_json(top); }) == ErrorKind::Schema);
  const Json version = Json::parse(R"({"schema": "motivic-job/2"})");
  CHECK(kind_of([&] { job_from_json(version); }) == ErrorKind::Schema);
}

TEST_CASE("structured motives round-trip") {
  FragmentGenerator gen(5);
  const auto world = FragmentGenerator::world();
  for (int i = 0; i < 1000; ++i) {
    const auto m = gen.motive(world, gen.coin(), 5);
    const auto j = motive_to_json(m, world);
    CHECK(motive_from_json(j, world, "X") == m);
    CHECK(motive_from_json(Json::parse(j.dump()), world, "X") == m);
  }
}

TEST_CASE("text motives are accepted wherever a motive is") {
  const auto world = FragmentGenerator::world(2);
  CHECK(motive_from_json(Json("L^(1/2) ⊙ Y(g2)"), world, "X") ==
        mot_odot(Motive::tate("X", 1), Motive::upsilon("X", {false, true})));
  CHECK(motive_from_json(Json(3), world, "X") == Motive::constant("X", HalfLaurent(3)));
}

TEST_CASE("registry survives a write and read") {
  const auto job = fixture("x2y");
  const auto again = registry_from_json(registry_to_json(job.registry));
  const auto p = job.registry.symbol_motive("P", "Gm");
  CHECK(again.symbol_motive("P", "Gm") == p);
  CHECK(again.pullback("at_y0", p) == job.registry.pullback("at_y0", p));
}

TEST_CASE("job parameters") {
  const auto job = fixture("z2");
  CHECK(job.params.series_order == 12);
  CHECK(job.resolution.has_value());
  CHECK(job.monomial.has_value());
  CHECK_FALSE(job.atlas.has_value());
}
