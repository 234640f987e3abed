#include <doctest.h>

#include "motivic/parse.hpp"
#include "motivic/random_fragment.hpp"
#include "motivic/render.hpp"
#include "support.hpp"

using namespace motivic;

TEST_CASE("rendering of constants and half powers") {
  CHECK(render(Motive::zero("X")) == "0");
  CHECK(render(Motive::one("X")) == "1");
  CHECK(render(Motive::tate("X", 1)) == "L^(1/2)");
  CHECK(render(Motive::tate("X", -1)) == "L^(-1/2)");
  CHECK(render(Motive::tate("X", -2)) == "L^-1");
  CHECK(render(Motive::constant("X", HalfLaurent::tate(2) - HalfLaurent(1))) == "L - 1");
}

TEST_CASE("rendering of symbols and Y classes") {
  CHECK(render_symbol({"A", "X", 1}) == "[A]");
  CHECK(render_symbol({"mu_2", "pt", 2}) == "[mu_2]");
  CHECK(render_symbol({"M", "X", 3}) == "[mu_3:M]");
  const auto world = FragmentGenerator::world(3);
  const auto m = mot_odot(Motive::tate("X", -1), Motive::upsilon("X", {true, false, true}));
  CHECK(render(m, world) == "L^(-1/2) ⊙ Y(g1+g3)");
  CHECK(render(m) == "L^(-1/2) ⊙ Y(e1+e3)");
  const auto mixed = Motive::symbol("X", {"A", "X", 1}).scaled(HalfLaurent::tate(2) - HalfLaurent(1)) - Motive::one("X");
  CHECK(render(mixed, world) == "-1 + (L - 1) ⊙ [A]");
}

TEST_CASE("parser accepts the documented grammar") {
  const auto world = FragmentGenerator::world(3);
  CHECK(parse_motive("L^(1/2) ⊙ L^(1/2)", world, "X") == Motive::tate("X", 2));
  CHECK(parse_motive("L^(1/2) * L^(1/2)", world, "X") == Motive::tate("X", 2));
  CHECK(parse_motive("(1 - L)^2", world, "X") == Motive::constant("X", (HalfLaurent(1) - HalfLaurent::tate(2)).pow(2)));
  CHECK(parse_motive("Y(g1+g2) ⊙ Y(g2)", world, "X") == Motive::upsilon("X", {true}));
  CHECK(parse_motive("Y(0)", world, "X") == Motive::one("X"));
  CHECK(parse_motive("[mu_2]", world, "pt") == Motive::one("pt") - Motive::tate("pt", 1));
  CHECK(parse_motive("[A@X] - [A]", world, "X").is_zero());
  CHECK(parse_motive("-[mu_3:M]", world, "X") == -Motive::symbol("X", {"M", "X", 3}));
}

TEST_CASE("parser errors") {
  const auto world = FragmentGenerator::world(3);
  for (const char* bad : {"", "1 +", "L^(1/3)", "[A", "Y(g9)", "(1", "2 ⊙ ⊙ 3", "[mu_5:M]"}) {
    CAPTURE(bad);
    bool raised = false;
    try {
      parse_motive(bad, world, "X");
    } catch (const Error&) {
      raised = true;
    }
    CHECK(raised);
  }
  CHECK(kind_of([&] { parse_motive("[nobody]", world, "X"); }) == ErrorKind::UnknownName);
  CHECK(kind_of([&] { parse_motive("1 $", world, "X"); }) == ErrorKind::Parse);
}

TEST_CASE("render then parse is the identity on random motives") {
  FragmentGenerator gen(3);
  const auto world = FragmentGenerator::world();
  for (int i = 0; i < 1000; ++i) {
    const auto m = gen.motive(world, gen.coin(), 5);
    const auto text = render(m, world);
    CAPTURE(text);
    CHECK(parse_motive(text, world, "X") == m);
  }
}
