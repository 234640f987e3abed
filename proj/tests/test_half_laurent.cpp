#include <doctest.h>

#include <random>

#include "motivic/half_laurent.hpp"

using motivic::HalfLaurent;

namespace {

// Evaluate at L^{1/2} = t, exactly.
mpq_class eval(const HalfLaurent& p, const mpq_class& t) {
  mpq_class acc = 0;
  for (const auto& [e, c] : p.coefficients()) {
    mpq_class term = c;
    mpq_class base = e >= 0 ? t : mpq_class(1) / t;
    for (auto i = e >= 0 ? e : -e; i > 0; --i) term *= base;
    acc += term;
  }
  return acc;
}

HalfLaurent random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4), exps(-9, 9), coeffs(-7, 7);
  HalfLaurent p;
  for (int i = terms(rng); i > 0; --i) p += HalfLaurent::monomial(coeffs(rng), exps(rng));
  return p;
}

}  // namespace

TEST_CASE("zero coefficients are never stored") {
  auto p = HalfLaurent::monomial(3, 1) - HalfLaurent::monomial(3, 1);
  CHECK(p.is_zero());
  CHECK(p.size() == 0);
  CHECK(HalfLaurent::monomial(0, 5).is_zero());
  CHECK(HalfLaurent(1).is_one());
}

TEST_CASE("arithmetic agrees with evaluation at several points") {
  std::mt19937_64 rng(7);
  const mpq_class points[] = {mpq_class(2), mpq_class(-3), mpq_class(5, 7), mpq_class(-11, 4)};
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng);
    for (const auto& t : points) {
      CHECK(eval(a + b, t) == eval(a, t) + eval(b, t));
      CHECK(eval(a - b, t) == eval(a, t) - eval(b, t));
      CHECK(eval(a * b, t) == eval(a, t) * eval(b, t));
      CHECK(eval(a.shifted(3), t) == eval(a, t) * t * t * t);
    }
  }
}

TEST_CASE("powers") {
  const HalfLaurent x = HalfLaurent(1) - HalfLaurent::tate(1);
  CHECK(x.pow(0) == HalfLaurent(1));
  CHECK(x.pow(2) == HalfLaurent(1) - HalfLaurent::monomial(2, 1) + HalfLaurent::tate(2));
  CHECK(HalfLaurent::tate(1).pow(2) == HalfLaurent::tate(2));
  const HalfLaurent big = HalfLaurent(2).pow(200);
  CHECK(big.coefficient(0) == (mpz_class(1) << 200));
}

TEST_CASE("integrality") {
  CHECK(HalfLaurent::tate(4).is_integral());
  CHECK_FALSE((HalfLaurent(1) + HalfLaurent::tate(-1)).is_integral());
}

TEST_CASE("text form") {
  CHECK(HalfLaurent(0).to_string() == "0");
  CHECK((HalfLaurent::tate(2) - HalfLaurent(1)).to_string() == "L - 1");
  CHECK((HalfLaurent(1) - HalfLaurent::tate(1)).to_string() == "-L^(1/2) + 1");
  CHECK(HalfLaurent::monomial(2, -1).to_string() == "2*L^(-1/2)");
  CHECK(motivic::render_tate(2) == "L");
  CHECK(motivic::render_tate(4) == "L^2");
  CHECK(motivic::render_tate(-2) == "L^-1");
  CHECK(motivic::render_tate(1) == "L^(1/2)");
  CHECK(motivic::render_tate(-3) == "L^(-3/2)");
  CHECK(motivic::render_tate(0).empty());
}
