#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace motivic {

// Laurent polynomial in L^{1/2} with arbitrary-precision integer coefficients.
// An exponent key k stands for L^{k/2}. Zero coefficients are never stored, so
// structural equality is ring equality.
class HalfLaurent {
 public:
  using Exponent = std::int64_t;
  using Coefficients = std::map<Exponent, mpz_class>;

  HalfLaurent() = default;
  HalfLaurent(long constant);  // NOLINT(google-explicit-constructor)

  static HalfLaurent monomial(const mpz_class& coefficient, Exponent twice_exponent);
  // L^{twice_exponent/2}
  static HalfLaurent tate(Exponent twice_exponent) { return monomial(1, twice_exponent); }

  const Coefficients& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const;
  // True when only whole powers of L occur.
  bool is_integral() const;
  std::size_t size() const noexcept { return coeffs_.size(); }
  mpz_class coefficient(Exponent twice_exponent) const;

  HalfLaurent& operator+=(const HalfLaurent& other);
  HalfLaurent& operator-=(const HalfLaurent& other);
  HalfLaurent& operator*=(const HalfLaurent& other);
  HalfLaurent operator-() const;

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.coeffs_ == b.coeffs_; }

  // Multiplication by L^{twice_exponent/2}.
  HalfLaurent shifted(Exponent twice_exponent) const;
  HalfLaurent pow(unsigned n) const;

  std::string to_string() const;

 private:
  void add_term(Exponent e, const mpz_class& c);

  Coefficients coeffs_;
};

// Renders L^{k/2}: "L", "L^2", "L^-1", "L^(1/2)", "L^(-3/2)". Empty for k = 0.
std::string render_tate(HalfLaurent::Exponent twice_exponent);

}  // namespace motivic
