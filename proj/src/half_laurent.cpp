#include "motivic/half_laurent.hpp"

#include <sstream>

namespace motivic {

HalfLaurent::HalfLaurent(long constant) {
  if (constant != 0) coeffs_.emplace(0, constant);
}

HalfLaurent HalfLaurent::monomial(const mpz_class& coefficient, Exponent twice_exponent) {
  HalfLaurent h;
  h.add_term(twice_exponent, coefficient);
  return h;
}

bool HalfLaurent::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

bool HalfLaurent::is_integral() const {
  for (const auto& [e, c] : coeffs_) {
    if (e % 2 != 0) return false;
  }
  return true;
}

mpz_class HalfLaurent::coefficient(Exponent twice_exponent) const {
  auto it = coeffs_.find(twice_exponent);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void HalfLaurent::add_term(Exponent e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
  return *this;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& other) {
  *this = *this * other;
  return *this;
}

HalfLaurent HalfLaurent::shifted(Exponent twice_exponent) const {
  HalfLaurent r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + twice_exponent, c);
  return r;
}

HalfLaurent HalfLaurent::pow(unsigned n) const {
  HalfLaurent result(1);
  HalfLaurent base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::string render_tate(HalfLaurent::Exponent k) {
  if (k == 0) return {};
  if (k % 2 == 0) {
    const auto whole = k / 2;
    return whole == 1 ? "L" : "L^" + std::to_string(whole);
  }
  return "L^(" + std::to_string(k) + "/2)";
}

std::string HalfLaurent::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest power first.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const mpz_class magnitude = negative ? mpz_class(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const std::string tate = render_tate(e);
    if (tate.empty()) {
      out << magnitude.get_str();
    } else if (magnitude == 1) {
      out << tate;
    } else {
      out << magnitude.get_str() << '*' << tate;
    }
  }
  return out.str();
}

}  // namespace motivic
