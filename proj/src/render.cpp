#include "motivic/render.hpp"

#include <sstream>

namespace motivic {

std::string render_symbol(const Symbol& s) {
  if (!s.monodromic()) return "[" + s.name + "]";
  const auto mu = "mu_" + std::to_string(s.order);
  if (s.name == mu) return "[" + mu + "]";
  return "[" + mu + ":" + s.name + "]";
}

namespace {

template <typename BundleNames>
std::string render_impl(const Motive& m, BundleNames&& bundle_names) {
  if (m.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : m.terms()) {
    std::vector<std::string> factors;
    for (const auto& s : key.monomial) factors.push_back(render_symbol(s));
    if (!is_zero(key.bundle)) {
      std::string y = "Y(";
      bool plus = false;
      for (const auto& g : bundle_names(key.bundle)) {
        if (plus) y += "+";
        y += g;
        plus = true;
      }
      factors.push_back(y + ")");
    }

    bool negative = false;
    std::string coeff;
    if (c.size() == 1) {
      const auto& [e, value] = *c.coefficients().begin();
      negative = value < 0;
      const mpz_class magnitude = negative ? mpz_class(-value) : value;
      const auto tate = render_tate(e);
      if (tate.empty()) {
        coeff = magnitude == 1 && !factors.empty() ? "" : magnitude.get_str();
      } else {
        coeff = magnitude == 1 ? tate : magnitude.get_str() + "*" + tate;
      }
    } else {
      coeff = factors.empty() && first ? c.to_string() : "(" + c.to_string() + ")";
    }
    if (!coeff.empty()) factors.insert(factors.begin(), coeff);

    std::string body;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) body += " ⊙ ";
      body += factors[i];
    }
    if (first) {
      out << (negative ? "-" : "") << body;
    } else {
      out << (negative ? " - " : " + ") << body;
    }
    first = false;
  }
  return out.str();
}

}  // namespace

std::string render(const Motive& m, const Registry& reg) {
  return render_impl(m, [&](const Bits& bits) { return reg.bundle_generator_names(m.space(), bits); });
}

std::string render(const Motive& m) {
  return render_impl(m, [](const Bits& bits) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i]) names.push_back("e" + std::to_string(i + 1));
    }
    return names;
  });
}

}  // namespace motivic
