#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motivic/bundle.hpp"
#include "motivic/half_laurent.hpp"

namespace motivic {

// Opaque generator [S, σ̂] over a registered space. order 1 means trivial
// monodromy; order n ≥ 2 means the action factors through μ_n.
struct Symbol {
  std::string name;
  std::string space;
  int order = 1;

  bool monodromic() const noexcept { return order > 1; }
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// Sorted multiset of symbols: their fibre product over the base.
using Monomial = std::vector<Symbol>;

std::size_t monodromic_count(const Monomial& m);
Monomial monomial_union(const Monomial& a, const Monomial& b);

struct TermKey {
  Monomial monomial;
  Bits bundle;  // trimmed; Υ of this class

  friend auto operator<=>(const TermKey&, const TermKey&) = default;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

struct RawTerm {
  Monomial monomial;
  Bits bundle;
  HalfLaurent coefficient;
};

// Element of the ⊙-normal form: Σ coefficient(L^{1/2}) ⊙ [monomial] ⊙ Υ(bundle)
// over a fixed base space. Always canonical: monomials sorted, bundle keys
// trimmed, no zero coefficients. Equality of normal forms is sound for
// equality in the quotient ring; it is not complete.
class Motive {
 public:
  using Terms = std::map<TermKey, HalfLaurent>;

  Motive() = default;
  explicit Motive(std::string space) : space_(std::move(space)) {}

  static Motive zero(std::string space) { return Motive(std::move(space)); }
  static Motive one(std::string space) { return constant(std::move(space), HalfLaurent(1)); }
  static Motive constant(std::string space, const HalfLaurent& c);
  static Motive tate(std::string space, HalfLaurent::Exponent twice_exponent) {
    return constant(std::move(space), HalfLaurent::tate(twice_exponent));
  }
  // Raw generator. Z2-cover rewriting is the registry's job, not this one's.
  static Motive symbol(std::string space, const Symbol& s);
  static Motive upsilon(std::string space, const Bits& bundle);
  static Motive from_raw(std::string space, const std::vector<RawTerm>& raw);

  const std::string& space() const noexcept { return space_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Trivial monodromy, no Υ-component, whole powers of L only.
  bool is_plain() const;
  bool has_monodromic_symbols() const;

  std::vector<RawTerm> raw() const;
  Motive normalized() const { return from_raw(space_, raw()); }
  // Same terms, new base label (pushforward along an identification).
  Motive relabeled(std::string space) const;

  Motive& operator+=(const Motive& other);
  Motive& operator-=(const Motive& other);
  Motive operator-() const;
  friend Motive operator+(Motive a, const Motive& b) { return a += b; }
  friend Motive operator-(Motive a, const Motive& b) { return a -= b; }
  Motive scaled(const HalfLaurent& c) const;

  friend bool operator==(const Motive& a, const Motive& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  void add_term(const TermKey& key, const HalfLaurent& c);

 private:
  std::string space_;
  Terms terms_;
};

Motive mot_add(const Motive& a, const Motive& b);
// ⊙ on the decidable fragment. Throws OdotUndecidable when a pair of terms
// both carry monodromic opaque symbols, SpaceMismatch on differing bases.
Motive mot_odot(const Motive& a, const Motive& b);
// Fibre product ·, only where one side is plain (then it agrees with ⊙).
Motive mot_dot(const Motive& a, const Motive& b);
bool mot_equal(const Motive& a, const Motive& b);
// n-fold ⊙ power, n ≥ 0.
Motive odot_pow(const Motive& m, unsigned n);

}  // namespace motivic
