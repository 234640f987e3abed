#include "motivic/motive.hpp"

#include <algorithm>

#include "motivic/error.hpp"

namespace motivic {

std::size_t monodromic_count(const Monomial& m) {
  return static_cast<std::size_t>(
      std::count_if(m.begin(), m.end(), [](const Symbol& s) { return s.monodromic(); }));
}

Monomial monomial_union(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Motive Motive::constant(std::string space, const HalfLaurent& c) {
  Motive m(std::move(space));
  m.add_term(TermKey{}, c);
  return m;
}

Motive Motive::symbol(std::string space, const Symbol& s) {
  Motive m(std::move(space));
  m.add_term(TermKey{{s}, {}}, HalfLaurent(1));
  return m;
}

Motive Motive::upsilon(std::string space, const Bits& bundle) {
  Motive m(std::move(space));
  m.add_term(TermKey{{}, trimmed(bundle)}, HalfLaurent(1));
  return m;
}

Motive Motive::from_raw(std::string space, const std::vector<RawTerm>& raw) {
  Motive m(std::move(space));
  for (const auto& t : raw) {
    Monomial mono = t.monomial;
    std::sort(mono.begin(), mono.end());
    m.add_term(TermKey{std::move(mono), trimmed(t.bundle)}, t.coefficient);
  }
  return m;
}

void Motive::add_term(const TermKey& key, const HalfLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Motive::is_plain() const {
  for (const auto& [key, c] : terms_) {
    if (!motivic::is_zero(key.bundle) || monodromic_count(key.monomial) > 0 || !c.is_integral()) return false;
  }
  return true;
}

bool Motive::has_monodromic_symbols() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return monodromic_count(kv.first.monomial) > 0; });
}

std::vector<RawTerm> Motive::raw() const {
  std::vector<RawTerm> r;
  r.reserve(terms_.size());
  for (const auto& [key, c] : terms_) r.push_back({key.monomial, key.bundle, c});
  return r;
}

Motive Motive::relabeled(std::string space) const {
  Motive m(std::move(space));
  m.terms_ = terms_;
  return m;
}

static void require_same_space(const Motive& a, const Motive& b) {
  if (a.space() != b.space()) {
    throw Error(ErrorKind::SpaceMismatch,
                "motives over '" + a.space() + "' and '" + b.space() + "'");
  }
}

Motive& Motive::operator+=(const Motive& other) {
  require_same_space(*this, other);
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

Motive& Motive::operator-=(const Motive& other) {
  require_same_space(*this, other);
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

Motive Motive::operator-() const {
  Motive m(space_);
  for (const auto& [key, c] : terms_) m.terms_.emplace(key, -c);
  return m;
}

Motive Motive::scaled(const HalfLaurent& c) const {
  Motive m(space_);
  if (c.is_zero()) return m;
  for (const auto& [key, coeff] : terms_) m.add_term(key, coeff * c);
  return m;
}

Motive mot_add(const Motive& a, const Motive& b) { return a + b; }

Motive mot_odot(const Motive& a, const Motive& b) {
  require_same_space(a, b);
  Motive r(a.space());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (monodromic_count(ka.monomial) > 0 && monodromic_count(kb.monomial) > 0) {
        throw Error(ErrorKind::OdotUndecidable,
                    "convolution of two classes with nontrivial monodromy has no normal form");
      }
      r.add_term(TermKey{monomial_union(ka.monomial, kb.monomial), xor_bits(ka.bundle, kb.bundle)},
                 ca * cb);
    }
  }
  return r;
}

Motive mot_dot(const Motive& a, const Motive& b) {
  require_same_space(a, b);
  if (!a.is_plain() && !b.is_plain()) {
    throw Error(ErrorKind::DotUndefined,
                "fibre product of two classes with nontrivial monodromy is not expressible");
  }
  return mot_odot(a, b);
}

bool mot_equal(const Motive& a, const Motive& b) { return a == b; }

Motive odot_pow(const Motive& m, unsigned n) {
  Motive r = Motive::one(m.space());
  for (unsigned i = 0; i < n; ++i) r = mot_odot(r, m);
  return r;
}

}  // namespace motivic
