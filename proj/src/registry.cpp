#include "motivic/registry.hpp"

#include <algorithm>
#include <set>

#include "motivic/error.hpp"

namespace motivic {

std::string_view to_string(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::Identity: return "identity";
    case MorphismKind::OpenInclusion: return "open-inclusion";
    case MorphismKind::Etale: return "etale";
    case MorphismKind::ToPoint: return "to-point";
    case MorphismKind::General: return "general";
  }
  return "general";
}

MorphismKind morphism_kind_from_string(std::string_view s) {
  if (s == "identity") return MorphismKind::Identity;
  if (s == "open-inclusion") return MorphismKind::OpenInclusion;
  if (s == "etale") return MorphismKind::Etale;
  if (s == "to-point") return MorphismKind::ToPoint;
  if (s == "general") return MorphismKind::General;
  throw Error(ErrorKind::Schema, "unknown morphism kind '" + std::string(s) + "'");
}

CoverEquation CoverEquation::normalized() const {
  CoverEquation r;
  r.order = order;
  for (const auto& [unit, e] : units) {
    const int residue = order > 0 ? ((e % order) + order) % order : e;
    if (residue != 0) r.units.emplace(unit, residue);
  }
  return r;
}

Registry::Registry() {
  SpaceDecl pt;
  pt.name = point_;
  pt.dim = 0;
  pt.point = true;
  spaces_.emplace(point_, std::move(pt));
}

void Registry::add_space(SpaceDecl decl) {
  if (spaces_.count(decl.name)) {
    throw Error(ErrorKind::ValidationFailed, "space '" + decl.name + "' declared twice");
  }
  std::set<std::string> seen;
  for (const auto& g : decl.generators) {
    if (!seen.insert(g).second) {
      throw Error(ErrorKind::ValidationFailed,
                  "generator '" + g + "' repeated on space '" + decl.name + "'");
    }
  }
  if (decl.point && !decl.generators.empty()) {
    throw Error(ErrorKind::ValidationFailed, "point space '" + decl.name + "' has bundle generators");
  }
  if (decl.product_of) {
    if (!has_space(decl.product_of->first) || !has_space(decl.product_of->second)) {
      throw Error(ErrorKind::UnknownName, "product factors of '" + decl.name + "' are not registered");
    }
  }
  for (const auto& s : decl.strata) {
    if (!has_space(s.space)) {
      throw Error(ErrorKind::UnknownName,
                  "stratum '" + s.space + "' of '" + decl.name + "' is not registered");
    }
  }
  spaces_.emplace(decl.name, std::move(decl));
}

void Registry::add_symbol(SymbolDecl decl) {
  const auto& s = decl.symbol;
  if (!has_space(s.space)) {
    throw Error(ErrorKind::UnknownName, "symbol '" + s.name + "' lives on unregistered space '" + s.space + "'");
  }
  if (s.order < 1) {
    throw Error(ErrorKind::ValidationFailed, "symbol '" + s.name + "' has order < 1");
  }
  const auto key = symbol_key(s.name, s.space);
  if (symbols_.count(key)) {
    throw Error(ErrorKind::ValidationFailed, "symbol '" + key + "' declared twice");
  }
  if (decl.z2_cover) {
    if (s.order != 2) {
      throw Error(ErrorKind::ValidationFailed, "Z2-cover symbol '" + s.name + "' must have order 2");
    }
    if (decl.z2_cover->space() != s.space) {
      throw Error(ErrorKind::SpaceMismatch,
                  "cover class of '" + s.name + "' is not on '" + s.space + "'");
    }
  }
  if (decl.underlying && !decl.underlying->is_plain()) {
    throw Error(ErrorKind::ValidationFailed,
                "underlying class of '" + s.name + "' must have trivial monodromy");
  }
  symbols_.emplace(key, std::move(decl));
}

void Registry::add_morphism(MorphismDecl decl) {
  if (morphisms_.count(decl.name)) {
    throw Error(ErrorKind::ValidationFailed, "morphism '" + decl.name + "' declared twice");
  }
  if (!has_space(decl.source) || !has_space(decl.target)) {
    throw Error(ErrorKind::UnknownName, "morphism '" + decl.name + "' has an unregistered endpoint");
  }
  if (decl.kind == MorphismKind::Identity && decl.source != decl.target) {
    throw Error(ErrorKind::ValidationFailed, "identity morphism '" + decl.name + "' between distinct spaces");
  }
  const auto& tgt = space(decl.target);
  for (const auto& [g, cls] : decl.pullback.generators) {
    if (std::find(tgt.generators.begin(), tgt.generators.end(), g) == tgt.generators.end()) {
      throw Error(ErrorKind::UnknownName, "morphism '" + decl.name + "' transports unknown generator '" + g + "'");
    }
    if (cls.space() != decl.source) {
      throw Error(ErrorKind::SpaceMismatch, "generator image of '" + g + "' is not on '" + decl.source + "'");
    }
  }
  for (const auto& [k, image] : decl.pullback.symbols) {
    if (!symbols_.count(k)) {
      throw Error(ErrorKind::UnknownName, "morphism '" + decl.name + "' transports unknown symbol '" + k + "'");
    }
    if (image.space() != decl.source) {
      throw Error(ErrorKind::SpaceMismatch, "image of '" + k + "' is not on '" + decl.source + "'");
    }
  }
  for (const auto& entry : decl.pushforward) {
    if (entry.image.space() != decl.target) {
      throw Error(ErrorKind::SpaceMismatch,
                  "pushforward image in '" + decl.name + "' is not on '" + decl.target + "'");
    }
  }
  morphisms_.emplace(decl.name, std::move(decl));
}

void Registry::add_square_root(SquareRootDatum datum) {
  if (!has_space(datum.bundle.space())) {
    throw Error(ErrorKind::UnknownName, "square-root datum on unregistered space '" + datum.bundle.space() + "'");
  }
  auto key = std::make_pair(datum.line_bundle, datum.trivialization);
  square_roots_.insert_or_assign(std::move(key), std::move(datum));
}

void Registry::add_global_square_twist(const std::string& line_bundle, const std::string& trivialization,
                                       const std::string& square_line_bundle) {
  SquareRootDatum d;
  d.line_bundle = line_bundle + "*" + square_line_bundle + "^2";
  d.trivialization = trivialization + "*s^2";
  d.bundle = from_square_root(line_bundle, trivialization);
  add_square_root(std::move(d));
}

void Registry::add_partition(Partition p) {
  if (!has_space(p.space)) {
    throw Error(ErrorKind::UnknownName, "partition of unregistered space '" + p.space + "'");
  }
  for (const auto& s : p.strata) resolve_symbol(s, p.space);
  partitions_.push_back(std::move(p));
}

void Registry::set_restriction(const std::string& parent, const std::string& stratum, Transport t) {
  auto it = spaces_.find(parent);
  if (it == spaces_.end()) throw Error(ErrorKind::UnknownName, "space '" + parent + "' is not registered");
  for (auto& st : it->second.strata) {
    if (st.space == stratum) {
      st.restriction = std::move(t);
      return;
    }
  }
  throw Error(ErrorKind::UnknownName, "'" + stratum + "' is not a declared stratum of '" + parent + "'");
}

bool Registry::has_space(const std::string& name) const { return spaces_.count(name) > 0; }

const SpaceDecl& Registry::space(const std::string& name) const {
  auto it = spaces_.find(name);
  if (it == spaces_.end()) throw Error(ErrorKind::UnknownName, "space '" + name + "' is not registered");
  return it->second;
}

bool Registry::is_point(const std::string& name) const {
  auto it = spaces_.find(name);
  return it != spaces_.end() && it->second.point;
}

bool Registry::has_symbol(const std::string& name, const std::string& sp) const {
  return symbols_.count(symbol_key(name, sp)) > 0;
}

const SymbolDecl& Registry::symbol(const std::string& name, const std::string& sp) const {
  auto it = symbols_.find(symbol_key(name, sp));
  if (it == symbols_.end()) {
    throw Error(ErrorKind::UnknownName, "symbol '" + name + "' is not registered on '" + sp + "'");
  }
  return it->second;
}

const SymbolDecl& Registry::resolve_symbol(const std::string& name, const std::string& sp) const {
  for (const auto& candidate : allowed_symbol_spaces(sp)) {
    auto it = symbols_.find(symbol_key(name, candidate));
    if (it != symbols_.end()) return it->second;
  }
  throw Error(ErrorKind::UnknownName, "symbol '" + name + "' is not visible from '" + sp + "'");
}

std::vector<const SymbolDecl*> Registry::symbols_on(const std::string& sp) const {
  std::vector<const SymbolDecl*> r;
  for (const auto& [k, d] : symbols_) {
    if (d.symbol.space == sp) r.push_back(&d);
  }
  return r;
}

const SymbolDecl* Registry::find_cover(const std::string& sp, const CoverEquation& eq) const {
  const auto wanted = eq.normalized();
  for (const auto* d : symbols_on(sp)) {
    if (d->equation && d->equation->normalized() == wanted) return d;
  }
  return nullptr;
}

bool Registry::has_morphism(const std::string& name) const { return morphisms_.count(name) > 0; }

const MorphismDecl& Registry::morphism(const std::string& name) const {
  auto it = morphisms_.find(name);
  if (it == morphisms_.end()) throw Error(ErrorKind::UnknownName, "morphism '" + name + "' is not registered");
  return it->second;
}

MorphismDecl Registry::identity(const std::string& sp) const {
  space(sp);
  MorphismDecl id;
  id.name = "id_" + sp;
  id.source = sp;
  id.target = sp;
  id.kind = MorphismKind::Identity;
  return id;
}

std::vector<std::string> Registry::allowed_symbol_spaces(const std::string& sp) const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::vector<std::string> todo{sp};
  while (!todo.empty()) {
    auto cur = todo.front();
    todo.erase(todo.begin());
    if (!seen.insert(cur).second) continue;
    out.push_back(cur);
    const auto& d = space(cur);
    for (const auto& s : d.strata) todo.push_back(s.space);
    if (d.product_of) {
      todo.push_back(d.product_of->first);
      todo.push_back(d.product_of->second);
    }
  }
  for (const auto& [name, d] : spaces_) {
    if (d.point && seen.insert(name).second) out.push_back(name);
  }
  return out;
}

std::vector<std::string> Registry::validate(const Motive& m) const {
  std::vector<std::string> diags;
  if (!has_space(m.space())) {
    diags.push_back("motive base '" + m.space() + "' is not registered");
    return diags;
  }
  const auto allowed = allowed_symbol_spaces(m.space());
  const auto dim = bundle_dim(m.space());
  for (const auto& [key, c] : m.terms()) {
    for (const auto& s : key.monomial) {
      if (std::find(allowed.begin(), allowed.end(), s.space) == allowed.end()) {
        diags.push_back("symbol '" + s.name + "@" + s.space + "' is not visible from '" + m.space() + "'");
      } else if (!has_symbol(s.name, s.space)) {
        diags.push_back("symbol '" + s.name + "@" + s.space + "' is not registered");
      } else if (symbol(s.name, s.space).symbol.order != s.order) {
        diags.push_back("symbol '" + s.name + "@" + s.space + "' used with order " + std::to_string(s.order));
      }
    }
    if (key.bundle.size() > dim) {
      diags.push_back("bundle component exceeds the " + std::to_string(dim) + " generators of '" + m.space() + "'");
    }
  }
  return diags;
}

Motive Registry::symbol_motive(const std::string& name, const std::string& motive_space) const {
  return symbol_motive(resolve_symbol(name, motive_space), motive_space);
}

Motive Registry::symbol_motive(const SymbolDecl& decl, const std::string& motive_space) const {
  const auto& s = decl.symbol;
  if (decl.value) {
    if (decl.value->space() != motive_space) {
      for (const auto& [key, c] : decl.value->terms()) {
        if (!is_zero(key.bundle)) {
          throw Error(ErrorKind::SpaceMismatch,
                      "alias of '" + s.name + "' carries a bundle component and cannot move to '" +
                          motive_space + "'");
        }
      }
    }
    return decl.value->relabeled(motive_space);
  }
  if (decl.z2_cover) {
    // [P] = 1 - L^{1/2} ⊙ Υ(P)
    const auto& p = *decl.z2_cover;
    if (p.space() == motive_space || p.is_trivial()) {
      if (p.space() != motive_space && !is_point(p.space())) {
        throw Error(ErrorKind::ValidationFailed,
                    "cover symbol '" + s.name + "' over '" + p.space() + "' used on '" + motive_space +
                        "'; declare it through a value alias");
      }
      Motive r = Motive::one(motive_space);
      r -= Motive::upsilon(motive_space, p.space() == motive_space ? p.key() : Bits{}).scaled(HalfLaurent::tate(1));
      return r;
    }
    throw Error(ErrorKind::SpaceMismatch,
                "cover class of '" + s.name + "' lives on '" + p.space() + "', not '" + motive_space + "'");
  }
  return Motive::symbol(motive_space, s);
}

Motive Registry::upsilon(const BundleClass& p) const {
  if (p.key().size() > bundle_dim(p.space())) {
    throw Error(ErrorKind::ValidationFailed, "bundle class exceeds generators of '" + p.space() + "'");
  }
  return Motive::upsilon(p.space(), p.key());
}

std::size_t Registry::bundle_dim(const std::string& sp) const { return space(sp).generators.size(); }

BundleClass Registry::zero_bundle(const std::string& sp) const { return BundleClass(sp, bundle_dim(sp)); }

BundleClass Registry::bundle(const std::string& sp, const std::vector<std::string>& generators) const {
  const auto& gens = space(sp).generators;
  BundleClass p(sp, gens.size());
  for (const auto& g : generators) {
    auto it = std::find(gens.begin(), gens.end(), g);
    if (it == gens.end()) throw Error(ErrorKind::UnknownName, "generator '" + g + "' is not declared on '" + sp + "'");
    const auto i = static_cast<std::size_t>(it - gens.begin());
    p.set(i, !p.bit(i));
  }
  return p;
}

std::vector<std::string> Registry::bundle_generator_names(const std::string& sp, const Bits& bits) const {
  const auto& gens = space(sp).generators;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    names.push_back(i < gens.size() ? gens[i] : "e" + std::to_string(i + 1));
  }
  return names;
}

BundleClass Registry::transport_generator(const MorphismDecl& f, std::size_t index) const {
  const auto& gens = space(f.target).generators;
  const auto& g = gens.at(index);
  if (auto it = f.pullback.generators.find(g); it != f.pullback.generators.end()) return it->second;
  if (f.kind == MorphismKind::Identity) {
    BundleClass p(f.source, gens.size());
    p.set(index);
    return p;
  }
  if (f.kind == MorphismKind::OpenInclusion) {
    for (const auto& st : space(f.target).strata) {
      if (st.space != f.source) continue;
      if (auto it = st.restriction.generators.find(g); it != st.restriction.generators.end()) return it->second;
    }
  }
  throw Error(ErrorKind::MissingTransport,
              "generator '" + g + "' has no image along '" + f.name + "'");
}

BundleClass Registry::bundle_pullback(const MorphismDecl& f, const BundleClass& p) const {
  if (p.space() != f.target) {
    throw Error(ErrorKind::SpaceMismatch,
                "bundle on '" + p.space() + "' pulled back along '" + f.name + "' into '" + f.target + "'");
  }
  BundleClass r = zero_bundle(f.source);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p.bit(i)) r = bundle_tensor(r, transport_generator(f, i));
  }
  return r;
}

BundleClass Registry::from_square_root(const std::string& line_bundle, const std::string& trivialization) const {
  auto it = square_roots_.find({line_bundle, trivialization});
  if (it == square_roots_.end()) {
    throw Error(ErrorKind::UnknownDatum,
                "no square-root datum for (" + line_bundle + ", " + trivialization + ")");
  }
  return it->second.bundle;
}

SquareRootDatum Registry::square_root_tensor(const SquareRootDatum& a, const SquareRootDatum& b) const {
  SquareRootDatum r;
  r.line_bundle = a.line_bundle + "*" + b.line_bundle;
  r.trivialization = a.trivialization + "*" + b.trivialization;
  r.bundle = bundle_tensor(a.bundle, b.bundle);
  return r;
}

Motive Registry::transport_symbol(const MorphismDecl& f, const Symbol& s) const {
  const auto key = symbol_key(s.name, s.space);
  if (auto it = f.pullback.symbols.find(key); it != f.pullback.symbols.end()) return it->second;
  if (is_point(s.space)) return Motive::symbol(f.source, s);
  if (f.kind == MorphismKind::Identity) return Motive::symbol(f.source, s);
  if (f.kind == MorphismKind::OpenInclusion) {
    for (const auto& st : space(f.target).strata) {
      if (st.space != f.source) continue;
      if (auto it = st.restriction.symbols.find(key); it != st.restriction.symbols.end()) return it->second;
    }
  }
  throw Error(ErrorKind::MissingTransport, "symbol '" + key + "' has no image along '" + f.name + "'");
}

Motive Registry::pullback(const MorphismDecl& f, const Motive& m) const {
  if (m.space() != f.target) {
    throw Error(ErrorKind::SpaceMismatch,
                "motive on '" + m.space() + "' pulled back along '" + f.name + "' (target '" + f.target + "')");
  }
  if (f.kind == MorphismKind::Identity) return m.relabeled(f.source);
  Motive result(f.source);
  for (const auto& [key, c] : m.terms()) {
    Motive term = Motive::constant(f.source, c);
    for (const auto& s : key.monomial) term = mot_odot(term, transport_symbol(f, s));
    if (!is_zero(key.bundle)) {
      BundleClass p(f.target, key.bundle);
      term = mot_odot(term, Motive::upsilon(f.source, bundle_pullback(f, p).key()));
    }
    result += term;
  }
  return result;
}

Motive Registry::pushforward(const MorphismDecl& f, const Motive& m) const {
  if (m.space() != f.source) {
    throw Error(ErrorKind::SpaceMismatch,
                "motive on '" + m.space() + "' pushed forward along '" + f.name + "' (source '" + f.source + "')");
  }
  if (f.kind == MorphismKind::Identity) return m.relabeled(f.target);
  Motive result(f.target);
  for (const auto& [key, c] : m.terms()) {
    // Projection formula: classes pulled back from the point and L-powers factor out.
    TermKey local{{}, key.bundle};
    Motive outer = Motive::constant(f.target, c);
    for (const auto& s : key.monomial) {
      if (is_point(s.space)) {
        outer = mot_odot(outer, Motive::symbol(f.target, s));
      } else {
        local.monomial.push_back(s);
      }
    }
    const Motive* image = nullptr;
    for (const auto& entry : f.pushforward) {
      if (entry.key == local) {
        image = &entry.image;
        break;
      }
    }
    Motive fallback(f.target);
    if (!image && local.monomial.empty() && is_zero(local.bundle)) {
      const auto& src = space(f.source);
      if (src.point && is_point(f.target)) {
        fallback = Motive::one(f.target);
        image = &fallback;
      } else if (f.kind == MorphismKind::ToPoint && src.class_symbol) {
        fallback = symbol_motive(*src.class_symbol, f.target);
        image = &fallback;
      }
    }
    if (!image) {
      std::string what = "1";
      if (!local.monomial.empty()) {
        what.clear();
        for (const auto& s : local.monomial) what += "[" + s.name + "@" + s.space + "]";
      }
      if (!is_zero(local.bundle)) what += " with bundle component";
      throw Error(ErrorKind::MissingTransport, "term " + what + " has no pushforward along '" + f.name + "'");
    }
    result += mot_odot(outer, *image);
  }
  return result;
}

MorphismDecl Registry::compose(const MorphismDecl& f, const MorphismDecl& g, std::string name) const {
  if (f.target != g.source) {
    throw Error(ErrorKind::SpaceMismatch, "cannot compose '" + g.name + "' after '" + f.name + "'");
  }
  if (name.empty()) name = g.name + "." + f.name;
  if (f.kind == MorphismKind::Identity) {
    MorphismDecl r = g;
    r.name = name;
    return r;
  }
  if (g.kind == MorphismKind::Identity) {
    MorphismDecl r = f;
    r.name = name;
    return r;
  }
  MorphismDecl r;
  r.name = std::move(name);
  r.source = f.source;
  r.target = g.target;
  r.kind = g.kind == MorphismKind::ToPoint ? MorphismKind::ToPoint
           : (f.kind == MorphismKind::Etale && g.kind == MorphismKind::Etale) ? MorphismKind::Etale
                                                                               : MorphismKind::General;
  for (const auto& sp : allowed_symbol_spaces(g.target)) {
    if (is_point(sp)) continue;
    for (const auto* d : symbols_on(sp)) {
      try {
        r.pullback.symbols.emplace(symbol_key(d->symbol.name, sp), pullback(f, transport_symbol(g, d->symbol)));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::MissingTransport) throw;
      }
    }
  }
  const auto& gens = space(g.target).generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      r.pullback.generators.emplace(gens[i], bundle_pullback(f, transport_generator(g, i)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MissingTransport) throw;
    }
  }
  auto push_entry = [&](const TermKey& key, const Motive& mid) {
    try {
      r.pushforward.push_back({key, pushforward(g, mid)});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MissingTransport) throw;
    }
  };
  bool has_unit = false;
  for (const auto& entry : f.pushforward) {
    has_unit = has_unit || (entry.key == TermKey{});
    push_entry(entry.key, entry.image);
  }
  if (!has_unit) {
    try {
      push_entry(TermKey{}, pushforward(f, Motive::one(f.source)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MissingTransport) throw;
    }
  }
  return r;
}

std::string Registry::product_space(const std::string& x, const std::string& y) const {
  if (is_point(x)) return y;
  if (is_point(y)) return x;
  for (const auto& [name, d] : spaces_) {
    if (d.product_of && d.product_of->first == x && d.product_of->second == y) return name;
  }
  throw Error(ErrorKind::UnregisteredProduct, "no registered product '" + x + " x " + y + "'");
}

Motive Registry::mot_boxdot(const Motive& a, const Motive& b) const {
  if (is_point(a.space())) return mot_odot(a.relabeled(b.space()), b);
  if (is_point(b.space())) return mot_odot(a, b.relabeled(a.space()));
  const auto prod = product_space(a.space(), b.space());
  const auto shift = bundle_dim(a.space());
  Motive r(prod);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (monodromic_count(ka.monomial) > 0 && monodromic_count(kb.monomial) > 0) {
        throw Error(ErrorKind::OdotUndecidable,
                    "external convolution of two classes with nontrivial monodromy has no normal form");
      }
      Bits bits(shift, false);
      for (std::size_t i = 0; i < ka.bundle.size(); ++i) bits[i] = ka.bundle[i];
      bits.insert(bits.end(), kb.bundle.begin(), kb.bundle.end());
      r.add_term(TermKey{monomial_union(ka.monomial, kb.monomial), trimmed(bits)}, ca * cb);
    }
  }
  return r;
}

Motive Registry::pi_forget(const Motive& m) const {
  Motive result(m.space());
  for (const auto& [key, c] : m.terms()) {
    if (!is_zero(key.bundle)) {
      throw Error(ErrorKind::NoUnderlyingClass, "forgetting the action of a nontrivial Y-class");
    }
    const bool monodromic = monodromic_count(key.monomial) > 0;
    // Π(L^{1/2}) = Π(1 - [X × μ2]) = -1; whole powers are untouched.
    HalfLaurent forgotten;
    for (const auto& [e, coeff] : c.coefficients()) {
      if (e % 2 == 0) {
        forgotten += HalfLaurent::monomial(coeff, e);
      } else {
        if (monodromic) {
          throw Error(ErrorKind::NoUnderlyingClass, "half power of L convolved with a monodromic class");
        }
        forgotten += HalfLaurent::monomial(-coeff, e - 1);
      }
    }
    Motive term = Motive::constant(m.space(), forgotten);
    for (const auto& s : key.monomial) {
      if (!s.monodromic()) {
        term = mot_dot(term, Motive::symbol(m.space(), s));
        continue;
      }
      const auto& d = symbol(s.name, s.space);
      if (!d.underlying) {
        throw Error(ErrorKind::NoUnderlyingClass, "symbol '" + s.name + "@" + s.space + "' declares no underlying class");
      }
      term = mot_dot(term, d.underlying->relabeled(m.space()));
    }
    result += term;
  }
  return result;
}

std::vector<std::string> Registry::check_partitions() const {
  std::vector<std::string> diags;
  for (const auto& p : partitions_) {
    Motive sum(p.space);
    for (const auto& s : p.strata) sum += symbol_motive(s, p.space);
    if (sum != Motive::one(p.space)) {
      std::string names;
      for (const auto& s : p.strata) names += (names.empty() ? "" : ", ") + s;
      diags.push_back("strata {" + names + "} of '" + p.space + "' do not sum to its class");
    }
  }
  return diags;
}

}  // namespace motivic
