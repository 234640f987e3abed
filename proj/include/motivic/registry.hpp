#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motivic/bundle.hpp"
#include "motivic/motive.hpp"

namespace motivic {

enum class MorphismKind { Identity, OpenInclusion, Etale, ToPoint, General };

std::string_view to_string(MorphismKind kind);
MorphismKind morphism_kind_from_string(std::string_view s);

// Symbol-level and generator-level transport along a morphism source → target.
struct Transport {
  // Pullback image on the source of each target-side symbol, keyed "name@space".
  std::map<std::string, Motive> symbols;
  // Pullback image of each target generator, as a class on the source.
  std::map<std::string, BundleClass> generators;
};

struct StratumDecl {
  std::string space;     // the sub-locus, itself a registered space
  Transport restriction;  // default pullback data for open inclusions into the parent
};

struct SpaceDecl {
  std::string name;
  std::optional<int> dim;
  bool point = false;
  std::vector<std::string> generators;
  std::optional<std::pair<std::string, std::string>> product_of;
  std::vector<StratumDecl> strata;
  // Symbol over a point space naming [S] for pushforward along S → pt.
  std::optional<std::string> class_symbol;
};

// Cyclic cover z^order = Π u_j^{-e_j} of a torus-like base; used to match
// arc-space covers against registered symbols.
struct CoverEquation {
  int order = 1;
  std::map<std::string, int> units;  // exponent residues mod order, zeros dropped

  CoverEquation normalized() const;
  friend bool operator==(const CoverEquation&, const CoverEquation&) = default;
};

struct SymbolDecl {
  Symbol symbol;
  // Image under Π (forgetting the action); a plain motive on the same space.
  std::optional<Motive> underlying;
  // Order-2 symbol declared as the principal Z2-bundle with this class; it is
  // rewritten to 1 − L^{1/2} ⊙ Υ(class) whenever it enters a motive.
  std::optional<BundleClass> z2_cover;
  // Alias, substituted on entry (used for scissor decompositions).
  std::optional<Motive> value;
  std::optional<CoverEquation> equation;
};

struct PushforwardEntry {
  TermKey key;
  Motive image;
};

struct MorphismDecl {
  std::string name;
  std::string source;
  std::string target;
  MorphismKind kind = MorphismKind::General;
  Transport pullback;
  std::vector<PushforwardEntry> pushforward;
};

struct SquareRootDatum {
  std::string line_bundle;
  std::string trivialization;
  BundleClass bundle;
};

struct Partition {
  std::string space;
  std::vector<std::string> strata;  // symbol names on the space
};

// Spaces, symbols, morphisms and Z2 data. Built once, then read-only; all
// member functions below are const after setup and safe to share.
class Registry {
 public:
  Registry();

  // Setup. Names must be unique; every referenced space must already exist.
  void add_space(SpaceDecl space);
  void add_symbol(SymbolDecl symbol);
  void add_morphism(MorphismDecl morphism);
  void add_square_root(SquareRootDatum datum);
  // Datum (L ⊗ M², t ⊗ s²) for an existing (L, t): same class.
  void add_global_square_twist(const std::string& line_bundle, const std::string& trivialization,
                               const std::string& square_line_bundle);
  void add_partition(Partition p);
  // Fill in the default restriction table of a declared stratum; used when the
  // table mentions symbols declared after the spaces.
  void set_restriction(const std::string& parent, const std::string& stratum, Transport t);

  // Lookup.
  bool has_space(const std::string& name) const;
  const SpaceDecl& space(const std::string& name) const;
  const std::map<std::string, SpaceDecl>& spaces() const noexcept { return spaces_; }
  // The registered point space ("pt" unless another is declared first).
  const std::string& point() const noexcept { return point_; }
  bool is_point(const std::string& space) const;

  bool has_symbol(const std::string& name, const std::string& space) const;
  const SymbolDecl& symbol(const std::string& name, const std::string& space) const;
  // Resolve a bare symbol name as seen from a motive on `space`: the space
  // itself first, then its strata, product factors and point spaces.
  const SymbolDecl& resolve_symbol(const std::string& name, const std::string& space) const;
  std::vector<const SymbolDecl*> symbols_on(const std::string& space) const;
  const SymbolDecl* find_cover(const std::string& space, const CoverEquation& eq) const;

  bool has_morphism(const std::string& name) const;
  const MorphismDecl& morphism(const std::string& name) const;
  const std::map<std::string, MorphismDecl>& morphisms() const noexcept { return morphisms_; }
  MorphismDecl identity(const std::string& space) const;

  // Spaces whose symbols may appear in a motive over `space`.
  std::vector<std::string> allowed_symbol_spaces(const std::string& space) const;
  std::vector<std::string> validate(const Motive& m) const;

  // Motive-valued generators, with Z2-cover and alias rewriting applied.
  Motive symbol_motive(const std::string& name, const std::string& motive_space) const;
  Motive symbol_motive(const SymbolDecl& decl, const std::string& motive_space) const;
  Motive upsilon(const BundleClass& p) const;

  // Bundles.
  std::size_t bundle_dim(const std::string& space) const;
  BundleClass zero_bundle(const std::string& space) const;
  BundleClass bundle(const std::string& space, const std::vector<std::string>& generators) const;
  std::vector<std::string> bundle_generator_names(const std::string& space, const Bits& bits) const;
  BundleClass bundle_pullback(const MorphismDecl& f, const BundleClass& p) const;
  BundleClass bundle_pullback(const std::string& morphism, const BundleClass& p) const {
    return bundle_pullback(this->morphism(morphism), p);
  }

  BundleClass from_square_root(const std::string& line_bundle, const std::string& trivialization) const;
  SquareRootDatum square_root_tensor(const SquareRootDatum& a, const SquareRootDatum& b) const;

  // Functoriality.
  Motive pullback(const MorphismDecl& f, const Motive& m) const;
  Motive pullback(const std::string& morphism, const Motive& m) const {
    return pullback(this->morphism(morphism), m);
  }
  Motive pushforward(const MorphismDecl& f, const Motive& m) const;
  Motive pushforward(const std::string& morphism, const Motive& m) const {
    return pushforward(this->morphism(morphism), m);
  }
  // g ∘ f for f: A → B, g: B → C, with transport tables composed.
  MorphismDecl compose(const MorphismDecl& f, const MorphismDecl& g, std::string name = {}) const;

  // External ⊙ over X × Y; a point factor acts as the module structure.
  std::string product_space(const std::string& x, const std::string& y) const;
  Motive mot_boxdot(const Motive& a, const Motive& b) const;

  // Π_X: forget the action. Needs `underlying` for each monodromic symbol.
  Motive pi_forget(const Motive& m) const;

  // Declared scissor partitions whose strata classes fail to sum to 1.
  std::vector<std::string> check_partitions() const;

 private:
  static std::string symbol_key(const std::string& name, const std::string& space) {
    return name + "@" + space;
  }
  Motive transport_symbol(const MorphismDecl& f, const Symbol& s) const;
  BundleClass transport_generator(const MorphismDecl& f, std::size_t index) const;

  std::map<std::string, SpaceDecl> spaces_;
  std::map<std::string, SymbolDecl> symbols_;
  std::map<std::string, MorphismDecl> morphisms_;
  std::map<std::pair<std::string, std::string>, SquareRootDatum> square_roots_;
  std::vector<Partition> partitions_;
  std::string point_ = "pt";
};

}  // namespace motivic
