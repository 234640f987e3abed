#include "motivic/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <string_view>

#include "motivic/error.hpp"
#include "motivic/parse.hpp"
#include "motivic/render.hpp"

namespace motivic {

namespace {

void check_keys(const Json& j, std::initializer_list<std::string_view> allowed, const std::string& context) {
  if (!j.is_object()) throw Error(ErrorKind::Schema, context + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorKind::Schema, context + ": unknown field '" + key + "'");
    }
  }
}

const Json& require(const Json& j, const char* key, const std::string& context) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::Schema, context + ": missing field '" + key + "'");
  return *it;
}

template <typename T>
T get(const Json& j, const char* key, const std::string& context) {
  try {
    return require(j, key, context).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Schema, context + ": field '" + key + "' has the wrong type");
  }
}

template <typename T>
T get_or(const Json& j, const char* key, T fallback, const std::string& context) {
  if (!j.contains(key)) return fallback;
  return get<T>(j, key, context);
}

std::pair<std::string, std::string> split_symbol_key(const std::string& key) {
  auto at = key.find('@');
  if (at == std::string::npos) return {key, {}};
  return {key.substr(0, at), key.substr(at + 1)};
}

Transport transport_from_json(const Json& j, const Registry& reg, const std::string& source,
                              const std::string& target, const std::string& context) {
  check_keys(j, {"symbols", "generators"}, context);
  Transport t;
  if (j.contains("symbols")) {
    for (const auto& [key, image] : require(j, "symbols", context).items()) {
      auto [name, sp] = split_symbol_key(key);
      const SymbolDecl& d = sp.empty() ? reg.resolve_symbol(name, target) : reg.symbol(name, sp);
      t.symbols.insert_or_assign(d.symbol.name + "@" + d.symbol.space, motive_from_json(image, reg, source));
    }
  }
  if (j.contains("generators")) {
    for (const auto& [gen, image] : require(j, "generators", context).items()) {
      t.generators.insert_or_assign(gen, bundle_from_json(image, reg, source));
    }
  }
  return t;
}

Symbol raw_symbol_from_json(const Json& j, const std::string& context) {
  check_keys(j, {"name", "space", "order"}, context);
  Symbol s;
  s.name = get<std::string>(j, "name", context);
  s.space = get<std::string>(j, "space", context);
  s.order = get_or<int>(j, "order", 1, context);
  return s;
}

Json raw_symbol_to_json(const Symbol& s) { return Json{{"name", s.name}, {"space", s.space}, {"order", s.order}}; }

Json transport_to_json(const Transport& t, const Registry& reg) {
  Json j = Json::object();
  if (!t.symbols.empty()) {
    Json s = Json::object();
    for (const auto& [k, m] : t.symbols) s[k] = motive_to_json(m, reg);
    j["symbols"] = s;
  }
  if (!t.generators.empty()) {
    Json g = Json::object();
    for (const auto& [k, p] : t.generators) g[k] = reg.bundle_generator_names(p.space(), p.key());
    j["generators"] = g;
  }
  return j;
}

}  // namespace

BundleClass bundle_from_json(const Json& j, const Registry& reg, const std::string& space) {
  if (!j.is_array()) throw Error(ErrorKind::Schema, "bundle class on '" + space + "': expected a list of generators");
  std::vector<std::string> gens;
  for (const auto& g : j) {
    if (!g.is_string()) throw Error(ErrorKind::Schema, "bundle class on '" + space + "': generator names are strings");
    gens.push_back(g.get<std::string>());
  }
  return reg.bundle(space, gens);
}

Motive motive_from_json(const Json& j, const Registry& reg, const std::string& space) {
  if (j.is_string()) return parse_motive(j.get<std::string>(), reg, space);
  if (j.is_number_integer()) return Motive::constant(space, HalfLaurent(j.get<long>()));
  const std::string context = "motive";
  check_keys(j, {"space", "terms"}, context);
  const auto sp = get_or<std::string>(j, "space", space, context);
  if (sp != space) throw Error(ErrorKind::SpaceMismatch, "motive on '" + sp + "' where '" + space + "' is expected");
  std::vector<RawTerm> raw;
  for (const auto& t : require(j, "terms", context)) {
    check_keys(t, {"symbols", "bundle", "coefficients"}, "motive term");
    RawTerm r;
    if (t.contains("symbols")) {
      for (const auto& s : t["symbols"]) r.monomial.push_back(raw_symbol_from_json(s, "motive symbol"));
    }
    if (t.contains("bundle")) r.bundle = bundle_from_json(t["bundle"], reg, space).key();
    for (const auto& [e, c] : require(t, "coefficients", "motive term").items()) {
      if (!c.is_string() && !c.is_number_integer()) throw Error(ErrorKind::Schema, "coefficients are integers or strings");
      mpz_class value;
      if (value.set_str(c.is_string() ? c.get<std::string>() : std::to_string(c.get<long long>()), 10) != 0) {
        throw Error(ErrorKind::Schema, "coefficient '" + c.dump() + "' is not an integer");
      }
      r.coefficient += HalfLaurent::monomial(value, std::stoll(e));
    }
    raw.push_back(std::move(r));
  }
  Motive m = Motive::from_raw(space, raw);
  const auto diags = reg.validate(m);
  if (!diags.empty()) throw Error(ErrorKind::Schema, diags.front());
  return m;
}

Json motive_to_json(const Motive& m, const Registry& reg) {
  Json terms = Json::array();
  for (const auto& [key, c] : m.terms()) {
    Json t;
    Json syms = Json::array();
    for (const auto& s : key.monomial) syms.push_back(raw_symbol_to_json(s));
    t["symbols"] = syms;
    t["bundle"] = reg.bundle_generator_names(m.space(), key.bundle);
    Json coeffs = Json::object();
    for (const auto& [e, v] : c.coefficients()) coeffs[std::to_string(e)] = v.get_str();
    t["coefficients"] = coeffs;
    terms.push_back(t);
  }
  return Json{{"space", m.space()}, {"terms", terms}};
}

Motive motive_ref_from_json(const Json& j, const Registry& reg, const std::string& space) {
  if (j.is_object() && j.contains("vanishing")) {
    check_keys(j, {"vanishing"}, "motive reference");
    const auto& v = j["vanishing"];
    check_keys(v, {"resolution", "value"}, "vanishing reference");
    const auto r = resolution_from_json(require(v, "resolution", "vanishing reference"), reg);
    Motive m = vanishing_cycle(reg, r, get_or<std::string>(v, "value", "0", "vanishing reference"));
    if (m.space() != space && !(reg.is_point(m.space()) && reg.is_point(space))) {
      throw Error(ErrorKind::SpaceMismatch, "vanishing cycle lives on '" + m.space() + "', expected '" + space + "'");
    }
    return m.relabeled(space);
  }
  if (j.is_object() && j.contains("milnor")) {
    check_keys(j, {"milnor"}, "motive reference");
    const auto& v = j["milnor"];
    check_keys(v, {"resolution", "point"}, "milnor reference");
    const auto r = resolution_from_json(require(v, "resolution", "milnor reference"), reg);
    Motive m = milnor_fibre_at(reg, r, get<std::string>(v, "point", "milnor reference"));
    if (!reg.is_point(space)) throw Error(ErrorKind::SpaceMismatch, "Milnor fibres live over a point");
    return m.relabeled(space);
  }
  if (j.is_object() && j.contains("glued")) {
    check_keys(j, {"glued"}, "motive reference");
    const auto atlas = atlas_from_json(j["glued"], reg);
    if (!reg.is_point(space)) throw Error(ErrorKind::SpaceMismatch, "glued absolute motives live over a point");
    return pushforward_to_point(reg, glue(reg, atlas), atlas.scissor).relabeled(space);
  }
  return motive_from_json(j, reg, space);
}

Registry registry_from_json(const Json& j) {
  check_keys(j, {"spaces", "symbols", "morphisms", "square_roots", "global_square_twists", "partitions"}, "registry");
  Registry reg;
  std::vector<std::tuple<std::string, std::string, Json>> deferred;
  if (j.contains("spaces")) {
    for (const auto& s : j["spaces"]) {
      const std::string ctx = "space";
      check_keys(s, {"name", "dim", "point", "generators", "product_of", "strata", "class_symbol"}, ctx);
      SpaceDecl d;
      d.name = get<std::string>(s, "name", ctx);
      if (s.contains("dim")) d.dim = get<int>(s, "dim", ctx);
      d.point = get_or<bool>(s, "point", false, ctx);
      d.generators = get_or<std::vector<std::string>>(s, "generators", {}, ctx);
      if (s.contains("product_of")) {
        auto f = get<std::vector<std::string>>(s, "product_of", ctx);
        if (f.size() != 2) throw Error(ErrorKind::Schema, "space '" + d.name + "': product_of needs two factors");
        d.product_of = std::make_pair(f[0], f[1]);
      }
      if (s.contains("class_symbol")) d.class_symbol = get<std::string>(s, "class_symbol", ctx);
      if (s.contains("strata")) {
        for (const auto& st : s["strata"]) {
          check_keys(st, {"space", "restriction"}, "stratum of '" + d.name + "'");
          StratumDecl sd;
          sd.space = get<std::string>(st, "space", "stratum");
          if (st.contains("restriction")) deferred.emplace_back(d.name, sd.space, st["restriction"]);
          d.strata.push_back(std::move(sd));
        }
      }
      reg.add_space(std::move(d));
    }
  }
  if (j.contains("symbols")) {
    for (const auto& s : j["symbols"]) {
      const std::string ctx = "symbol";
      check_keys(s, {"name", "space", "order", "underlying", "z2_cover", "value", "equation"}, ctx);
      SymbolDecl d;
      d.symbol.name = get<std::string>(s, "name", ctx);
      d.symbol.space = get<std::string>(s, "space", ctx);
      d.symbol.order = get_or<int>(s, "order", 1, ctx);
      const auto& sp = d.symbol.space;
      reg.space(sp);
      if (s.contains("underlying")) d.underlying = motive_from_json(s["underlying"], reg, sp);
      if (s.contains("z2_cover")) d.z2_cover = bundle_from_json(s["z2_cover"], reg, sp);
      if (s.contains("value")) d.value = motive_from_json(s["value"], reg, sp);
      if (s.contains("equation")) {
        const auto& e = s["equation"];
        check_keys(e, {"order", "units"}, "cover equation");
        CoverEquation eq;
        eq.order = get<int>(e, "order", "cover equation");
        eq.units = get_or<std::map<std::string, int>>(e, "units", {}, "cover equation");
        d.equation = eq;
      }
      reg.add_symbol(std::move(d));
    }
  }
  for (const auto& [parent, stratum, t] : deferred) {
    reg.set_restriction(parent, stratum,
                        transport_from_json(t, reg, stratum, parent, "restriction " + stratum + " -> " + parent));
  }
  if (j.contains("morphisms")) {
    for (const auto& m : j["morphisms"]) {
      const std::string ctx = "morphism";
      check_keys(m, {"name", "source", "target", "kind", "pullback", "pushforward"}, ctx);
      MorphismDecl d;
      d.name = get<std::string>(m, "name", ctx);
      d.source = get<std::string>(m, "source", ctx);
      d.target = get<std::string>(m, "target", ctx);
      d.kind = morphism_kind_from_string(get_or<std::string>(m, "kind", "general", ctx));
      reg.space(d.source);
      reg.space(d.target);
      if (m.contains("pullback")) {
        d.pullback = transport_from_json(m["pullback"], reg, d.source, d.target, "pullback of '" + d.name + "'");
      }
      if (m.contains("pushforward")) {
        for (const auto& e : m["pushforward"]) {
          const std::string ectx = "pushforward entry of '" + d.name + "'";
          check_keys(e, {"symbols", "bundle", "image"}, ectx);
          PushforwardEntry pe;
          for (const auto& name : get_or<std::vector<std::string>>(e, "symbols", {}, ectx)) {
            auto [n, sp] = split_symbol_key(name);
            pe.key.monomial.push_back(sp.empty() ? reg.resolve_symbol(n, d.source).symbol : reg.symbol(n, sp).symbol);
          }
          std::sort(pe.key.monomial.begin(), pe.key.monomial.end());
          if (e.contains("bundle")) pe.key.bundle = bundle_from_json(e["bundle"], reg, d.source).key();
          pe.image = motive_from_json(require(e, "image", ectx), reg, d.target);
          d.pushforward.push_back(std::move(pe));
        }
      }
      reg.add_morphism(std::move(d));
    }
  }
  if (j.contains("square_roots")) {
    for (const auto& s : j["square_roots"]) {
      const std::string ctx = "square root datum";
      check_keys(s, {"line_bundle", "trivialization", "space", "bundle"}, ctx);
      SquareRootDatum d;
      d.line_bundle = get<std::string>(s, "line_bundle", ctx);
      d.trivialization = get<std::string>(s, "trivialization", ctx);
      const auto sp = get<std::string>(s, "space", ctx);
      d.bundle = bundle_from_json(require(s, "bundle", ctx), reg, sp);
      reg.add_square_root(std::move(d));
    }
  }
  if (j.contains("global_square_twists")) {
    for (const auto& s : j["global_square_twists"]) {
      const std::string ctx = "global square twist";
      check_keys(s, {"line_bundle", "trivialization", "square"}, ctx);
      reg.add_global_square_twist(get<std::string>(s, "line_bundle", ctx), get<std::string>(s, "trivialization", ctx),
                                  get<std::string>(s, "square", ctx));
    }
  }
  if (j.contains("partitions")) {
    for (const auto& p : j["partitions"]) {
      check_keys(p, {"space", "strata"}, "partition");
      reg.add_partition({get<std::string>(p, "space", "partition"),
                         get<std::vector<std::string>>(p, "strata", "partition")});
    }
    const auto diags = reg.check_partitions();
    if (!diags.empty()) throw Error(ErrorKind::ValidationFailed, diags.front());
  }
  return reg;
}

Json registry_to_json(const Registry& reg) {
  Json spaces = Json::array();
  for (const auto& [name, d] : reg.spaces()) {
    if (name == reg.point() && d.generators.empty() && d.strata.empty()) continue;
    Json s{{"name", name}};
    if (d.dim) s["dim"] = *d.dim;
    if (d.point) s["point"] = true;
    if (!d.generators.empty()) s["generators"] = d.generators;
    if (d.product_of) s["product_of"] = {d.product_of->first, d.product_of->second};
    if (d.class_symbol) s["class_symbol"] = *d.class_symbol;
    if (!d.strata.empty()) {
      Json st = Json::array();
      for (const auto& x : d.strata) st.push_back(Json{{"space", x.space}, {"restriction", transport_to_json(x.restriction, reg)}});
      s["strata"] = st;
    }
    spaces.push_back(s);
  }
  // Symbols referenced by an underlying class or alias go first, so the
  // output reads back in one pass.
  std::vector<const SymbolDecl*> pending;
  for (const auto& [name, d] : reg.spaces()) {
    for (const auto* sd : reg.symbols_on(name)) pending.push_back(sd);
  }
  std::set<std::pair<std::string, std::string>> emitted;
  auto ready = [&](const SymbolDecl* sd) {
    for (const auto* m : {sd->underlying ? &*sd->underlying : nullptr, sd->value ? &*sd->value : nullptr}) {
      if (!m) continue;
      for (const auto& [key, c] : m->terms()) {
        for (const auto& sym : key.monomial) {
          if (!(sym.name == sd->symbol.name && sym.space == sd->symbol.space) && !emitted.count({sym.name, sym.space})) {
            return false;
          }
        }
      }
    }
    return true;
  };
  Json symbols = Json::array();
  while (!pending.empty()) {
    auto it = std::find_if(pending.begin(), pending.end(), ready);
    if (it == pending.end()) it = pending.begin();
    const auto* sd = *it;
    pending.erase(it);
    emitted.insert({sd->symbol.name, sd->symbol.space});
    Json s{{"name", sd->symbol.name}, {"space", sd->symbol.space}, {"order", sd->symbol.order}};
    if (sd->underlying) s["underlying"] = motive_to_json(*sd->underlying, reg);
    if (sd->z2_cover) s["z2_cover"] = reg.bundle_generator_names(sd->z2_cover->space(), sd->z2_cover->key());
    if (sd->value) s["value"] = motive_to_json(*sd->value, reg);
    if (sd->equation) s["equation"] = Json{{"order", sd->equation->order}, {"units", sd->equation->units}};
    symbols.push_back(s);
  }
  Json morphisms = Json::array();
  for (const auto& [name, d] : reg.morphisms()) {
    Json m{{"name", name}, {"source", d.source}, {"target", d.target}, {"kind", std::string(to_string(d.kind))}};
    const auto pb = transport_to_json(d.pullback, reg);
    if (!pb.empty()) m["pullback"] = pb;
    if (!d.pushforward.empty()) {
      Json entries = Json::array();
      for (const auto& e : d.pushforward) {
        Json names = Json::array();
        for (const auto& s : e.key.monomial) names.push_back(s.name + "@" + s.space);
        entries.push_back(Json{{"symbols", names},
                               {"bundle", reg.bundle_generator_names(d.source, e.key.bundle)},
                               {"image", motive_to_json(e.image, reg)}});
      }
      m["pushforward"] = entries;
    }
    morphisms.push_back(m);
  }
  return Json{{"spaces", spaces}, {"symbols", symbols}, {"morphisms", morphisms}};
}

ResolutionData resolution_from_json(const Json& j, const Registry& reg) {
  const std::string ctx = "resolution";
  check_keys(j, {"name", "ambient_dim", "base", "constant", "divisors", "strata", "critical_values", "points"}, ctx);
  ResolutionData r;
  r.name = get_or<std::string>(j, "name", "", ctx);
  r.ambient_dim = get<int>(j, "ambient_dim", ctx);
  r.base = get<std::string>(j, "base", ctx);
  r.constant = get_or<bool>(j, "constant", false, ctx);
  reg.space(r.base);
  if (j.contains("divisors")) {
    for (const auto& d : j["divisors"]) {
      check_keys(d, {"id", "N", "nu", "boundary"}, "divisor");
      r.divisors.push_back({get<int>(d, "id", "divisor"), get<int>(d, "N", "divisor"), get<int>(d, "nu", "divisor"),
                            get_or<bool>(d, "boundary", false, "divisor")});
    }
  }
  if (j.contains("strata")) {
    for (const auto& s : j["strata"]) {
      check_keys(s, {"divisors", "cover_order", "cover_symbol", "class"}, "stratum");
      Stratum st;
      st.divisors = get<std::vector<int>>(s, "divisors", "stratum");
      st.cover_order = get_or<int>(s, "cover_order", 1, "stratum");
      if (s.contains("cover_symbol")) st.cover_symbol = get<std::string>(s, "cover_symbol", "stratum");
      const auto& cls = require(s, "class", "stratum");
      st.cls = motive_from_json(cls, reg, r.base);
      if (cls.is_string()) st.label = cls.get<std::string>();
      r.strata.push_back(std::move(st));
    }
  }
  if (j.contains("critical_values")) {
    for (const auto& c : j["critical_values"]) {
      check_keys(c, {"value", "critical_space", "restriction", "complement", "resolution"}, "critical value");
      CriticalValue cv;
      cv.value = get_or<std::string>(c, "value", "0", "critical value");
      cv.critical_space = get<std::string>(c, "critical_space", "critical value");
      if (c.contains("restriction")) cv.restriction = get<std::string>(c, "restriction", "critical value");
      if (c.contains("complement")) cv.complement = get<std::string>(c, "complement", "critical value");
      if (c.contains("resolution")) {
        cv.resolution = std::make_shared<ResolutionData>(resolution_from_json(c["resolution"], reg));
      }
      r.critical_values.push_back(std::move(cv));
    }
  }
  if (j.contains("points")) r.points = get<std::map<std::string, std::string>>(j, "points", ctx);
  return r;
}

MonomialFunction monomial_from_json(const Json& j) {
  const std::string ctx = "monomial";
  if (j.contains("text")) {
    check_keys(j, {"text", "unit_vars", "base"}, ctx);
    return parse_monomial(get<std::string>(j, "text", ctx), get_or<std::vector<std::string>>(j, "unit_vars", {}, ctx),
                          get<std::string>(j, "base", ctx));
  }
  check_keys(j, {"variables", "base"}, ctx);
  MonomialFunction f;
  f.base = get<std::string>(j, "base", ctx);
  for (const auto& v : require(j, "variables", ctx)) {
    check_keys(v, {"name", "exponent", "unit"}, "monomial variable");
    f.variables.push_back({get<std::string>(v, "name", "monomial variable"), get<int>(v, "exponent", "monomial variable"),
                           get_or<bool>(v, "unit", false, "monomial variable")});
  }
  return f;
}

Atlas atlas_from_json(const Json& j, const Registry& reg) {
  const std::string ctx = "atlas";
  check_keys(j, {"oriented", "regions", "charts", "overlaps", "scissor"}, ctx);
  Atlas a;
  a.oriented = get_or<bool>(j, "oriented", false, ctx);
  a.regions = get_or<std::vector<std::string>>(j, "regions", {}, ctx);
  for (const auto& r : a.regions) reg.space(r);
  for (const auto& c : require(j, "charts", ctx)) {
    check_keys(c, {"id", "region", "dim_u", "mf", "Q"}, "chart");
    CriticalChart ch;
    ch.id = get<std::string>(c, "id", "chart");
    ch.region = get<std::string>(c, "region", "chart");
    ch.dim_u = get<int>(c, "dim_u", "chart");
    ch.mf = motive_ref_from_json(require(c, "mf", "chart"), reg, ch.region);
    ch.q = c.contains("Q") ? bundle_from_json(c["Q"], reg, ch.region) : reg.zero_bundle(ch.region);
    a.charts.push_back(std::move(ch));
  }
  if (j.contains("overlaps")) {
    for (const auto& o : j["overlaps"]) {
      const std::string octx = "overlap";
      check_keys(o, {"name", "charts", "region", "restrict", "P_phi", "P_psi", "Q_T", "shared_mf"}, octx);
      OverlapDatum d;
      d.name = get<std::string>(o, "name", octx);
      auto charts = get<std::vector<std::string>>(o, "charts", octx);
      auto restrict = get<std::vector<std::string>>(o, "restrict", octx);
      if (charts.size() != 2 || restrict.size() != 2) {
        throw Error(ErrorKind::Schema, "overlap '" + d.name + "' needs two charts and two restrictions");
      }
      d.chart_a = charts[0];
      d.chart_b = charts[1];
      d.region = get<std::string>(o, "region", octx);
      d.restrict_a = restrict[0];
      d.restrict_b = restrict[1];
      d.p_phi = o.contains("P_phi") ? bundle_from_json(o["P_phi"], reg, d.region) : reg.zero_bundle(d.region);
      d.p_psi = o.contains("P_psi") ? bundle_from_json(o["P_psi"], reg, d.region) : reg.zero_bundle(d.region);
      d.q_t = o.contains("Q_T") ? bundle_from_json(o["Q_T"], reg, d.region) : reg.zero_bundle(d.region);
      if (o.contains("shared_mf")) d.shared_mf = motive_ref_from_json(o["shared_mf"], reg, d.region);
      a.chart(d.chart_a);
      a.chart(d.chart_b);
      a.overlaps.push_back(std::move(d));
    }
  }
  if (j.contains("scissor")) {
    for (const auto& s : j["scissor"]) {
      check_keys(s, {"piece", "coefficient", "to_point"}, "scissor entry");
      ScissorEntry e;
      e.piece = get<std::string>(s, "piece", "scissor entry");
      e.coefficient = s.contains("coefficient") ? motive_from_json(s["coefficient"], reg, reg.point())
                                                : Motive::one(reg.point());
      e.to_point = get<std::string>(s, "to_point", "scissor entry");
      reg.morphism(e.to_point);
      a.scissor.push_back(std::move(e));
    }
  }
  return a;
}

FixedPointData fixed_points_from_json(const Json& j, const Registry& reg) {
  const std::string ctx = "fixed points";
  check_keys(j, {"components", "direct", "good", "circle_compact"}, ctx);
  FixedPointData f;
  f.good = get_or<bool>(j, "good", true, ctx);
  f.circle_compact = get_or<bool>(j, "circle_compact", true, ctx);
  for (const auto& c : require(j, "components", ctx)) {
    check_keys(c, {"id", "weights", "motive"}, "fixed component");
    FixedComponent fc;
    fc.id = get<std::string>(c, "id", "fixed component");
    fc.weights = get<std::vector<int>>(c, "weights", "fixed component");
    fc.motive = c.contains("motive") ? motive_ref_from_json(c["motive"], reg, reg.point()) : Motive::one(reg.point());
    f.components.push_back(std::move(fc));
  }
  if (j.contains("direct")) f.direct = motive_ref_from_json(j["direct"], reg, reg.point());
  return f;
}

TsData ts_from_json(const Json& j, const Registry& reg) {
  const std::string ctx = "ts";
  check_keys(j, {"factors", "power"}, ctx);
  TsData t;
  t.power = get_or<unsigned>(j, "power", 1, ctx);
  for (const auto& f : require(j, "factors", ctx)) {
    if (f.is_object() && f.contains("space") && f.contains("motive")) {
      check_keys(f, {"space", "motive"}, "ts factor");
      const auto sp = get<std::string>(f, "space", "ts factor");
      t.factors.push_back(motive_ref_from_json(f["motive"], reg, sp));
    } else {
      t.factors.push_back(motive_ref_from_json(f, reg, reg.point()));
    }
  }
  if (t.factors.empty()) throw Error(ErrorKind::Schema, "ts: no factors");
  return t;
}

Job job_from_json(const Json& j) {
  const std::string ctx = "job";
  check_keys(j, {"schema", "registry", "resolution", "monomial", "atlas", "fixed_points", "ts", "params"}, ctx);
  const auto schema = get<std::string>(j, "schema", ctx);
  if (schema != kJobSchema) {
    throw Error(ErrorKind::Schema, "unsupported schema '" + schema + "' (expected " + kJobSchema + ")");
  }
  Job job;
  job.registry = j.contains("registry") ? registry_from_json(j["registry"]) : Registry();
  const auto& reg = job.registry;
  if (j.contains("resolution")) job.resolution = resolution_from_json(j["resolution"], reg);
  if (j.contains("monomial")) job.monomial = monomial_from_json(j["monomial"]);
  if (j.contains("atlas")) job.atlas = atlas_from_json(j["atlas"], reg);
  if (j.contains("fixed_points")) job.fixed_points = fixed_points_from_json(j["fixed_points"], reg);
  if (j.contains("ts")) job.ts = ts_from_json(j["ts"], reg);
  if (j.contains("params")) {
    const auto& p = j["params"];
    check_keys(p, {"series_order", "critical_value", "points"}, "params");
    job.params.series_order = get_or<int>(p, "series_order", job.params.series_order, "params");
    job.params.critical_value = get_or<std::string>(p, "critical_value", "0", "params");
    job.params.points = get_or<std::vector<std::string>>(p, "points", {}, "params");
  }
  return job;
}

Job load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Schema, "cannot open job file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Schema, "'" + path + "' is not valid JSON: " + e.what());
  }
  return job_from_json(j);
}

}  // namespace motivic
