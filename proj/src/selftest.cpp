#include "motivic/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "motivic/error.hpp"
#include "motivic/json_io.hpp"
#include "motivic/localize.hpp"
#include "motivic/parse.hpp"
#include "motivic/random_fragment.hpp"
#include "motivic/render.hpp"
#include "motivic/stabilize.hpp"

namespace motivic {

namespace {

struct Check {
  bool ok = true;
  std::string first_failure;
  long cases = 0;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

CriterionResult finish(int id, std::string title, const Check& c, const std::string& extra = {}) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.pass = c.ok;
  r.detail = c.ok ? std::to_string(c.cases) + " checks" + (extra.empty() ? "" : "; " + extra) : c.first_failure;
  return r;
}

Job fixture(const std::string& dir, const std::string& name) { return load_job(dir + "/" + name + ".json"); }

CriterionResult guarded(int id, const std::string& title, const std::function<CriterionResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {id, title, false, std::string("exception: ") + e.what()};
  }
}

CriterionResult criterion1(const std::string& dir) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto job = fixture(dir, "z2");
  const auto& reg = job.registry;
  const auto& r = *job.resolution;
  const auto z = zeta_function(reg, r);
  c.expect(z.render() == "[mu_2] * (L^-1 T^2)/(1 - L^-1 T^2)", "zeta renders as " + z.render());
  c.expect(z.terms.size() == 1 && z.terms[0].factors == std::vector<std::pair<int, int>>{{2, 1}} &&
               z.terms[0].lm1_power == 0 && z.terms[0].coefficient == parse_motive("[mu_2]", reg, "pt"),
           "zeta structure");
  const auto mf = nearby_cycle(reg, r);
  c.expect(mf == parse_motive("[mu_2]", reg, "pt"), "nearby cycle " + render(mf, reg));
  c.expect(mf == parse_motive("1 - L^(1/2)", reg, "pt"), "nearby cycle is not 1 - L^(1/2)");
  const auto phi = vanishing_cycle(reg, r);
  c.expect(phi == Motive::one("pt"), "vanishing cycle " + render(phi, reg));
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  c.expect(ms < 1000.0, "took " + std::to_string(ms) + " ms");
  return finish(1, "z^2 zeta function, nearby and vanishing cycle", c);
}

CriterionResult criterion2() {
  Check c;
  const std::string sp = "pt";
  c.expect(mot_odot(Motive::tate(sp, 1), Motive::tate(sp, 1)) == Motive::tate(sp, 2), "L^(1/2) ⊙ L^(1/2) != L");
  for (int m = -20; m <= 20; ++m) {
    for (int n = -20; n <= 20; ++n) {
      c.expect(mot_odot(Motive::tate(sp, m), Motive::tate(sp, n)) == Motive::tate(sp, m + n),
               "L^(" + std::to_string(m) + "/2) ⊙ L^(" + std::to_string(n) + "/2)");
    }
  }
  bool refused = false;
  try {
    mot_dot(Motive::tate(sp, 1), Motive::tate(sp, 1));
  } catch (const Error& e) {
    refused = e.kind() == ErrorKind::DotUndefined;
  }
  c.expect(refused, "L^(1/2) · L^(1/2) was not refused");
  return finish(2, "square-root law for L^(1/2)", c);
}

CriterionResult criterion3(const std::string& dir) {
  Check c;
  const auto job = fixture(dir, "z2");
  const auto& reg = job.registry;
  const auto mf = vanishing_cycle(reg, *job.resolution);
  for (unsigned n = 1; n <= 10; ++n) {
    const auto p = thom_sebastiani_power(reg, mf, n);
    c.expect(p == Motive::one(reg.point()), std::to_string(n) + "-fold product is " + render(p, reg));
  }
  const auto ts = fixture(dir, "ts_z2");
  const auto p = thom_sebastiani_power(ts.registry, ts.ts->factors.front(), ts.ts->power);
  c.expect(p == Motive::one("pt"), "ts fixture gives " + render(p, ts.registry));
  return finish(3, "Thom-Sebastiani powers of MF(z^2)", c);
}

CriterionResult criterion4(const std::string& dir) {
  Check c;
  for (const auto* name : {"z2", "z3", "z4", "x2y", "x2"}) {
    const auto job = fixture(dir, name);
    const auto& reg = job.registry;
    const auto z = zeta_function(reg, *job.resolution);
    for (int k = 0; k <= 12; ++k) {
      const auto series = expand_series(z, k);
      const auto orders = series_cover_orders(z, k);
      const auto oracle = zeta_truncated(reg, *job.monomial, k);
      c.expect(series.size() == oracle.size(), std::string(name) + ": length mismatch");
      for (int n = 0; n <= k; ++n) {
        c.expect(series[n] == oracle[n].value, std::string(name) + " k=" + std::to_string(k) + " T^" +
                                                   std::to_string(n) + ": " + render(series[n], reg) + " vs " +
                                                   render(oracle[n].value, reg));
        const std::set<int> oracle_orders = oracle[n].cover_order ? std::set<int>{oracle[n].cover_order} : std::set<int>{};
        c.expect(orders[n] == oracle_orders, std::string(name) + ": cover orders differ at T^" + std::to_string(n));
      }
    }
  }
  return finish(4, "arc-space oracle matches the resolution formula", c);
}

CriterionResult criterion5(const std::string& dir) {
  Check c;
  const auto f = fixture(dir, "x2");
  const auto g = fixture(dir, "x2y");
  const auto& reg = f.registry;
  const auto mf_f = vanishing_cycle(reg, *f.resolution);
  const auto mf_g = vanishing_cycle(g.registry, *g.resolution);
  c.expect(mf_f == Motive::tate("Gm", -1), "MF(x^2) = " + render(mf_f, reg));
  const auto expected_g = mot_odot(Motive::tate("Gm", -1), g.registry.upsilon(g.registry.bundle("Gm", {"p1"})));
  c.expect(mf_g == expected_g, "MF(x^2 y) = " + render(mf_g, g.registry));
  c.expect(render(mf_g, g.registry) == "L^(-1/2) ⊙ Y(p1)", "render " + render(mf_g, g.registry));
  c.expect(!mot_equal(mf_f, mf_g), "the two vanishing cycles compare equal");
  // Pointwise values with dim U = 2, and along the one-dimensional slice x ↦ x^2.
  const auto pf = milnor_fibre_at(reg, *f.resolution, "y0");
  const auto pg = milnor_fibre_at(g.registry, *g.resolution, "y0");
  c.expect(pf == pg, "pointwise values differ");
  c.expect(pf == Motive::tate("pt", -1), "pointwise value " + render(pf, reg));
  auto slice_f = *f.resolution;
  auto slice_g = *g.resolution;
  slice_f.ambient_dim = slice_g.ambient_dim = 1;
  const auto sf = milnor_fibre_at(reg, slice_f, "y0");
  const auto sg = milnor_fibre_at(g.registry, slice_g, "y0");
  c.expect(sf == Motive::one("pt") && sg == Motive::one("pt"), "slice values " + render(sf, reg) + ", " + render(sg, reg));
  return finish(5, "x^2 and x^2 y are separated by Y(P)", c,
                "pointwise (dim U = 2): both " + render(pf, reg) + "; transversal slice: both " + render(sf, reg));
}

CriterionResult criterion6(std::uint64_t seed) {
  Check c;
  FragmentGenerator gen(seed);
  Registry reg;
  for (std::size_t d = 0; d <= 8; ++d) {
    SpaceDecl s;
    s.name = "V" + std::to_string(d);
    s.dim = static_cast<int>(d % 4);
    for (std::size_t i = 0; i < d; ++i) s.generators.push_back("e" + std::to_string(i + 1));
    reg.add_space(s);
  }
  for (int i = 0; i < 1200; ++i) {
    const std::size_t d = static_cast<std::size_t>(gen.uniform(0, 8));
    const auto sp = "V" + std::to_string(d);
    const BundleClass p(sp, gen.bits(d)), q(sp, gen.bits(d)), r(sp, gen.bits(d));
    const BundleClass zero = reg.zero_bundle(sp);
    c.expect(mot_odot(reg.upsilon(p), reg.upsilon(q)) == reg.upsilon(bundle_tensor(p, q)), "group law");
    c.expect(mot_odot(reg.upsilon(p), reg.upsilon(p)) == Motive::one(sp), "self-inverse");
    c.expect(reg.upsilon(zero) == Motive::one(sp), "identity");
    c.expect(bundle_tensor(bundle_tensor(p, q), r) == bundle_tensor(p, bundle_tensor(q, r)), "associativity");
    c.expect(bundle_tensor(p, q) == bundle_tensor(q, p), "commutativity");
    c.expect(bundle_tensor(p, zero) == p && bundle_tensor(p, p) == zero, "unit and order 2");
    const Motive m = Motive::constant(sp, gen.half_laurent());
    c.expect(mot_odot(reg.upsilon(zero), m) == m, "Y(0) ⊙ m");
    const int r1 = gen.uniform(1, 6), r2 = gen.uniform(1, 6);
    const auto a = quadratic_form_motive(reg, {sp, r1, p});
    const auto b = quadratic_form_motive(reg, {sp, r2, p});
    c.expect(a == b, "rank dependence between " + std::to_string(r1) + " and " + std::to_string(r2));
    c.expect(a == reg.upsilon(p).scaled(HalfLaurent::tate(-*reg.space(sp).dim)), "quadratic form motive value");
  }
  return finish(6, "Y-calculus and rank independence", c);
}

Atlas two_chart(const Job& job) { return *job.atlas; }

void flip(BundleClass& p, std::size_t i) { p.set(i, !p.bit(i)); }

CriterionResult criterion7(const std::string& dir, std::uint64_t seed) {
  Check c;
  const auto job = fixture(dir, "two_chart_atlas");
  const auto& reg = job.registry;
  const Atlas base = two_chart(job);
  const auto glued = glue(reg, base);
  c.expect(glued.values.size() == 3, "expected three glued regions");
  FragmentGenerator gen(seed);
  for (int i = 0; i < 50; ++i) {
    Atlas shuffled = base;
    std::shuffle(shuffled.charts.begin(), shuffled.charts.end(), gen.rng());
    std::shuffle(shuffled.overlaps.begin(), shuffled.overlaps.end(), gen.rng());
    c.expect(glue(reg, shuffled).values == glued.values, "glue depends on enumeration order");
  }
  long failures = 0;
  for (int i = 0; i < 240; ++i) {
    Atlas bad = base;
    // Orientation data: chart Q's, shared-chart Q_T, and the P classes feeding the cocycle.
    std::vector<BundleClass*> slots;
    for (auto& ch : bad.charts) slots.push_back(&ch.q);
    for (auto& o : bad.overlaps) {
      slots.push_back(&o.q_t);
      slots.push_back(&o.p_phi);
      slots.push_back(&o.p_psi);
    }
    BundleClass* target = slots[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(slots.size()) - 1))];
    const auto dim = reg.bundle_dim(target->space());
    flip(*target, static_cast<std::size_t>(gen.uniform(0, static_cast<int>(dim) - 1)));
    bool threw = false;
    try {
      glue(reg, bad);
    } catch (const DescentFailure&) {
      threw = true;
    }
    c.expect(threw, "perturbation " + std::to_string(i) + " glued");
    c.expect(!check_orientation(reg, bad).empty(), "perturbation " + std::to_string(i) + " passes the cocycle check");
    failures += threw ? 1 : 0;
  }
  return finish(7, "descent on the two-chart atlas", c, std::to_string(failures) + "/240 perturbations rejected");
}

CriterionResult criterion8(const std::string& dir) {
  Check c;
  {
    const auto job = fixture(dir, "two_chart_atlas");
    const auto& reg = job.registry;
    const auto before = glue(reg, *job.atlas);
    // The only nonzero global class restricts to a1, b1, p1.
    std::map<std::string, BundleClass> global{{"RA", reg.bundle("RA", {"a1"})},
                                              {"RB", reg.bundle("RB", {"b1"})},
                                              {"RAB", reg.bundle("RAB", {"p1"})}};
    Atlas twisted = *job.atlas;
    for (auto& ch : twisted.charts) ch.q = bundle_tensor(ch.q, global.at(ch.region));
    for (auto& o : twisted.overlaps) o.q_t = bundle_tensor(o.q_t, global.at(o.region));
    const auto after = glue(reg, twisted);
    for (const auto& [region, value] : before.values) {
      c.expect(after.values.at(region) == mot_odot(value, reg.upsilon(global.at(region))), "region " + region);
    }
  }
  {
    const auto job = fixture(dir, "gm_chart_atlas");
    const auto& reg = job.registry;
    const auto before = glue(reg, *job.atlas);
    Atlas twisted = *job.atlas;
    const auto p = reg.bundle("Gm", {"p1"});
    for (auto& ch : twisted.charts) ch.q = bundle_tensor(ch.q, p);
    const auto after = glue(reg, twisted);
    c.expect(after.values.at("Gm") == mot_odot(before.values.at("Gm"), reg.upsilon(p)), "Gm chart");
  }
  return finish(8, "orientation change multiplies by Y(p)", c);
}

CriterionResult criterion9(const std::string& dir) {
  Check c;
  const auto job = fixture(dir, "z1z2");
  const auto& reg = job.registry;
  const auto& fp = *job.fixed_points;
  const auto direct = *fp.direct;
  c.expect(direct == Motive::one("pt"), "direct value " + render(direct, reg));
  const auto ok = localization_check(reg, fp.components, direct);
  c.expect(ok.pass && ok.sum == Motive::one("pt"), ok.report);
  const std::vector<std::pair<std::vector<int>, int>> variants{{{1}, -1}, {{-1}, 1}, {{1, -1, 1}, -1}, {{1, -1, -1}, 1}};
  for (const auto& [weights, shift] : variants) {
    auto comps = fp.components;
    comps[0].weights = weights;
    const auto bad = localization_check(reg, comps, direct);
    c.expect(!bad.pass, "perturbed weights passed");
    c.expect(bad.sum == direct.scaled(HalfLaurent::tate(shift)), "diff is not a half power: " + bad.report);
  }
  const auto two = fixture(dir, "two_points");
  const auto twocheck = localization_check(two.registry, two.fixed_points->components, *two.fixed_points->direct);
  c.expect(twocheck.pass && twocheck.sum == Motive::constant("pt", HalfLaurent::monomial(2, -1)), twocheck.report);
  return finish(9, "torus localization for z1 z2", c, ok.report);
}

CriterionResult criterion10(std::uint64_t seed) {
  Check c;
  FragmentGenerator gen(seed);
  const Registry world = FragmentGenerator::world();
  const Motive L = Motive::tate("X", 2);
  for (int i = 0; i < 1200; ++i) {
    const auto a = gen.motive(world, true);
    const auto b = gen.motive(world);
    const auto d = gen.motive(world);
    c.expect(mot_odot(a, b) == mot_odot(b, a), "commutativity");
    c.expect(mot_odot(a, mot_odot(b, d)) == mot_odot(mot_odot(a, b), d), "associativity");
    c.expect(mot_odot(a, b + d) == mot_odot(a, b) + mot_odot(a, d), "distributivity");
    c.expect(mot_dot(a, L) == mot_odot(a, L), "M·L = M⊙L");
    c.expect(a.normalized() == a && a.normalized().normalized() == a.normalized(), "normal form idempotence");
  }
  // Pullback functoriality along random chains A -> B -> C.
  for (int i = 0; i < 1000; ++i) {
    Registry reg;
    const int dims[3] = {gen.uniform(0, 4), gen.uniform(1, 4), gen.uniform(1, 4)};
    const char* names[3] = {"A", "B", "C"};
    for (int s = 0; s < 3; ++s) {
      SpaceDecl sp;
      sp.name = names[s];
      for (int g = 0; g < dims[s]; ++g) sp.generators.push_back(std::string(1, static_cast<char>('a' + s)) + std::to_string(g));
      reg.add_space(sp);
      for (int k = 0; k < 2; ++k) {
        SymbolDecl d;
        d.symbol = {std::string(1, static_cast<char>('s' + s)) + std::to_string(k), names[s], 1};
        reg.add_symbol(d);
      }
    }
    auto random_plain = [&](const std::string& sp, int s) {
      Motive m(sp);
      for (int t = gen.uniform(1, 2); t > 0; --t) {
        Monomial mono;
        for (int k = gen.uniform(0, 1); k > 0; --k) {
          mono.push_back({std::string(1, static_cast<char>('s' + s)) + std::to_string(gen.uniform(0, 1)), sp, 1});
        }
        m.add_term(TermKey{mono, {}}, HalfLaurent::monomial(gen.uniform(-3, 3), 2 * gen.uniform(-2, 2)));
      }
      return m;
    };
    auto make = [&](const std::string& name, int src, int tgt) {
      MorphismDecl f;
      f.name = name;
      f.source = names[src];
      f.target = names[tgt];
      for (int g = 0; g < dims[tgt]; ++g) {
        f.pullback.generators.emplace(std::string(1, static_cast<char>('a' + tgt)) + std::to_string(g),
                                      BundleClass(names[src], gen.bits(static_cast<std::size_t>(dims[src]))));
      }
      for (int k = 0; k < 2; ++k) {
        f.pullback.symbols.emplace(std::string(1, static_cast<char>('s' + tgt)) + std::to_string(k) + "@" + names[tgt],
                                   random_plain(names[src], src));
      }
      reg.add_morphism(f);
      return f;
    };
    const auto f = make("f", 0, 1);
    const auto g = make("g", 1, 2);
    const auto gf = reg.compose(f, g);
    Motive m = random_plain("C", 2);
    m = mot_odot(m, Motive::upsilon("C", trimmed(gen.bits(static_cast<std::size_t>(dims[2])))));
    c.expect(reg.pullback(gf, m) == reg.pullback(f, reg.pullback(g, m)), "pullback functoriality");
    const BundleClass p("C", gen.bits(static_cast<std::size_t>(dims[2])));
    const BundleClass q("C", gen.bits(static_cast<std::size_t>(dims[2])));
    c.expect(reg.bundle_pullback(gf, bundle_tensor(p, q)) ==
                 bundle_tensor(reg.bundle_pullback(f, reg.bundle_pullback(g, p)),
                               reg.bundle_pullback(f, reg.bundle_pullback(g, q))),
             "bundle pullback linearity");
    c.expect(reg.pullback(reg.identity("C"), m) == m, "identity pullback");
  }
  return finish(10, "ring laws, M·L = M⊙L, functoriality, idempotence", c);
}

}  // namespace

std::vector<CriterionResult> run_selftest(const std::string& dir, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(guarded(1, "z^2 zeta function, nearby and vanishing cycle", [&] { return criterion1(dir); }));
  out.push_back(guarded(2, "square-root law for L^(1/2)", [] { return criterion2(); }));
  out.push_back(guarded(3, "Thom-Sebastiani powers of MF(z^2)", [&] { return criterion3(dir); }));
  out.push_back(guarded(4, "arc-space oracle matches the resolution formula", [&] { return criterion4(dir); }));
  out.push_back(guarded(5, "x^2 and x^2 y are separated by Y(P)", [&] { return criterion5(dir); }));
  out.push_back(guarded(6, "Y-calculus and rank independence", [&] { return criterion6(seed); }));
  out.push_back(guarded(7, "descent on the two-chart atlas", [&] { return criterion7(dir, seed); }));
  out.push_back(guarded(8, "orientation change multiplies by Y(p)", [&] { return criterion8(dir); }));
  out.push_back(guarded(9, "torus localization for z1 z2", [&] { return criterion9(dir); }));
  out.push_back(guarded(10, "ring laws, M·L = M⊙L, functoriality, idempotence", [&] { return criterion10(seed); }));
  return out;
}

}  // namespace motivic
