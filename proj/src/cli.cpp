#include "motivic/cli.hpp"

#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>

#include "motivic/error.hpp"
#include "motivic/json_io.hpp"
#include "motivic/render.hpp"
#include "motivic/selftest.hpp"
#include "motivic/stabilize.hpp"

#ifndef MOTIVIC_FIXTURE_DIR
#define MOTIVIC_FIXTURE_DIR "fixtures"
#endif

namespace motivic {

std::string fixture_dir() {
  if (const char* env = std::getenv("MOTIVIC_FIXTURE_DIR"); env && *env) return env;
  return MOTIVIC_FIXTURE_DIR;
}

namespace {

struct Options {
  std::string job_path;
  std::string fixture;
  int series_order = -1;
  bool machine = false;
  std::string monomial;
  std::vector<std::string> unit_vars;
  std::string value;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ValidationFailed:
    case ErrorKind::Schema:
    case ErrorKind::Parse:
    case ErrorKind::UnknownName:
    case ErrorKind::UnknownDatum:
    case ErrorKind::ZeroWeight:
    case ErrorKind::OrientationMissing:
    case ErrorKind::SpaceMismatch:
      return kExitValidation;
    case ErrorKind::MissingRestriction: return kExitMissingRestriction;
    case ErrorKind::UnsupportedShape: return kExitUnsupportedShape;
    case ErrorKind::DescentFailure: return kExitDescentFailure;
    default: return kExitFailure;
  }
}

Job open_job(const Options& o) {
  if (!o.job_path.empty()) return load_job(o.job_path);
  if (!o.fixture.empty()) return load_job(fixture_dir() + "/" + o.fixture + ".json");
  throw Error(ErrorKind::Schema, "no job given (use --job or --fixture)");
}

const ResolutionData& need_resolution(const Job& job) {
  if (!job.resolution) throw Error(ErrorKind::Schema, "job has no resolution payload");
  return *job.resolution;
}

int series_order(const Options& o, const Job& job) { return o.series_order >= 0 ? o.series_order : job.params.series_order; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int report_validation(const Job& job, std::ostream& err) {
  const auto diags = validate_resolution(job.registry, need_resolution(job));
  for (const auto& d : diags) err << "diagnostic: " << d << "\n";
  return diags.empty() ? kExitOk : kExitValidation;
}

int cmd_zeta(const Options& o, std::ostream& out, std::ostream& err) {
  const auto job = open_job(o);
  if (int rc = report_validation(job, err)) return rc;
  const auto& reg = job.registry;
  const auto z = zeta_function(reg, need_resolution(job));
  const int k = o.series_order >= 0 ? o.series_order : -1;
  std::vector<Motive> series;
  if (k >= 0) series = expand_series(z, k);
  if (o.machine) {
    Json terms = Json::array();
    for (const auto& t : z.terms) {
      Json factors = Json::array();
      for (const auto& [N, nu] : t.factors) factors.push_back({{"N", N}, {"nu", nu}});
      terms.push_back({{"coefficient", motive_to_json(t.coefficient, reg)},
                       {"label", t.label},
                       {"lm1_power", t.lm1_power},
                       {"cover_order", t.cover_order},
                       {"factors", factors}});
    }
    Json j{{"command", "zeta"}, {"text", z.render()}, {"terms", terms}};
    if (k >= 0) {
      Json s = Json::array();
      for (const auto& m : series) s.push_back(motive_to_json(m, reg));
      j["series"] = s;
    }
    emit(out, j);
    return kExitOk;
  }
  out << z.render() << "\n";
  for (std::size_t n = 0; n < series.size(); ++n) out << "T^" << n << ": " << render(series[n], reg) << "\n";
  return kExitOk;
}

int cmd_nearby(const Options& o, std::ostream& out, std::ostream& err) {
  const auto job = open_job(o);
  if (int rc = report_validation(job, err)) return rc;
  const auto& reg = job.registry;
  const auto mf = nearby_cycle(reg, need_resolution(job));
  if (o.machine) {
    emit(out, Json{{"command", "nearby"}, {"text", render(mf, reg)}, {"motive", motive_to_json(mf, reg)}});
  } else {
    out << render(mf, reg) << "\n";
  }
  return kExitOk;
}

int cmd_vanishing(const Options& o, std::ostream& out, std::ostream& err) {
  const auto job = open_job(o);
  if (int rc = report_validation(job, err)) return rc;
  const auto& reg = job.registry;
  const auto& r = need_resolution(job);
  const auto value = o.value.empty() ? job.params.critical_value : o.value;
  const auto mf = vanishing_cycle(reg, r, value);
  std::vector<std::pair<std::string, Motive>> points;
  for (const auto& p : job.params.points) points.emplace_back(p, milnor_fibre_at(reg, r, p));
  if (o.machine) {
    Json pts = Json::object();
    for (const auto& [p, m] : points) pts[p] = {{"text", render(m, reg)}, {"motive", motive_to_json(m, reg)}};
    emit(out, Json{{"command", "vanishing"},
                   {"value", value},
                   {"text", render(mf, reg)},
                   {"motive", motive_to_json(mf, reg)},
                   {"points", pts}});
  } else {
    out << render(mf, reg) << "\n";
    for (const auto& [p, m] : points) out << "at " << p << ": " << render(m, reg) << "\n";
  }
  return kExitOk;
}

int cmd_arc_check(const Options& o, std::ostream& out, std::ostream& err) {
  const auto job = open_job(o);
  if (int rc = report_validation(job, err)) return rc;
  const auto& reg = job.registry;
  const auto& r = need_resolution(job);
  MonomialFunction f;
  if (!o.monomial.empty()) {
    f = parse_monomial(o.monomial, o.unit_vars, r.base);
  } else if (job.monomial) {
    f = *job.monomial;
  } else {
    throw Error(ErrorKind::Schema, "arc-check needs a monomial (job payload or --monomial)");
  }
  const int k = series_order(o, job);
  const auto z = zeta_function(reg, r);
  const auto series = expand_series(z, k);
  const auto orders = series_cover_orders(z, k);
  bool all = true;
  Json rows = Json::array();
  std::ostringstream table;
  if (k < 1) table << "no coefficients to compare: PASS\n";
  for (int n = 1; n <= k; ++n) {
    std::string oracle_text;
    std::string note;
    bool pass = false;
    try {
      const auto a = arc_class(reg, f, n);
      const Motive coeff = a.value.scaled(HalfLaurent::tate(-2LL * n * f.dim()));
      oracle_text = render(coeff, reg);
      const std::set<int> oracle_orders = a.cover_order ? std::set<int>{a.cover_order} : std::set<int>{};
      pass = coeff == series[n] && oracle_orders == orders[n];
      if (coeff == series[n] && !pass) note = " (cover orders differ)";
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::UnsupportedShape) throw;
      oracle_text = "-";
      note = std::string(" (") + e.what() + ")";
    }
    all = all && pass;
    table << "T^" << n << "  oracle " << oracle_text << "  resolution " << render(series[n], reg) << "  "
          << (pass ? "PASS" : "FAIL") << note << "\n";
    rows.push_back({{"n", n}, {"oracle", oracle_text}, {"resolution", render(series[n], reg)}, {"pass", pass}});
  }
  if (o.machine) {
    emit(out, Json{{"command", "arc-check"}, {"order", k}, {"rows", rows}, {"pass", all}});
  } else {
    out << table.str();
  }
  return all ? kExitOk : kExitFailure;
}

int cmd_ts(const Options& o, std::ostream& out, std::ostream&) {
  const auto job = open_job(o);
  if (!job.ts) throw Error(ErrorKind::Schema, "job has no ts payload");
  const auto& reg = job.registry;
  Motive acc = job.ts->factors.front();
  for (std::size_t i = 1; i < job.ts->factors.size(); ++i) acc = thom_sebastiani(reg, acc, job.ts->factors[i]);
  const auto result = thom_sebastiani_power(reg, acc, job.ts->power);
  if (o.machine) {
    emit(out, Json{{"command", "ts"}, {"text", render(result, reg)}, {"motive", motive_to_json(result, reg)}});
  } else {
    out << render(result, reg) << "\n";
  }
  return kExitOk;
}

int cmd_glue(const Options& o, std::ostream& out, std::ostream& err) {
  const auto job = open_job(o);
  if (!job.atlas) throw Error(ErrorKind::Schema, "job has no atlas payload");
  const auto& reg = job.registry;
  for (const auto& d : check_orientation(reg, *job.atlas)) err << "diagnostic: " << d << "\n";
  const auto g = glue(reg, *job.atlas);
  std::optional<Motive> absolute;
  if (!job.atlas->scissor.empty()) absolute = pushforward_to_point(reg, g, job.atlas->scissor);
  if (o.machine) {
    Json regions = Json::object();
    for (const auto& [region, m] : g.values) {
      regions[region] = {{"text", render(m, reg)}, {"chart", g.provenance.at(region)}, {"motive", motive_to_json(m, reg)}};
    }
    Json j{{"command", "glue"}, {"regions", regions}, {"ledger", g.ledger}};
    if (absolute) j["pushforward"] = {{"text", render(*absolute, reg)}, {"motive", motive_to_json(*absolute, reg)}};
    emit(out, j);
    return kExitOk;
  }
  for (const auto& [region, m] : g.values) {
    out << "region " << region << ": " << render(m, reg) << "  [" << g.provenance.at(region) << "]\n";
  }
  for (const auto& line : g.ledger) out << "overlap " << line << "\n";
  if (absolute) out << "pushforward: " << render(*absolute, reg) << "\n";
  return kExitOk;
}

int cmd_localize(const Options& o, std::ostream& out, std::ostream&) {
  const auto job = open_job(o);
  if (!job.fixed_points) throw Error(ErrorKind::Schema, "job has no fixed_points payload");
  const auto& reg = job.registry;
  const auto& fp = *job.fixed_points;
  const auto sum = localize_sum(reg, fp.components);
  std::optional<LocalizationCheck> check;
  if (fp.direct) check = localization_check(reg, fp.components, *fp.direct);
  if (o.machine) {
    Json j{{"command", "localize"}, {"text", render(sum, reg)}, {"motive", motive_to_json(sum, reg)}};
    if (check) {
      j["check"] = {{"pass", check->pass}, {"direct", render(check->direct, reg)}, {"diff", render(check->diff, reg)}};
    }
    emit(out, j);
  } else {
    out << "sum = " << render(sum, reg);
    if (check) {
      out << "; check: " << (check->pass ? "PASS" : "FAIL");
      if (!check->pass) out << " (direct = " << render(check->direct, reg) << ", diff = " << render(check->diff, reg) << ")";
    }
    out << "\n";
  }
  return check && !check->pass ? kExitFailure : kExitOk;
}

int cmd_selftest(const Options&, std::ostream& out) {
  bool all = true;
  for (const auto& r : run_selftest(fixture_dir())) {
    out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail << "\n";
    all = all && r.pass;
  }
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with monodromic motives", "motivic"};
  app.require_subcommand(1);
  Options o;
  auto add_job = [&](CLI::App* sub) {
    sub->add_option("--job", o.job_path, "job file (JSON)");
    sub->add_option("--fixture", o.fixture, "shipped fixture name");
    sub->add_flag("--machine-readable", o.machine, "JSON output");
  };
  auto* zeta = app.add_subcommand("zeta", "motivic zeta function");
  add_job(zeta);
  zeta->add_option("--series-order", o.series_order, "also expand to this order");
  auto* nearby = app.add_subcommand("nearby", "motivic nearby cycle");
  add_job(nearby);
  auto* vanishing = app.add_subcommand("vanishing", "motivic vanishing cycle");
  add_job(vanishing);
  vanishing->add_option("--value", o.value, "critical value");
  auto* arc = app.add_subcommand("arc-check", "compare the arc-space oracle with the resolution formula");
  add_job(arc);
  arc->add_option("--series-order", o.series_order, "highest power of T");
  arc->add_option("--monomial", o.monomial, "monomial such as x^2*y");
  arc->add_option("--unit-vars", o.unit_vars, "variables restricted to G_m")->delimiter(',');
  auto* ts = app.add_subcommand("ts", "Thom-Sebastiani product");
  add_job(ts);
  auto* gl = app.add_subcommand("glue", "glue an oriented d-critical atlas");
  add_job(gl);
  auto* loc = app.add_subcommand("localize", "torus localization sum");
  add_job(loc);
  auto* self = app.add_subcommand("selftest", "run the regression and invariant suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (zeta->parsed()) return cmd_zeta(o, out, err);
    if (nearby->parsed()) return cmd_nearby(o, out, err);
    if (vanishing->parsed()) return cmd_vanishing(o, out, err);
    if (arc->parsed()) return cmd_arc_check(o, out, err);
    if (ts->parsed()) return cmd_ts(o, out, err);
    if (gl->parsed()) return cmd_glue(o, out, err);
    if (loc->parsed()) return cmd_localize(o, out, err);
    if (self->parsed()) return cmd_selftest(o, out);
  } catch (const DescentFailure& e) {
    err << "descent failure on overlap '" << e.overlap() << "' (" << e.step() << ")\n";
    err << "  lhs: " << e.lhs() << "\n";
    err << "  rhs: " << e.rhs() << "\n";
    return kExitDescentFailure;
  } catch (const Error& e) {
    std::string what = e.what();
    err << "error: " << what << "\n";
    return exit_code(e.kind());
  }
  return kExitFailure;
}

}  // namespace motivic
