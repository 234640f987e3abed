#include "motivic/dcrit.hpp"

#include <algorithm>

#include "motivic/error.hpp"
#include "motivic/render.hpp"

namespace motivic {

const CriticalChart& Atlas::chart(const std::string& id) const {
  for (const auto& c : charts) {
    if (c.id == id) return c;
  }
  throw Error(ErrorKind::UnknownName, "chart '" + id + "' is not in the atlas");
}

namespace {

std::string bits_text(const Registry& reg, const BundleClass& p) {
  const auto names = reg.bundle_generator_names(p.space(), p.key());
  if (names.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "+" : "") + names[i];
  return s;
}

void check_region(const Registry& reg, const std::string& what, const std::string& region, const std::string& space) {
  if (region != space) {
    throw Error(ErrorKind::SpaceMismatch, what + " lives on '" + space + "', expected '" + region + "'");
  }
  reg.space(region);
}

void check_restriction(const Registry& reg, const std::string& morphism, const std::string& from,
                       const std::string& to) {
  const auto& m = reg.morphism(morphism);
  if (m.source != from || m.target != to) {
    throw Error(ErrorKind::SpaceMismatch, "morphism '" + morphism + "' does not map '" + from + "' to '" + to + "'");
  }
}

Motive candidate(const Registry& reg, const CriticalChart& c) { return mot_odot(c.mf, reg.upsilon(c.q)); }

}  // namespace

std::vector<std::string> check_orientation(const Registry& reg, const Atlas& atlas) {
  std::vector<std::string> diags;
  for (const auto& o : atlas.overlaps) {
    const auto& a = atlas.chart(o.chart_a);
    const auto& b = atlas.chart(o.chart_b);
    const auto qa = reg.bundle_pullback(o.restrict_a, a.q);
    const auto qb = reg.bundle_pullback(o.restrict_b, b.q);
    const auto via_a = bundle_tensor(o.p_phi, qa);
    const auto via_b = bundle_tensor(o.p_psi, qb);
    if (!(o.q_t == via_a)) {
      diags.push_back("overlap '" + o.name + "': Q_T = " + bits_text(reg, o.q_t) + " but P_Phi + Q_" + a.id + " = " +
                      bits_text(reg, via_a));
    }
    if (!(o.q_t == via_b)) {
      diags.push_back("overlap '" + o.name + "': Q_T = " + bits_text(reg, o.q_t) + " but P_Psi + Q_" + b.id + " = " +
                      bits_text(reg, via_b));
    }
  }
  return diags;
}

GlobalMotive glue(const Registry& reg, const Atlas& atlas) {
  if (!atlas.oriented) {
    throw Error(ErrorKind::OrientationMissing, "atlas carries no square root of the canonical bundle");
  }
  for (const auto& c : atlas.charts) {
    check_region(reg, "motive of chart '" + c.id + "'", c.region, c.mf.space());
    check_region(reg, "orientation class of chart '" + c.id + "'", c.region, c.q.space());
  }

  GlobalMotive g;
  // Charts in id order so the result does not depend on enumeration order.
  std::vector<const CriticalChart*> charts;
  for (const auto& c : atlas.charts) charts.push_back(&c);
  std::sort(charts.begin(), charts.end(), [](auto* x, auto* y) { return x->id < y->id; });
  for (const auto* c : charts) {
    const Motive value = candidate(reg, *c);
    auto [it, inserted] = g.values.emplace(c->region, value);
    if (inserted) {
      g.provenance[c->region] = c->id;
    } else if (it->second != value) {
      throw DescentFailure(c->region, "charts '" + g.provenance[c->region] + "' and '" + c->id + "' on one region",
                           render(it->second, reg), render(value, reg));
    }
  }

  std::vector<const OverlapDatum*> overlaps;
  for (const auto& o : atlas.overlaps) overlaps.push_back(&o);
  std::sort(overlaps.begin(), overlaps.end(), [](auto* x, auto* y) { return x->name < y->name; });
  for (const auto* o : overlaps) {
    const auto& a = atlas.chart(o->chart_a);
    const auto& b = atlas.chart(o->chart_b);
    check_restriction(reg, o->restrict_a, o->region, a.region);
    check_restriction(reg, o->restrict_b, o->region, b.region);
    for (const auto* p : {&o->p_phi, &o->p_psi, &o->q_t}) check_region(reg, "overlap class", o->region, p->space());

    const Motive mf_a = reg.pullback(o->restrict_a, a.mf);
    const Motive mf_b = reg.pullback(o->restrict_b, b.mf);
    const Motive cand_a = reg.pullback(o->restrict_a, candidate(reg, a));
    const Motive cand_b = reg.pullback(o->restrict_b, candidate(reg, b));

    // Stabilise each side into the shared chart, orient there, and compare
    // with the chart's own candidate.
    const Motive shared_a = mot_odot(mf_a, reg.upsilon(o->p_phi));
    const Motive shared_b = mot_odot(mf_b, reg.upsilon(o->p_psi));
    const Motive via_a = mot_odot(shared_a, reg.upsilon(o->q_t));
    const Motive via_b = mot_odot(shared_b, reg.upsilon(o->q_t));
    if (via_a != cand_a) {
      throw DescentFailure(o->name, "shared-chart value vs chart '" + a.id + "'", render(via_a, reg), render(cand_a, reg));
    }
    if (via_b != cand_b) {
      throw DescentFailure(o->name, "shared-chart value vs chart '" + b.id + "'", render(via_b, reg), render(cand_b, reg));
    }
    if (o->shared_mf) {
      if (*o->shared_mf != shared_a) {
        throw DescentFailure(o->name, "stabilisation of chart '" + a.id + "'", render(*o->shared_mf, reg),
                             render(shared_a, reg));
      }
      if (*o->shared_mf != shared_b) {
        throw DescentFailure(o->name, "stabilisation of chart '" + b.id + "'", render(*o->shared_mf, reg),
                             render(shared_b, reg));
      }
    }
    if (cand_a != cand_b) {
      throw DescentFailure(o->name, "restricted chart values", render(cand_a, reg), render(cand_b, reg));
    }
    auto [it, inserted] = g.values.emplace(o->region, cand_a);
    if (inserted) {
      g.provenance[o->region] = o->name;
    } else if (it->second != cand_a) {
      throw DescentFailure(o->region, "overlap '" + o->name + "' vs '" + g.provenance[o->region] + "'",
                           render(it->second, reg), render(cand_a, reg));
    }
    g.ledger.push_back(o->name + ": " + a.id + "|" + o->region + " = " + b.id + "|" + o->region + " = " +
                       render(cand_a, reg));
  }

  // Any orientation inconsistency must have surfaced above; a fine enough
  // overlap cover makes the two checks equivalent, a coarse one does not.
  const auto diags = check_orientation(reg, atlas);
  if (!diags.empty()) throw DescentFailure("orientation", diags.front(), "Q_T", "P + Q");
  return g;
}

Motive pushforward_to_point(const Registry& reg, const GlobalMotive& g, const std::vector<ScissorEntry>& scissor) {
  if (scissor.empty()) throw Error(ErrorKind::MissingScissorTable, "no scissor decomposition of the locus");
  Motive total(reg.point());
  for (const auto& e : scissor) {
    auto it = g.values.find(e.piece);
    if (it == g.values.end()) {
      throw Error(ErrorKind::MissingScissorTable, "scissor piece '" + e.piece + "' has no glued value");
    }
    const Motive pushed = reg.pushforward(e.to_point, it->second);
    if (!reg.is_point(pushed.space())) {
      throw Error(ErrorKind::MissingScissorTable, "morphism '" + e.to_point + "' does not end at a point");
    }
    total += mot_odot(e.coefficient.relabeled(reg.point()), pushed.relabeled(reg.point()));
  }
  return total;
}

}  // namespace motivic
