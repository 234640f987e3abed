#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motivic/bundle.hpp"
#include "motivic/motive.hpp"
#include "motivic/registry.hpp"

namespace motivic {

// (R, U, f, i) with MF_{U,f} pulled back to R and the orientation class Q on R.
struct CriticalChart {
  std::string id;
  std::string region;
  int dim_u = 1;
  Motive mf;
  BundleClass q;
};

// Two charts embedded in a shared chart (T, W, h, k) over the region R′.
struct OverlapDatum {
  std::string name;
  std::string chart_a;
  std::string chart_b;
  std::string region;     // R′
  std::string restrict_a;  // registered morphism R′ -> R_a
  std::string restrict_b;  // registered morphism R′ -> R_b
  BundleClass p_phi;      // P_Φ|_{R′}, Φ from chart a
  BundleClass p_psi;      // P_Ψ|_{R′}, Ψ from chart b
  BundleClass q_t;        // Q of the shared chart on R′
  std::optional<Motive> shared_mf;  // MF_{W,h} on R′, when known
};

struct ScissorEntry {
  std::string piece;     // region name
  Motive coefficient;    // over the point
  std::string to_point;  // registered morphism piece -> point
};

struct Atlas {
  bool oriented = false;
  std::vector<std::string> regions;
  std::vector<CriticalChart> charts;
  std::vector<OverlapDatum> overlaps;
  std::vector<ScissorEntry> scissor;

  const CriticalChart& chart(const std::string& id) const;
};

struct GlobalMotive {
  std::map<std::string, Motive> values;          // region -> value
  std::map<std::string, std::string> provenance;  // region -> chart id or overlap name
  std::vector<std::string> ledger;                // checked overlaps
};

std::vector<std::string> check_orientation(const Registry& reg, const Atlas& atlas);
// Throws OrientationMissing, DescentFailure.
GlobalMotive glue(const Registry& reg, const Atlas& atlas);
// Throws MissingScissorTable.
Motive pushforward_to_point(const Registry& reg, const GlobalMotive& g, const std::vector<ScissorEntry>& scissor);

}  // namespace motivic
