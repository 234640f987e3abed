#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "motivic/arc_oracle.hpp"
#include "motivic/dcrit.hpp"
#include "motivic/localize.hpp"
#include "motivic/motive.hpp"
#include "motivic/registry.hpp"
#include "motivic/zeta.hpp"

namespace motivic {

using Json = nlohmann::json;

inline constexpr const char* kJobSchema = "motivic-job/1";

// Every reader rejects unknown fields with Error(Schema).
Registry registry_from_json(const Json& j);
Json registry_to_json(const Registry& reg);

// A motive is either its text form or {"space", "terms": [...]}; see docs/.
Motive motive_from_json(const Json& j, const Registry& reg, const std::string& space);
Json motive_to_json(const Motive& m, const Registry& reg);
// Also accepts {"vanishing": {...}} and {"milnor": {...}} references, computed on load.
Motive motive_ref_from_json(const Json& j, const Registry& reg, const std::string& space);

BundleClass bundle_from_json(const Json& j, const Registry& reg, const std::string& space);
ResolutionData resolution_from_json(const Json& j, const Registry& reg);
MonomialFunction monomial_from_json(const Json& j);
Atlas atlas_from_json(const Json& j, const Registry& reg);

struct FixedPointData {
  std::vector<FixedComponent> components;
  std::optional<Motive> direct;
  bool good = true;
  bool circle_compact = true;
};
FixedPointData fixed_points_from_json(const Json& j, const Registry& reg);

struct TsData {
  std::vector<Motive> factors;
  unsigned power = 1;
};
TsData ts_from_json(const Json& j, const Registry& reg);

struct JobParams {
  int series_order = 6;
  std::string critical_value = "0";
  std::vector<std::string> points;
};

struct Job {
  Registry registry;
  std::optional<ResolutionData> resolution;
  std::optional<MonomialFunction> monomial;
  std::optional<Atlas> atlas;
  std::optional<FixedPointData> fixed_points;
  std::optional<TsData> ts;
  JobParams params;
};

Job job_from_json(const Json& j);
Job load_job(const std::string& path);

}  // namespace motivic
