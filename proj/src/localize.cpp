#include "motivic/localize.hpp"

#include "motivic/error.hpp"
#include "motivic/render.hpp"

namespace motivic {

int virtual_index(const std::vector<int>& weights) {
  int ind = 0;
  for (int w : weights) {
    if (w == 0) throw Error(ErrorKind::ZeroWeight, "zero weight belongs to the fixed component");
    ind += w > 0 ? 1 : -1;
  }
  return ind;
}

Motive localize_sum(const Registry& reg, const std::vector<FixedComponent>& components) {
  Motive total(reg.point());
  for (const auto& c : components) {
    if (!reg.is_point(c.motive.space())) {
      throw Error(ErrorKind::SpaceMismatch, "component '" + c.id + "' motive is not over a point");
    }
    total += c.motive.relabeled(reg.point()).scaled(HalfLaurent::tate(-virtual_index(c.weights)));
  }
  return total;
}

LocalizationCheck localization_check(const Registry& reg, const std::vector<FixedComponent>& components,
                                     const Motive& direct) {
  LocalizationCheck r;
  r.sum = localize_sum(reg, components);
  r.direct = direct.relabeled(reg.point());
  r.diff = r.sum - r.direct;
  r.pass = r.diff.is_zero();
  r.report = "sum = " + render(r.sum, reg) + "; direct = " + render(r.direct, reg) +
             (r.pass ? "" : "; diff = " + render(r.diff, reg));
  return r;
}

}  // namespace motivic
