#include "motivic/stabilize.hpp"

#include "motivic/error.hpp"

namespace motivic {

Motive thom_sebastiani(const Registry& reg, const Motive& a, const Motive& b) { return reg.mot_boxdot(a, b); }

Motive thom_sebastiani_power(const Registry& reg, const Motive& a, unsigned n) {
  if (n == 0) throw Error(ErrorKind::ValidationFailed, "empty Thom-Sebastiani product");
  Motive r = a;
  for (unsigned i = 1; i < n; ++i) r = thom_sebastiani(reg, r, a);
  return r;
}

namespace {

int base_dim(const Registry& reg, const std::string& base) {
  const auto& sp = reg.space(base);
  if (!sp.dim) throw Error(ErrorKind::ValidationFailed, "space '" + base + "' has no declared dimension");
  return *sp.dim;
}

}  // namespace

Motive quadratic_form_motive(const Registry& reg, const QuadraticBundleDatum& d) {
  if (d.rank < 1) throw Error(ErrorKind::ValidationFailed, "quadratic bundle of rank < 1");
  if (d.det.space() != d.base) {
    throw Error(ErrorKind::SpaceMismatch, "determinant class is not on '" + d.base + "'");
  }
  return reg.upsilon(d.det).scaled(HalfLaurent::tate(-base_dim(reg, d.base)));
}

Motive twist_by_quadratic(const Registry& reg, const Motive& mf, const QuadraticBundleDatum& d,
                          const std::optional<std::string>& restriction) {
  // L^{dim U/2} ⊙ MF_{E,q}, then restrict to X.
  Motive factor = quadratic_form_motive(reg, d).scaled(HalfLaurent::tate(base_dim(reg, d.base)));
  if (restriction) {
    factor = reg.pullback(*restriction, factor);
  } else if (mf.space() != d.base) {
    throw Error(ErrorKind::MissingTransport, "no restriction from '" + d.base + "' to '" + mf.space() + "'");
  }
  return mot_odot(mf, factor);
}

Motive twist_by_determinant(const Registry& reg, const Motive& mf, const QuadraticBundleDatum& d,
                            const std::optional<std::string>& restriction) {
  BundleClass det = d.det;
  if (restriction) {
    det = reg.bundle_pullback(*restriction, det);
  } else if (mf.space() != d.base) {
    throw Error(ErrorKind::MissingTransport, "no restriction from '" + d.base + "' to '" + mf.space() + "'");
  }
  return mot_odot(mf, reg.upsilon(det));
}

Motive stabilize_pullback(const Registry& reg, const Motive& mf_f, const EmbeddingDatum& e) {
  if (e.p_phi.space() != mf_f.space()) {
    throw Error(ErrorKind::SpaceMismatch,
                "P class on '" + e.p_phi.space() + "' but motive on '" + mf_f.space() + "'");
  }
  if (e.dim_v < e.dim_u) throw Error(ErrorKind::ValidationFailed, "embedding into a smaller chart");
  return mot_odot(mf_f, reg.upsilon(e.p_phi));
}

EmbeddingDatum compose_embeddings(const Registry& reg, const EmbeddingDatum& phi, const EmbeddingDatum& psi) {
  if (phi.target_chart != psi.source_chart) {
    throw Error(ErrorKind::ValidationFailed,
                "cannot compose '" + phi.target_chart + "' with an embedding from '" + psi.source_chart + "'");
  }
  EmbeddingDatum r;
  r.source_chart = phi.source_chart;
  r.target_chart = psi.target_chart;
  r.dim_u = phi.dim_u;
  r.dim_v = psi.dim_v;
  BundleClass pulled = psi.p_phi;
  if (phi.restriction) {
    pulled = reg.bundle_pullback(*phi.restriction, psi.p_phi);
  } else if (psi.p_phi.space() != phi.p_phi.space()) {
    throw Error(ErrorKind::MissingTransport, "no restriction carrying P_Psi to '" + phi.p_phi.space() + "'");
  }
  r.p_phi = bundle_tensor(phi.p_phi, pulled);
  if (phi.restriction && psi.restriction) {
    r.restriction = reg.compose(*phi.restriction, *psi.restriction);
  } else {
    r.restriction = phi.restriction ? phi.restriction : psi.restriction;
  }
  return r;
}

}  // namespace motivic
