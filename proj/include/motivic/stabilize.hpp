#pragma once

#include <optional>
#include <string>

#include "motivic/bundle.hpp"
#include "motivic/motive.hpp"
#include "motivic/registry.hpp"

namespace motivic {

// Nondegenerate quadratic form q on a rank-r vector bundle E over `base`;
// `det` is the class of (Λ^r E, det q).
struct QuadraticBundleDatum {
  std::string base;
  int rank = 1;
  BundleClass det;
};

// Embedding Φ: (U, f) -> (V, g) of critical charts with its class P_Φ on X = Crit(f).
struct EmbeddingDatum {
  std::string source_chart;
  std::string target_chart;
  int dim_u = 0;
  int dim_v = 0;
  BundleClass p_phi;
  // Φ|_X : X -> Y, when X and Y are distinct spaces.
  std::optional<MorphismDecl> restriction;
};

// MF_{U×V, f⊞g} = a ⊡ b.
Motive thom_sebastiani(const Registry& reg, const Motive& a, const Motive& b);
// n-fold ⊡ power (n ≥ 1).
Motive thom_sebastiani_power(const Registry& reg, const Motive& a, unsigned n);

// L^{-dim U/2} ⊙ Υ(det).
Motive quadratic_form_motive(const Registry& reg, const QuadraticBundleDatum& d);
// MF_{E, f∘π + q} from MF_{U,f} on X, by restricting L^{dim U/2} ⊙ MF_{E,q}
// along `restriction` (X -> U; omitted when X = U).
Motive twist_by_quadratic(const Registry& reg, const Motive& mf, const QuadraticBundleDatum& d,
                          const std::optional<std::string>& restriction = std::nullopt);
// Same value via mf ⊙ Υ(det|_X), for cross-checking.
Motive twist_by_determinant(const Registry& reg, const Motive& mf, const QuadraticBundleDatum& d,
                            const std::optional<std::string>& restriction = std::nullopt);

// Φ|_X^* MF_{V,g} = MF_{U,f} ⊙ Υ(P_Φ).
Motive stabilize_pullback(const Registry& reg, const Motive& mf_f, const EmbeddingDatum& e);
// Ψ ∘ Φ with P_{Ψ∘Φ} = P_Φ ⊗ Φ|_X^* P_Ψ.
EmbeddingDatum compose_embeddings(const Registry& reg, const EmbeddingDatum& phi, const EmbeddingDatum& psi);

}  // namespace motivic
