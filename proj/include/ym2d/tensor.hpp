#pragma once

#include <map>

#include "ym2d/errors.hpp"
#include "ym2d/root_system.hpp"
#include "ym2d/su2.hpp"

namespace ym2d {

struct DecompositionTable {
  std::map<HighestWeight, int> entries;

  int multiplicity(const HighestWeight& nu) const {
    auto it = entries.find(nu);
    return it == entries.end() ? 0 : it->second;
  }
};

/// Racah-Speiser: reflect lambda + tau + rho into the dominant chamber over
/// the weight system of mu, with signs; singular points drop out.
DecompositionTable tensor_decompose(const RootSystem& rs, const HighestWeight& lam,
                                    const HighestWeight& mu);

/// Equivariant map V_nu -> V_nup (x) V_mu for SU(2), in weight-ordered bases.
/// Matrix rows are flattened as (i_nup * dim(mu) + i_mu).
struct Intertwiner {
  int nu = 0, nup = 0, mu = 0;
  Eigen::MatrixXcd mat;
};

bool su2_admissible(int nu, int nup, int mu);

/// Solves the equivariance linear system; normalized so the Schur pairing
/// (a,a) = 1 and the top-to-top matrix entry is real positive.
Intertwiner cg_intertwiner(int nu, int nup, int mu);

/// (b,a) with b^dagger a = (b,a) id_{V_nu}.
complexd schur_pairing(const Intertwiner& a, const Intertwiner& b);

}  // namespace ym2d
