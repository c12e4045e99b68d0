#pragma once

#include <vector>

#include "ym2d/tensor.hpp"

namespace ym2d {

/// Cyclic SU(2) intertwiner chain b_i : V_{nu_i} -> V_{nu_{i-1}} (x) V_{mu_i}
/// (indices mod N, nu_0 = nu_N).  Spin colors mu, sector labels nu.
struct SpinChainConfig {
  std::vector<int> mu;
  std::vector<int> nu;
  std::vector<Intertwiner> b;

  int N() const { return (int)mu.size(); }
  int total_dim() const {
    int d = 1;
    for (int m : mu) d *= m + 1;
    return d;
  }

  static bool admissible(const std::vector<int>& mu, const std::vector<int>& nu);
  /// Builds the chain with Schur-normalized Clebsch-Gordan intertwiners.
  static SpinChainConfig make(std::vector<int> mu, std::vector<int> nu);
};

/// Trace over V_{nu_N} of the intertwiner chain against pi^{nu_i}(g_i);
/// a vector in V_{mu_1} (x) ... (x) V_{mu_N} (ascending factor order).
Eigen::VectorXcd trace_function_group(const SpinChainConfig& cfg,
                                      const std::vector<su2::Matrix2cd>& g);

/// Radial restriction g = (1, ..., 1, e^{i q H}).
Eigen::VectorXcd trace_function(const SpinChainConfig& cfg, const CartanPoint& q);

/// delta(q) * Psi(q); requires regular q.
Eigen::VectorXcd normalized_trace(const SpinChainConfig& cfg, const CartanPoint& q);

/// Norm of the components outside the zero-weight subspace.
double zero_weight_residual(const std::vector<int>& mu, const Eigen::VectorXcd& v);

/// (1/|W|) int_T (Psi_2(q), Psi_1(q)) |delta(q)|^2 dq  (Hermitian pairing,
/// conjugate-linear in the second chain), by the trapezoid rule.
complexd trace_orthogonality(const SpinChainConfig& cfg1, const SpinChainConfig& cfg2,
                             int resolution);

}  // namespace ym2d
