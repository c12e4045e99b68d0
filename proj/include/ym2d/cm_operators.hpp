#pragma once

#include "ym2d/rmatrix.hpp"

namespace ym2d {

struct RadialOperatorResult {
  Eigen::VectorXcd value;   // operator applied to the (normalized) trace function
  Eigen::VectorXcd func;    // the function it was applied to, at q
  double fd_step = 0;
  double eigenvalue = 0;    // predicted eigenvalue
  double residual() const {
    double n = func.norm();
    return n == 0 ? 0 : (value - eigenvalue * func).norm() / n;
  }
};

/// Radial spin Calogero-Moser Hamiltonian
///   H2 = -Lap_q + 2 sum_{alpha>0} pi^V(f e) / ((1-h_alpha)(1-h_{-alpha})) - |rho|^2
/// applied to F = delta Psi by central differences; eigenvalue c2(nu_N).
RadialOperatorResult apply_cm_hamiltonian(const SpinChainConfig& cfg, const CartanPoint& q,
                                          double fd_step);

enum class KzbVariant { Normalized, Unnormalized };

/// KZB operator D_i, 1 <= i <= N-1, with eigenvalue (c2(nu_{i+1}) - c2(nu_i))/2.
/// Realized as the radial operator at tensor position i+1,
///   (h^{(p)}, d/d lambda) - sum_{k<p} r_kp + sum_{k>p} r_pk        (p = i+1)
/// on F = delta Psi; the Unnormalized variant adds +d(lambda)_p and acts on Psi.
RadialOperatorResult apply_kzb(const SpinChainConfig& cfg, int i, const CartanPoint& q,
                               double fd_step, KzbVariant variant = KzbVariant::Normalized);

/// Residual of (r_12 + r_21) b = ((c2(nup) + c2(mu) - c2(nu))/2) b.
double intertwiner_casimir_identity(const Intertwiner& b, const CartanPoint& q);

/// Finite-difference residual of Lap(delta^{-1}) = -(rho,rho) delta^{-1} - D(delta^{-1}),
/// D = sum_{alpha>0} (xi_a + xi_{-a})/(xi_a - xi_{-a}) (alpha, d/d lambda).
double delta_lemma_residual(const RootSystem& rs, const CartanPoint& q, double fd_step);

/// Spectral multi-time propagator data: diagonal in the trace-function basis.
struct Propagator {
  std::vector<int> mu;
  double cutoff = 0;
  std::map<std::vector<int>, double> sector_coeff;  // nu tuple -> e^{-sum c2(nu_i) A_i}

  static Propagator make(const std::vector<int>& mu, const std::vector<double>& areas,
                         double cutoff);
};

/// Spectral composition U_A U_B = U_{A+B}: coefficients multiply sector-wise.
Propagator compose_propagators(const Propagator& a, const Propagator& b);

}  // namespace ym2d
