#pragma once

#include "ym2d/cm_operators.hpp"
#include "ym2d/haar.hpp"

namespace ym2d {

/// Kernel of the multi-time propagator at boundary tuples (g, g'):
///   U(g, g') = sum_{nu, a} e^{-sum_i c2(nu_i) A_i} Psi(g) Psi(g')^dagger,
/// a linear operator on V_{mu_1} (x) ... (x) V_{mu_N}.
Eigen::MatrixXcd cylinder_propagator_spectral(const std::vector<int>& mu,
                                              const std::vector<double>& areas,
                                              const std::vector<su2::Matrix2cd>& g,
                                              const std::vector<su2::Matrix2cd>& gp,
                                              double cutoff);

/// Radial kernel: both tuples gauge-fixed to torus points (1,...,1,e^{iqH}).
Eigen::MatrixXcd cylinder_propagator_radial(const std::vector<int>& mu,
                                            const std::vector<double>& areas, double t,
                                            double tp, double cutoff);

/// Same kernel from the nested Haar integral of heat-kernel factors,
///   U(g,g') = int prod_i Z_{A_i}(g'_i^{-1} h_i^{-1} g_i h_{i+1})
///             (x)_i pi^{mu_i}(h_i) dh_1 ... dh_N          (h_{N+1} = h_1).
/// Cost grows as resolution^{3N}; practical for N <= 2.
Eigen::MatrixXcd cylinder_propagator_integral(const std::vector<int>& mu,
                                              const std::vector<double>& areas,
                                              const std::vector<su2::Matrix2cd>& g,
                                              const std::vector<su2::Matrix2cd>& gp,
                                              const QuadratureSpec& spec, double cutoff,
                                              int threads = 1);

/// Truncated SU(2) heat-kernel series with Chebyshev evaluation.
class HeatKernelSeries {
 public:
  HeatKernelSeries(double area, double cutoff);
  double operator()(const su2::Matrix2cd& g) const;
  double at_class_angle(double theta) const;

 private:
  std::vector<double> coef_;
};

}  // namespace ym2d
