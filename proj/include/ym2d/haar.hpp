#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ym2d/root_system.hpp"
#include "ym2d/su2.hpp"

namespace ym2d {

enum class QuadScheme { EulerProductGrid, TorusGauss };

struct QuadratureSpec {
  QuadScheme scheme = QuadScheme::EulerProductGrid;
  int resolution = 16;  // points per dimension
  std::string error_model() const;
};

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/// Precomputed Euler-angle product grid over SU(2): uniform in phi over
/// [0,2pi), Gauss-Legendre in cos(theta), uniform in psi over [0,4pi).
/// Exact for band-limited integrands when the resolution is even and exceeds
/// the bandwidth; weights sum to 1.
struct EulerGrid {
  std::vector<su2::Matrix2cd> points;
  std::vector<double> weights;
  explicit EulerGrid(int resolution);
};

/// Haar integral over SU(2).
complexd integrate_group(const std::function<complexd(const su2::Matrix2cd&)>& f,
                         const QuadratureSpec& spec);

/// Weyl integration of a class function: (1/|W|) int_T f |delta|^2 dt.
complexd integrate_class(const RootSystem& rs,
                         const std::function<complexd(const CartanPoint&)>& f,
                         const QuadratureSpec& spec);

struct IdentityReport {
  std::string identity;
  std::vector<int> reps;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

enum class HaarIdentity { Integ2, Integ3, Projector };

/// Quadrature check of the matrix-element integral identities against their
/// closed forms (delta/dim for Integ2, invariant-basis sum for Integ3, the
/// invariant projector P0 for Projector).
IdentityReport verify_identity(HaarIdentity which, const std::vector<int>& reps,
                               const QuadratureSpec& spec, double tolerance = 1e-6);

/// Orthogonal projector onto invariants of V_{m1} (x) ... (x) V_{mk}, built
/// from the nullspace of the total quadratic Casimir (independent of Haar).
Eigen::MatrixXcd invariant_projector(const std::vector<int>& reps);

}  // namespace ym2d
