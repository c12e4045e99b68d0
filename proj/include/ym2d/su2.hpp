#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ym2d::su2 {

using Matrix2cd = Eigen::Matrix2cd;
using Eigen::MatrixXcd;

/// Generators of the spin-(m/2) irrep in the weight-ordered unitary basis
/// v_0 (weight m), ..., v_m (weight -m); f = e^dagger, [e,f] = h.
MatrixXcd gen_e(int m);
MatrixXcd gen_f(int m);
MatrixXcd gen_h(int m);

/// pi^m(g) for g in SU(2), via the m-th symmetric power of the defining rep.
MatrixXcd rep(int m, const Matrix2cd& g);
/// pi^m(diag(e^{i t}, e^{-i t})): diagonal with entries e^{i (m - 2k) t}.
MatrixXcd rep_torus(int m, double t);

Matrix2cd torus(double t);
/// ZYZ Euler element Rz(phi) Ry(theta) Rz(psi).
Matrix2cd euler(double phi, double theta, double psi);

}  // namespace ym2d::su2
