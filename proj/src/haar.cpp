#include "ym2d/haar.hpp"

#include <cmath>
#include <numbers>

#include "ym2d/tensor.hpp"

namespace ym2d {

namespace {
constexpr double pi = std::numbers::pi;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  Eigen::MatrixXcd K(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

Eigen::MatrixXcd embed(const Eigen::MatrixXcd& X, int slot, const std::vector<int>& reps) {
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(1, 1);
  for (size_t j = 0; j < reps.size(); ++j) {
    int d = reps[j] + 1;
    M = kron(M, (int)j == slot ? X : Eigen::MatrixXcd::Identity(d, d));
  }
  return M;
}
}  // namespace

std::string QuadratureSpec::error_model() const {
  return scheme == QuadScheme::EulerProductGrid
             ? "exact for band-limited integrands below the grid resolution; "
               "otherwise spectral decay in the resolution"
             : "Gauss-Legendre on the torus; spectral decay for analytic class functions";
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = 0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * k + 1) * z * p1 - k * p2) / (k + 1);
      }
      pp = n * (z * p0 - p1) / (z * z - 1);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1 - z * z) * pp * pp);
  }
}

EulerGrid::EulerGrid(int resolution) {
  int n = resolution + (resolution % 2);  // even count keeps half-integer frequencies exact
  std::vector<double> xs, ws;
  gauss_legendre(n, xs, ws);
  points.reserve((size_t)n * n * n);
  weights.reserve((size_t)n * n * n);
  for (int i = 0; i < n; ++i) {
    double phi = 2 * pi * i / n;
    for (int j = 0; j < n; ++j) {
      double theta = std::acos(xs[j]);
      for (int k = 0; k < n; ++k) {
        double psi = 4 * pi * k / n;
        points.push_back(su2::euler(phi, theta, psi));
        weights.push_back((ws[j] / 2) / double(n) / double(n));
      }
    }
  }
}

complexd integrate_group(const std::function<complexd(const su2::Matrix2cd&)>& f,
                         const QuadratureSpec& spec) {
  EulerGrid grid(spec.resolution);
  complexd s = 0;
  for (size_t i = 0; i < grid.points.size(); ++i) s += grid.weights[i] * f(grid.points[i]);
  return s;
}

complexd integrate_class(const RootSystem& rs,
                         const std::function<complexd(const CartanPoint&)>& f,
                         const QuadratureSpec& spec) {
  const int r = rs.rank(), n = spec.resolution;
  std::vector<double> xs, ws;
  gauss_legendre(n, xs, ws);
  // t_k = pi (x + 1) over [0, 2pi); normalized measure dt/(2pi) -> dx/2.
  std::vector<int> idx(r, 0);
  complexd s = 0;
  for (;;) {
    CartanPoint q;
    double w = 1;
    for (int k = 0; k < r; ++k) {
      q.angles.push_back(pi * (xs[idx[k]] + 1));
      w *= ws[idx[k]] / 2;
    }
    s += w * f(q) * std::norm(rs.weyl_denominator(q));
    int k = r - 1;
    while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
    if (k < 0) break;
  }
  return s / double(rs.weyl_order());
}

Eigen::MatrixXcd invariant_projector(const std::vector<int>& reps) {
  int D = 1;
  for (int m : reps) D *= m + 1;
  Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(D, D), F = E, H = E;
  for (size_t i = 0; i < reps.size(); ++i) {
    E += embed(su2::gen_e(reps[i]), (int)i, reps);
    F += embed(su2::gen_f(reps[i]), (int)i, reps);
    H += embed(su2::gen_h(reps[i]), (int)i, reps);
  }
  Eigen::MatrixXcd C = H * H * 0.5 + E * F + F * E;  // total quadratic Casimir
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(C);
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(D, D);
  for (int i = 0; i < D; ++i)
    if (std::abs(es.eigenvalues()(i)) < 1e-9) {
      Eigen::VectorXcd v = es.eigenvectors().col(i);
      P += v * v.adjoint();
    }
  return P;
}

IdentityReport verify_identity(HaarIdentity which, const std::vector<int>& reps,
                               const QuadratureSpec& spec, double tolerance) {
  IdentityReport rep;
  rep.reps = reps;
  rep.tolerance = tolerance;
  EulerGrid grid(spec.resolution);

  if (which == HaarIdentity::Integ2) {
    rep.identity = "integ-2";
    if (reps.size() != 2) throw std::invalid_argument("integ-2 needs two representation labels");
    int lam = reps[0], mu = reps[1];
    int dl = lam + 1, dm = mu + 1;
    std::vector<complexd> T((size_t)dl * dl * dm * dm, 0.0);
    for (size_t p = 0; p < grid.points.size(); ++p) {
      Eigen::MatrixXcd A = su2::rep(lam, grid.points[p]).adjoint();  // pi(h^{-1})
      Eigen::MatrixXcd B = su2::rep(mu, grid.points[p]);
      for (int i = 0; i < dl; ++i)
        for (int j = 0; j < dl; ++j)
          for (int k = 0; k < dm; ++k)
            for (int l = 0; l < dm; ++l)
              T[(((size_t)i * dl + j) * dm + k) * dm + l] += grid.weights[p] * A(i, j) * B(k, l);
    }
    double res = 0;
    for (int i = 0; i < dl; ++i)
      for (int j = 0; j < dl; ++j)
        for (int k = 0; k < dm; ++k)
          for (int l = 0; l < dm; ++l) {
            complexd got = T[(((size_t)i * dl + j) * dm + k) * dm + l];
            complexd want = (lam == mu && i == l && j == k) ? 1.0 / dl : 0.0;
            res = std::max(res, std::abs(got - want));
          }
    rep.residual = res;
  } else if (which == HaarIdentity::Integ3) {
    rep.identity = "integ-3";
    if (reps.size() != 3) throw std::invalid_argument("integ-3 needs three representation labels");
    int m1 = reps[0], m2 = reps[1], m3 = reps[2];
    int d1 = m1 + 1, d2 = m2 + 1, d3 = m3 + 1;
    // T[i,j,k,l,s,t] = int pi1(h^{-1})_{ij} pi2(h)_{kl} pi3(h)_{st}
    std::vector<complexd> T((size_t)d1 * d1 * d2 * d2 * d3 * d3, 0.0);
    auto at = [&](std::vector<complexd>& v, int i, int j, int k, int l, int s, int t) -> complexd& {
      return v[((((size_t)i * d1 + j) * d2 + k) * d2 + l) * d3 * d3 + (size_t)s * d3 + t];
    };
    for (size_t p = 0; p < grid.points.size(); ++p) {
      Eigen::MatrixXcd A = su2::rep(m1, grid.points[p]).adjoint();
      Eigen::MatrixXcd B = su2::rep(m2, grid.points[p]);
      Eigen::MatrixXcd C = su2::rep(m3, grid.points[p]);
      for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j)
          for (int k = 0; k < d2; ++k)
            for (int l = 0; l < d2; ++l)
              for (int s = 0; s < d3; ++s)
                for (int t = 0; t < d3; ++t)
                  at(T, i, j, k, l, s, t) += grid.weights[p] * A(i, j) * B(k, l) * C(s, t);
    }
    std::vector<complexd> W((size_t)d1 * d1 * d2 * d2 * d3 * d3, 0.0);
    if (su2_admissible(m1, m2, m3)) {
      Intertwiner b = cg_intertwiner(m1, m2, m3);  // V_m1 -> V_m2 (x) V_m3
      for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j)
          for (int k = 0; k < d2; ++k)
            for (int l = 0; l < d2; ++l)
              for (int s = 0; s < d3; ++s)
                for (int t = 0; t < d3; ++t)
                  at(W, i, j, k, l, s, t) =
                      b.mat(k * d3 + s, j) * std::conj(b.mat(l * d3 + t, i)) / double(d1);
    }
    double res = 0;
    for (size_t z = 0; z < T.size(); ++z) res = std::max(res, std::abs(T[z] - W[z]));
    rep.residual = res;
  } else {
    rep.identity = "projector";
    int D = 1;
    for (int m : reps) D *= m + 1;
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(D, D);
    for (size_t p = 0; p < grid.points.size(); ++p) {
      Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(1, 1);
      for (int m : reps) M = kron(M, su2::rep(m, grid.points[p]));
      T += grid.weights[p] * M;
    }
    rep.residual = (T - invariant_projector(reps)).cwiseAbs().maxCoeff();
  }
  rep.pass = rep.residual <= tolerance;
  return rep;
}

}  // namespace ym2d
