#include "ym2d/propagator.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace ym2d {

namespace {
double c2_su2(int m) { return 0.5 * m * (m + 2); }
}  // namespace

HeatKernelSeries::HeatKernelSeries(double area, double cutoff) {
  if (area <= 0) throw DivergentSeriesError("HeatKernelSeries: area must be positive");
  for (int m = 0; c2_su2(m) <= cutoff; ++m) coef_.push_back((m + 1) * std::exp(-area * c2_su2(m)));
}

double HeatKernelSeries::operator()(const su2::Matrix2cd& g) const {
  const double x = 0.5 * (g(0, 0) + g(1, 1)).real();
  // chi_m = U_m(cos theta), Chebyshev recurrence
  double um1 = 0, u0 = 1, s = 0;
  for (double c : coef_) {
    s += c * u0;
    double u1 = 2 * x * u0 - um1;
    um1 = u0;
    u0 = u1;
  }
  return s;
}

double HeatKernelSeries::at_class_angle(double theta) const {
  return (*this)(su2::torus(theta));
}

Eigen::MatrixXcd cylinder_propagator_spectral(const std::vector<int>& mu,
                                              const std::vector<double>& areas,
                                              const std::vector<su2::Matrix2cd>& g,
                                              const std::vector<su2::Matrix2cd>& gp,
                                              double cutoff) {
  Propagator u = Propagator::make(mu, areas, cutoff);
  int D = 1;
  for (int m : mu) D *= m + 1;
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(D, D);
  for (auto& [nu, coeff] : u.sector_coeff) {
    SpinChainConfig cfg = SpinChainConfig::make(mu, nu);
    Eigen::VectorXcd p1 = trace_function_group(cfg, g);
    Eigen::VectorXcd p2 = trace_function_group(cfg, gp);
    U.noalias() += coeff * (p1 * p2.adjoint());
  }
  return U;
}

Eigen::MatrixXcd cylinder_propagator_radial(const std::vector<int>& mu,
                                            const std::vector<double>& areas, double t, double tp,
                                            double cutoff) {
  const int N = (int)mu.size();
  std::vector<su2::Matrix2cd> g(N, su2::Matrix2cd::Identity()), gp = g;
  g.back() = su2::torus(t);
  gp.back() = su2::torus(tp);
  return cylinder_propagator_spectral(mu, areas, g, gp, cutoff);
}

Eigen::MatrixXcd cylinder_propagator_integral(const std::vector<int>& mu,
                                              const std::vector<double>& areas,
                                              const std::vector<su2::Matrix2cd>& g,
                                              const std::vector<su2::Matrix2cd>& gp,
                                              const QuadratureSpec& spec, double cutoff,
                                              int threads) {
  const int N = (int)mu.size();
  if ((int)g.size() != N || (int)gp.size() != N)
    throw std::invalid_argument("cylinder_propagator_integral: wrong tuple length");
  for (double a : areas)
    if (a <= 0) throw DivergentSeriesError("cylinder_propagator_integral: area must be positive");

  EulerGrid grid(spec.resolution);
  const size_t K = grid.points.size();
  std::vector<HeatKernelSeries> Z;
  for (int i = 0; i < N; ++i) Z.emplace_back(areas[i], cutoff);

  int D = 1;
  for (int m : mu) D *= m + 1;

  if (N == 1) {
    // U = int Z_A(g'^{-1} h^{-1} g h) pi^mu(h) dh
    su2::Matrix2cd L = gp[0].adjoint();
    Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(D, D);
    for (size_t p = 0; p < K; ++p) {
      const su2::Matrix2cd& h = grid.points[p];
      su2::Matrix2cd x = L * h.adjoint() * g[0] * h;
      U += grid.weights[p] * Z[0](x) * su2::rep(mu[0], h);
    }
    return U;
  }

  if (N == 2) {
    // x1 = g1'^{-1} h1^{-1} g1 h2, x2 = g2'^{-1} h2^{-1} g2 h1;
    // factor pi^{mu_1}(h1) (x) pi^{mu_2}(h2).
    const int d1 = mu[0] + 1, d2 = mu[1] + 1;
    std::vector<su2::Matrix2cd> A(K), Bh(K);
    std::vector<Eigen::MatrixXcd> W1(K), W2(K);
    for (size_t p = 0; p < K; ++p) {
      A[p] = gp[0].adjoint() * grid.points[p].adjoint() * g[0];  // per h1
      Bh[p] = gp[1].adjoint() * grid.points[p].adjoint() * g[1]; // per h2
      W1[p] = su2::rep(mu[0], grid.points[p]);
      W2[p] = su2::rep(mu[1], grid.points[p]);
    }
    const int nchunks = 64;
    std::vector<Eigen::MatrixXcd> partial(nchunks, Eigen::MatrixXcd::Zero(D, D));
    auto work = [&](int chunk) {
      Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(D, D);
      Eigen::MatrixXcd T(d2, d2);
      size_t lo = K * chunk / nchunks, hi = K * (chunk + 1) / nchunks;
      for (size_t p = lo; p < hi; ++p) {  // h1 index
        T.setZero();
        const su2::Matrix2cd& Ap = A[p];
        const su2::Matrix2cd& h1 = grid.points[p];
        for (size_t q = 0; q < K; ++q) {  // h2 index
          su2::Matrix2cd x1 = Ap * grid.points[q];
          su2::Matrix2cd x2 = Bh[q] * h1;
          double c = grid.weights[q] * Z[0](x1) * Z[1](x2);
          T.noalias() += c * W2[q];
        }
        // U += w_p * W1[p] (x) T
        for (int a = 0; a < d1; ++a)
          for (int b = 0; b < d1; ++b)
            U.block(a * d2, b * d2, d2, d2).noalias() += (grid.weights[p] * W1[p](a, b)) * T;
      }
      partial[chunk] = std::move(U);
    };
    int nthreads = std::max(1, std::min(threads, nchunks));
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          int c = next.fetch_add(1);
          if (c >= nchunks) return;
          work(c);
        }
      });
    for (auto& th : pool) th.join();
    Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(D, D);
    for (auto& P : partial) U += P;  // fixed order, deterministic
    return U;
  }

  // General N: full product grid; usable only at tiny resolutions.
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(D, D);
  std::vector<size_t> idx(N, 0);
  for (;;) {
    double w = 1;
    for (int i = 0; i < N; ++i) w *= grid.weights[idx[i]];
    double zs = 1;
    for (int i = 0; i < N; ++i) {
      const su2::Matrix2cd& hi = grid.points[idx[i]];
      const su2::Matrix2cd& hn = grid.points[idx[(i + 1) % N]];
      zs *= Z[i](gp[i].adjoint() * hi.adjoint() * g[i] * hn);
    }
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(1, 1);
    for (int i = 0; i < N; ++i) {
      const Eigen::MatrixXcd Wi = su2::rep(mu[i], grid.points[idx[i]]);
      Eigen::MatrixXcd K2(M.rows() * Wi.rows(), M.cols() * Wi.cols());
      for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c)
          K2.block(r * Wi.rows(), c * Wi.cols(), Wi.rows(), Wi.cols()) = M(r, c) * Wi;
      M = std::move(K2);
    }
    U += (w * zs) * M;
    int k = N - 1;
    while (k >= 0 && ++idx[k] == K) idx[k--] = 0;
    if (k < 0) break;
  }
  return U;
}

}  // namespace ym2d
