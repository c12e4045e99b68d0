#include "ym2d/spin_chain.hpp"

#include <cmath>
#include <numbers>

namespace ym2d {

bool SpinChainConfig::admissible(const std::vector<int>& mu, const std::vector<int>& nu) {
  if (mu.size() != nu.size() || mu.empty()) return false;
  const int N = (int)mu.size();
  for (int i = 0; i < N; ++i)
    if (!su2_admissible(nu[i], nu[(i + N - 1) % N], mu[i])) return false;
  return true;
}

SpinChainConfig SpinChainConfig::make(std::vector<int> mu, std::vector<int> nu) {
  if (!admissible(mu, nu))
    throw AdmissibilityError("SpinChainConfig: cyclic Clebsch-Gordan condition fails");
  SpinChainConfig cfg;
  const int N = (int)mu.size();
  for (int i = 0; i < N; ++i) cfg.b.push_back(cg_intertwiner(nu[i], nu[(i + N - 1) % N], mu[i]));
  cfg.mu = std::move(mu);
  cfg.nu = std::move(nu);
  return cfg;
}

Eigen::VectorXcd trace_function_group(const SpinChainConfig& cfg,
                                      const std::vector<su2::Matrix2cd>& g) {
  const int N = cfg.N();
  if ((int)g.size() != N) throw std::invalid_argument("trace_function_group: wrong tuple length");
  // T = (b_1 pi(g_1) (x) id) ... (b_{N-1} pi(g_{N-1}) (x) id) (b_N pi(g_N)),
  // built back to front; trailing identity factors grow as mu's accumulate.
  Eigen::MatrixXcd T = cfg.b[N - 1].mat * su2::rep(cfg.nu[N - 1], g[N - 1]);
  long trailing = cfg.mu[N - 1] + 1;
  for (int i = N - 2; i >= 0; --i) {
    Eigen::MatrixXcd Bi = cfg.b[i].mat * su2::rep(cfg.nu[i], g[i]);
    const long rows = Bi.rows(), cols = Bi.cols();
    Eigen::MatrixXcd next(rows * trailing, T.cols());
    // (Bi (x) I_trailing) T without forming the Kronecker product
    for (long r = 0; r < rows; ++r)
      for (long t = 0; t < trailing; ++t) {
        Eigen::RowVectorXcd acc = Eigen::RowVectorXcd::Zero(T.cols());
        for (long c = 0; c < cols; ++c) acc += Bi(r, c) * T.row(c * trailing + t);
        next.row(r * trailing + t) = acc;
      }
    T = std::move(next);
    trailing *= cfg.mu[i] + 1;
  }
  // T : V_{nu_N} -> V_{nu_N} (x) (V_mu1 (x) ... (x) V_muN); partial trace.
  const long dn = cfg.nu[N - 1] + 1, D = trailing;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(D);
  for (long a = 0; a < dn; ++a) out += T.block(a * D, 0, D, dn).col(a);
  return out;
}

Eigen::VectorXcd trace_function(const SpinChainConfig& cfg, const CartanPoint& q) {
  if (q.angles.size() != 1) throw std::invalid_argument("trace_function: su(2) expects rank 1");
  std::vector<su2::Matrix2cd> g(cfg.N(), su2::Matrix2cd::Identity());
  g.back() = su2::torus(q.angles[0]);
  return trace_function_group(cfg, g);
}

Eigen::VectorXcd normalized_trace(const SpinChainConfig& cfg, const CartanPoint& q) {
  double t = q.angles.at(0);
  complexd delta(0, 2 * std::sin(t));
  if (std::abs(delta) < 1e-12)
    throw SingularityError("normalized_trace: singular torus point");
  return delta * trace_function(cfg, q);
}

double zero_weight_residual(const std::vector<int>& mu, const Eigen::VectorXcd& v) {
  const int N = (int)mu.size();
  double res = 0;
  for (long idx = 0; idx < v.size(); ++idx) {
    long rem = idx;
    int wt = 0;
    for (int i = N - 1; i >= 0; --i) {
      int d = mu[i] + 1;
      int k = int(rem % d);
      rem /= d;
      wt += mu[i] - 2 * k;
    }
    if (wt != 0) res = std::max(res, std::abs(v(idx)));
  }
  return res;
}

complexd trace_orthogonality(const SpinChainConfig& cfg1, const SpinChainConfig& cfg2,
                             int resolution) {
  if (cfg1.mu != cfg2.mu)
    throw std::invalid_argument("trace_orthogonality: spin colors must match");
  if (resolution < 8) throw std::invalid_argument("trace_orthogonality: resolution too coarse");
  complexd s = 0;
  for (int k = 0; k < resolution; ++k) {
    double t = 2 * std::numbers::pi * k / resolution;
    Eigen::VectorXcd p1 = trace_function(cfg1, CartanPoint::su2(t));
    Eigen::VectorXcd p2 = trace_function(cfg2, CartanPoint::su2(t));
    s += p2.dot(p1) * 4 * std::sin(t) * std::sin(t);  // .dot conjugates the left factor
  }
  return s / double(resolution) / 2.0;  // trapezoid, |W| = 2
}

}  // namespace ym2d
