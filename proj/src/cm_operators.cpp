#include "ym2d/cm_operators.hpp"

#include <cmath>
#include <numbers>

namespace ym2d {

namespace {
constexpr double sqrt2 = std::numbers::sqrt2;

double c2_su2(int m) { return 0.5 * m * (m + 2); }

void require_stencil_regular(double t, double fd_step) {
  // the stencil reaches t +- fd_step/sqrt2; keep 2t away from 2 pi Z
  double margin = 2 * fd_step;
  double x = 2 * t;
  double d = std::abs(x - 2 * std::numbers::pi * std::round(x / (2 * std::numbers::pi)));
  if (d < margin) throw SingularityError("radial operator: stencil hits a singular point");
}
}  // namespace

RadialOperatorResult apply_cm_hamiltonian(const SpinChainConfig& cfg, const CartanPoint& q,
                                          double fd_step) {
  double t = q.angles.at(0);
  if (fd_step <= 0) throw std::invalid_argument("apply_cm_hamiltonian: fd_step must be > 0");
  require_stencil_regular(t, fd_step);

  auto F = [&](double s) { return normalized_trace(cfg, CartanPoint::su2(s)); };
  const double su = fd_step / sqrt2;  // step along the orthonormal Cartan direction
  Eigen::VectorXcd F0 = F(t);
  Eigen::VectorXcd lap = -(F(t + su) - 2 * F0 + F(t - su)) / (fd_step * fd_step);

  Eigen::MatrixXcd Et = Eigen::MatrixXcd::Zero(F0.size(), F0.size()), Ft = Et;
  for (int i = 0; i < cfg.N(); ++i) {
    Et += embed_chain(su2::gen_e(cfg.mu[i]), i, cfg.mu);
    Ft += embed_chain(su2::gen_f(cfg.mu[i]), i, cfg.mu);
  }
  const double s2 = std::sin(t) * std::sin(t);  // (1-h_a)(1-h_{-a}) = 4 sin^2 t
  Eigen::VectorXcd pot = (2.0 / (4.0 * s2)) * (Ft * (Et * F0));

  RadialOperatorResult out;
  out.value = lap + pot - 0.5 * F0;  // |rho|^2 = 1/2 for su(2)
  out.func = F0;
  out.fd_step = fd_step;
  out.eigenvalue = c2_su2(cfg.nu.back());
  return out;
}

RadialOperatorResult apply_kzb(const SpinChainConfig& cfg, int i, const CartanPoint& q,
                               double fd_step, KzbVariant variant) {
  const int N = cfg.N();
  if (i < 1 || i > N - 1) throw std::invalid_argument("apply_kzb: need 1 <= i <= N-1");
  double t = q.angles.at(0);
  require_stencil_regular(t, fd_step);

  const int p = i;  // 0-based tensor position i+1
  const bool normalized = variant == KzbVariant::Normalized;
  auto F = [&](double s) {
    return normalized ? normalized_trace(cfg, CartanPoint::su2(s))
                      : trace_function(cfg, CartanPoint::su2(s));
  };
  const double su = fd_step / sqrt2;
  Eigen::VectorXcd F0 = F(t);
  Eigen::VectorXcd dF = (F(t + su) - F(t - su)) / (2 * fd_step);

  // (h^{(p)}, d/d lambda) = -i pi_p(H/sqrt2) d_u
  Eigen::MatrixXcd Hp = embed_chain(su2::gen_h(cfg.mu[p]) / sqrt2, p, cfg.mu);
  Eigen::VectorXcd value = complexd(0, -1) * (Hp * dF);

  for (int k = 0; k < N; ++k) {
    if (k < p)
      value -= embed_pair(r_pair(cfg.mu[k], cfg.mu[p], t), k, p, cfg.mu) * F0;
    else if (k > p)
      value += embed_pair(r_pair(cfg.mu[p], cfg.mu[k], t), p, k, cfg.mu) * F0;
  }
  if (!normalized) {
    // + d(lambda)_p, d = (1/2) (xi+xi^-1)/(xi-xi^-1) H_alpha = -(i/2) cot(t) H
    complexd coeff = complexd(0, -0.5) * (std::cos(t) / std::sin(t));
    value += coeff * (embed_chain(su2::gen_h(cfg.mu[p]), p, cfg.mu) * F0);
  }

  RadialOperatorResult out;
  out.value = std::move(value);
  out.func = std::move(F0);
  out.fd_step = fd_step;
  out.eigenvalue = 0.5 * (c2_su2(cfg.nu[i]) - c2_su2(cfg.nu[i - 1]));
  return out;
}

double intertwiner_casimir_identity(const Intertwiner& b, const CartanPoint& q) {
  double t = q.angles.at(0);
  if (std::abs(std::sin(t)) < 1e-12)
    throw SingularityError("intertwiner_casimir_identity: singular torus point");
  Eigen::MatrixXcd r12 = r_pair(b.nup, b.mu, t);
  Eigen::MatrixXcd r21 = flip(b.nup, b.mu) * r_pair(b.mu, b.nup, t) * flip(b.mu, b.nup);
  double scalar = 0.5 * (c2_su2(b.nup) + c2_su2(b.mu) - c2_su2(b.nu));
  return ((r12 + r21) * b.mat - scalar * b.mat).cwiseAbs().maxCoeff();
}

double delta_lemma_residual(const RootSystem& rs, const CartanPoint& q, double fd_step) {
  const int r = rs.rank();
  if ((int)q.angles.size() != r) throw std::invalid_argument("delta_lemma_residual: wrong rank");
  if (rs.regularity_margin(q) < 4 * fd_step)
    throw SingularityError("delta_lemma_residual: stencil too close to a root hyperplane");

  auto dinv = [&](const CartanPoint& p) { return 1.0 / rs.weyl_denominator(p); };
  const Eigen::MatrixXd& U = rs.orthonormal_frame();
  auto shift = [&](const CartanPoint& p, int s, double eps) {
    CartanPoint out = p;
    for (int k = 0; k < r; ++k) out.angles[k] += eps * U(k, s);
    return out;
  };

  // Lap_lambda = -Lap_q by central differences along the orthonormal frame
  complexd lap = 0;
  for (int s = 0; s < r; ++s)
    lap -= (dinv(shift(q, s, fd_step)) - 2.0 * dinv(q) + dinv(shift(q, s, -fd_step))) /
           (fd_step * fd_step);

  // D = sum_{alpha>0} (xi_a + xi_{-a})/(xi_a - xi_{-a}) (alpha, d/d lambda)
  complexd Dterm = 0;
  for (auto& alpha : rs.positive_roots()) {
    double x = rs.pair(alpha, q) / 2;
    complexd ratio = std::cos(x) / complexd(0, std::sin(x));
    // (alpha, d/d lambda) = -i sum_s (alpha, u_s) d_{u_s}
    complexd dir = 0;
    for (int s = 0; s < r; ++s) {
      double as = 0;
      for (int k = 0; k < r; ++k) as += alpha[k] * U(k, s);
      dir += as * (dinv(shift(q, s, fd_step)) - dinv(shift(q, s, -fd_step))) / (2 * fd_step);
    }
    Dterm += ratio * complexd(0, -1) * dir;
  }

  complexd residual = lap + rs.rho_norm2() * dinv(q) + Dterm;
  return std::abs(residual);
}

Propagator Propagator::make(const std::vector<int>& mu, const std::vector<double>& areas,
                            double cutoff) {
  if (mu.size() != areas.size() || mu.empty())
    throw std::invalid_argument("Propagator: need one area per spin");
  for (double a : areas)
    if (a <= 0) throw DivergentSeriesError("Propagator: areas must be positive");
  Propagator u;
  u.mu = mu;
  u.cutoff = cutoff;
  const int N = (int)mu.size();
  int mmax = 0;
  while (c2_su2(mmax + 1) <= cutoff) ++mmax;
  std::vector<int> nu(N, 0);
  for (;;) {
    if (SpinChainConfig::admissible(mu, nu)) {
      double s = 0;
      for (int j = 0; j < N; ++j) s += c2_su2(nu[j]) * areas[j];
      u.sector_coeff[nu] = std::exp(-s);
    }
    int k = N - 1;
    while (k >= 0 && ++nu[k] > mmax) nu[k--] = 0;
    if (k < 0) break;
  }
  return u;
}

Propagator compose_propagators(const Propagator& a, const Propagator& b) {
  if (a.mu != b.mu) throw std::invalid_argument("compose_propagators: sector mismatch");
  Propagator out;
  out.mu = a.mu;
  out.cutoff = std::min(a.cutoff, b.cutoff);
  for (auto& [nu, ca] : a.sector_coeff) {
    auto it = b.sector_coeff.find(nu);
    if (it != b.sector_coeff.end()) out.sector_coeff[nu] = ca * it->second;
  }
  return out;
}

}  // namespace ym2d
