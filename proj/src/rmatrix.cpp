#include "ym2d/rmatrix.hpp"

#include <cmath>
#include <numbers>

namespace ym2d {

namespace {
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  Eigen::MatrixXcd K(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}
}  // namespace

Eigen::MatrixXcd embed_chain(const Eigen::MatrixXcd& X, int slot, const std::vector<int>& mu) {
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(1, 1);
  for (size_t j = 0; j < mu.size(); ++j) {
    int d = mu[j] + 1;
    M = kron(M, (int)j == slot ? X : Eigen::MatrixXcd::Identity(d, d));
  }
  return M;
}

Eigen::MatrixXcd embed_pair(const Eigen::MatrixXcd& P, int i, int k, const std::vector<int>& mu) {
  // P lives on V_{mu_i} (x) V_{mu_k}; expand entrywise.
  int D = 1;
  for (int m : mu) D *= m + 1;
  const int di = mu[i] + 1, dk = mu[k] + 1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(D, D);
  const int N = (int)mu.size();
  std::vector<int> dims(N);
  for (int j = 0; j < N; ++j) dims[j] = mu[j] + 1;
  std::vector<int> idx(N, 0);
  // iterate over all "spectator" index assignments once, filling blocks
  for (int row = 0; row < D; ++row) {
    // decode row
    int rem = row;
    for (int j = N - 1; j >= 0; --j) {
      idx[j] = rem % dims[j];
      rem /= dims[j];
    }
    int a = idx[i], b = idx[k];
    for (int a2 = 0; a2 < di; ++a2)
      for (int b2 = 0; b2 < dk; ++b2) {
        complexd v = P(a * dk + b, a2 * dk + b2);
        if (v == complexd(0, 0)) continue;
        // encode column with idx[i] = a2, idx[k] = b2
        int col = 0;
        for (int j = 0; j < N; ++j) {
          int c = (j == i) ? a2 : (j == k) ? b2 : idx[j];
          col = col * dims[j] + c;
        }
        out(row, col) += v;
      }
  }
  return out;
}

Eigen::MatrixXcd omega_pair(int m1, int m2) {
  return 0.5 * kron(su2::gen_h(m1), su2::gen_h(m2)) + kron(su2::gen_e(m1), su2::gen_f(m2)) +
         kron(su2::gen_f(m1), su2::gen_e(m2));
}

Eigen::MatrixXcd flip(int m1, int m2) {
  int d1 = m1 + 1, d2 = m2 + 1;
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(d1 * d2, d2 * d1);
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b) P(a * d2 + b, b * d1 + a) = 1;
  return P;
}

Eigen::MatrixXcd r_pair(int m1, int m2, double t) {
  complexd hp = std::exp(complexd(0, 2 * t));   // h_alpha
  complexd hm = std::exp(complexd(0, -2 * t));  // h_{-alpha}
  complexd cm = 1.0 / (1.0 - hm), cp = 1.0 / (1.0 - hp);
  return -0.25 * kron(su2::gen_h(m1), su2::gen_h(m2)) - cm * kron(su2::gen_f(m1), su2::gen_e(m2)) -
         cp * kron(su2::gen_e(m1), su2::gen_f(m2));
}

Eigen::MatrixXcd r_pair_dlambda(int m1, int m2, double t) {
  // d/d lambda_1 with lambda = i q and the orthonormal direction h_1 = H/sqrt2:
  // h_{+-alpha}(lambda) = e^{+-(alpha,lambda)}; along h_1, (alpha, h_1) = sqrt2.
  const double a1 = std::numbers::sqrt2;
  complexd hp = std::exp(complexd(0, 2 * t)), hm = std::exp(complexd(0, -2 * t));
  // d/ds [1/(1-h exp(+-a1 s))] at s=0 = +- a1 h / (1-h)^2
  complexd dcm = -a1 * hm / ((1.0 - hm) * (1.0 - hm));  // h_{-alpha} direction: -a1
  complexd dcp = a1 * hp / ((1.0 - hp) * (1.0 - hp));
  return -dcm * kron(su2::gen_f(m1), su2::gen_e(m2)) - dcp * kron(su2::gen_e(m1), su2::gen_f(m2));
}

DynamicalR felder_r(const CartanPoint& q, int i, int k, const std::vector<int>& mu) {
  if (q.angles.size() != 1) throw std::invalid_argument("felder_r: su(2) expects rank 1");
  double t = q.angles[0];
  if (std::abs(std::sin(t)) < 1e-12) throw SingularityError("felder_r: singular torus point");
  if (i == k || i < 0 || k < 0 || i >= (int)mu.size() || k >= (int)mu.size())
    throw std::invalid_argument("felder_r: bad acting pair");
  DynamicalR r;
  r.t = t;
  r.i = i;
  r.k = k;
  r.pair_matrix = r_pair(mu[i], mu[k], t);
  r.full_matrix = embed_pair(r.pair_matrix, i, k, mu);
  return r;
}

RMatrixChecks check_r_properties(int m1, int m2, int m3, double t) {
  RMatrixChecks out{};
  Eigen::MatrixXcd r12 = r_pair(m1, m2, t), rneg = r_pair(m1, m2, -t);
  Eigen::MatrixXcd P12 = flip(m1, m2);
  Eigen::MatrixXcd r21 = P12 * r_pair(m2, m1, t) * flip(m2, m1);

  out.antisymmetry = (rneg - r21).cwiseAbs().maxCoeff();
  out.omega_sum = (r12 + rneg + omega_pair(m1, m2)).cwiseAbs().maxCoeff();

  Eigen::MatrixXcd E2 = kron(Eigen::MatrixXcd::Identity(m1 + 1, m1 + 1), su2::rep_torus(m2, t));
  Eigen::MatrixXcd E2i = kron(Eigen::MatrixXcd::Identity(m1 + 1, m1 + 1), su2::rep_torus(m2, -t));
  Eigen::MatrixXcd hh = 0.5 * kron(su2::gen_h(m1), su2::gen_h(m2));
  out.conjugation = (E2i * r12 * E2 + hh + r21).cwiseAbs().maxCoeff();

  Eigen::MatrixXcd D =
      kron(su2::rep_torus(m1, 0.37), su2::rep_torus(m2, 0.37));
  out.torus_invariance = (D * r12 * D.adjoint() - r12).cwiseAbs().maxCoeff();

  // dynamical Yang-Baxter on V_{m1} (x) V_{m2} (x) V_{m3}:
  // [r12,r13] + [r12,r23] + [r13,r23]
  //   + (h_1)_1 d r23 - (h_1)_2 d r13 + (h_1)_3 d r12 = 0
  std::vector<int> mu{m1, m2, m3};
  auto R = [&](int i, int k) { return embed_pair(r_pair(mu[i], mu[k], t), i, k, mu); };
  auto dR = [&](int i, int k) { return embed_pair(r_pair_dlambda(mu[i], mu[k], t), i, k, mu); };
  auto H = [&](int i) { return embed_chain(su2::gen_h(mu[i]) / std::numbers::sqrt2, i, mu); };
  Eigen::MatrixXcd A12 = R(0, 1), A13 = R(0, 2), A23 = R(1, 2);
  Eigen::MatrixXcd cdybe = A12 * A13 - A13 * A12 + A12 * A23 - A23 * A12 + A13 * A23 - A23 * A13 +
                           H(0) * dR(1, 2) - H(1) * dR(0, 2) + H(2) * dR(0, 1);
  out.yang_baxter = cdybe.cwiseAbs().maxCoeff();
  return out;
}

}  // namespace ym2d
