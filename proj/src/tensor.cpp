#include "ym2d/tensor.hpp"

#include <Eigen/SVD>

#include <mutex>
#include <tuple>

namespace ym2d {

DecompositionTable tensor_decompose(const RootSystem& rs, const HighestWeight& lam,
                                    const HighestWeight& mu) {
  DecompositionTable table;
  std::map<std::vector<int>, long long> acc;
  const WeightSystem& ws = rs.weight_system(mu);
  auto lr = add(lam.coords, rs.rho().coords);
  for (auto& [tau, m] : ws.entries) {
    std::vector<int> v = add(lr, tau);
    int sign;
    if (!rs.rho_shifted_dominant(v, sign)) continue;
    acc[sub(v, rs.rho().coords)] += sign * m;
  }
  for (auto& [nu, m] : acc) {
    if (m == 0) continue;
    if (m < 0) throw std::runtime_error("tensor_decompose: negative multiplicity");
    table.entries[HighestWeight(nu)] = (int)m;
  }
  return table;
}

bool su2_admissible(int nu, int nup, int mu) {
  return nu >= std::abs(nup - mu) && nu <= nup + mu && (nu + nup + mu) % 2 == 0;
}

Intertwiner cg_intertwiner(int nu, int nup, int mu) {
  if (nu < 0 || nup < 0 || mu < 0) throw std::invalid_argument("cg_intertwiner: negative spin");
  if (!su2_admissible(nu, nup, mu))
    throw AdmissibilityError("cg_intertwiner: V_nu not contained in V_nup (x) V_mu");

  static std::mutex memo_mutex;
  static std::map<std::tuple<int, int, int>, Intertwiner> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({nu, nup, mu});
    if (it != memo.end()) return it->second;
  }
  const int dn = nu + 1, dp = nup + 1, dm = mu + 1, D = dp * dm;

  // Stack equivariance constraints (Delta(X) a - a X = 0) for X = e, f, h.
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(3 * D * dn, D * dn);
  auto put = [&](int block, const Eigen::MatrixXcd& L, const Eigen::MatrixXcd& Xn) {
    // constraint on vec(a) (row-major a[(p,q), c]):  L a - a Xn = 0
    for (int rc = 0; rc < D; ++rc)
      for (int cc = 0; cc < dn; ++cc) {
        int row = block * D * dn + rc * dn + cc;
        for (int k = 0; k < D; ++k) M(row, k * dn + cc) += L(rc, k);
        for (int k = 0; k < dn; ++k) M(row, rc * dn + k) -= Xn(k, cc);
      }
  };
  Eigen::MatrixXcd Im = Eigen::MatrixXcd::Identity(dm, dm), Ip = Eigen::MatrixXcd::Identity(dp, dp);
  auto kron = [](const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
    Eigen::MatrixXcd K(A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
      for (int j = 0; j < A.cols(); ++j) K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return K;
  };
  put(0, kron(su2::gen_e(nup), Im) + kron(Ip, su2::gen_e(mu)), su2::gen_e(nu));
  put(1, kron(su2::gen_f(nup), Im) + kron(Ip, su2::gen_f(mu)), su2::gen_f(nu));
  put(2, kron(su2::gen_h(nup), Im) + kron(Ip, su2::gen_h(mu)), su2::gen_h(nu));

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  int null_dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) < 1e-9 * sv(0)) ++null_dim;
  if (null_dim != 1)
    throw AdmissibilityError("cg_intertwiner: multiplicity != 1 in equivariance system");

  Eigen::VectorXcd v = svd.matrixV().col(D * dn - 1);
  Eigen::MatrixXcd a(D, dn);
  for (int rc = 0; rc < D; ++rc)
    for (int cc = 0; cc < dn; ++cc) a(rc, cc) = v(rc * dn + cc);

  // Schur normalization (a,a) = tr(a^dag a)/dn = 1.
  a *= std::sqrt(double(dn) / (a.adjoint() * a).trace().real());
  // Sign: highest-weight-to-highest-weight entry real positive.
  int k = (nup + mu - nu) / 2;
  complexd z = a(0 * dm + k, 0);
  if (std::abs(z) < 1e-12) throw std::runtime_error("cg_intertwiner: vanishing top entry");
  a *= std::conj(z) / std::abs(z);

  Intertwiner out{nu, nup, mu, std::move(a)};
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::make_tuple(nu, nup, mu), out).first->second;
}

complexd schur_pairing(const Intertwiner& a, const Intertwiner& b) {
  if (a.nu != b.nu || a.nup != b.nup || a.mu != b.mu)
    throw std::invalid_argument("schur_pairing: mismatched sectors");
  Eigen::MatrixXcd m = b.mat.adjoint() * a.mat;
  return m.trace() / double(a.nu + 1);
}

}  // namespace ym2d
