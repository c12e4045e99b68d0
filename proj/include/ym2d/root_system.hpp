#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace ym2d {

using complexd = std::complex<double>;

/// Dominant integral weight in the fundamental-weight basis.
struct HighestWeight {
  std::vector<int> coords;

  HighestWeight() = default;
  explicit HighestWeight(std::vector<int> c) : coords(std::move(c)) {
    for (int x : coords)
      if (x < 0) throw std::invalid_argument("HighestWeight: negative coordinate");
  }

  bool zero() const {
    for (int x : coords)
      if (x != 0) return false;
    return true;
  }
  auto operator<=>(const HighestWeight&) const = default;
};

/// Point q on the maximal torus, h = exp(i q.H).  `angles` are coordinates in
/// the simple-coroot basis, so that (mu, q) = sum_k mu_k * angles_k for a
/// weight mu in fundamental-weight coordinates.  For SU(2) a single angle
/// theta gives h = diag(e^{i theta}, e^{-i theta}).
struct CartanPoint {
  std::vector<double> angles;

  CartanPoint() = default;
  explicit CartanPoint(std::vector<double> a) : angles(std::move(a)) {}
  static CartanPoint su2(double theta) { return CartanPoint({theta}); }
};

/// Weight multiplicity table of one irreducible module.
struct WeightSystem {
  std::map<std::vector<int>, long long> entries;  // weight (fw coords) -> multiplicity

  long long total() const {
    long long t = 0;
    for (auto& [w, m] : entries) t += m;
    return t;
  }
  long long multiplicity(const std::vector<int>& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
  }
};

struct WeylElement {
  Eigen::MatrixXi mat;  // action on fundamental-weight coordinates
  int det;              // (-1)^length
};

/// Root-system data for type A_{n-1} (the group SU(n)), in the normalization
/// (alpha, alpha) = 2 for all roots.  With this choice c2(lambda) =
/// (lambda, lambda + 2 rho) is rational with denominator n; any Killing-form
/// rescaling is absorbed into the area parameter of the heat kernels.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> su(int n);

  int rank() const { return rank_; }
  int n() const { return n_; }

  const Eigen::MatrixXi& cartan_matrix() const { return cartan_; }
  const Eigen::MatrixXd& bilinear_form() const { return gram_; }
  const std::vector<Eigen::VectorXd>& simple_roots() const { return simple_roots_amb_; }
  const std::vector<Eigen::VectorXd>& fundamental_weights() const { return fund_weights_amb_; }
  const HighestWeight& rho() const { return rho_; }
  long weyl_order() const { return (long)weyl_.size(); }
  const std::vector<WeylElement>& weyl_elements() const { return weyl_; }
  const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }

  /// n * (x, y), exact, for vectors in fundamental-weight coordinates.
  long long ip_scaled(const std::vector<int>& x, const std::vector<int>& y) const;
  double inner(const std::vector<int>& x, const std::vector<int>& y) const {
    return double(ip_scaled(x, y)) / n_;
  }
  double rho_norm2() const { return inner(rho_.coords, rho_.coords); }

  double casimir2(const HighestWeight& lam) const;
  long long weyl_dim(const HighestWeight& lam) const;
  std::vector<HighestWeight> dominant_weights_below(double casimir_cutoff) const;
  const WeightSystem& weight_system(const HighestWeight& lam) const;

  complexd character(const HighestWeight& lam, const CartanPoint& q) const;
  /// Weyl quotient form; valid only at regular q. Kept as a cross-check.
  complexd character_quotient(const HighestWeight& lam, const CartanPoint& q) const;
  complexd weyl_denominator(const CartanPoint& q) const;

  /// (mu, q) for a weight in fw coordinates.
  double pair(const std::vector<int>& weight, const CartanPoint& q) const;
  /// Columns are angle-coordinate directions of an orthonormal basis of the
  /// Cartan subalgebra; second derivatives along them sum to the Laplacian.
  const Eigen::MatrixXd& orthonormal_frame() const { return frame_; }
  /// min over roots of the distance of (alpha, q) from 2 pi Z.
  double regularity_margin(const CartanPoint& q) const;

  /// Bring to the dominant chamber by simple reflections; *det gets the sign.
  std::vector<int> to_dominant(std::vector<int> v, int* det = nullptr) const;
  /// Racah-Speiser reflection of a rho-shifted vector: makes v strictly
  /// dominant and returns false if v is fixed by a reflection (singular).
  bool rho_shifted_dominant(std::vector<int>& v, int& sign) const;
  std::vector<std::vector<int>> weyl_orbit(const std::vector<int>& dominant) const;
  /// Highest weight of the dual module, -w0(lambda).
  HighestWeight dual(const HighestWeight& lam) const;

 private:
  explicit RootSystem(int n);

  int n_, rank_;
  Eigen::MatrixXi cartan_;
  Eigen::MatrixXd gram_;                       // (omega_i, omega_j)
  std::vector<std::vector<long long>> gram_scaled_;  // n * gram, integral
  std::vector<Eigen::VectorXd> simple_roots_amb_, fund_weights_amb_;
  std::vector<std::vector<int>> pos_roots_;    // fw coordinates
  HighestWeight rho_;
  std::vector<WeylElement> weyl_;
  Eigen::MatrixXd frame_;

  mutable std::mutex cache_mutex_;
  mutable std::map<HighestWeight, WeightSystem> weight_cache_;
};

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sub(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> scale(int k, const std::vector<int>& a);

}  // namespace ym2d
