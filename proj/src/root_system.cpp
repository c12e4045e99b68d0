#include "ym2d/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace ym2d {

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
std::vector<int> sub(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
std::vector<int> scale(int k, const std::vector<int>& a) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

RootSystem::RootSystem(int n) : n_(n), rank_(n - 1) {
  if (n < 2 || n > 9) throw std::invalid_argument("RootSystem: su(n) supported for 2 <= n <= 9");
  const int r = rank_;

  cartan_ = Eigen::MatrixXi::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    cartan_(i, i) = 2;
    if (i + 1 < r) cartan_(i, i + 1) = cartan_(i + 1, i) = -1;
  }

  // Gram of fundamental weights: (omega_i, omega_j) = min(i,j) - i j / n (1-based).
  gram_ = Eigen::MatrixXd(r, r);
  gram_scaled_.assign(r, std::vector<long long>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long long s = (long long)n * std::min(i + 1, j + 1) - (long long)(i + 1) * (j + 1);
      gram_scaled_[i][j] = s;
      gram_(i, j) = double(s) / n;
    }

  // Ambient realization in R^n: alpha_i = e_i - e_{i+1}.
  for (int i = 0; i < r; ++i) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
    a(i) = 1.0;
    a(i + 1) = -1.0;
    simple_roots_amb_.push_back(a);
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    for (int k = 0; k <= i; ++k) w(k) = 1.0;
    w.array() -= double(i + 1) / n;
    fund_weights_amb_.push_back(w);
  }

  // Positive roots alpha_i + ... + alpha_{j-1} in fw coordinates.
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      std::vector<int> root(r, 0);
      for (int k = i; k <= j; ++k)
        for (int l = 0; l < r; ++l) root[l] += cartan_(l, k);
      pos_roots_.push_back(root);
    }

  rho_ = HighestWeight(std::vector<int>(r, 1));

  // Weyl group closure over simple reflections acting on fw coordinates.
  std::vector<Eigen::MatrixXi> gens;
  for (int i = 0; i < r; ++i) {
    Eigen::MatrixXi s = Eigen::MatrixXi::Identity(r, r);
    for (int k = 0; k < r; ++k) s(k, i) -= cartan_(k, i);
    gens.push_back(s);
  }
  std::set<std::vector<int>> seen;
  auto key = [r](const Eigen::MatrixXi& m) {
    std::vector<int> k(r * r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) k[i * r + j] = m(i, j);
    return k;
  };
  std::vector<WeylElement> frontier{{Eigen::MatrixXi::Identity(r, r), 1}};
  seen.insert(key(frontier[0].mat));
  weyl_ = frontier;
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (auto& w : frontier)
      for (auto& s : gens) {
        WeylElement e{s * w.mat, -w.det};
        if (seen.insert(key(e.mat)).second) {
          weyl_.push_back(e);
          next.push_back(e);
        }
      }
    frontier = std::move(next);
  }

  // Orthonormal frame in angle coordinates: columns u with u^T C u' = delta.
  Eigen::MatrixXd C = cartan_.cast<double>();
  Eigen::LLT<Eigen::MatrixXd> llt(C);
  frame_ = llt.matrixL().transpose().toDenseMatrix().inverse();
}

std::shared_ptr<const RootSystem> RootSystem::su(int n) {
  return std::shared_ptr<const RootSystem>(new RootSystem(n));
}

long long RootSystem::ip_scaled(const std::vector<int>& x, const std::vector<int>& y) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += gram_scaled_[i][j] * (long long)x[i] * y[j];
  return s;
}

double RootSystem::casimir2(const HighestWeight& lam) const {
  auto lam2rho = add(lam.coords, scale(2, rho_.coords));
  return double(ip_scaled(lam.coords, lam2rho)) / n_;
}

long long RootSystem::weyl_dim(const HighestWeight& lam) const {
  auto lr = add(lam.coords, rho_.coords);
  long double num = 1.0L, den = 1.0L;
  for (auto& a : pos_roots_) {
    num *= (long double)ip_scaled(lr, a);
    den *= (long double)ip_scaled(rho_.coords, a);
  }
  return (long long)llroundl(num / den);
}

std::vector<HighestWeight> RootSystem::dominant_weights_below(double cutoff) const {
  if (cutoff <= 0) throw std::invalid_argument("dominant_weights_below: cutoff must be > 0");
  // Per-coordinate bound: c2 is increasing in each coordinate, so any weight
  // with m_k omega_k <= lambda coordinate-wise has c2(m_k omega_k) <= c2(lambda).
  std::vector<int> bound(rank_);
  for (int k = 0; k < rank_; ++k) {
    int m = 0;
    for (;;) {
      std::vector<int> w(rank_, 0);
      w[k] = m + 1;
      if (casimir2(HighestWeight(w)) > cutoff) break;
      ++m;
      if (m > 100000) throw std::runtime_error("dominant_weights_below: cutoff too large");
    }
    bound[k] = m;
  }
  std::vector<HighestWeight> out;
  std::vector<int> cur(rank_, 0);
  // box scan
  for (;;) {
    HighestWeight hw(cur);
    if (casimir2(hw) <= cutoff) out.push_back(hw);
    int k = rank_ - 1;
    while (k >= 0) {
      if (++cur[k] <= bound[k]) break;
      cur[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end(), [this](const HighestWeight& a, const HighestWeight& b) {
    double ca = casimir2(a), cb = casimir2(b);
    if (ca != cb) return ca < cb;
    return a.coords < b.coords;
  });
  return out;
}

std::vector<int> RootSystem::to_dominant(std::vector<int> v, int* det) const {
  int sign = 1;
  for (;;) {
    int i = -1;
    for (int k = 0; k < rank_; ++k)
      if (v[k] < 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    int vi = v[i];
    for (int k = 0; k < rank_; ++k) v[k] -= vi * cartan_(k, i);
    sign = -sign;
  }
  if (det) *det = sign;
  return v;
}

bool RootSystem::rho_shifted_dominant(std::vector<int>& v, int& sign) const {
  sign = 1;
  for (;;) {
    int i = -1;
    for (int k = 0; k < rank_; ++k) {
      if (v[k] == 0) return false;  // fixed by s_k: singular
      if (v[k] < 0 && i < 0) i = k;
    }
    if (i < 0) return true;
    int vi = v[i];
    for (int k = 0; k < rank_; ++k) v[k] -= vi * cartan_(k, i);
    sign = -sign;
  }
}

std::vector<std::vector<int>> RootSystem::weyl_orbit(const std::vector<int>& dom) const {
  std::set<std::vector<int>> seen{dom};
  std::vector<std::vector<int>> frontier{dom}, out{dom};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& v : frontier)
      for (int i = 0; i < rank_; ++i) {
        std::vector<int> w = v;
        int vi = w[i];
        for (int k = 0; k < rank_; ++k) w[k] -= vi * cartan_(k, i);
        if (seen.insert(w).second) {
          out.push_back(w);
          next.push_back(w);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

HighestWeight RootSystem::dual(const HighestWeight& lam) const {
  return HighestWeight(to_dominant(scale(-1, lam.coords)));
}

const WeightSystem& RootSystem::weight_system(const HighestWeight& lam) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = weight_cache_.find(lam);
  if (it != weight_cache_.end()) return it->second;

  // Dominant weights mu <= lam: c2-bounded candidates with lam - mu in the
  // positive root lattice (integral, non-negative in the simple-root basis).
  auto in_root_lattice_nonneg = [this](const std::vector<int>& d) {
    // Solve C x = d over rationals; for type A, x = C^{-1} d = (gram) d.
    for (int i = 0; i < rank_; ++i) {
      long long num = 0;
      for (int j = 0; j < rank_; ++j) num += gram_scaled_[i][j] * (long long)d[j];
      if (num % n_ != 0 || num < 0) return false;
    }
    return true;
  };

  double c2lam = casimir2(lam);
  std::vector<HighestWeight> doms;
  for (auto& mu : dominant_weights_below(c2lam + 1e-9))
    if (in_root_lattice_nonneg(sub(lam.coords, mu.coords))) doms.push_back(mu);

  auto lr = add(lam.coords, rho_.coords);
  long long nlr = ip_scaled(lr, lr);
  // Sort by decreasing |mu+rho|^2 so higher weights are known first.
  std::sort(doms.begin(), doms.end(), [this](const HighestWeight& a, const HighestWeight& b) {
    auto ar = add(a.coords, rho_.coords), br = add(b.coords, rho_.coords);
    return ip_scaled(ar, ar) > ip_scaled(br, br);
  });

  std::map<std::vector<int>, long long> dom_mult;
  for (auto& mu : doms) {
    if (mu == lam) {
      dom_mult[mu.coords] = 1;
      continue;
    }
    auto mr = add(mu.coords, rho_.coords);
    long long denom = nlr - ip_scaled(mr, mr);  // n * (|lam+rho|^2 - |mu+rho|^2) > 0
    long long num = 0;
    for (auto& a : pos_roots_) {
      for (int k = 1;; ++k) {
        auto w = add(mu.coords, scale(k, a));
        auto wd = to_dominant(w);
        auto jt = dom_mult.find(wd);
        if (jt == dom_mult.end()) break;  // outside the weight polytope
        num += jt->second * ip_scaled(w, a);
      }
    }
    dom_mult[mu.coords] = 2 * num / denom;
  }

  WeightSystem ws;
  for (auto& [mu, m] : dom_mult) {
    if (m == 0) continue;
    for (auto& w : weyl_orbit(mu)) ws.entries[w] = m;
  }
  return weight_cache_.emplace(lam, std::move(ws)).first->second;
}

double RootSystem::pair(const std::vector<int>& weight, const CartanPoint& q) const {
  if ((int)q.angles.size() != rank_) throw std::invalid_argument("CartanPoint: wrong rank");
  double s = 0;
  for (int i = 0; i < rank_; ++i) s += weight[i] * q.angles[i];
  return s;
}

complexd RootSystem::character(const HighestWeight& lam, const CartanPoint& q) const {
  const WeightSystem& ws = weight_system(lam);
  complexd s = 0;
  for (auto& [w, m] : ws.entries) s += double(m) * std::exp(complexd(0, pair(w, q)));
  return s;
}

complexd RootSystem::weyl_denominator(const CartanPoint& q) const {
  complexd p = 1;
  for (auto& a : pos_roots_) {
    double x = pair(a, q) / 2;
    p *= complexd(0, 2 * std::sin(x));  // e^{ix} - e^{-ix}
  }
  return p;
}

complexd RootSystem::character_quotient(const HighestWeight& lam, const CartanPoint& q) const {
  auto lr = add(lam.coords, rho_.coords);
  complexd num = 0;
  for (auto& w : weyl_) {
    std::vector<int> v(rank_, 0);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) v[i] += w.mat(i, j) * lr[j];
    num += double(w.det) * std::exp(complexd(0, pair(v, q)));
  }
  return num / weyl_denominator(q);
}

double RootSystem::regularity_margin(const CartanPoint& q) const {
  constexpr double twopi = 2 * std::numbers::pi;
  double m = std::numeric_limits<double>::infinity();
  for (auto& a : pos_roots_) {
    double x = pair(a, q);
    double d = std::abs(x - twopi * std::round(x / twopi));
    m = std::min(m, d);
  }
  return m;
}

}  // namespace ym2d
