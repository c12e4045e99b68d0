#include "ym2d/su2.hpp"

#include <cmath>
#include <vector>

namespace ym2d::su2 {

using complexd = std::complex<double>;

MatrixXcd gen_e(int m) {
  MatrixXcd e = MatrixXcd::Zero(m + 1, m + 1);
  for (int k = 1; k <= m; ++k) e(k - 1, k) = std::sqrt(double(k) * (m - k + 1));
  return e;
}

MatrixXcd gen_f(int m) {
  MatrixXcd f = MatrixXcd::Zero(m + 1, m + 1);
  for (int k = 0; k < m; ++k) f(k + 1, k) = std::sqrt(double(k + 1) * (m - k));
  return f;
}

MatrixXcd gen_h(int m) {
  MatrixXcd h = MatrixXcd::Zero(m + 1, m + 1);
  for (int k = 0; k <= m; ++k) h(k, k) = m - 2 * k;
  return h;
}

namespace {
double binom(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

MatrixXcd rep(int m, const Matrix2cd& g) {
  const complexd a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  MatrixXcd P = MatrixXcd::Zero(m + 1, m + 1);
  // powers
  std::vector<complexd> pa(m + 1), pb(m + 1), pc(m + 1), pd(m + 1);
  pa[0] = pb[0] = pc[0] = pd[0] = 1.0;
  for (int i = 1; i <= m; ++i) {
    pa[i] = pa[i - 1] * a;
    pb[i] = pb[i - 1] * b;
    pc[i] = pc[i - 1] * c;
    pd[i] = pd[i - 1] * d;
  }
  for (int k = 0; k <= m; ++k)
    for (int j = 0; j <= m; ++j) {
      complexd s = 0;
      int plo = std::max(0, j - k), phi = std::min(m - k, j);
      for (int p = plo; p <= phi; ++p) {
        int q = j - p;
        s += binom(m - k, p) * binom(k, q) * pa[m - k - p] * pc[p] * pb[k - q] * pd[q];
      }
      P(j, k) = std::sqrt(binom(m, k) / binom(m, j)) * s;
    }
  return P;
}

MatrixXcd rep_torus(int m, double t) {
  MatrixXcd P = MatrixXcd::Zero(m + 1, m + 1);
  for (int k = 0; k <= m; ++k) P(k, k) = std::exp(complexd(0, (m - 2 * k) * t));
  return P;
}

Matrix2cd torus(double t) {
  Matrix2cd g;
  g << std::exp(complexd(0, t)), 0, 0, std::exp(complexd(0, -t));
  return g;
}

Matrix2cd euler(double phi, double theta, double psi) {
  const double ch = std::cos(theta / 2), sh = std::sin(theta / 2);
  Matrix2cd g;
  g << std::exp(complexd(0, -(phi + psi) / 2)) * ch, -std::exp(complexd(0, -(phi - psi) / 2)) * sh,
      std::exp(complexd(0, (phi - psi) / 2)) * sh, std::exp(complexd(0, (phi + psi) / 2)) * ch;
  return g;
}

}  // namespace ym2d::su2
