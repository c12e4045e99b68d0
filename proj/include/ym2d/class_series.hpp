#pragma once

#include <string>

#include "ym2d/errors.hpp"
#include "ym2d/root_system.hpp"

namespace ym2d {

/// Per-irrep multiplier F_lambda inserted into a region (default 1 off-map).
struct PointObservable {
  std::map<HighestWeight, double> values;

  double at(const HighestWeight& lam) const {
    auto it = values.find(lam);
    return it == values.end() ? 1.0 : it->second;
  }
  PointObservable times(const PointObservable& other) const;
};

/// Truncated class-function series Z(g) = sum_lambda f_lambda chi_lambda(g).
/// Kernels are stored spectrally; sampling exists only for oracle comparison.
class ClassSeries {
 public:
  ClassSeries(std::shared_ptr<const RootSystem> rs, double cutoff)
      : rs_(std::move(rs)), cutoff_(cutoff) {}

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  double cutoff() const { return cutoff_; }
  double tail_bound() const { return tail_bound_; }

  const std::map<HighestWeight, double>& coefficients() const { return coeffs_; }
  double at(const HighestWeight& lam) const {
    auto it = coeffs_.find(lam);
    return it == coeffs_.end() ? 0.0 : it->second;
  }
  void set(const HighestWeight& lam, double v);

  complexd evaluate(const CartanPoint& q) const;

  std::string to_csv() const;
  std::string to_json() const;
  static ClassSeries from_json(std::shared_ptr<const RootSystem> rs, const std::string& json);

  friend ClassSeries disc_kernel(std::shared_ptr<const RootSystem> rs, double area, double cutoff);
  friend ClassSeries region_kernel(std::shared_ptr<const RootSystem> rs, double area, int genus,
                                   double cutoff);
  friend ClassSeries glue(const ClassSeries& k1, const ClassSeries& k2);
  friend ClassSeries insert_observable(const ClassSeries& k, const PointObservable& F);

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::map<HighestWeight, double> coeffs_;
  double cutoff_;
  double tail_bound_ = 0.0;
};

/// f_lambda = dim e^{-A c2}; boundary state of the disc of area A.
ClassSeries disc_kernel(std::shared_ptr<const RootSystem> rs, double area, double cutoff);
/// f_lambda = dim^{1-2g} e^{-A c2}.
ClassSeries region_kernel(std::shared_ptr<const RootSystem> rs, double area, int genus,
                          double cutoff);
/// Contraction over the shared boundary: c_lambda = f_lambda g_lambda / dim.
ClassSeries glue(const ClassSeries& k1, const ClassSeries& k2);
ClassSeries insert_observable(const ClassSeries& k, const PointObservable& F);

/// Upper bound on the discarded SU(2) sphere-sum tail sum_{c2 > cutoff} (2x+2) e^{-A x}.
double su2_tail_bound(double area, double cutoff);

}  // namespace ym2d
