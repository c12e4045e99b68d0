#include "ym2d/class_series.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace ym2d {

PointObservable PointObservable::times(const PointObservable& other) const {
  PointObservable out = *this;
  for (auto& [lam, v] : other.values) {
    auto it = out.values.find(lam);
    if (it == out.values.end())
      out.values[lam] = v;
    else
      it->second *= v;
  }
  return out;
}

void ClassSeries::set(const HighestWeight& lam, double v) {
  if (rs_->casimir2(lam) > cutoff_ + 1e-12)
    throw std::invalid_argument("ClassSeries::set: weight beyond cutoff");
  coeffs_[lam] = v;
}

complexd ClassSeries::evaluate(const CartanPoint& q) const {
  complexd s = 0;
  for (auto& [lam, f] : coeffs_) s += f * rs_->character(lam, q);
  return s;
}

std::string ClassSeries::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  for (int i = 0; i < rs_->rank(); ++i) os << "m" << i + 1 << ",";
  os << "coefficient\n";
  for (auto& [lam, f] : coeffs_) {
    for (int c : lam.coords) os << c << ",";
    os << f << "\n";
  }
  return os.str();
}

std::string ClassSeries::to_json() const {
  nlohmann::json j;
  j["group"] = "su" + std::to_string(rs_->n());
  j["cutoff"] = cutoff_;
  j["tail_bound"] = tail_bound_;
  auto& terms = j["terms"] = nlohmann::json::array();
  for (auto& [lam, f] : coeffs_) terms.push_back({{"weight", lam.coords}, {"coefficient", f}});
  return j.dump(2);
}

ClassSeries ClassSeries::from_json(std::shared_ptr<const RootSystem> rs, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ClassSeries out(rs, j.at("cutoff").get<double>());
  if (j.contains("tail_bound")) out.tail_bound_ = j["tail_bound"].get<double>();
  for (auto& t : j.at("terms"))
    out.coeffs_[HighestWeight(t.at("weight").get<std::vector<int>>())] =
        t.at("coefficient").get<double>();
  return out;
}

double su2_tail_bound(double area, double cutoff) {
  // Terms (m+1)^2 e^{-A c2(m)} = (2x+1) e^{-A x} at x = c2(m); consecutive x
  // gaps exceed 1, so the tail is below the first term plus the integral.
  const double A = area, L = cutoff;
  double first = (2 * L + 4) * std::exp(-A * L);
  double integral = std::exp(-A * L) * ((2 * L + 2) / A + 2 / (A * A));
  return first + integral;
}

ClassSeries disc_kernel(std::shared_ptr<const RootSystem> rs, double area, double cutoff) {
  return region_kernel(std::move(rs), area, 0, cutoff);
}

ClassSeries region_kernel(std::shared_ptr<const RootSystem> rs, double area, int genus,
                          double cutoff) {
  if (area <= 0) throw DivergentSeriesError("region_kernel: area must be positive");
  if (genus < 0) throw std::invalid_argument("region_kernel: negative genus");
  ClassSeries k(rs, cutoff);
  for (auto& lam : rs->dominant_weights_below(cutoff)) {
    double d = double(rs->weyl_dim(lam));
    k.coeffs_[lam] = std::pow(d, 1 - 2 * genus) * std::exp(-area * rs->casimir2(lam));
  }
  if (rs->n() == 2) k.tail_bound_ = su2_tail_bound(area, cutoff);
  return k;
}

ClassSeries glue(const ClassSeries& k1, const ClassSeries& k2) {
  if (k1.rs_.get() != k2.rs_.get() && k1.rs_->n() != k2.rs_->n())
    throw std::invalid_argument("glue: mismatched root systems");
  ClassSeries out(k1.rs_, std::min(k1.cutoff_, k2.cutoff_));
  for (auto& [lam, f] : k1.coeffs_) {
    auto it = k2.coeffs_.find(lam);
    if (it == k2.coeffs_.end()) continue;
    if (k1.rs_->casimir2(lam) > out.cutoff_ + 1e-12) continue;
    out.coeffs_[lam] = f * it->second / double(k1.rs_->weyl_dim(lam));
  }
  out.tail_bound_ = k1.tail_bound_ + k2.tail_bound_;
  return out;
}

ClassSeries insert_observable(const ClassSeries& k, const PointObservable& F) {
  ClassSeries out = k;
  for (auto& [lam, f] : out.coeffs_) f *= F.at(lam);
  return out;
}

}  // namespace ym2d
