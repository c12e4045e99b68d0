#pragma once

#include <string>
#include <vector>

namespace ym2d {

/// Run configuration shared by the CLI and the verification suites.
struct RunConfig {
  int group_n = 2;          // su(n)
  double casimir_cutoff = 20.0;
  int resolution = 16;      // quadrature points per dimension
  double fd_step = 1e-3;
  double tolerance = 0.0;   // 0 = per-suite default
  unsigned seed = 20240801;
  int threads = 2;
  std::string format = "csv";  // csv | json

  void check() const;
  static RunConfig from_json(const std::string& text);
  std::string to_json() const;
};

struct VerifyCheck {
  std::string name;
  std::string config;
  double residual = 0;
  double tolerance = 0;
  double fd_step = 0;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;
  bool pass = true;

  void add(VerifyCheck c) {
    pass = pass && c.pass;
    checks.push_back(std::move(c));
  }
  std::string to_json() const;
};

/// Suites: rmatrix, eigen, kzb, haar, gluing, orthogonality, all.
VerifyReport run_suite(const std::string& suite, const RunConfig& cfg);

/// Regular torus angles for SU(2), rejection-sampled so that every stencil
/// point keeps (alpha, q) at distance >= 10 fd_step from 2 pi Z.
std::vector<double> sample_regular_angles(int count, double fd_step, unsigned seed);

}  // namespace ym2d
