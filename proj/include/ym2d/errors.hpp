#pragma once

#include <stdexcept>

namespace ym2d {

struct AdmissibilityError : std::domain_error {
  using std::domain_error::domain_error;
};

struct SingularityError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivergentSeriesError : std::domain_error {
  using std::domain_error::domain_error;
};

struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ym2d
