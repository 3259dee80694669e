#pragma once

#include <vector>

#include "chz/matrix_core.hpp"

namespace chz {

/// Uniformly sampled state history: states[i] is X(t[i]), t[i] = t[0] + i*h.
struct Trajectory {
  std::vector<double> t;
  std::vector<ComplexVector> states;
  double h = 0.0;

  std::size_t size() const { return t.size(); }
  std::size_t dim() const { return states.empty() ? 0 : states.front().size(); }
  /// Throws DimensionError when sizes, dimensions or spacing are inconsistent.
  void validate() const;
};

}  // namespace chz
