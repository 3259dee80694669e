#pragma once

#include <cstddef>
#include <vector>

namespace chz {

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(std::size_t points);

/// Composite rule: `panels` equal panels on [a, b], each with `rule`. Calls
/// visit(x, w) once per node.
template <class Visit>
void composite_gauss_legendre(const GaussLegendreRule& rule, double a, double b,
                              std::size_t panels, Visit&& visit) {
  const double width = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      visit(mid + 0.5 * width * rule.nodes[i], 0.5 * width * rule.weights[i]);
  }
}

}  // namespace chz
