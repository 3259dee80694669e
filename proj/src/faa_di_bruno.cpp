#include "chz/faa_di_bruno.hpp"

#include <string>

#include "chz/errors.hpp"

namespace chz {

namespace {

void enumerate(std::size_t part, std::size_t remaining, std::vector<std::size_t>& current,
               std::vector<std::vector<std::size_t>>& out) {
  const std::size_t k = current.size();
  if (part > k) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (std::size_t count = remaining / part + 1; count-- > 0;) {
    current[part - 1] = count;
    enumerate(part + 1, remaining - count * part, current, out);
  }
  current[part - 1] = 0;
}

double factorial(std::size_t m) {
  double f = 1.0;
  for (std::size_t i = 2; i <= m; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

std::vector<std::vector<std::size_t>> faa_di_bruno_tuples(std::size_t k) {
  if (k < 1) throw DomainError("faa_di_bruno_tuples: k must be >= 1");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current(k, 0);
  enumerate(1, k, current, out);
  return out;
}

Complex faa_di_bruno_derivative(std::span<const Complex> f_derivs,
                                std::span<const Complex> x_derivs, std::size_t k) {
  if (k < 1) throw DomainError("faa_di_bruno_derivative: k must be >= 1");
  if (f_derivs.size() < k || x_derivs.size() < k)
    throw DomainError("faa_di_bruno_derivative: order " + std::to_string(k) +
                      " needs " + std::to_string(k) + " outer and inner derivatives");
  Complex total = 0.0;
  const double k_factorial = factorial(k);
  for (const auto& tuple : faa_di_bruno_tuples(k)) {
    std::size_t outer_order = 0;
    double weight = k_factorial;
    Complex product = 1.0;
    for (std::size_t j = 1; j <= k; ++j) {
      const std::size_t mult = tuple[j - 1];
      if (mult == 0) continue;
      outer_order += mult;
      weight /= factorial(mult);
      const Complex scaled = x_derivs[j - 1] / factorial(j);
      for (std::size_t r = 0; r < mult; ++r) product *= scaled;
    }
    total += weight * f_derivs[outer_order - 1] * product;
  }
  return total;
}

}  // namespace chz
