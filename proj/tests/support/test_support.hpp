#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "chz/matrix_core.hpp"

namespace chz::testing {

/// Uniform sample from the closed complex unit disk.
inline Complex unit_disk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.0, 1.0), angle(0.0, 2.0 * M_PI);
  return std::polar(std::sqrt(radius(rng)), angle(rng));
}

inline ComplexMatrix random_disk_matrix(std::size_t n, std::mt19937_64& rng) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = unit_disk(rng);
  return m;
}

inline ComplexMatrix random_real_matrix(std::size_t n, std::mt19937_64& rng, double lo = -1.0,
                                        double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
  return m;
}

/// B Bᵀ + n·shift·I with B uniform in [-1,1]: symmetric positive definite.
inline ComplexMatrix random_spd(std::size_t n, std::mt19937_64& rng, double shift = 0.5) {
  const ComplexMatrix b = random_real_matrix(n, rng);
  ComplexMatrix s = mat_mul(b, transpose(b));
  for (std::size_t i = 0; i < n; ++i) s(i, i) += shift * static_cast<double>(n);
  return s;
}

inline ComplexVector random_vector(std::size_t n, std::mt19937_64& rng) {
  ComplexVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = unit_disk(rng);
  return v;
}

inline double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
  return (x - y).max_abs();
}

/// Relative entrywise distance: max|x - y| / max(1, max|y|).
inline double rel_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
  return max_abs_diff(x, y) / std::max(1.0, y.max_abs());
}

}  // namespace chz::testing

namespace chz::testing {

/// Coefficients a_0..a_{n-1} of det(λI - A) recovered by interpolation at the n+1
/// scaled roots of unity ρ e^{2πik/(n+1)} (an inverse DFT of the sampled values).
inline std::vector<Complex> interpolated_char_poly(const ComplexMatrix& a, double rho = 1.0) {
  const std::size_t n = a.n(), m = n + 1;
  std::vector<Complex> samples(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Complex lambda = std::polar(rho, 2.0 * M_PI * static_cast<double>(k) / m);
    ComplexMatrix shifted = -1.0 * a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += lambda;
    samples[k] = determinant(shifted);
  }
  std::vector<Complex> coeffs(n);
  for (std::size_t p = 0; p < n; ++p) {
    Complex sum = 0.0;
    for (std::size_t k = 0; k < m; ++k)
      sum += samples[k] * std::polar(1.0, -2.0 * M_PI * static_cast<double>(p * k) / m);
    coeffs[p] = sum / (static_cast<double>(m) * std::pow(rho, static_cast<double>(p)));
  }
  return coeffs;
}

}  // namespace chz::testing
