#pragma once

#include <span>
#include <vector>

#include "chz/matrix_core.hpp"

namespace chz {

/// Roots of a monic polynomial given by its coefficients from the constant term
/// upward, including the leading 1. Degrees 1-3 use closed forms; higher degrees run
/// shifted QR on the companion matrix. Every root is Newton-polished.
std::vector<Complex> polynomial_roots(std::span<const Complex> monic_coeffs);

/// Eigenvalues as the roots of char_poly(a).
std::vector<Complex> eigenvalues(const ComplexMatrix& a);

struct EigenDecomposition {
  std::vector<Complex> values;
  ComplexMatrix vectors;          // columns are unit eigenvectors
  ComplexMatrix inverse_vectors;
  double condition;               // ||V||_inf * ||V^-1||_inf
};

/// Diagonalizes `a`. Throws NumericalError when an eigenvalue cluster lacks a full
/// eigenspace or the eigenvector matrix condition exceeds `max_condition`.
EigenDecomposition eigen_decompose(const ComplexMatrix& a, double max_condition = 1e8);

/// V diag(g(λ_i)) V^-1.
template <class Fn>
ComplexMatrix apply_spectral(const EigenDecomposition& eig, Fn&& g) {
  const std::size_t n = eig.vectors.n();
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex gj = g(eig.values[j]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= gj;
  }
  return mat_mul(scaled, eig.inverse_vectors);
}

}  // namespace chz
