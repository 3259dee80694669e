#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "chz/errors.hpp"

namespace chz {

using Complex = std::complex<double>;

/// Shared numerical tolerances. Every invariant check pulls from one of these.
struct Tolerances {
  double absolute = 1e-10;
  double relative = 1e-8;
};

/// Largest dimension accepted by the trace-based characteristic polynomial.
inline constexpr std::size_t kMaxTraceDimension = 20;

class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t n) : data_(n) {}
  ComplexVector(std::initializer_list<Complex> values) : data_(values) {}
  explicit ComplexVector(std::vector<Complex> values) : data_(std::move(values)) {}

  std::size_t size() const { return data_.size(); }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  std::span<const Complex> values() const { return data_; }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  ComplexVector& operator+=(const ComplexVector& other);
  ComplexVector& operator-=(const ComplexVector& other);
  ComplexVector& operator*=(Complex s);

  double norm_inf() const;
  bool all_finite() const;

 private:
  std::vector<Complex> data_;
};

ComplexVector operator+(ComplexVector lhs, const ComplexVector& rhs);
ComplexVector operator-(ComplexVector lhs, const ComplexVector& rhs);
ComplexVector operator*(Complex s, ComplexVector v);

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  /// Zero n x n matrix. Throws DimensionError for n == 0.
  explicit ComplexMatrix(std::size_t n);
  /// Builds from nested rows; every row must have as many entries as there are rows.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t n() const { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  /// Maximum absolute row sum.
  double norm_inf() const;
  double max_abs() const;
  bool is_real(double tol = 0.0) const;

 private:
  std::size_t n_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v);

/// Monic characteristic polynomial  λ^n + a_{n-1}λ^{n-1} + ... + a_0.
/// Only a_0..a_{n-1} are stored.
struct CharPoly {
  std::vector<Complex> coeffs;

  std::size_t degree() const { return coeffs.size(); }
  /// Coefficients from the constant term upward, including the implicit leading 1.
  std::vector<Complex> monic_coefficients() const;
  Complex operator()(Complex lambda) const;
};

Complex trace(const ComplexMatrix& m);
Complex determinant(const ComplexMatrix& m);
ComplexMatrix mat_mul(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix transpose(const ComplexMatrix& m);

/// tr(A), tr(A^2), ..., tr(A^k) as a vector of length k.
std::vector<Complex> power_traces(const ComplexMatrix& a, std::size_t k);

/// tr(Λ^k A): the k-th elementary symmetric function of the eigenvalues, computed as
/// (1/k!) det of the almost-lower-triangular Toeplitz matrix of power traces whose
/// superdiagonal reads k-1, k-2, ..., 1.
Complex exterior_trace(const ComplexMatrix& a, std::size_t k);

/// Characteristic polynomial with a_{n-k} = (-1)^k tr(Λ^k A).
CharPoly char_poly(const ComplexMatrix& a);

/// Horner evaluation of  c_0 I + c_1 A + ... + c_d A^d  (coefficients constant term first).
ComplexMatrix poly_eval_matrix(std::span<const Complex> coeffs, const ComplexMatrix& a);
ComplexMatrix poly_eval_matrix(const CharPoly& p, const ComplexMatrix& a);

/// LU factorization with partial pivoting; throws NumericalError when a pivot
/// falls below `singular_tol` times the largest entry.
class LuDecomposition {
 public:
  explicit LuDecomposition(const ComplexMatrix& m, double singular_tol = 1e-14);
  ComplexVector solve(const ComplexVector& b) const;
  ComplexMatrix solve(const ComplexMatrix& b) const;
  ComplexMatrix inverse() const;

 private:
  ComplexMatrix lu_;
  std::vector<std::size_t> perm_;
};

ComplexMatrix inverse(const ComplexMatrix& m);

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
ComplexMatrix expm(const ComplexMatrix& m);

}  // namespace chz
