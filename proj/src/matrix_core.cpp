#include "chz/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace chz {

// ---------------------------------------------------------------- vectors

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
  if (other.size() != size()) throw DimensionError("vector size mismatch in +=");
  for (std::size_t i = 0; i < size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& other) {
  if (other.size() != size()) throw DimensionError("vector size mismatch in -=");
  for (std::size_t i = 0; i < size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexVector& ComplexVector::operator*=(Complex s) {
  for (auto& v : data_) v *= s;
  return *this;
}

double ComplexVector::norm_inf() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool ComplexVector::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

ComplexVector operator+(ComplexVector lhs, const ComplexVector& rhs) { return lhs += rhs; }
ComplexVector operator-(ComplexVector lhs, const ComplexVector& rhs) { return lhs -= rhs; }
ComplexVector operator*(Complex s, ComplexVector v) { return v *= s; }

// ---------------------------------------------------------------- matrices

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {
  if (n == 0) throw DimensionError("matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionError("matrix rows must form a square grid");
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    ++i;
  }
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  ComplexMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw DimensionError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.n_ != n_) throw DimensionError("matrix size mismatch in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.n_ != n_) throw DimensionError("matrix size mismatch in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& v : data_) v *= s;
  return *this;
}

double ComplexMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool ComplexMatrix::is_real(double tol) const {
  return std::all_of(data_.begin(), data_.end(),
                     [tol](Complex v) { return std::abs(v.imag()) <= tol; });
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  return mat_mul(lhs, rhs);
}

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v) {
  if (v.size() != m.n()) throw DimensionError("matrix-vector size mismatch");
  ComplexVector out(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < m.n(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix mat_mul(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.n() != rhs.n())
    throw DimensionError("mat_mul: " + std::to_string(lhs.n()) + "x" + std::to_string(lhs.n()) +
                         " times " + std::to_string(rhs.n()) + "x" + std::to_string(rhs.n()));
  const std::size_t n = lhs.n();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex l = lhs(i, k);
      if (l == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += l * rhs(k, j);
    }
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
  ComplexMatrix t(m.n());
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) t(j, i) = m(i, j);
  return t;
}

Complex trace(const ComplexMatrix& m) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < m.n(); ++i) t += m(i, i);
  return t;
}

Complex determinant(const ComplexMatrix& m) {
  ComplexMatrix work = m;
  const std::size_t n = m.n();
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
    if (work(pivot, col) == Complex{}) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(col, j), work(pivot, j));
      det = -det;
    }
    const Complex p = work(col, col);
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = work(r, col) / p;
      if (factor == Complex{}) continue;
      for (std::size_t j = col + 1; j < n; ++j) work(r, j) -= factor * work(col, j);
    }
  }
  return det;
}

std::vector<Complex> power_traces(const ComplexMatrix& a, std::size_t k) {
  std::vector<Complex> traces;
  traces.reserve(k);
  if (k == 0) return traces;
  ComplexMatrix power = a;
  traces.push_back(trace(power));
  for (std::size_t m = 2; m <= k; ++m) {
    power = mat_mul(power, a);
    traces.push_back(trace(power));
  }
  return traces;
}

namespace {

Complex exterior_trace_from_power_traces(std::span<const Complex> traces, std::size_t k) {
  if (k == 0) return 1.0;
  ComplexMatrix toeplitz(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) toeplitz(i, j) = traces[i - j];
    if (i + 1 < k) toeplitz(i, i + 1) = static_cast<double>(k - i - 1);
  }
  double factorial = 1.0;
  for (std::size_t m = 2; m <= k; ++m) factorial *= static_cast<double>(m);
  return determinant(toeplitz) / factorial;
}

}  // namespace

Complex exterior_trace(const ComplexMatrix& a, std::size_t k) {
  if (k > a.n())
    throw DomainError("exterior_trace: k=" + std::to_string(k) + " exceeds dimension " +
                      std::to_string(a.n()));
  if (a.n() > kMaxTraceDimension)
    throw DomainError("exterior_trace: dimension above " + std::to_string(kMaxTraceDimension));
  const auto traces = power_traces(a, k);
  return exterior_trace_from_power_traces(traces, k);
}

CharPoly char_poly(const ComplexMatrix& a) {
  const std::size_t n = a.n();
  if (n > kMaxTraceDimension)
    throw DomainError("char_poly: dimension above " + std::to_string(kMaxTraceDimension));
  const auto traces = power_traces(a, n);
  CharPoly p;
  p.coeffs.assign(n, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    p.coeffs[n - k] = sign * exterior_trace_from_power_traces(traces, k);
  }
  return p;
}

std::vector<Complex> CharPoly::monic_coefficients() const {
  std::vector<Complex> full = coeffs;
  full.push_back(1.0);
  return full;
}

Complex CharPoly::operator()(Complex lambda) const {
  Complex acc = 1.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * lambda + coeffs[i];
  return acc;
}

ComplexMatrix poly_eval_matrix(std::span<const Complex> coeffs, const ComplexMatrix& a) {
  const std::size_t n = a.n();
  if (coeffs.empty()) return ComplexMatrix(n);
  ComplexMatrix acc = coeffs.back() * ComplexMatrix::identity(n);
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    acc = mat_mul(acc, a);
    for (std::size_t d = 0; d < n; ++d) acc(d, d) += coeffs[i];
  }
  return acc;
}

ComplexMatrix poly_eval_matrix(const CharPoly& p, const ComplexMatrix& a) {
  if (p.degree() != a.n()) throw DimensionError("characteristic polynomial degree != dimension");
  const auto full = p.monic_coefficients();
  return poly_eval_matrix(full, a);
}

// ---------------------------------------------------------------- LU

LuDecomposition::LuDecomposition(const ComplexMatrix& m, double singular_tol)
    : lu_(m), perm_(m.n()) {
  const std::size_t n = m.n();
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
  const double scale = std::max(m.max_abs(), 1e-300);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(lu_(r, col)) > std::abs(lu_(pivot, col))) pivot = r;
    if (!(std::abs(lu_(pivot, col)) > singular_tol * scale))
      throw NumericalError("matrix is numerically singular (pivot " +
                           std::to_string(std::abs(lu_(pivot, col))) + ")");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(col, j), lu_(pivot, j));
      std::swap(perm_[col], perm_[pivot]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      lu_(r, col) /= lu_(col, col);
      const Complex f = lu_(r, col);
      for (std::size_t j = col + 1; j < n; ++j) lu_(r, j) -= f * lu_(col, j);
    }
  }
}

ComplexVector LuDecomposition::solve(const ComplexVector& b) const {
  const std::size_t n = lu_.n();
  if (b.size() != n) throw DimensionError("LU solve: rhs size mismatch");
  ComplexVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = b[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * x[j];
    x[i] = acc;
  }
  for (std::size_t i = n; i-- > 0;) {
    Complex acc = x[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= lu_(i, j) * x[j];
    x[i] = acc / lu_(i, i);
  }
  return x;
}

ComplexMatrix LuDecomposition::solve(const ComplexMatrix& b) const {
  const std::size_t n = lu_.n();
  if (b.n() != n) throw DimensionError("LU solve: rhs size mismatch");
  ComplexMatrix out(n);
  ComplexVector column(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) column[i] = b(i, j);
    const auto x = solve(column);
    for (std::size_t i = 0; i < n; ++i) out(i, j) = x[i];
  }
  return out;
}

ComplexMatrix LuDecomposition::inverse() const {
  return solve(ComplexMatrix::identity(lu_.n()));
}

ComplexMatrix inverse(const ComplexMatrix& m) { return LuDecomposition(m).inverse(); }

ComplexMatrix expm(const ComplexMatrix& m) {
  const std::size_t n = m.n();
  const double norm = m.norm_inf();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix scaled = std::ldexp(1.0, -squarings) * m;

  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = (1.0 / k) * mat_mul(term, scaled);
    result += term;
    if (term.max_abs() <= 1e-18 * result.max_abs()) break;
  }
  for (int s = 0; s < squarings; ++s) result = mat_mul(result, result);
  return result;
}

}  // namespace chz
