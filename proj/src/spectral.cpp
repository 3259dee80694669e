#include "chz/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace chz {

namespace {

Complex horner(std::span<const Complex> c, Complex z) {
  Complex acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

Complex horner_derivative(std::span<const Complex> c, Complex z) {
  Complex acc = 0.0;
  for (std::size_t i = c.size(); i-- > 1;) acc = acc * z + static_cast<double>(i) * c[i];
  return acc;
}

// A few Newton steps; a step is kept only if it reduces |p|, which keeps clustered
// roots from wandering.
Complex polish(std::span<const Complex> c, Complex z) {
  Complex value = horner(c, z);
  for (int it = 0; it < 8 && value != Complex{}; ++it) {
    const Complex d = horner_derivative(c, z);
    if (d == Complex{}) break;
    const Complex candidate = z - value / d;
    const Complex cv = horner(c, candidate);
    if (!(std::abs(cv) < std::abs(value))) break;
    z = candidate;
    value = cv;
  }
  return z;
}

std::vector<Complex> quadratic_roots(Complex b, Complex c) {
  // λ^2 + bλ + c
  const Complex sq = std::sqrt(b * b - 4.0 * c);
  const Complex plus = b + sq;
  const Complex minus = b - sq;
  const Complex big = std::abs(plus) >= std::abs(minus) ? plus : minus;
  if (big == Complex{}) return {0.0, 0.0};
  const Complex r1 = -big / 2.0;
  return {r1, c / r1};
}

std::vector<Complex> cubic_roots(Complex a2, Complex a1, Complex a0) {
  // λ^3 + a2 λ^2 + a1 λ + a0, depressed by λ = y - a2/3
  const Complex shift = a2 / 3.0;
  const Complex p = a1 - a2 * a2 / 3.0;
  const Complex q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
  const Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  const Complex c_plus = -q / 2.0 + disc;
  const Complex c_minus = -q / 2.0 - disc;
  const Complex c = std::abs(c_plus) >= std::abs(c_minus) ? c_plus : c_minus;
  if (c == Complex{}) return {-shift, -shift, -shift};
  const Complex u = std::pow(c, 1.0 / 3.0);
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  std::vector<Complex> roots;
  Complex uk = u;
  for (int k = 0; k < 3; ++k) {
    roots.push_back(uk - p / (3.0 * uk) - shift);
    uk *= omega;
  }
  return roots;
}

// Eigenvalues of an upper Hessenberg matrix by single-shift complex QR with
// Wilkinson shifts and deflation.
std::vector<Complex> hessenberg_qr_eigenvalues(ComplexMatrix h) {
  const std::size_t n = h.n();
  std::vector<Complex> eig(n);
  const double eps = std::numeric_limits<double>::epsilon();
  std::size_t hi = n - 1;
  int iter = 0;
  const int max_iter = 100 * static_cast<int>(n);
  int total = 0;
  while (true) {
    if (hi == 0) {
      eig[0] = h(0, 0);
      break;
    }
    std::size_t lo = hi;
    while (lo > 0) {
      const double scale = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (std::abs(h(lo, lo - 1)) <= eps * (scale > 0 ? scale : 1.0)) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      iter = 0;
      continue;
    }
    if (++total > max_iter) throw NumericalError("QR eigenvalue iteration did not converge");
    ++iter;

    const Complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
    Complex mu;
    if (iter % 11 == 0) {
      mu = d + std::abs(c);
    } else {
      const Complex half = (a - d) / 2.0;
      const Complex root = std::sqrt(half * half + b * c);
      const Complex m1 = (a + d) / 2.0 + root;
      const Complex m2 = (a + d) / 2.0 - root;
      mu = std::abs(m1 - d) < std::abs(m2 - d) ? m1 : m2;
    }

    for (std::size_t k = lo; k <= hi; ++k) h(k, k) -= mu;
    std::vector<std::pair<Complex, Complex>> rotations;
    for (std::size_t k = lo; k < hi; ++k) {
      const Complex x = h(k, k), y = h(k + 1, k);
      const double r = std::hypot(std::abs(x), std::abs(y));
      Complex cs = 1.0, sn = 0.0;
      if (r > 0) {
        cs = x / r;
        sn = y / r;
      }
      rotations.emplace_back(cs, sn);
      for (std::size_t j = k; j <= hi; ++j) {
        const Complex top = h(k, j), bottom = h(k + 1, j);
        h(k, j) = std::conj(cs) * top + std::conj(sn) * bottom;
        h(k + 1, j) = -sn * top + cs * bottom;
      }
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const auto [cs, sn] = rotations[k - lo];
      const std::size_t last = std::min(k + 2, hi);
      for (std::size_t i = lo; i <= last; ++i) {
        const Complex left = h(i, k), right = h(i, k + 1);
        h(i, k) = left * cs + right * sn;
        h(i, k + 1) = -left * std::conj(sn) + right * std::conj(cs);
      }
    }
    for (std::size_t k = lo; k <= hi; ++k) h(k, k) += mu;
  }
  return eig;
}

// Basis of the numerical null space of m via Gauss-Jordan elimination with full
// pivoting; pivots at or below tol count as zero.
std::vector<ComplexVector> null_space(ComplexMatrix m, double tol) {
  const std::size_t n = m.n();
  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(n, false);
  std::size_t row = 0;
  while (row < n) {
    double best = -1.0;
    std::size_t bi = row, bj = 0;
    for (std::size_t i = row; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j] && std::abs(m(i, j)) > best) {
          best = std::abs(m(i, j));
          bi = i;
          bj = j;
        }
    if (best <= tol) break;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(row, j), m(bi, j));
    const Complex p = m(row, bj);
    for (std::size_t j = 0; j < n; ++j) m(row, j) /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row) continue;
      const Complex f = m(i, bj);
      if (f == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(row, j);
    }
    is_pivot[bj] = true;
    pivot_cols.push_back(bj);
    ++row;
  }
  std::vector<ComplexVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    ComplexVector v(n);
    v[f] = 1.0;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Inverse iteration from a slightly perturbed shift.
ComplexVector eigenvector_simple(const ComplexMatrix& a, Complex lambda, double scale) {
  const std::size_t n = a.n();
  const Complex shifted = lambda + Complex(1e-10 * scale, 1e-10 * scale);
  ComplexMatrix m = a;
  for (std::size_t i = 0; i < n; ++i) m(i, i) -= shifted;
  const LuDecomposition lu(m, 0.0);
  ComplexVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex(1.0, 0.1 * static_cast<double>(i + 1));
  for (int it = 0; it < 3; ++it) {
    v = lu.solve(v);
    const double norm = v.norm_inf();
    if (!(norm > 0) || !std::isfinite(norm)) throw NumericalError("inverse iteration failed");
    v *= 1.0 / norm;
  }
  return v;
}

void normalize_2(ComplexVector& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  v *= 1.0 / std::sqrt(s);
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> monic_coeffs) {
  if (monic_coeffs.size() < 2) throw DomainError("polynomial_roots: degree must be >= 1");
  const std::size_t degree = monic_coeffs.size() - 1;
  if (monic_coeffs[degree] != Complex(1.0))
    throw DomainError("polynomial_roots: polynomial must be monic");
  std::vector<Complex> roots;
  switch (degree) {
    case 1:
      return {-monic_coeffs[0]};
    case 2:
      roots = quadratic_roots(monic_coeffs[1], monic_coeffs[0]);
      break;
    case 3:
      roots = cubic_roots(monic_coeffs[2], monic_coeffs[1], monic_coeffs[0]);
      break;
    default: {
      ComplexMatrix companion(degree);
      for (std::size_t j = 0; j < degree; ++j) companion(0, j) = -monic_coeffs[degree - 1 - j];
      for (std::size_t i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
      roots = hessenberg_qr_eigenvalues(companion);
    }
  }
  for (auto& r : roots) r = polish(monic_coeffs, r);
  return roots;
}

std::vector<Complex> eigenvalues(const ComplexMatrix& a) {
  const auto p = char_poly(a);
  const auto full = p.monic_coefficients();
  return polynomial_roots(full);
}

EigenDecomposition eigen_decompose(const ComplexMatrix& a, double max_condition) {
  const std::size_t n = a.n();
  const auto values = eigenvalues(a);
  const double scale = std::max(1.0, a.max_abs());
  const double cluster_tol = 1e-6 * scale;

  std::vector<bool> used(n, false);
  std::vector<Complex> ordered;
  std::vector<ComplexVector> columns;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> cluster{i};
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j)
      if (!used[j] && std::abs(values[j] - values[i]) <= cluster_tol) {
        cluster.push_back(j);
        used[j] = true;
      }
    if (cluster.size() == 1) {
      auto v = eigenvector_simple(a, values[i], scale);
      normalize_2(v);
      ordered.push_back(values[i]);
      columns.push_back(std::move(v));
      continue;
    }
    Complex mean = 0.0;
    for (auto idx : cluster) mean += values[idx];
    mean /= static_cast<double>(cluster.size());
    ComplexMatrix shifted = a;
    for (std::size_t d = 0; d < n; ++d) shifted(d, d) -= mean;
    auto basis = null_space(shifted, cluster_tol);
    if (basis.size() < cluster.size())
      throw NumericalError("matrix is defective: eigenvalue " + std::to_string(mean.real()) +
                           (mean.imag() >= 0 ? "+" : "") + std::to_string(mean.imag()) +
                           "i has algebraic multiplicity " + std::to_string(cluster.size()) +
                           " but eigenspace dimension " + std::to_string(basis.size()));
    for (std::size_t k = 0; k < cluster.size(); ++k) {
      normalize_2(basis[k]);
      ordered.push_back(mean);
      columns.push_back(std::move(basis[k]));
    }
  }

  ComplexMatrix vecs(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) vecs(i, j) = columns[j][i];
  ComplexMatrix inv(n);
  try {
    inv = inverse(vecs);
  } catch (const NumericalError&) {
    throw NumericalError("matrix is defective: eigenvector matrix is singular");
  }
  const double cond = vecs.norm_inf() * inv.norm_inf();
  if (!(cond <= max_condition))
    throw NumericalError("matrix is numerically defective: eigenvector condition " +
                         std::to_string(cond) + " exceeds " + std::to_string(max_condition));
  return {std::move(ordered), std::move(vecs), std::move(inv), cond};
}

}  // namespace chz
