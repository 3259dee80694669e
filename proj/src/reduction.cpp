#include "chz/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

namespace chz {

// ---------------------------------------------------------------- forcing

Complex ScalarForcing::derivative(std::size_t k, double t, std::span<const Complex> xs) const {
  if (k == 0) return value(t, xs[0]);
  if (k > max_order || !total_derivative)
    throw DomainError("forcing '" + name + "' has no total derivative of order " +
                      std::to_string(k));
  if (xs.size() < k + 1)
    throw DimensionError("forcing derivative of order " + std::to_string(k) + " needs " +
                         std::to_string(k + 1) + " curve derivatives");
  return total_derivative(k, t, xs);
}

ForcingSpec::ForcingSpec(std::size_t n, VectorMap eval, std::vector<DerivativeMap> t_derivatives,
                         std::optional<StructuredForcing> structured)
    : n_(n),
      eval_(std::move(eval)),
      t_derivatives_(std::move(t_derivatives)),
      structured_(std::move(structured)) {
  if (n == 0) throw DimensionError("forcing dimension must be positive");
  if (structured_ && structured_->row >= n)
    throw DimensionError("structured forcing row out of range");
}

ForcingSpec ForcingSpec::zero(std::size_t n) {
  ForcingSpec spec(n, [n](double, const ComplexVector&) { return ComplexVector(n); }, {});
  spec.zero_ = true;
  return spec;
}

ForcingSpec ForcingSpec::structured(std::size_t n, ScalarForcing f, std::optional<std::size_t> row) {
  const std::size_t r = row.value_or(n - 1);
  if (r >= n) throw DimensionError("structured forcing row out of range");
  auto shared = std::make_shared<const ScalarForcing>(f);
  VectorMap eval = [n, r, shared](double t, const ComplexVector& x) {
    ComplexVector out(n);
    out[r] = shared->value(t, x[0]);
    return out;
  };
  std::vector<DerivativeMap> derivs;
  for (std::size_t k = 1; k <= f.max_order && k <= 64; ++k) {
    derivs.push_back([n, r, k, shared](double t, std::span<const ComplexVector> stack) {
      std::vector<Complex> xs(k + 1);
      for (std::size_t m = 0; m <= k; ++m) xs[m] = stack[m][0];
      ComplexVector out(n);
      out[r] = shared->derivative(k, t, xs);
      return out;
    });
  }
  return ForcingSpec(n, std::move(eval), std::move(derivs), StructuredForcing{r, std::move(f)});
}

ComplexVector ForcingSpec::operator()(double t, const ComplexVector& x) const {
  if (x.size() != n_) throw DimensionError("forcing evaluated on a state of the wrong size");
  return eval_(t, x);
}

std::size_t ForcingSpec::max_derivative_order() const {
  return zero_ ? std::numeric_limits<std::size_t>::max() : t_derivatives_.size();
}

ComplexVector ForcingSpec::total_derivative(std::size_t k, double t,
                                            std::span<const ComplexVector> stack) const {
  if (stack.size() < k + 1)
    throw DimensionError("total derivative of order " + std::to_string(k) + " needs " +
                         std::to_string(k + 1) + " state derivatives");
  if (k == 0) return (*this)(t, stack[0]);
  if (zero_) return ComplexVector(n_);
  if (k > t_derivatives_.size())
    throw DomainError("forcing declares total derivatives up to order " +
                      std::to_string(t_derivatives_.size()) + ", order " + std::to_string(k) +
                      " requested");
  return t_derivatives_[k - 1](t, stack);
}

void Trajectory::validate() const {
  if (t.size() != states.size()) throw DimensionError("trajectory times and states differ in length");
  for (const auto& s : states)
    if (s.size() != dim()) throw DimensionError("trajectory states differ in dimension");
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double step = t[i] - t[i - 1];
    if (!(step > 0) || std::abs(step - h) > 1e-12 * std::max(std::abs(t[i]), 1.0) + 1e-12 * h)
      throw DimensionError("trajectory is not uniformly sampled at step h");
  }
}

// ---------------------------------------------------------------- operator family

OperatorFamily build_operator_family(const CharPoly& a, const ComplexMatrix& matrix) {
  const std::size_t n = matrix.n();
  if (a.degree() != n)
    throw DimensionError("characteristic polynomial of degree " + std::to_string(a.degree()) +
                         " does not match a " + std::to_string(n) + "x" + std::to_string(n) +
                         " matrix");
  OperatorFamily family;
  family.n = n;
  family.polys.reserve(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<Complex> poly(a.coeffs.begin() + static_cast<std::ptrdiff_t>(n - j), a.coeffs.end());
    poly.push_back(1.0);
    family.polys.push_back(std::move(poly));
  }
  family.matrices.reserve(n);
  for (std::size_t j = 0; j < n; ++j) family.matrices.push_back(poly_eval_matrix(family.polys[j], matrix));
  return family;
}

ReducedEquation reduce(const ComplexMatrix& a) {
  ReducedEquation eq;
  eq.n = a.n();
  eq.a = char_poly(a);
  eq.operators = build_operator_family(eq.a, a);
  eq.rhs_operator = eq.operators.matrices.back();
  eq.lower_operators.assign(eq.operators.matrices.begin(), eq.operators.matrices.end() - 1);
  return eq;
}

Json reduced_equation_to_json(const ReducedEquation& eq) {
  Json out;
  out["n"] = eq.n;
  out["a"] = complex_array_to_json(eq.a.coeffs);
  Json ops = Json::array();
  for (const auto& m : eq.operators.matrices) ops.push_back(matrix_to_json(m));
  out["operators"] = std::move(ops);
  out["rhs_operator"] = matrix_to_json(eq.rhs_operator);
  return out;
}

// ---------------------------------------------------------------- derivative chain

std::vector<ComplexVector> derivative_stack(const ComplexMatrix& a, const ComplexVector& x,
                                            const ForcingSpec& f, double t, std::size_t k) {
  const std::size_t n = a.n();
  if (x.size() != n || f.n() != n) throw DimensionError("derivative_stack: dimension mismatch");
  if (k > 0 && f.max_derivative_order() < k - 1)
    throw DomainError("derivative of order " + std::to_string(k) +
                      " needs forcing total derivatives up to order " + std::to_string(k - 1) +
                      ", only " + std::to_string(f.max_derivative_order()) + " declared");

  std::vector<ComplexMatrix> powers{ComplexMatrix::identity(n)};
  for (std::size_t m = 1; m <= k; ++m) powers.push_back(mat_mul(powers.back(), a));

  std::vector<ComplexVector> stack{x};
  std::vector<ComplexVector> forcing_derivs;  // d^i F along the curve, i = 0..
  for (std::size_t m = 1; m <= k; ++m) {
    forcing_derivs.push_back(
        f.total_derivative(m - 1, t, std::span<const ComplexVector>(stack.data(), m)));
    ComplexVector next = powers[m] * x;
    for (std::size_t j = 0; j < m; ++j) next += powers[j] * forcing_derivs[m - j - 1];
    stack.push_back(std::move(next));
  }
  return stack;
}

ComplexVector derivative_chain(const ComplexMatrix& a, const ComplexVector& x0,
                               const ForcingSpec& f, double tau, std::size_t k) {
  if (k < 1 || k > a.n())
    throw DomainError("derivative_chain: order " + std::to_string(k) + " outside 1.." +
                      std::to_string(a.n()));
  return derivative_stack(a, x0, f, tau, k).back();
}

// ---------------------------------------------------------------- residual

double ResidualSeries::max() const {
  double m = 0.0;
  for (double r : residual) m = std::max(m, r);
  return m;
}

std::vector<double> central_difference_weights(std::size_t k, std::size_t p) {
  const std::size_t count = 2 * p + 1;
  if (k >= count) throw DomainError("stencil too narrow for the requested derivative");
  std::vector<double> nodes(count);
  for (std::size_t i = 0; i < count; ++i) nodes[i] = static_cast<double>(i) - static_cast<double>(p);

  // c[d][j]: weight of node j for derivative d
  std::vector<std::vector<double>> c(k + 1, std::vector<double>(count, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0];
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < count; ++i) {
    const std::size_t mn = std::min(i, k);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i];
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t d = mn; d >= 1; --d)
          c[d][i] = c1 * (static_cast<double>(d) * c[d - 1][i - 1] - c5 * c[d][i - 1]) / c2;
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (std::size_t d = mn; d >= 1; --d)
        c[d][j] = (c4 * c[d][j] - static_cast<double>(d) * c[d - 1][j]) / c3;
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c[k];
}

namespace {

double defect_norm(const ReducedEquation& eq, std::span<const ComplexVector> x_derivs,
                   std::span<const ComplexVector> f_derivs) {
  const std::size_t n = eq.n;
  ComplexVector defect = x_derivs[n];
  for (std::size_t k = 0; k < n; ++k) defect += eq.a.coeffs[k] * x_derivs[k];
  for (std::size_t j = 0; j < n; ++j) defect -= eq.operators.matrices[j] * f_derivs[n - j - 1];
  return defect.norm_inf();
}

}  // namespace

ResidualSeries reduce_residual(const ReducedEquation& eq, const ComplexMatrix& a,
                               const ForcingSpec& f, const Trajectory& traj,
                               DerivativeEstimate mode) {
  const std::size_t n = eq.n;
  if (a.n() != n || f.n() != n || traj.dim() != n)
    throw DimensionError("reduce_residual: dimension mismatch");
  traj.validate();
  ResidualSeries out;

  if (mode == DerivativeEstimate::analytic) {
    for (std::size_t i = 0; i < traj.size(); ++i) {
      const auto stack = derivative_stack(a, traj.states[i], f, traj.t[i], n);
      std::vector<ComplexVector> f_derivs;
      for (std::size_t m = 0; m < n; ++m)
        f_derivs.push_back(
            f.total_derivative(m, traj.t[i], std::span<const ComplexVector>(stack.data(), m + 1)));
      out.t.push_back(traj.t[i]);
      out.residual.push_back(defect_norm(eq, stack, f_derivs));
    }
    return out;
  }

  const std::size_t half = (n + 1) / 2;
  if (traj.size() < 2 * half + 1)
    throw DomainError("trajectory has " + std::to_string(traj.size()) +
                      " samples; the order-" + std::to_string(n) + " stencil needs " +
                      std::to_string(2 * half + 1));
  std::vector<std::vector<double>> weights(n + 1);
  for (std::size_t k = 0; k <= n; ++k) weights[k] = central_difference_weights(k, half);

  std::vector<ComplexVector> forcing_samples;
  forcing_samples.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) forcing_samples.push_back(f(traj.t[i], traj.states[i]));

  auto stencil = [&](const std::vector<ComplexVector>& series, std::size_t i, std::size_t k) {
    ComplexVector acc(n);
    for (std::size_t o = 0; o < 2 * half + 1; ++o) {
      const double w = weights[k][o];
      if (w == 0.0) continue;
      acc += w * series[i + o - half];
    }
    acc *= 1.0 / std::pow(traj.h, static_cast<double>(k));
    return acc;
  };

  for (std::size_t i = half; i + half < traj.size(); ++i) {
    std::vector<ComplexVector> x_derivs{traj.states[i]};
    for (std::size_t k = 1; k <= n; ++k) x_derivs.push_back(stencil(traj.states, i, k));
    std::vector<ComplexVector> f_derivs{forcing_samples[i]};
    for (std::size_t m = 1; m < n; ++m) f_derivs.push_back(stencil(forcing_samples, i, m));
    out.t.push_back(traj.t[i]);
    out.residual.push_back(defect_norm(eq, x_derivs, f_derivs));
  }
  return out;
}

// ---------------------------------------------------------------- scalar reductions

ScalarReduction companion_scalar_reduce(const ComplexMatrix& a, const ComplexVector& x0,
                                        const ForcingSpec& f, double tau) {
  const std::size_t n = a.n();
  if (n != 2 && n != 3)
    throw DomainError("companion_scalar_reduce supports n = 2 or 3, got n = " + std::to_string(n));
  if (x0.size() != n || f.n() != n) throw DimensionError("companion_scalar_reduce: dimension mismatch");
  const bool zero = f.is_zero();
  if (!zero && (!f.structure() || f.structure()->row != n - 1))
    throw DomainError("companion_scalar_reduce needs F = e_n f(t, x_1)");

  ScalarReduction s;
  s.order = n;
  s.tau = tau;
  const Complex tr = trace(a);
  if (n == 2) {
    s.lhs_coeffs = {determinant(a), -tr};
    s.rhs_terms = {{a(0, 1), 0}};
  } else {
    const Complex tr2 = trace(mat_mul(a, a));
    s.lhs_coeffs = {-determinant(a), (tr * tr - tr2) / 2.0, -tr};
    s.rhs_terms = {{a(0, 2), 1}, {a(0, 1) * a(1, 2) - a(1, 1) * a(0, 2), 0}};
  }
  const auto stack = derivative_stack(a, x0, f, tau, n - 1);
  for (const auto& level : stack) s.initial_values.push_back(level[0]);
  return s;
}

Json scalar_reduction_to_json(const ScalarReduction& s) {
  Json out;
  out["order"] = s.order;
  out["lhs_coeffs"] = complex_array_to_json(s.lhs_coeffs);
  Json terms = Json::array();
  for (const auto& term : s.rhs_terms) {
    Json t;
    t["multiplier"] = format_complex(term.multiplier);
    t["derivative_order"] = term.derivative_order;
    terms.push_back(std::move(t));
  }
  out["rhs_terms"] = std::move(terms);
  out["initial_values"] = complex_array_to_json(s.initial_values);
  out["tau"] = s.tau;
  return out;
}

}  // namespace chz
