#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chz/matrix_core.hpp"

namespace chz {

/// Scalar nonlinearity f(t, x) with total time derivatives along a curve x(t).
///
/// `total_derivative(k, t, xs)` returns d^k/dt^k f(t, x(t)) where xs[m] = x^{(m)}(t)
/// for m = 0..k. `max_order` bounds the k that may be requested.
struct ScalarForcing {
  std::string name;
  std::function<Complex(double, Complex)> value;
  std::function<Complex(std::size_t, double, std::span<const Complex>)> total_derivative;
  std::size_t max_order = 0;

  Complex derivative(std::size_t k, double t, std::span<const Complex> xs) const;
};

/// Companion-position nonlinearity F = e_row * f(t, x_1).
struct StructuredForcing {
  std::size_t row;  // zero-based
  ScalarForcing f;
};

/// Vector nonlinearity F(t, X) of a first-order system X' = AX + F(t, X).
///
/// Total derivatives are caller-declared: `t_derivatives[k-1]` maps the derivative
/// stack [X, X', ..., X^{(k)}] at time t to d^k/dt^k F(t, X(t)).
class ForcingSpec {
 public:
  using VectorMap = std::function<ComplexVector(double, const ComplexVector&)>;
  using DerivativeMap = std::function<ComplexVector(double, std::span<const ComplexVector>)>;

  ForcingSpec(std::size_t n, VectorMap eval, std::vector<DerivativeMap> t_derivatives,
              std::optional<StructuredForcing> structured = std::nullopt);

  static ForcingSpec zero(std::size_t n);
  /// F = e_row f(t, x_1) with all total derivatives `f` declares. Row defaults to the last.
  static ForcingSpec structured(std::size_t n, ScalarForcing f,
                                std::optional<std::size_t> row = std::nullopt);

  std::size_t n() const { return n_; }
  ComplexVector operator()(double t, const ComplexVector& x) const;
  /// k = 0 evaluates F itself; stack must hold X^{(0..k)}.
  ComplexVector total_derivative(std::size_t k, double t,
                                 std::span<const ComplexVector> stack) const;
  /// Highest total derivative order available (unbounded for the zero forcing).
  std::size_t max_derivative_order() const;
  const std::optional<StructuredForcing>& structure() const { return structured_; }
  bool is_zero() const { return zero_; }

 private:
  std::size_t n_;
  VectorMap eval_;
  std::vector<DerivativeMap> t_derivatives_;
  std::optional<StructuredForcing> structured_;
  bool zero_ = false;
};

}  // namespace chz
