#include "chz/forcing_library.hpp"

#include <cmath>
#include <string>

#include "chz/faa_di_bruno.hpp"

namespace chz {

namespace {

// d^m/dx^m sin at x
Complex sin_derivative(std::size_t m, Complex x) {
  switch (m % 4) {
    case 0: return std::sin(x);
    case 1: return std::cos(x);
    case 2: return -std::sin(x);
    default: return -std::cos(x);
  }
}

// Total derivatives of an autonomous f(x(t)) through Faà di Bruno.
template <class OuterDerivative>
auto autonomous(OuterDerivative outer) {
  return [outer](std::size_t k, double, std::span<const Complex> xs) {
    std::vector<Complex> f_derivs(k);
    for (std::size_t m = 1; m <= k; ++m) f_derivs[m - 1] = outer(m, xs[0]);
    return faa_di_bruno_derivative(f_derivs, xs.subspan(1, k), k);
  };
}

}  // namespace

ScalarForcing forcing_zero() {
  return {"zero", [](double, Complex) { return Complex{}; },
          [](std::size_t, double, std::span<const Complex>) { return Complex{}; },
          kForcingMaxOrder};
}

ScalarForcing forcing_sin_x() {
  return {"sin_x", [](double, Complex x) { return std::sin(x); },
          autonomous([](std::size_t m, Complex x) { return sin_derivative(m, x); }),
          kForcingMaxOrder};
}

ScalarForcing forcing_neg_cube() {
  auto outer = [](std::size_t m, Complex x) -> Complex {
    switch (m) {
      case 1: return -3.0 * x * x;
      case 2: return -6.0 * x;
      case 3: return -6.0;
      default: return 0.0;
    }
  };
  return {"neg_cube", [](double, Complex x) { return -x * x * x; }, autonomous(outer),
          kForcingMaxOrder};
}

ScalarForcing forcing_sin_t() {
  return {"sin_t", [](double t, Complex) { return Complex(std::sin(t)); },
          [](std::size_t k, double t, std::span<const Complex>) { return sin_derivative(k, t); },
          kForcingMaxOrder};
}

ScalarForcing forcing_t_x() {
  // Leibniz: d^k (t x) = t x^{(k)} + k x^{(k-1)}
  return {"t_x", [](double t, Complex x) { return t * x; },
          [](std::size_t k, double t, std::span<const Complex> xs) {
            return t * xs[k] + static_cast<double>(k) * xs[k - 1];
          },
          kForcingMaxOrder};
}

ScalarForcing forcing_by_name(std::string_view name) {
  if (name == "zero") return forcing_zero();
  if (name == "sin_x") return forcing_sin_x();
  if (name == "neg_cube") return forcing_neg_cube();
  if (name == "sin_t") return forcing_sin_t();
  if (name == "t_x") return forcing_t_x();
  throw UnknownNameError("unknown forcing '" + std::string(name) +
                         "' (expected zero, sin_x, neg_cube, sin_t or t_x)");
}

std::vector<std::string_view> forcing_names() { return {"zero", "sin_x", "neg_cube", "sin_t", "t_x"}; }

}  // namespace chz
