#include "chz/demos.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chz/frac_power.hpp"
#include "chz/ode_sim.hpp"
#include "chz/spectral.hpp"

namespace chz {

namespace {

constexpr double kPi = std::numbers::pi;

CoefficientRow row(std::string name, Complex computed, Complex published, const Tolerances& tol) {
  const bool mismatch =
      std::abs(computed - published) > tol.relative * std::max(1.0, std::abs(published));
  return {std::move(name), computed, published, mismatch};
}

bool any_mismatch(const std::vector<CoefficientRow>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.mismatch; });
}

Json equivalence_to_json(const EquivalenceCheck& e) {
  Json j;
  j["max_deviation"] = e.max_deviation;
  j["relative_deviation"] = e.relative_deviation;
  return j;
}

void check_window(const Window& w) {
  if (!(w.h > 0.0)) throw DomainError("step must be positive");
  if (!(w.t_end > w.tau)) throw DomainError("window end must exceed its start");
}

}  // namespace

Json coefficient_table_to_json(const std::vector<CoefficientRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["name"] = r.name;
    j["computed"] = format_complex(r.computed);
    j["published"] = format_complex(r.published);
    j["mismatch"] = r.mismatch;
    arr.push_back(std::move(j));
  }
  return arr;
}

EquivalenceCheck check_equivalence(const ComplexMatrix& a, const ComplexVector& x0,
                                   const ScalarForcing& f, const Window& window) {
  const std::size_t n = a.n();
  const auto forcing = ForcingSpec::structured(n, f);
  const auto system = integrate_system({a, forcing, x0, window.tau, window.t_end, window.h});
  const auto reduction = companion_scalar_reduce(a, x0, forcing, window.tau);
  const auto scalar = integrate_scalar(reduction, f, window.tau, window.t_end, window.h);
  return {compare_components(system, scalar, 0, 0),
          relative_component_deviation(system, scalar, 0, 0)};
}

// ---------------------------------------------------------------- oscillator

OscillatorReport demo_oscillator(double omega, double alpha, const ScalarForcing& f,
                                 const Window& window, const Tolerances& tol) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
  check_window(window);

  OscillatorReport r;
  r.omega = omega;
  r.alpha = alpha;
  r.forcing = f.name;
  r.power = frac_power_2x2(0.0, 1.0, -omega * omega, alpha);
  r.trace = trace(r.power);
  r.det = determinant(r.power);

  const ComplexVector x0{1.0, 0.0};
  r.reduction = companion_scalar_reduce(r.power, x0, ForcingSpec::structured(2, f), window.tau);

  const double half_angle = alpha * kPi / 2.0;
  r.table = {
      row("x' coefficient", r.reduction.lhs_coeffs[1],
          2.0 * std::pow(omega, alpha) * std::cos(half_angle), tol),
      row("x coefficient", r.reduction.lhs_coeffs[0], std::pow(omega, alpha + 1.0), tol),
      row("f multiplier", r.reduction.rhs_terms[0].multiplier,
          std::pow(omega, alpha - 1.0) * std::sin(half_angle), tol),
  };
  r.discrepancy = any_mismatch(r.table);
  r.damping_coefficient = r.reduction.lhs_coeffs[1].real();
  r.damping_sign = (r.damping_coefficient > 0) - (r.damping_coefficient < 0);
  r.equivalence = check_equivalence(r.power, x0, f, window);
  return r;
}

Json to_json(const OscillatorReport& r) {
  Json j;
  j["demo"] = "oscillator";
  j["omega"] = r.omega;
  j["alpha"] = r.alpha;
  j["forcing"] = r.forcing;
  j["matrix_power"] = matrix_to_json(r.power);
  j["trace"] = format_complex(r.trace);
  j["det"] = format_complex(r.det);
  j["reduction"] = scalar_reduction_to_json(r.reduction);
  j["coefficients"] = coefficient_table_to_json(r.table);
  j["discrepancy"] = r.discrepancy;
  j["damping_coefficient"] = r.damping_coefficient;
  j["damping_sign"] = r.damping_sign;
  j["equivalence"] = equivalence_to_json(r.equivalence);
  return j;
}

// ---------------------------------------------------------------- third order

ThirdOrderReport demo_thirdorder(double beta, double alpha, const ScalarForcing& f,
                                 const Window& window, const Tolerances& tol) {
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
  check_window(window);

  ThirdOrderReport r;
  r.beta = beta;
  r.alpha = alpha;
  r.forcing = f.name;
  r.power = companion3_frac_power(beta, alpha);
  const auto k = k_coeffs(alpha);
  r.k0 = k.k0;
  r.k1 = k.k1;
  r.k2 = k.k2;
  r.k_identity_max_residual = k_identity_residuals(k).max_abs();
  r.trace = trace(r.power);
  r.expected_trace = -3.0 * k.k0 * std::pow(beta, alpha / 3.0);

  const ComplexVector x0{1.0, 0.0, 0.0};
  r.reduction = companion_scalar_reduce(r.power, x0, ForcingSpec::structured(3, f), window.tau);

  const double bracket = 2.0 * std::cos(2.0 * kPi * alpha / 3.0) + 1.0;
  r.table = {
      row("x'' coefficient", r.reduction.lhs_coeffs[2], -bracket * std::pow(beta, alpha / 3.0), tol),
      row("x' coefficient", r.reduction.lhs_coeffs[1],
          -bracket * std::pow(beta, 2.0 * alpha / 3.0), tol),
      row("x coefficient", r.reduction.lhs_coeffs[0], std::pow(beta, alpha), tol),
      row("f multiplier", r.reduction.rhs_terms[1].multiplier, 1.0, tol),
      row("f_t multiplier", r.reduction.rhs_terms[0].multiplier, 0.0, tol),
  };
  r.discrepancy = any_mismatch(r.table);

  try {
    const auto principal = frac_power_eig(third_order_matrix(beta), alpha);
    r.principal_power_status = "ok";
    r.principal_power_deviation = (principal - r.power).max_abs();
  } catch (const NumericalError& e) {
    r.principal_power_status = e.what();
  }
  r.equivalence = check_equivalence(r.power, x0, f, window);
  return r;
}

Json to_json(const ThirdOrderReport& r) {
  Json j;
  j["demo"] = "thirdorder";
  j["beta"] = r.beta;
  j["alpha"] = r.alpha;
  j["forcing"] = r.forcing;
  j["matrix_power"] = matrix_to_json(r.power);
  Json k;
  k["k0"] = r.k0;
  k["k1"] = r.k1;
  k["k2"] = r.k2;
  k["max_identity_residual"] = r.k_identity_max_residual;
  j["k_coefficients"] = std::move(k);
  j["trace"] = format_complex(r.trace);
  j["expected_trace"] = format_complex(r.expected_trace);
  j["reduction"] = scalar_reduction_to_json(r.reduction);
  j["coefficients"] = coefficient_table_to_json(r.table);
  j["discrepancy"] = r.discrepancy;
  Json principal;
  principal["status"] = r.principal_power_status;
  if (r.principal_power_deviation)
    principal["max_deviation"] = *r.principal_power_deviation;
  else
    principal["max_deviation"] = nullptr;
  j["principal_power"] = std::move(principal);
  j["equivalence"] = equivalence_to_json(r.equivalence);
  return j;
}

// ---------------------------------------------------------------- cascade

ComplexMatrix cascade_matrix(double r0, double v1, double v2, double v3) {
  if (!(r0 > 0.0)) throw DomainError("r0 must be positive");
  if (!(v1 > 0.0 && v1 <= v2 && v2 <= v3))
    throw DomainError("volumes must satisfy 0 < v1 <= v2 <= v3");
  return {{-r0 / v1, 0.0, 0.0}, {r0 / v1, -r0 / v2, 0.0}, {0.0, r0 / v2, -r0 / v3}};
}

CascadeReport demo_cascade(double r0, double v1, double v2, double v3, const ComplexVector& x0,
                           const Window& window, const Tolerances& tol) {
  check_window(window);
  if (x0.size() != 3) throw DimensionError("cascade needs three initial salt amounts");

  CascadeReport r;
  r.r0 = r0;
  r.v1 = v1;
  r.v2 = v2;
  r.v3 = v3;
  r.matrix = cascade_matrix(r0, v1, v2, v3);
  r.char_poly = chz::char_poly(r.matrix);

  const double s1 = 1.0 / v1 + 1.0 / v2 + 1.0 / v3;
  const double s2 = 1.0 / (v1 * v1) + 1.0 / (v2 * v2) + 1.0 / (v3 * v3);
  const double top = r0 * s1;
  const double middle = r0 * r0 / 2.0 * (s1 * s1 - s2);
  const double bottom = r0 * r0 * r0 / (v1 * v2 * v3);
  r.published_literal = {-top, middle, -bottom};
  r.table = {
      row("a_2", r.char_poly.coeffs[2], top, tol),
      row("a_1", r.char_poly.coeffs[1], middle, tol),
      row("a_0", r.char_poly.coeffs[0], bottom, tol),
  };
  r.coefficients_match = !any_mismatch(r.table);
  r.published_sign_discrepancy = false;
  for (std::size_t i = 0; i < 3; ++i) {
    const Complex computed = r.char_poly.coeffs[2 - i];
    const Complex literal = r.published_literal[i];
    if (std::abs(computed - literal) > tol.relative * std::max(1.0, std::abs(literal)))
      r.published_sign_discrepancy = true;
  }

  r.eigenvalues = chz::eigenvalues(r.matrix);
  r.expected_eigenvalues = {-r0 / v1, -r0 / v2, -r0 / v3};
  r.eigenvalue_error = 0.0;
  for (const auto& expected : r.expected_eigenvalues) {
    double nearest = INFINITY;
    for (const auto& got : r.eigenvalues) nearest = std::min(nearest, std::abs(got - expected));
    r.eigenvalue_error = std::max(r.eigenvalue_error, nearest);
  }

  const auto traj = integrate_system(
      {r.matrix, ForcingSpec::zero(3), x0, window.tau, window.t_end, window.h});
  auto total = [](const ComplexVector& s) { return (s[0] + s[1] + s[2]).real(); };
  r.max_total_salt_increase = 0.0;
  for (std::size_t i = 1; i < traj.size(); ++i)
    r.max_total_salt_increase =
        std::max(r.max_total_salt_increase, total(traj.states[i]) - total(traj.states[i - 1]));
  r.total_salt_non_increasing = r.max_total_salt_increase <= 1e-9;
  r.final_amounts.assign(traj.states.back().begin(), traj.states.back().end());

  const std::size_t tail_start = traj.size() - traj.size() / 5;
  r.tail_monotone = true;
  for (std::size_t i = std::max<std::size_t>(tail_start, 1); i < traj.size(); ++i)
    for (std::size_t c = 0; c < 3; ++c)
      if (traj.states[i][c].real() > traj.states[i - 1][c].real() + 1e-12) r.tail_monotone = false;
  const double initial_total = std::abs(total(traj.states.front()));
  r.tail_decayed = std::abs(total(traj.states.back())) <= 1e-3 * std::max(initial_total, 1e-300);
  return r;
}

Json to_json(const CascadeReport& r) {
  Json j;
  j["demo"] = "cascade";
  j["r0"] = r.r0;
  j["volumes"] = {r.v1, r.v2, r.v3};
  j["matrix"] = matrix_to_json(r.matrix);
  j["char_poly"] = complex_array_to_json(r.char_poly.coeffs);
  j["published_literal"] = complex_array_to_json(r.published_literal);
  j["coefficients"] = coefficient_table_to_json(r.table);
  j["coefficients_match"] = r.coefficients_match;
  j["published_sign_discrepancy"] = r.published_sign_discrepancy;
  j["eigenvalues"] = complex_array_to_json(r.eigenvalues);
  j["expected_eigenvalues"] = complex_array_to_json(r.expected_eigenvalues);
  j["eigenvalue_error"] = r.eigenvalue_error;
  j["max_total_salt_increase"] = r.max_total_salt_increase;
  j["total_salt_non_increasing"] = r.total_salt_non_increasing;
  j["final_amounts"] = complex_array_to_json(r.final_amounts);
  j["tail_monotone"] = r.tail_monotone;
  j["tail_decayed"] = r.tail_decayed;
  return j;
}

}  // namespace chz
