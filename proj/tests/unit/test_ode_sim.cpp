#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "chz/demos.hpp"
#include "chz/forcing_library.hpp"
#include "chz/frac_power.hpp"
#include "chz/ode_sim.hpp"
#include "test_support.hpp"

using namespace chz;

namespace {

double oscillator_error(double h) {
  const double omega = 2.0;
  const auto traj = integrate_system(
      {oscillator_matrix(omega), ForcingSpec::zero(2), ComplexVector{1.0, 0.0}, 0.0, 10.0, h});
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i)
    worst = std::max(worst, std::abs(traj.states[i][0] - std::cos(omega * traj.t[i])));
  return worst;
}

}  // namespace

TEST_SUITE("ode_sim") {

TEST_CASE("grid layout") {
  const auto traj = integrate_system(
      {ComplexMatrix(2), ForcingSpec::zero(2), ComplexVector{1.0, 2.0}, 1.0, 2.0, 0.1});
  CHECK(traj.size() == 11);
  CHECK(traj.t.back() == doctest::Approx(2.0));
  for (const auto& s : traj.states) CHECK((s - ComplexVector{1.0, 2.0}).norm_inf() == 0.0);
  CHECK_NOTHROW(traj.validate());
}

TEST_CASE("oscillator against cos") {
  CHECK(oscillator_error(1e-3) < 1e-6);
  const double ratio = oscillator_error(2e-2) / oscillator_error(1e-2);
  CHECK(ratio >= 12.0);
}

TEST_CASE("first cascade tank decays exponentially") {
  const double r0 = 1.0, v1 = 2.0;
  const auto c = cascade_matrix(r0, v1, 3.0, 4.0);
  const auto traj =
      integrate_system({c, ForcingSpec::zero(3), ComplexVector{1.0, 0.0, 0.0}, 0.0, 10.0, 1e-3});
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i)
    worst = std::max(worst, std::abs(traj.states[i][0] - std::exp(-r0 * traj.t[i] / v1)));
  CHECK(worst < 1e-6);
}

TEST_CASE("scalar integration") {
  const double omega = 1.3;
  ScalarReduction s;
  s.order = 2;
  s.lhs_coeffs = {omega * omega, 0.0};
  s.rhs_terms = {{1.0, 0}};
  s.initial_values = {1.0, 0.0};
  const auto traj = integrate_scalar(s, forcing_zero(), 0.0, 5.0, 1e-3);
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i)
    worst = std::max(worst, std::abs(traj.states[i][0] - std::cos(omega * traj.t[i])));
  CHECK(worst < 1e-8);

  s.initial_values = {0.0, 0.0};
  CHECK(integrate_scalar(s, forcing_zero(), 0.0, 5.0, 1e-2).states.back().norm_inf() == 0.0);

  ScalarForcing no_derivs{"opaque", [](double, Complex x) { return x; }, nullptr, 0};
  ScalarReduction third;
  third.order = 3;
  third.lhs_coeffs = {1.0, 0.0, 0.0};
  third.rhs_terms = {{1.0, 1}};
  third.initial_values = {1.0, 0.0, 0.0};
  CHECK_THROWS_AS(integrate_scalar(third, no_derivs, 0.0, 1.0, 1e-2), DomainError);
}

TEST_CASE("system and reduced paths agree") {
  SUBCASE("oscillator with sin(x)") {
    const auto a = oscillator_matrix(2.0);
    const ComplexVector x0{1.0, 0.0};
    const auto f = ForcingSpec::structured(2, forcing_sin_x());
    const auto sys = integrate_system({a, f, x0, 0.0, 10.0, 1e-3});
    const auto red = companion_scalar_reduce(a, x0, f, 0.0);
    const auto scalar = integrate_scalar(red, forcing_sin_x(), 0.0, 10.0, 1e-3);
    CHECK(compare_components(sys, scalar, 0, 0) <= 1e-6);

    auto perturbed = red;
    perturbed.initial_values[0] += 1e-3;
    const auto off = integrate_scalar(perturbed, forcing_sin_x(), 0.0, 10.0, 1e-3);
    CHECK(compare_components(sys, off, 0, 0) >= 1e-4);
  }
  SUBCASE("brine cascade third order") {
    const auto c = cascade_matrix(1.0, 1.0, 2.0, 3.0);
    const ComplexVector x0{1.0, 0.0, 0.0};
    const auto f = ForcingSpec::zero(3);
    const auto sys = integrate_system({c, f, x0, 0.0, 5.0, 1e-3});
    const auto red = companion_scalar_reduce(c, x0, f, 0.0);
    const auto scalar = integrate_scalar(red, forcing_zero(), 0.0, 5.0, 1e-3);
    CHECK(compare_components(sys, scalar, 0, 0) <= 1e-6);
    CHECK(compare_components(sys, sys, 1, 1) == 0.0);
  }
}

TEST_CASE("blow-up is reported") {
  const ComplexMatrix a{{0.0, 1.0}, {0.0, 0.0}};
  const auto f = ForcingSpec::structured(2, ScalarForcing{
      "cube", [](double, Complex x) { return x * x * x; }, nullptr, 0});
  try {
    integrate_system({a, f, ComplexVector{1.0, 1.0}, 0.0, 10.0, 1e-3});
    FAIL("expected a blow-up");
  } catch (const BlowUpError& e) {
    CHECK(e.time() > 0.0);
    CHECK(e.time() < 10.0);
  }
}

TEST_CASE("validation") {
  const auto a = oscillator_matrix(1.0);
  CHECK_THROWS_AS(integrate_system({a, ForcingSpec::zero(2), ComplexVector{1.0, 0.0}, 0.0, 1.0, 0.0}),
                  DomainError);
  CHECK_THROWS_AS(integrate_system({a, ForcingSpec::zero(2), ComplexVector{1.0, 0.0}, 1.0, 0.5, 0.1}),
                  DomainError);
  CHECK_THROWS_AS(integrate_system({a, ForcingSpec::zero(3), ComplexVector{1.0, 0.0}, 0.0, 1.0, 0.1}),
                  DimensionError);
  const auto t1 = integrate_system({a, ForcingSpec::zero(2), ComplexVector{1.0, 0.0}, 0.0, 1.0, 0.1});
  const auto t2 = integrate_system({a, ForcingSpec::zero(2), ComplexVector{1.0, 0.0}, 0.0, 1.0, 0.05});
  CHECK_THROWS_AS(compare_components(t1, t2, 0, 0), DimensionError);
  CHECK_THROWS_AS(compare_components(t1, t1, 0, 2), DimensionError);
}

TEST_CASE("trajectory CSV") {
  const auto traj = integrate_system(
      {oscillator_matrix(1.0), ForcingSpec::zero(2), ComplexVector{1.0, 0.0}, 0.0, 0.2, 0.1});
  std::ostringstream out;
  write_trajectory_csv(out, traj);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,re(x1),im(x1),re(x2),im(x2)");
  std::getline(in, line);
  CHECK(line == "0,1,0,0,0");
  std::getline(in, line);
  CHECK(line.rfind("0.10000000000000001,0.99500416666666669,", 0) == 0);
  std::size_t rows = 2;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("forcing library") {
  CHECK(forcing_names().size() == 5);
  CHECK_THROWS_AS(forcing_by_name("tanh"), UnknownNameError);
  // d/dt sin(x(t)) = cos(x) x'
  const auto f = forcing_by_name("sin_x");
  const std::vector<Complex> xs{0.3, 2.0, -1.0};
  CHECK(std::abs(f.derivative(1, 0.0, xs) - std::cos(0.3) * 2.0) < 1e-15);
  CHECK(std::abs(f.derivative(2, 0.0, xs) - (-std::sin(0.3) * 4.0 + std::cos(0.3) * -1.0)) < 1e-15);
  // d²/dt² (t x) = 2x' + t x''
  const auto g = forcing_by_name("t_x");
  CHECK(std::abs(g.derivative(2, 1.5, xs) - (2.0 * 2.0 + 1.5 * -1.0)) < 1e-15);
  const auto s = forcing_by_name("sin_t");
  const std::vector<Complex> xs3{0.3, 2.0, -1.0, 0.5};
  CHECK(std::abs(s.derivative(3, 0.4, xs3) + std::cos(0.4)) < 1e-15);
  const auto c = forcing_by_name("neg_cube");
  CHECK(std::abs(c.derivative(1, 0.0, xs) + 3.0 * 0.09 * 2.0) < 1e-15);
}

}  // TEST_SUITE
