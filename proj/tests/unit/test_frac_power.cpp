#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chz/frac_power.hpp"
#include "chz/spectral.hpp"
#include "test_support.hpp"

using namespace chz;
using chz::testing::max_abs_diff;
using chz::testing::rel_diff;

namespace {

constexpr double kPi = std::numbers::pi;

// Random [[a, b], [c, a]] with bc < 0.
ComplexMatrix random_rotation_like(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0), mag(0.1, 2.0);
  const double a = u(rng), b = mag(rng), c = -mag(rng);
  return rng() % 2 ? ComplexMatrix{{a, b}, {c, a}} : ComplexMatrix{{a, -b}, {-c, a}};
}

}  // namespace

TEST_SUITE("frac_power") {

TEST_CASE("principal logarithm") {
  CHECK(principal_log(ComplexMatrix::identity(3)).max_abs() < 1e-15);
  const Complex d[] = {std::exp(1.0), std::exp(2.0)};
  const auto l = principal_log(ComplexMatrix::diagonal(d));
  CHECK(std::abs(l(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(l(1, 1) - 2.0) < 1e-14);

  const auto log_osc = principal_log(oscillator_matrix(2.0));
  const auto mu = eigenvalues(log_osc);
  for (const auto& m : mu) {
    CHECK(std::abs(m.real() - std::log(2.0)) < 1e-12);
    CHECK(std::abs(std::abs(m.imag()) - kPi / 2.0) < 1e-12);
  }

  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 20; ++rep) {
    const auto a = chz::testing::random_disk_matrix(3, rng) + 1.5 * ComplexMatrix::identity(3);
    const auto la = principal_log(a);
    CHECK(rel_diff(expm(la), a) < 1e-8);
    for (const auto& m : eigenvalues(la)) {
      CHECK(m.imag() > -kPi);
      CHECK(m.imag() <= kPi);
    }
  }

  CHECK_THROWS_AS(principal_log(ComplexMatrix{{-1.0, 0.0}, {0.0, 2.0}}), NumericalError);
  CHECK_THROWS_AS(principal_log(ComplexMatrix{{0.0, 0.0}, {0.0, 2.0}}), NumericalError);
  CHECK_THROWS_AS(principal_log(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}), NumericalError);
}

TEST_CASE("eigendecomposition route") {
  std::mt19937_64 rng(67);
  const auto a = chz::testing::random_disk_matrix(3, rng) + 2.0 * ComplexMatrix::identity(3);
  CHECK(max_abs_diff(frac_power_eig(a, 1.0), a) < 1e-10);
  const Complex d[] = {4.0, 9.0};
  const auto r = frac_power_eig(ComplexMatrix::diagonal(d), 0.5);
  CHECK(std::abs(r(0, 0) - 2.0) < 1e-14);
  CHECK(std::abs(r(1, 1) - 3.0) < 1e-14);
  CHECK_THROWS_AS(frac_power_eig(a, 0.0), DomainError);
  CHECK_THROWS_AS(frac_power_eig(a, 1.5), DomainError);

  SUBCASE("semigroup") {
    for (double alpha : {0.1, 0.3, 0.5}) {
      for (double beta : {0.2, 0.4}) {
        const auto lhs = frac_power_eig(a, alpha) * frac_power_eig(a, beta);
        CHECK(rel_diff(lhs, frac_power_eig(a, alpha + beta)) < 1e-8);
      }
    }
  }
  SUBCASE("continuity at one") {
    double previous = INFINITY;
    for (double alpha : {0.9, 0.99, 0.999}) {
      const double gap = (frac_power_eig(a, alpha) - a).norm_inf();
      CHECK(gap < previous);
      previous = gap;
    }
    CHECK(previous < 1e-2);
  }
}

TEST_CASE("integral route") {
  const Complex four[] = {4.0};
  CHECK(std::abs(frac_power_integral(ComplexMatrix::diagonal(four), 0.5)(0, 0) - 2.0) < 1e-6);
  CHECK(max_abs_diff(frac_power_integral(ComplexMatrix::identity(3), 0.3),
                     ComplexMatrix::identity(3)) < 1e-6);

  std::mt19937_64 rng(71);
  for (int rep = 0; rep < 5; ++rep) {
    const auto s = chz::testing::random_spd(3, rng);
    const auto root = frac_power_integral(s, 0.5);
    CHECK(rel_diff(root * root, s) < 1e-5);
    for (double alpha : {0.05, 0.25, 0.75, 0.95})
      CHECK(rel_diff(frac_power_integral(s, alpha), frac_power_eig(s, alpha)) < 1e-5);
  }

  CHECK_THROWS_AS(frac_power_integral(oscillator_matrix(1.0), 0.5), DomainError);
  CHECK_THROWS_AS(frac_power_integral(ComplexMatrix::identity(2), 1.0), DomainError);
}

TEST_CASE("closed 2x2 form") {
  for (double omega : {0.5, 1.0, 2.0}) {
    for (double alpha : {0.2, 0.5, 0.8}) {
      const auto m = frac_power_2x2(0.0, 1.0, -omega * omega, alpha);
      const double s = std::pow(omega, alpha - 1.0);
      const double c = std::cos(alpha * kPi / 2.0), sn = std::sin(alpha * kPi / 2.0);
      const ComplexMatrix expected{{s * omega * c, s * sn}, {-s * omega * omega * sn, s * omega * c}};
      CHECK(max_abs_diff(m, expected) < 1e-13);
      CHECK(max_abs_diff(m, frac_power_eig(oscillator_matrix(omega), alpha)) < 1e-9);
    }
  }
  CHECK(max_abs_diff(frac_power_2x2(0.3, 2.0, -0.5, 1.0), ComplexMatrix{{0.3, 2.0}, {-0.5, 0.3}}) <
        1e-14);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(frac_power_2x2(0.0, 1.0, -1.0, 0.5), ComplexMatrix{{h, h}, {-h, h}}) < 1e-15);
  CHECK_THROWS_AS(frac_power_2x2(0.0, 1.0, 1.0, 0.5), DomainError);

  std::mt19937_64 rng(73);
  for (int rep = 0; rep < 20; ++rep) {
    const auto m = random_rotation_like(rng);
    const double alpha = 0.1 + 0.8 * static_cast<double>(rep) / 19.0;
    const auto closed = frac_power({m, alpha, FracMethod::explicit2x2});
    CHECK(rel_diff(closed, frac_power_eig(m, alpha)) < 1e-9);
  }
}

TEST_CASE("k coefficients") {
  const auto k0 = k_coeffs(0.0);
  CHECK(std::abs(k0.k0 - 1.0) < 1e-15);
  CHECK(std::abs(k0.k1) < 1e-15);
  CHECK(std::abs(k0.k2) < 1e-15);
  for (int i = 1; i <= 9; ++i) {
    const auto k = k_coeffs(0.1 * i);
    CHECK(std::abs(k.k0 + k.k1 + k.k2 - 1.0) < 1e-14);
  }
  const auto k = k_coeffs(0.37);
  CHECK(std::abs(k.k0 * k.k0 - k.k1 * k.k2 - k.k0) < 1e-14);
  const auto r = k_identity_residuals(k);
  CHECK(std::abs(r.square_k1) < 1e-14);
  CHECK(std::abs(r.square_k2) < 1e-14);
}

TEST_CASE("tabulated third-order power") {
  const double alpha = 0.4, beta = 2.0;
  const auto m = companion3_frac_power(beta, alpha);
  const auto k = k_coeffs(alpha);
  CHECK(std::abs(m(0, 0) + k.k0 * std::pow(beta, alpha / 3.0)) < 1e-15);
  CHECK(std::abs(trace(m) + 3.0 * k.k0 * std::pow(beta, alpha / 3.0)) < 1e-14);
  // At α = 1 with β = 1 every β power is 1 and the table collapses to Λ_1.
  CHECK(max_abs_diff(companion3_frac_power(1.0, 1.0), third_order_matrix(1.0)) < 1e-15);
  CHECK_THROWS_AS(companion3_frac_power(0.0, 0.5), DomainError);
  // Λ_β has the real eigenvalue -β^{1/3}, so the principal branch is unavailable.
  CHECK_THROWS_AS(frac_power_eig(third_order_matrix(1.0), 0.5), NumericalError);
}

TEST_CASE("dispatcher shape checks") {
  const auto osc = oscillator_matrix(2.0);
  CHECK(max_abs_diff(frac_power({osc, 0.5, FracMethod::explicit2x2}),
                     frac_power_2x2(0.0, 1.0, -4.0, 0.5)) == 0.0);
  CHECK_THROWS_AS(frac_power({ComplexMatrix::identity(3), 0.5, FracMethod::explicit2x2}),
                  DomainError);
  CHECK_THROWS_AS(frac_power({ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}}, 0.5, FracMethod::explicit2x2}),
                  DomainError);
  CHECK_THROWS_AS(frac_power({osc, 0.5, FracMethod::companion3}), DomainError);
  CHECK_THROWS_AS(frac_power({osc, 0.5, FracMethod::integral}), DomainError);
  CHECK(max_abs_diff(frac_power({third_order_matrix(2.0), 0.5, FracMethod::companion3}),
                     companion3_frac_power(2.0, 0.5)) == 0.0);
  CHECK(parse_frac_method("integral") == FracMethod::integral);
  CHECK(to_string(FracMethod::companion3) == "companion3");
  CHECK_THROWS_AS(parse_frac_method("schur"), DomainError);
}

}  // TEST_SUITE
