#include <doctest.h>

#include <cmath>
#include <random>

#include "chz/matrix_core.hpp"
#include "test_support.hpp"

using namespace chz;
using chz::testing::max_abs_diff;

TEST_SUITE("matrix_core") {

TEST_CASE("construction rejects bad shapes") {
  CHECK_THROWS_AS(ComplexMatrix(0), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST_CASE("trace of small matrices") {
  CHECK(trace(ComplexMatrix{{0.0, 1.0}, {-4.0, 0.0}}) == Complex(0.0));
  CHECK(trace(ComplexMatrix::identity(3)) == Complex(3.0));
  CHECK(trace(ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}) == Complex(5.0));
}

TEST_CASE("determinant") {
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(std::abs(determinant(ComplexMatrix::identity(n)) - 1.0) < 1e-15);
  CHECK(std::abs(determinant(ComplexMatrix{{0.0, 1.0}, {-4.0, 0.0}}) - 4.0) < 1e-14);
  CHECK(determinant(ComplexMatrix{{1.0, 2.0}, {2.0, 4.0}}) == Complex(0.0));

  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const auto a = chz::testing::random_disk_matrix(3, rng);
    const auto a2 = a * a;
    const Complex t1 = trace(a), t2 = trace(a2), t3 = trace(a2 * a);
    const Complex expected = (t1 * t1 * t1 - 3.0 * t1 * t2 + 2.0 * t3) / 6.0;
    CHECK(std::abs(determinant(a) - expected) < 1e-12);
  }
}

TEST_CASE("mat_mul") {
  std::mt19937_64 rng(3);
  const auto m = chz::testing::random_disk_matrix(4, rng);
  const auto id = ComplexMatrix::identity(4);
  CHECK(max_abs_diff(mat_mul(m, id), m) == 0.0);
  CHECK(max_abs_diff(mat_mul(id, m), m) == 0.0);
  const ComplexMatrix nil{{0.0, 1.0}, {0.0, 0.0}};
  CHECK(mat_mul(nil, nil).max_abs() == 0.0);
  CHECK_THROWS_AS(mat_mul(m, ComplexMatrix::identity(3)), DimensionError);
}

TEST_CASE("trace is invariant under swapping factors") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const auto m = chz::testing::random_disk_matrix(5, rng);
    const auto n = chz::testing::random_disk_matrix(5, rng);
    CHECK(std::abs(trace(mat_mul(m, n)) - trace(mat_mul(n, m))) < 1e-10);
  }
}

TEST_CASE("exterior_trace") {
  const ComplexMatrix osc{{0.0, 1.0}, {-4.0, 0.0}};
  CHECK(exterior_trace(osc, 0) == Complex(1.0));
  CHECK(exterior_trace(osc, 1) == trace(osc));
  CHECK(std::abs(exterior_trace(osc, 2) - 4.0) < 1e-14);
  CHECK(std::abs(exterior_trace(osc, 2) - determinant(osc)) < 1e-14);
  CHECK_THROWS_AS(exterior_trace(osc, 3), DomainError);

  std::mt19937_64 rng(5);
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto a = chz::testing::random_disk_matrix(n, rng);
    CHECK(std::abs(exterior_trace(a, n) - determinant(a)) < 1e-10);
  }
}

TEST_CASE("char_poly") {
  const auto p = char_poly(ComplexMatrix{{0.0, 1.0}, {-4.0, 0.0}});
  REQUIRE(p.degree() == 2);
  CHECK(std::abs(p.coeffs[1]) < 1e-15);
  CHECK(std::abs(p.coeffs[0] - 4.0) < 1e-14);

  const auto q = char_poly(ComplexMatrix::identity(2));
  CHECK(std::abs(q.coeffs[1] + 2.0) < 1e-15);
  CHECK(std::abs(q.coeffs[0] - 1.0) < 1e-15);

  SUBCASE("brine cascade") {
    const ComplexMatrix c{{-1.0, 0.0, 0.0}, {1.0, -0.5, 0.0}, {0.0, 0.5, -1.0 / 3.0}};
    const auto r = char_poly(c);
    const double s1 = 1.0 + 0.5 + 1.0 / 3.0;
    const double s2 = 1.0 + 0.25 + 1.0 / 9.0;
    CHECK(std::abs(r.coeffs[2] - s1) < 1e-12);
    CHECK(std::abs(r.coeffs[1] - (s1 * s1 - s2) / 2.0) < 1e-12);
    CHECK(std::abs(r.coeffs[0] - 1.0 / 6.0) < 1e-12);
  }

  SUBCASE("two by two trace identities") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 50; ++rep) {
      const auto a = chz::testing::random_disk_matrix(2, rng);
      const auto c = char_poly(a);
      const Complex t = trace(a);
      CHECK(std::abs(c.coeffs[1] + t) < 1e-10);
      CHECK(std::abs(c.coeffs[0] - (t * t - trace(a * a)) / 2.0) < 1e-10);
    }
  }

  SUBCASE("three by three determinant identity") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 50; ++rep) {
      const auto a = chz::testing::random_disk_matrix(3, rng);
      const auto a2 = a * a;
      const Complex t1 = trace(a), t2 = trace(a2), t3 = trace(a2 * a);
      const Complex a0 = -(t1 * t1 * t1 - 3.0 * t1 * t2 + 2.0 * t3) / 6.0;
      CHECK(std::abs(char_poly(a).coeffs[0] - a0) < 1e-10);
    }
  }

  SUBCASE("matches interpolation of det(λI - A)") {
    std::mt19937_64 rng(19);
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto a = chz::testing::random_disk_matrix(n, rng);
      const auto c = char_poly(a).coeffs;
      const auto oracle = chz::testing::interpolated_char_poly(a);
      for (std::size_t k = 0; k < n; ++k)
        CHECK(std::abs(c[k] - oracle[k]) <= 1e-8 * std::max(1.0, std::abs(oracle[k])));
    }
  }

  CHECK_THROWS_AS(char_poly(ComplexMatrix(kMaxTraceDimension + 1)), DomainError);
}

TEST_CASE("poly_eval_matrix") {
  std::mt19937_64 rng(23);
  const auto a = chz::testing::random_disk_matrix(4, rng);
  const std::vector<Complex> identity_poly{0.0, 1.0};
  CHECK(max_abs_diff(poly_eval_matrix(identity_poly, a), a) < 1e-15);

  const ComplexMatrix osc{{0.0, 1.0}, {-4.0, 0.0}};
  const std::vector<Complex> p{4.0, 0.0, 1.0};
  CHECK(poly_eval_matrix(p, osc).max_abs() < 1e-14);

  for (int rep = 0; rep < 20; ++rep) {
    const auto b = chz::testing::random_disk_matrix(4, rng);
    const double scale = std::max(1.0, std::pow(b.norm_inf(), 4.0));
    CHECK(poly_eval_matrix(char_poly(b), b).norm_inf() <= 1e-8 * scale);
  }
}

TEST_CASE("LU solve, inverse and expm") {
  std::mt19937_64 rng(29);
  const auto a = chz::testing::random_disk_matrix(5, rng) + 3.0 * ComplexMatrix::identity(5);
  CHECK(max_abs_diff(a * inverse(a), ComplexMatrix::identity(5)) < 1e-12);
  CHECK_THROWS_AS(inverse(ComplexMatrix{{1.0, 2.0}, {2.0, 4.0}}), NumericalError);

  const ComplexMatrix rot{{0.0, 1.0}, {-1.0, 0.0}};
  const auto e = expm(2.0 * rot);
  CHECK(std::abs(e(0, 0) - std::cos(2.0)) < 1e-13);
  CHECK(std::abs(e(0, 1) - std::sin(2.0)) < 1e-13);
  CHECK(max_abs_diff(expm(ComplexMatrix(3)), ComplexMatrix::identity(3)) == 0.0);
}

}  // TEST_SUITE
