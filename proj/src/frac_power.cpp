#include "chz/frac_power.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "chz/quadrature.hpp"
#include "chz/spectral.hpp"

namespace chz {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha(double alpha, bool allow_one, const char* where) {
  const bool ok = std::isfinite(alpha) && alpha > 0.0 && (allow_one ? alpha <= 1.0 : alpha < 1.0);
  if (!ok)
    throw DomainError(std::string(where) + ": alpha must lie in (0," + (allow_one ? "1]" : "1)") +
                      ", got " + std::to_string(alpha));
}

std::string describe(Complex z) {
  return std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") + std::to_string(z.imag()) + "i";
}

// Principal-branch eigendecomposition with the singularity and branch-cut guards
// shared by the logarithm and the fractional power.
EigenDecomposition principal_branch_decomposition(const ComplexMatrix& a) {
  auto eig = eigen_decompose(a);
  const double scale = std::max(1.0, a.max_abs());
  for (const auto& lambda : eig.values) {
    if (std::abs(lambda) <= 1e-13 * scale)
      throw NumericalError("matrix is singular (eigenvalue " + describe(lambda) + ")");
    if (lambda.real() < 0.0 && std::abs(lambda.imag()) <= 1e-10 * std::abs(lambda))
      throw NumericalError("eigenvalue " + describe(lambda) +
                           " lies on the principal branch cut (closed negative real axis)");
  }
  return eig;
}

double matrix_diff(const ComplexMatrix& x, const ComplexMatrix& y) { return (x - y).max_abs(); }

}  // namespace

FracMethod parse_frac_method(std::string_view name) {
  if (name == "eig") return FracMethod::eig;
  if (name == "integral") return FracMethod::integral;
  if (name == "explicit2x2") return FracMethod::explicit2x2;
  if (name == "companion3") return FracMethod::companion3;
  throw DomainError("unknown fractional power method '" + std::string(name) +
                    "' (expected eig, integral, explicit2x2 or companion3)");
}

std::string_view to_string(FracMethod method) {
  switch (method) {
    case FracMethod::eig: return "eig";
    case FracMethod::integral: return "integral";
    case FracMethod::explicit2x2: return "explicit2x2";
    case FracMethod::companion3: return "companion3";
  }
  return "unknown";
}

KCoefficients k_coeffs(double alpha) {
  auto k = [alpha](int j) { return (2.0 * std::cos(2.0 * kPi * (alpha + j) / 3.0) + 1.0) / 3.0; };
  return {alpha, k(0), k(1), k(2)};
}

double KIdentityResiduals::max_abs() const {
  return std::max({std::abs(sum_minus_one), std::abs(square_k0), std::abs(square_k1),
                   std::abs(square_k2), std::abs(det_minus_one)});
}

KIdentityResiduals k_identity_residuals(const KCoefficients& k) {
  const ComplexMatrix m{{-k.k0, k.k2, -k.k1}, {k.k1, -k.k0, k.k2}, {-k.k2, k.k1, -k.k0}};
  return {k.k0 + k.k1 + k.k2 - 1.0,
          k.k0 * k.k0 - k.k1 * k.k2 - k.k0,
          k.k1 * k.k1 - k.k0 * k.k2 - k.k1,
          k.k2 * k.k2 - k.k0 * k.k1 - k.k2,
          determinant(m).real() - 1.0};
}

ComplexMatrix oscillator_matrix(double omega) { return {{0.0, 1.0}, {-omega * omega, 0.0}}; }

ComplexMatrix third_order_matrix(double beta) {
  return {{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {-beta, 0.0, 0.0}};
}

ComplexMatrix principal_log(const ComplexMatrix& a) {
  const auto eig = principal_branch_decomposition(a);
  return apply_spectral(eig, [](Complex z) { return std::log(z); });
}

ComplexMatrix frac_power_eig(const ComplexMatrix& a, double alpha) {
  check_alpha(alpha, true, "frac_power_eig");
  if (alpha == 1.0) return a;
  const auto eig = principal_branch_decomposition(a);
  return apply_spectral(eig, [alpha](Complex z) { return std::exp(alpha * std::log(z)); });
}

ComplexMatrix frac_power_integral(const ComplexMatrix& a, double alpha) {
  check_alpha(alpha, false, "frac_power_integral");
  for (const auto& lambda : eigenvalues(a))
    if (!(lambda.real() > 0.0))
      throw DomainError("frac_power_integral needs the spectrum in the open right half-plane; "
                        "eigenvalue " + describe(lambda) + " is not");

  const std::size_t n = a.n();
  const ComplexMatrix identity = ComplexMatrix::identity(n);
  const auto rule = gauss_legendre(20);

  // ∫_0^1 λ^{α-1} A(λI+A)^{-1} dλ with λ = s^{1/α}: integrand (1/α) A(s^{1/α} I + A)^{-1}.
  // ∫_1^∞ with λ = 1/u, u = w^{1/(1-α)}: integrand (1/(1-α)) A(I + uA)^{-1}.
  auto resolvent_term = [&](const ComplexMatrix& shifted) {
    try {
      return LuDecomposition(shifted, 1e-13).solve(a);
    } catch (const NumericalError&) {
      throw NumericalError("frac_power_integral: resolvent is numerically singular at a node");
    }
  };
  auto integrate = [&](std::size_t panels) {
    ComplexMatrix sum(n);
    composite_gauss_legendre(rule, 0.0, 1.0, panels, [&](double s, double w) {
      const double lambda = std::pow(s, 1.0 / alpha);
      sum += (w / alpha) * resolvent_term(lambda * identity + a);
    });
    composite_gauss_legendre(rule, 0.0, 1.0, panels, [&](double v, double w) {
      const double u = std::pow(v, 1.0 / (1.0 - alpha));
      sum += (w / (1.0 - alpha)) * resolvent_term(identity + u * a);
    });
    return (std::sin(alpha * kPi) / kPi) * sum;
  };

  ComplexMatrix previous = integrate(1);
  for (std::size_t panels = 2; panels <= 4096; panels *= 2) {
    ComplexMatrix current = integrate(panels);
    if (matrix_diff(current, previous) < 1e-8 * std::max(1.0, current.max_abs())) return current;
    previous = std::move(current);
  }
  throw NumericalError("frac_power_integral: quadrature did not converge");
}

ComplexMatrix frac_power_2x2(double a, double b, double c, double alpha) {
  if (!(b * c < 0.0))
    throw DomainError("frac_power_2x2 needs bc < 0, got bc = " + std::to_string(b * c));
  const double d = std::sqrt(-b * c);
  const double r = std::hypot(a, d);
  const double theta = std::atan2(d, a);
  const double scale = std::pow(r, alpha) / d;
  const double cs = std::cos(alpha * theta), sn = std::sin(alpha * theta);
  return {{scale * d * cs, scale * b * sn}, {scale * c * sn, scale * d * cs}};
}

ComplexMatrix companion3_frac_power(double beta, double alpha) {
  if (!(beta > 0.0)) throw DomainError("companion3_frac_power needs beta > 0");
  check_alpha(alpha, true, "companion3_frac_power");
  const auto k = k_coeffs(alpha);
  const double p0 = std::pow(beta, alpha / 3.0);
  const double pm2 = std::pow(beta, (alpha - 2.0) / 3.0);
  const double p1 = std::pow(beta, (alpha + 1.0) / 3.0);
  const double p4 = std::pow(beta, (alpha + 4.0) / 3.0);
  return {{-k.k0 * p0, k.k2 * pm2, -k.k1 * p1},
          {k.k1 * p4, -k.k0 * p0, k.k2 * pm2},
          {-k.k2 * p1, k.k1 * p4, -k.k0 * p0}};
}

ComplexMatrix frac_power(const FracPowerRequest& request) {
  const auto& a = request.a;
  check_alpha(request.alpha, true, "frac_power");
  switch (request.method) {
    case FracMethod::eig:
      return frac_power_eig(a, request.alpha);
    case FracMethod::integral:
      if (request.alpha == 1.0) return a;
      return frac_power_integral(a, request.alpha);
    case FracMethod::explicit2x2: {
      const double tol = 1e-12 * std::max(1.0, a.max_abs());
      if (a.n() != 2 || !a.is_real(tol) || std::abs(a(0, 0) - a(1, 1)) > tol ||
          !(a(0, 1).real() * a(1, 0).real() < 0.0))
        throw DomainError("explicit2x2 needs a real matrix [[a,b],[c,a]] with bc < 0");
      return frac_power_2x2(a(0, 0).real(), a(0, 1).real(), a(1, 0).real(), request.alpha);
    }
    case FracMethod::companion3: {
      const double tol = 1e-12 * std::max(1.0, a.max_abs());
      bool shape = a.n() == 3 && a.is_real(tol);
      if (shape) {
        const ComplexMatrix expected = third_order_matrix(-a(2, 0).real());
        shape = matrix_diff(a, expected) <= tol && -a(2, 0).real() > 0.0;
      }
      if (!shape) throw DomainError("companion3 needs [[0,1,0],[0,0,1],[-beta,0,0]] with beta > 0");
      return companion3_frac_power(-a(2, 0).real(), request.alpha);
    }
  }
  throw DomainError("unknown fractional power method");
}

}  // namespace chz
