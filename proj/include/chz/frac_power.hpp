#pragma once

#include <string>
#include <string_view>

#include "chz/matrix_core.hpp"

namespace chz {

enum class FracMethod { eig, integral, explicit2x2, companion3 };

/// "eig", "integral", "explicit2x2", "companion3".
FracMethod parse_frac_method(std::string_view name);
std::string_view to_string(FracMethod method);

struct FracPowerRequest {
  ComplexMatrix a;
  double alpha;
  FracMethod method;
};

/// k_{α,j} = (2 cos(2π(α+j)/3) + 1) / 3.
struct KCoefficients {
  double alpha;
  double k0, k1, k2;
};

KCoefficients k_coeffs(double alpha);

/// Residuals of the identities the k_{α,j} satisfy; all vanish in exact arithmetic.
struct KIdentityResiduals {
  double sum_minus_one;     // k0 + k1 + k2 - 1
  double square_k0;         // k0^2 - k1 k2 - k0
  double square_k1;         // k1^2 - k0 k2 - k1
  double square_k2;         // k2^2 - k0 k1 - k2
  double det_minus_one;     // det[[-k0,k2,-k1],[k1,-k0,k2],[-k2,k1,-k0]] - 1
  double max_abs() const;
};

KIdentityResiduals k_identity_residuals(const KCoefficients& k);

/// Λ_ω = [[0, 1], [-ω², 0]].
ComplexMatrix oscillator_matrix(double omega);
/// Λ_β = [[0, 1, 0], [0, 0, 1], [-β, 0, 0]].
ComplexMatrix third_order_matrix(double beta);

/// Principal logarithm through the eigendecomposition. Rejects singular matrices,
/// eigenvalues on the closed negative real axis and numerically defective matrices.
ComplexMatrix principal_log(const ComplexMatrix& a);

/// A^α = V diag(λ^α) V^-1 on the principal branch, 0 < α <= 1.
ComplexMatrix frac_power_eig(const ComplexMatrix& a, double alpha);

/// A^α = (sin απ / π) ∫_0^∞ λ^{α-1} A (λI + A)^{-1} dλ by composite Gauss-Legendre with
/// panel doubling. Requires the spectrum in the open right half-plane and 0 < α < 1.
ComplexMatrix frac_power_integral(const ComplexMatrix& a, double alpha);

/// Closed form for [[a, b], [c, a]] with bc < 0.
ComplexMatrix frac_power_2x2(double a, double b, double c, double alpha);

/// The tabulated 3x3 matrix built from k_{α,j} and powers of β for the companion Λ_β.
ComplexMatrix companion3_frac_power(double beta, double alpha);

/// Dispatches on request.method after checking the matrix shape the method needs.
/// Shape mismatches raise DomainError.
ComplexMatrix frac_power(const FracPowerRequest& request);

}  // namespace chz
