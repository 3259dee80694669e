#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chz/forcing.hpp"
#include "chz/json_io.hpp"
#include "chz/matrix_core.hpp"
#include "chz/reduction.hpp"

namespace chz {

struct Window {
  double tau = 0.0;
  double t_end = 5.0;
  double h = 1e-3;
};

/// One coefficient of a reduced scalar equation next to the published form.
struct CoefficientRow {
  std::string name;
  Complex computed;
  Complex published;
  bool mismatch;
};

Json coefficient_table_to_json(const std::vector<CoefficientRow>& rows);

/// Both integration paths of a structured system: the full system's first component
/// against the scalar reduction.
struct EquivalenceCheck {
  double max_deviation = 0.0;
  double relative_deviation = 0.0;
};

/// Integrates X' = AX + e_n f(t, x_1) and its scalar reduction (n = 2, 3) on the window
/// and compares x_1 with x.
EquivalenceCheck check_equivalence(const ComplexMatrix& a, const ComplexVector& x0,
                                   const ScalarForcing& f, const Window& window);

struct OscillatorReport {
  double omega;
  double alpha;
  std::string forcing;
  ComplexMatrix power{2};  // Λ_ω^α from the closed 2x2 form
  Complex trace;
  Complex det;
  ScalarReduction reduction;
  std::vector<CoefficientRow> table;
  bool discrepancy;
  double damping_coefficient;  // coefficient of x' in the reduced equation
  int damping_sign;
  EquivalenceCheck equivalence;
};

OscillatorReport demo_oscillator(double omega, double alpha, const ScalarForcing& f,
                                 const Window& window, const Tolerances& tol = {});
Json to_json(const OscillatorReport& r);

struct ThirdOrderReport {
  double beta;
  double alpha;
  std::string forcing;
  ComplexMatrix power{3};  // tabulated Λ_β^α
  double k0, k1, k2;
  double k_identity_max_residual;
  Complex trace;
  Complex expected_trace;  // -3 k0 β^{α/3}
  ScalarReduction reduction;
  std::vector<CoefficientRow> table;
  bool discrepancy;
  std::string principal_power_status;             // "ok" or the reason eig failed
  std::optional<double> principal_power_deviation;  // max |tabulated - eig| when available
  EquivalenceCheck equivalence;
};

ThirdOrderReport demo_thirdorder(double beta, double alpha, const ScalarForcing& f,
                                 const Window& window, const Tolerances& tol = {});
Json to_json(const ThirdOrderReport& r);

/// Brine tank cascade matrix C for inflow rate r0 and volumes v1 <= v2 <= v3.
ComplexMatrix cascade_matrix(double r0, double v1, double v2, double v3);

struct CascadeReport {
  double r0;
  double v1, v2, v3;
  ComplexMatrix matrix{3};
  CharPoly char_poly;
  /// Coefficients a_2, a_1, a_0 as printed in the published reduced equation.
  std::vector<Complex> published_literal;
  std::vector<CoefficientRow> table;   // computed vs sign-corrected published magnitudes
  bool coefficients_match;
  bool published_sign_discrepancy;     // literal published signs disagree
  std::vector<Complex> eigenvalues;
  std::vector<Complex> expected_eigenvalues;
  double eigenvalue_error;
  double max_total_salt_increase;  // largest per-step increase of x1+x2+x3
  bool total_salt_non_increasing;
  std::vector<Complex> final_amounts;
  bool tail_monotone;
  bool tail_decayed;
};

CascadeReport demo_cascade(double r0, double v1, double v2, double v3, const ComplexVector& x0,
                           const Window& window, const Tolerances& tol = {});
Json to_json(const CascadeReport& r);

}  // namespace chz
