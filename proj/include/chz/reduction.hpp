#pragma once

#include <cstddef>
#include <vector>

#include "chz/forcing.hpp"
#include "chz/json_io.hpp"
#include "chz/matrix_core.hpp"
#include "chz/trajectory.hpp"

namespace chz {

/// The prefix polynomials p_{j,A}(λ) = λ^j + a_{n-1}λ^{j-1} + ... + a_{n-j}, j = 0..n,
/// together with the matrices P_j = p_{j,A}(A) for j = 0..n-1.
struct OperatorFamily {
  std::size_t n = 0;
  std::vector<std::vector<Complex>> polys;  // constant term first; polys[n] = p_A
  std::vector<ComplexMatrix> matrices;      // P_0 = I, ..., P_{n-1}
};

OperatorFamily build_operator_family(const CharPoly& a, const ComplexMatrix& matrix);

/// Scalar-side form of the reduced n-th order equation
///   X^{(n)} + a_{n-1}X^{(n-1)} + ... + a_0 X - sum_{j<n-1} P_j d^{n-j-1}F = P_{n-1} F.
struct ReducedEquation {
  std::size_t n = 0;
  CharPoly a;
  OperatorFamily operators;
  ComplexMatrix rhs_operator{1};                // P_{n-1}
  std::vector<ComplexMatrix> lower_operators;   // P_0..P_{n-2}
};

ReducedEquation reduce(const ComplexMatrix& a);

Json reduced_equation_to_json(const ReducedEquation& eq);

/// [X, X', ..., X^{(k)}] at time t for X' = AX + F, from
///   X^{(m)} = A^m X + sum_{j=0}^{m-1} A^j d^{m-j-1}F(t, X(t)).
std::vector<ComplexVector> derivative_stack(const ComplexMatrix& a, const ComplexVector& x,
                                            const ForcingSpec& f, double t, std::size_t k);

/// X^{(k)}(tau) for the solution through x0 at tau; 1 <= k <= n.
ComplexVector derivative_chain(const ComplexMatrix& a, const ComplexVector& x0,
                               const ForcingSpec& f, double tau, std::size_t k);

enum class DerivativeEstimate { analytic, finite_difference };

struct ResidualSeries {
  std::vector<double> t;
  std::vector<double> residual;  // max-norm of the defect at t
  double max() const;
};

/// Defect of the reduced equation along a sampled trajectory. The analytic mode
/// rebuilds derivatives from each sample through the derivative chain; the
/// finite-difference mode uses second-order central stencils on the samples (and on
/// F evaluated along them) and covers interior points only.
ResidualSeries reduce_residual(const ReducedEquation& eq, const ComplexMatrix& a,
                               const ForcingSpec& f, const Trajectory& traj,
                               DerivativeEstimate mode = DerivativeEstimate::analytic);

/// Weights of the central stencil for the k-th derivative on offsets -p..p (unit
/// spacing), computed with Fornberg's recursion.
std::vector<double> central_difference_weights(std::size_t k, std::size_t p);

/// A term  multiplier * d^{derivative_order}/dt^{derivative_order} f(t, x(t)).
struct RhsTerm {
  Complex multiplier;
  std::size_t derivative_order;
};

/// x^{(order)} + c_{order-1}x^{(order-1)} + ... + c_0 x = sum of rhs_terms,
/// with initial values x(τ), x'(τ), ... .
struct ScalarReduction {
  std::size_t order = 0;
  std::vector<Complex> lhs_coeffs;      // c_0..c_{order-1}
  std::vector<RhsTerm> rhs_terms;
  std::vector<Complex> initial_values;  // x(τ), ..., x^{(order-1)}(τ)
  double tau = 0.0;
};

/// Scalar equation for x_1 when F = e_n f(t, x_1) and n is 2 or 3.
ScalarReduction companion_scalar_reduce(const ComplexMatrix& a, const ComplexVector& x0,
                                        const ForcingSpec& f, double tau);

Json scalar_reduction_to_json(const ScalarReduction& s);

}  // namespace chz
