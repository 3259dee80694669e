#pragma once

#include <iosfwd>

#include "chz/forcing.hpp"
#include "chz/reduction.hpp"
#include "chz/trajectory.hpp"

namespace chz {

/// Sup-norm above which an integration is aborted as a blow-up.
inline constexpr double kBlowUpThreshold = 1e12;

/// X' = AX + F(t, X), X(tau) = x0, sampled every h up to t_end.
struct SimProblem {
  ComplexMatrix a;
  ForcingSpec f;
  ComplexVector x0;
  double tau = 0.0;
  double t_end = 1.0;
  double h = 1e-3;
};

/// Classical fixed-step RK4. The grid is tau + i*h for i = 0..N with N = ceil((t_end-tau)/h).
Trajectory integrate_system(const SimProblem& p);

/// Integrates a scalar reduction as the companion system of
/// x^{(order)} = -sum c_k x^{(k)} + sum m * d^d f(t, x(t)). Component 0 is x.
Trajectory integrate_scalar(const ScalarReduction& s, const ScalarForcing& f, double tau,
                            double t_end, double h);

/// max over samples of |t1.states[.][i] - t2.states[.][j]|.
double compare_components(const Trajectory& t1, const Trajectory& t2, std::size_t i,
                          std::size_t j);

/// compare_components divided by the sup-norm of component i of t1 (when nonzero).
double relative_component_deviation(const Trajectory& t1, const Trajectory& t2, std::size_t i,
                                    std::size_t j);

/// Header "t,re(x1),im(x1),...", one row per sample, 17 significant digits.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

}  // namespace chz
