#include "chz/ode_sim.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>

namespace chz {

namespace {

using Rhs = std::function<ComplexVector(double, const ComplexVector&)>;

std::size_t step_count(double tau, double t_end, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("step size h must be positive");
  if (!(t_end > tau)) throw DomainError("t_end must exceed tau");
  const double steps = std::ceil((t_end - tau) / h - 1e-9);
  if (steps > 1e9) throw DomainError("too many integration steps");
  return static_cast<std::size_t>(std::max(steps, 1.0));
}

Trajectory rk4(const Rhs& g, const ComplexVector& y0, double tau, double h, std::size_t steps) {
  Trajectory traj;
  traj.h = h;
  traj.t.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.t.push_back(tau);
  traj.states.push_back(y0);
  ComplexVector y = y0;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = tau + static_cast<double>(i) * h;
    const ComplexVector k1 = g(t, y);
    const ComplexVector k2 = g(t + 0.5 * h, y + (0.5 * h) * k1);
    const ComplexVector k3 = g(t + 0.5 * h, y + (0.5 * h) * k2);
    const ComplexVector k4 = g(t + h, y + h * k3);
    ComplexVector incr = k1;
    incr += 2.0 * k2;
    incr += 2.0 * k3;
    incr += k4;
    y += (h / 6.0) * incr;
    const double t_next = tau + static_cast<double>(i + 1) * h;
    if (!y.all_finite() || y.norm_inf() > kBlowUpThreshold) {
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof buf, t_next, std::chars_format::general, 6);
      throw BlowUpError(t_next, "state blew up at t = " + std::string(buf, res.ptr));
    }
    traj.t.push_back(t_next);
    traj.states.push_back(y);
  }
  return traj;
}

}  // namespace

Trajectory integrate_system(const SimProblem& p) {
  const std::size_t n = p.a.n();
  if (p.x0.size() != n || p.f.n() != n) throw DimensionError("integrate_system: dimension mismatch");
  if (!p.x0.all_finite()) throw DomainError("initial state is not finite");
  const std::size_t steps = step_count(p.tau, p.t_end, p.h);
  const Rhs g = [&p](double t, const ComplexVector& x) { return p.a * x + p.f(t, x); };
  return rk4(g, p.x0, p.tau, p.h, steps);
}

Trajectory integrate_scalar(const ScalarReduction& s, const ScalarForcing& f, double tau,
                            double t_end, double h) {
  const std::size_t order = s.order;
  if (order == 0 || s.lhs_coeffs.size() != order)
    throw DimensionError("scalar reduction coefficients do not match its order");
  if (s.initial_values.size() != order)
    throw DimensionError("scalar reduction needs " + std::to_string(order) + " initial values");
  for (const auto& term : s.rhs_terms) {
    if (term.derivative_order >= order)
      throw DomainError("forcing derivative order must stay below the equation order");
    if (term.derivative_order > 0 && (term.derivative_order > f.max_order || !f.total_derivative))
      throw DomainError("reduction needs d^" + std::to_string(term.derivative_order) +
                        "/dt f but forcing '" + f.name + "' supplies no such derivative");
  }
  const std::size_t steps = step_count(tau, t_end, h);
  const Rhs g = [&s, &f, order](double t, const ComplexVector& y) {
    ComplexVector dy(order);
    for (std::size_t k = 0; k + 1 < order; ++k) dy[k] = y[k + 1];
    Complex top = 0.0;
    for (std::size_t k = 0; k < order; ++k) top -= s.lhs_coeffs[k] * y[k];
    for (const auto& term : s.rhs_terms) {
      if (term.multiplier == Complex{}) continue;
      top += term.multiplier *
             f.derivative(term.derivative_order, t, y.values().subspan(0, term.derivative_order + 1));
    }
    dy[order - 1] = top;
    return dy;
  };
  return rk4(g, ComplexVector(s.initial_values), tau, h, steps);
}

double compare_components(const Trajectory& t1, const Trajectory& t2, std::size_t i,
                          std::size_t j) {
  if (t1.size() != t2.size()) throw DimensionError("trajectories have different lengths");
  for (std::size_t k = 0; k < t1.size(); ++k)
    if (std::abs(t1.t[k] - t2.t[k]) > 1e-12 * std::max(1.0, std::abs(t1.t[k])))
      throw DimensionError("trajectories are sampled on different grids");
  if (i >= t1.dim() || j >= t2.dim()) throw DimensionError("component index out of range");
  double worst = 0.0;
  for (std::size_t k = 0; k < t1.size(); ++k)
    worst = std::max(worst, std::abs(t1.states[k][i] - t2.states[k][j]));
  return worst;
}

double relative_component_deviation(const Trajectory& t1, const Trajectory& t2, std::size_t i,
                                    std::size_t j) {
  const double dev = compare_components(t1, t2, i, j);
  double sup = 0.0;
  for (const auto& s : t1.states) sup = std::max(sup, std::abs(s[i]));
  return sup > 0.0 ? dev / sup : dev;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "t";
  for (std::size_t c = 1; c <= traj.dim(); ++c) out << ",re(x" << c << "),im(x" << c << ")";
  out << '\n';
  char buf[40];
  auto put = [&](double v) {
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    out.write(buf, res.ptr - buf);
  };
  for (std::size_t k = 0; k < traj.size(); ++k) {
    put(traj.t[k]);
    for (const auto& v : traj.states[k]) {
      out << ',';
      put(v.real());
      out << ',';
      put(v.imag());
    }
    out << '\n';
  }
}

}  // namespace chz
