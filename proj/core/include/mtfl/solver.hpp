#pragma once

#include "mtfl/types.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace mtfl {

/// A constrained smooth convex problem min_{x in G} g(x) over flattened
/// points. `objective` and `gradient` must be defined for every finite
/// point, not only feasible ones; `project` maps any finite point to the
/// nearest point of G and is idempotent. Matrix-valued problems flatten
/// their variables column-major so inner products and norms over the full
/// point coincide with the Frobenius ones.
struct ConstrainedProblem {
  Index dim = 0;
  std::function<double(const Vector&)> objective;
  std::function<Vector(const Vector&)> gradient;
  std::function<Vector(const Vector&)> project;
};

struct SolverConfig {
  double l0 = 1.0;           // initial guess for the step scale gamma
  int max_iterations = 1000;
  double rel_gap_tol = 1e-4;  // stop when the relative objective change
                              // between consecutive iterates drops below this
  int max_linesearch_doublings = 60;
  // When set, replaces the relative-gap rule: stop as soon as the objective
  // reaches this value or below.
  std::optional<double> target_objective;
};

/// One solver iteration: objective after the step, accepted step scale,
/// number of line-search trials, and seconds elapsed since the solve began.
struct TraceEntry {
  double objective = 0.0;
  double gamma = 0.0;
  int linesearch_trials = 0;
  double elapsed_seconds = 0.0;
};

struct SolveResult {
  Vector solution;          // last projected iterate, always feasible
  double final_objective = 0.0;
  std::vector<TraceEntry> trace;  // one entry per iteration
  bool converged = false;
  int iterations = 0;
};

struct LineSearchResult {
  double gamma = 0.0;
  Vector x_next;
  int trials = 0;
  double objective_at_next = 0.0;
};

/// Quadratic model of g around x evaluated at y: the tangent plane at x
/// plus (gamma/2) * norm(y - x)^2.
double model_value(double gamma, const Vector& x, const Vector& y, double g_x,
                   const Vector& grad_x);

/// Doubling line search from `gamma_prev`: tries gamma = 2^j * gamma_prev,
/// takes the projected gradient step of that scale from s, and accepts the
/// first gamma whose step is upper-bounded by the quadratic model. Throws
/// LineSearchFailureError when the doubling budget runs out.
LineSearchResult line_search(const ConstrainedProblem& problem,
                             const Vector& s, double gamma_prev,
                             const SolverConfig& config);

/// Accelerated projected-gradient method for constrained smooth convex
/// optimization: extrapolated search points from the classic momentum
/// recurrence theta_i = (1 + sqrt(1 + 4 theta_{i-1}^2)) / 2, projected
/// steps sized by the doubling line search, O(1/d^2) objective decay.
SolveResult nesterov_solve(const ConstrainedProblem& problem, const Vector& x0,
                           const SolverConfig& config);

/// Same loop without momentum (the search point is the current iterate);
/// used as a comparison baseline.
SolveResult projected_gradient_solve(const ConstrainedProblem& problem,
                                     const Vector& x0,
                                     const SolverConfig& config);

}  // namespace mtfl
