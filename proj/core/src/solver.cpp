#include "mtfl/solver.hpp"

#include <chrono>
#include <cmath>

namespace mtfl {

namespace {

void check_config(const SolverConfig& config) {
  if (!(config.l0 > 0.0)) {
    throw InvalidInputError("solver: l0 must be > 0");
  }
  if (!(config.rel_gap_tol > 0.0)) {
    throw InvalidInputError("solver: rel_gap_tol must be > 0");
  }
  if (config.max_iterations < 0 || config.max_linesearch_doublings < 0) {
    throw InvalidInputError("solver: iteration budgets must be nonnegative");
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Shared loop for the accelerated and plain variants; `momentum` switches
// the extrapolated search point on or off.
SolveResult solve_loop(const ConstrainedProblem& problem, const Vector& x0,
                       const SolverConfig& config, bool momentum) {
  check_config(config);
  if (x0.size() != problem.dim) {
    throw DimensionMismatchError("solver: starting point has wrong dimension");
  }
  if (!x0.allFinite()) {
    throw NonFiniteError("solver: starting point is not finite");
  }

  const auto start = std::chrono::steady_clock::now();

  SolveResult result;
  result.trace.reserve(static_cast<std::size_t>(config.max_iterations));

  if (config.max_iterations == 0) {
    // degenerate budget: still hand back a feasible point
    result.solution = problem.project(x0);
    result.final_objective = problem.objective(result.solution);
    return result;
  }

  Vector x_prev = x0;
  Vector x_cur = x0;  // x_1 = x_0
  double g_cur = problem.objective(x_cur);
  double theta_pp = 0.0;  // theta_{i-2}
  double theta_p = 1.0;   // theta_{i-1}
  double gamma_prev = config.l0;

  result.solution = x_cur;
  result.final_objective = g_cur;

  for (int i = 1; i <= config.max_iterations; ++i) {
    Vector s;
    if (momentum) {
      const double alpha = (theta_pp - 1.0) / theta_p;
      s = x_cur + alpha * (x_cur - x_prev);
    } else {
      s = x_cur;
    }

    LineSearchResult step = line_search(problem, s, gamma_prev, config);
    const double g_next = step.objective_at_next;
    if (!std::isfinite(g_next)) {
      throw DivergenceError("solver: objective became non-finite at iteration " +
                            std::to_string(i));
    }

    result.trace.push_back(
        {g_next, step.gamma, step.trials, seconds_since(start)});

    bool stop = false;
    if (config.target_objective) {
      stop = g_next <= *config.target_objective;
    } else {
      stop = std::abs(g_next - g_cur) <= config.rel_gap_tol *
                                             std::max(1.0, std::abs(g_cur));
    }

    const double theta = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * theta_p * theta_p));
    theta_pp = theta_p;
    theta_p = theta;
    gamma_prev = step.gamma;
    x_prev = std::move(x_cur);
    x_cur = std::move(step.x_next);
    g_cur = g_next;

    result.solution = x_cur;
    result.final_objective = g_cur;
    result.iterations = i;
    if (stop) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace

double model_value(double gamma, const Vector& x, const Vector& y, double g_x,
                   const Vector& grad_x) {
  if (!(gamma > 0.0)) {
    throw InvalidInputError("model_value: gamma must be > 0");
  }
  const Vector diff = y - x;
  return g_x + grad_x.dot(diff) + 0.5 * gamma * diff.squaredNorm();
}

LineSearchResult line_search(const ConstrainedProblem& problem,
                             const Vector& s, double gamma_prev,
                             const SolverConfig& config) {
  if (!(gamma_prev > 0.0)) {
    throw InvalidInputError("line_search: gamma_prev must be > 0");
  }
  const double g_s = problem.objective(s);
  const Vector grad_s = problem.gradient(s);

  double gamma = gamma_prev;
  for (int j = 0; j <= config.max_linesearch_doublings; ++j, gamma *= 2.0) {
    Vector x_next = problem.project(s - (1.0 / gamma) * grad_s);
    const double g_next = problem.objective(x_next);
    const double model = model_value(gamma, s, x_next, g_s, grad_s);
    // Tiny relative slack so rounding noise near the optimum cannot force
    // spurious doublings when the step and model values coincide.
    if (g_next <= model + 1e-12 * std::abs(g_next)) {
      return {gamma, std::move(x_next), j + 1, g_next};
    }
  }
  throw LineSearchFailureError(
      "line search exceeded " + std::to_string(config.max_linesearch_doublings) +
      " doublings; gradient bug or non-finite data");
}

SolveResult nesterov_solve(const ConstrainedProblem& problem, const Vector& x0,
                           const SolverConfig& config) {
  return solve_loop(problem, x0, config, /*momentum=*/true);
}

SolveResult projected_gradient_solve(const ConstrainedProblem& problem,
                                     const Vector& x0,
                                     const SolverConfig& config) {
  return solve_loop(problem, x0, config, /*momentum=*/false);
}

}  // namespace mtfl
