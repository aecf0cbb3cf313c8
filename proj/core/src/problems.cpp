#include "mtfl/problems.hpp"

#include "mtfl/norms.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace mtfl {

namespace {

void check_spec(const LossFunction* loss, const TaskDataset* dataset) {
  if (loss == nullptr || dataset == nullptr) {
    throw InvalidInputError("problem spec: loss and dataset must be set");
  }
  loss->validate(*dataset);
}

}  // namespace

Vector pack_augmented(const Vector& t, const Matrix& w) {
  Vector x(t.size() + w.size());
  x.head(t.size()) = t;
  x.tail(w.size()) = Eigen::Map<const Vector>(w.data(), w.size());
  return x;
}

AugmentedPoint unpack_augmented(const Vector& x, Index n, Index k) {
  AugmentedPoint p;
  p.t = x.head(n);
  p.w = Eigen::Map<const Matrix>(x.data() + n, n, k);
  return p;
}

Vector pack_weights(const Matrix& w) {
  return Eigen::Map<const Vector>(w.data(), w.size());
}

Matrix unpack_weights(const Vector& x, Index n, Index k) {
  return Eigen::Map<const Matrix>(x.data(), n, k);
}

ConstrainedProblem build_amtfl1(const Amtfl1Spec& spec) {
  check_spec(spec.loss, spec.dataset);
  if (spec.rho < 0.0 || !std::isfinite(spec.rho)) {
    throw InvalidInputError("rho must be finite and >= 0");
  }
  const LossFunction* loss = spec.loss;
  const TaskDataset* data = spec.dataset;
  const Index n = data->n;
  const Index k = data->k;
  const double rho = spec.rho;

  ConstrainedProblem problem;
  problem.dim = n + n * k;
  problem.objective = [loss, data, n, k, rho](const Vector& x) {
    const AugmentedPoint p = unpack_augmented(x, n, k);
    return loss->value(p.w, *data) + rho * p.t.sum();
  };
  problem.gradient = [loss, data, n, k, rho](const Vector& x) {
    const AugmentedPoint p = unpack_augmented(x, n, k);
    Matrix loss_grad;
    loss->value_and_gradient(p.w, *data, loss_grad);
    Vector g(x.size());
    g.head(n).setConstant(rho);
    g.tail(n * k) = pack_weights(loss_grad);
    return g;
  };
  problem.project = [n, k](const Vector& x) {
    const AugmentedPoint p = unpack_augmented(x, n, k);
    const AugmentedPoint projected = project_onto_cones(p.t, p.w);
    return pack_augmented(projected.t, projected.w);
  };
  return problem;
}

ConstrainedProblem build_amtfl2(const Amtfl2Spec& spec, double projection_tol) {
  check_spec(spec.loss, spec.dataset);
  if (!(spec.ball.z > 0.0) || !std::isfinite(spec.ball.z)) {
    throw InvalidInputError("ball radius z must be finite and > 0");
  }
  const LossFunction* loss = spec.loss;
  const TaskDataset* data = spec.dataset;
  const Index n = data->n;
  const Index k = data->k;
  const L21Ball ball = spec.ball;

  ConstrainedProblem problem;
  problem.dim = n * k;
  problem.objective = [loss, data, n, k](const Vector& x) {
    return loss->value(unpack_weights(x, n, k), *data);
  };
  problem.gradient = [loss, data, n, k](const Vector& x) {
    Matrix grad;
    loss->value_and_gradient(unpack_weights(x, n, k), *data, grad);
    return pack_weights(grad);
  };
  problem.project = [n, k, ball, projection_tol](const Vector& x) {
    return pack_weights(
        project_onto_l21_ball(unpack_weights(x, n, k), ball, projection_tol));
  };
  return problem;
}

double rho_to_z(const Matrix& solution) { return l21_norm(solution); }

namespace {

PathResult run_path(const LossFunction& loss, const TaskDataset& dataset,
                    std::span<const double> params, bool warm,
                    const SolverConfig& config, bool rho_mode) {
  if (params.empty()) {
    throw InvalidInputError("path: parameter list is empty");
  }
  for (std::size_t i = 1; i < params.size(); ++i) {
    const bool ok = rho_mode ? params[i] < params[i - 1]
                             : params[i] > params[i - 1];
    if (!ok) {
      throw InvalidInputError(
          rho_mode ? "rho path: values must be strictly decreasing"
                   : "z path: values must be strictly increasing");
    }
  }

  const Index n = dataset.n;
  const Index k = dataset.k;
  PathResult result;
  result.warm = warm;
  result.points.reserve(params.size());

  Vector previous;  // packed solution of the previous path point
  for (std::size_t i = 0; i < params.size(); ++i) {
    ConstrainedProblem problem;
    if (rho_mode) {
      problem = build_amtfl1({&loss, &dataset, params[i]});
    } else {
      problem = build_amtfl2({&loss, &dataset, L21Ball{params[i]}});
    }

    Vector x0 = Vector::Zero(problem.dim);
    if (warm && i > 0) {
      x0 = previous;
      if (!rho_mode) {
        // Nested balls: the previous solution must already be feasible.
        const double norm_prev = l21_norm(unpack_weights(x0, n, k));
        if (norm_prev > params[i] + 1e-9 * std::max(1.0, params[i])) {
          throw Error("z path: warm-start point infeasible for the next radius");
        }
      }
    }

    SolveResult solve = nesterov_solve(problem, x0, config);
    previous = solve.solution;

    PathPoint point;
    point.param = params[i];
    point.weights = rho_mode ? unpack_augmented(solve.solution, n, k).w
                             : unpack_weights(solve.solution, n, k);
    point.objective = solve.final_objective;
    point.iterations = solve.iterations;
    point.converged = solve.converged;
    result.total_iterations += solve.iterations;
    result.points.push_back(std::move(point));
  }
  return result;
}

}  // namespace

PathResult solve_rho_path(const LossFunction& loss, const TaskDataset& dataset,
                          std::span<const double> rhos, bool warm,
                          const SolverConfig& config) {
  return run_path(loss, dataset, rhos, warm, config, /*rho_mode=*/true);
}

PathResult solve_z_path(const LossFunction& loss, const TaskDataset& dataset,
                        std::span<const double> zs, bool warm,
                        const SolverConfig& config) {
  return run_path(loss, dataset, zs, warm, config, /*rho_mode=*/false);
}

}  // namespace mtfl
