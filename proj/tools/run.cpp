#include "run.hpp"

#include "dataset_io.hpp"
#include "synthetic.hpp"

#include "mtfl/norms.hpp"
#include "mtfl/problems.hpp"
#include "mtfl/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

namespace mtfl::io {

namespace {

std::unique_ptr<LossFunction> make_loss(RunConfig::LossKind kind) {
  if (kind == RunConfig::LossKind::logistic) {
    return std::make_unique<LogisticLoss>();
  }
  return std::make_unique<LeastSquaresLoss>();
}

SolverConfig make_solver_config(const RunConfig& config) {
  SolverConfig solver;
  solver.l0 = config.l0;
  solver.rel_gap_tol = config.tol;
  solver.max_iterations = config.max_iters;
  return solver;
}

void check_parameter_for_reformulation(const RunConfig& config) {
  if (config.reformulation == RunConfig::Reformulation::amtfl1) {
    if (!config.rho || config.z) {
      throw InvalidInputError("reformulation amtfl1 takes --rho (and not --z)");
    }
  } else {
    if (!config.z || config.rho) {
      throw InvalidInputError("reformulation amtfl2 takes --z (and not --rho)");
    }
  }
}

ConstrainedProblem build_problem(const RunConfig& config,
                                 const LossFunction& loss,
                                 const TaskDataset& dataset) {
  if (config.reformulation == RunConfig::Reformulation::amtfl1) {
    return build_amtfl1({&loss, &dataset, *config.rho});
  }
  return build_amtfl2({&loss, &dataset, L21Ball{*config.z}});
}

Matrix solution_weights(const RunConfig& config, const TaskDataset& dataset,
                        const Vector& solution) {
  if (config.reformulation == RunConfig::Reformulation::amtfl1) {
    return unpack_augmented(solution, dataset.n, dataset.k).w;
  }
  return unpack_weights(solution, dataset.n, dataset.k);
}

TaskDataset load_or_generate(const RunConfig& config) {
  if (!config.input.empty()) {
    return load_dataset(config.input);
  }
  if (!config.seed) {
    throw InvalidInputError("give --input or --seed (to generate data)");
  }
  SyntheticSpec spec;
  spec.n = config.gen_n;
  spec.k = config.gen_k;
  spec.m_per_task = config.gen_m_per_task;
  spec.sparsity = config.gen_sparsity;
  spec.noise_sigma = config.gen_noise_sigma;
  spec.seed = *config.seed;
  return generate_synthetic(spec).dataset;
}

Index count_selected_rows(const Matrix& w) {
  const Vector norms = row_norms(w);
  const double cutoff = 1e-8 * norms.maxCoeff();
  Index selected = 0;
  for (Index i = 0; i < norms.size(); ++i) {
    if (norms[i] > cutoff) {
      ++selected;
    }
  }
  return selected;
}

int run_solve(const RunConfig& config) {
  check_parameter_for_reformulation(config);
  const auto loss = make_loss(config.loss);
  const TaskDataset dataset = load_dataset(config.input);
  const ConstrainedProblem problem = build_problem(config, *loss, dataset);

  const SolveResult result = nesterov_solve(
      problem, Vector::Zero(problem.dim), make_solver_config(config));

  write_weights_csv(solution_weights(config, dataset, result.solution),
                    config.out / "weights.csv");
  write_trace_csv(result.trace, config.out / "trace.csv");
  std::cout << "solve: " << result.iterations << " iterations, objective "
            << format_double(result.final_objective)
            << (result.converged ? "" : " (iteration cap reached)") << "\n";
  return result.converged ? 0 : 2;
}

int run_path(const RunConfig& config) {
  if (config.params.empty()) {
    throw InvalidInputError("path needs --params with at least one value");
  }
  const auto loss = make_loss(config.loss);
  const TaskDataset dataset = load_dataset(config.input);
  const SolverConfig solver = make_solver_config(config);

  PathResult result;
  if (config.reformulation == RunConfig::Reformulation::amtfl1) {
    result = solve_rho_path(*loss, dataset, config.params, config.warm, solver);
  } else {
    result = solve_z_path(*loss, dataset, config.params, config.warm, solver);
  }

  std::ofstream summary(config.out / "path_summary.csv");
  if (!summary) {
    throw ParseError("cannot open path_summary.csv for writing");
  }
  summary << "param,objective,iterations,selected_rows\n";
  bool all_converged = true;
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const PathPoint& point = result.points[i];
    char name[32];
    std::snprintf(name, sizeof(name), "weights_%03zu.csv", i + 1);
    write_weights_csv(point.weights, config.out / name);
    summary << format_double(point.param) << ','
            << format_double(point.objective) << ',' << point.iterations << ','
            << count_selected_rows(point.weights) << '\n';
    all_converged = all_converged && point.converged;
  }
  std::cout << "path: " << result.points.size() << " points, "
            << result.total_iterations << " total iterations ("
            << (result.warm ? "warm" : "cold") << " start)\n";
  return all_converged ? 0 : 2;
}

int run_bench(const RunConfig& config) {
  check_parameter_for_reformulation(config);
  const auto loss = make_loss(config.loss);
  const TaskDataset dataset = load_or_generate(config);
  const ConstrainedProblem problem = build_problem(config, *loss, dataset);
  const Vector x0 = Vector::Zero(problem.dim);

  // The accelerated solve at the requested tolerance fixes the target
  // objective; both methods then race to it from scratch.
  const SolveResult reference =
      nesterov_solve(problem, x0, make_solver_config(config));

  SolverConfig race = make_solver_config(config);
  race.target_objective = reference.final_objective;
  const long budget = std::max(100L * config.max_iters, 10000L);
  race.max_iterations = static_cast<int>(std::min(budget, 100000000L));

  struct Row {
    const char* method;
    SolveResult result;
    double seconds;
  };
  std::vector<Row> rows;
  for (const char* method : {"nesterov", "projected_gradient"}) {
    const auto start = std::chrono::steady_clock::now();
    SolveResult result = (std::string(method) == "nesterov")
                             ? nesterov_solve(problem, x0, race)
                             : projected_gradient_solve(problem, x0, race);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    rows.push_back({method, std::move(result), seconds});
  }

  std::ofstream out(config.out / "bench.csv");
  if (!out) {
    throw ParseError("cannot open bench.csv for writing");
  }
  out << "method,iterations,seconds\n";
  bool all_converged = true;
  for (const Row& row : rows) {
    out << row.method << ',' << row.result.iterations << ','
        << format_double(row.seconds) << '\n';
    all_converged = all_converged && row.result.converged;
    std::cout << "bench: " << row.method << " took " << row.result.iterations
              << " iterations (" << row.seconds << " s) to objective "
              << format_double(*race.target_objective) << "\n";
  }
  return all_converged ? 0 : 2;
}

int run_gen(const RunConfig& config) {
  if (!config.seed) {
    throw InvalidInputError("gen needs --seed");
  }
  SyntheticSpec spec;
  spec.n = config.gen_n;
  spec.k = config.gen_k;
  spec.m_per_task = config.gen_m_per_task;
  spec.sparsity = config.gen_sparsity;
  spec.noise_sigma = config.gen_noise_sigma;
  spec.seed = *config.seed;

  const SyntheticProblem problem = generate_synthetic(spec);
  save_dataset(problem.dataset, config.out / "dataset.csv");
  write_weights_csv(problem.true_weights, config.out / "true_weights.csv");
  std::cout << "gen: wrote dataset.csv (" << problem.dataset.m << " samples, "
            << problem.dataset.n << " features, " << problem.dataset.k
            << " tasks) and true_weights.csv\n";
  return 0;
}

}  // namespace

int run(const RunConfig& config) {
  try {
    std::filesystem::create_directories(config.out);
    switch (config.command) {
      case RunConfig::Command::solve:
        return run_solve(config);
      case RunConfig::Command::path:
        return run_path(config);
      case RunConfig::Command::bench:
        return run_bench(config);
      case RunConfig::Command::gen:
        return run_gen(config);
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mtfl::io
