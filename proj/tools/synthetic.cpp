#include "synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

namespace mtfl::io {

SyntheticProblem generate_synthetic(const SyntheticSpec& spec) {
  if (spec.n < 1 || spec.k < 1 || spec.m_per_task < 1) {
    throw InvalidInputError("generate_synthetic: n, k, m_per_task must be >= 1");
  }
  if (spec.sparsity < 0.0 || spec.sparsity > 1.0) {
    throw InvalidInputError("generate_synthetic: sparsity must be in [0, 1]");
  }
  if (spec.noise_sigma < 0.0 || !std::isfinite(spec.noise_sigma)) {
    throw InvalidInputError("generate_synthetic: noise_sigma must be >= 0");
  }

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const Index zero_rows =
      static_cast<Index>(std::ceil(spec.sparsity * static_cast<double>(spec.n)));
  std::vector<Index> order(static_cast<std::size_t>(spec.n));
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng);

  SyntheticProblem problem;
  problem.true_weights.setZero(spec.n, spec.k);
  for (Index r = zero_rows; r < spec.n; ++r) {
    const Index row = order[static_cast<std::size_t>(r)];
    for (Index c = 0; c < spec.k; ++c) {
      problem.true_weights(row, c) = gauss(rng);
    }
  }

  std::vector<Task> tasks(static_cast<std::size_t>(spec.k));
  for (Index j = 0; j < spec.k; ++j) {
    Task& task = tasks[static_cast<std::size_t>(j)];
    task.features.resize(spec.m_per_task, spec.n);
    for (Index r = 0; r < spec.m_per_task; ++r) {
      for (Index c = 0; c < spec.n; ++c) {
        task.features(r, c) = gauss(rng);
      }
    }
    task.targets = task.features * problem.true_weights.col(j);
    if (spec.noise_sigma > 0.0) {
      for (Index r = 0; r < spec.m_per_task; ++r) {
        task.targets[r] += spec.noise_sigma * gauss(rng);
      }
    }
  }
  problem.dataset = TaskDataset::from_tasks(std::move(tasks));
  return problem;
}

}  // namespace mtfl::io
