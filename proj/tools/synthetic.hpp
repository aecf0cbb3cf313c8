#pragma once

#include "mtfl/types.hpp"

#include <cstdint>

namespace mtfl::io {

struct SyntheticSpec {
  Index n = 28;
  Index k = 20;
  Index m_per_task = 50;
  double sparsity = 0.5;      // fraction of all-zero weight rows, in [0, 1]
  double noise_sigma = 0.1;   // stddev of additive target noise, >= 0
  std::uint64_t seed = 0;
};

struct SyntheticProblem {
  TaskDataset dataset;
  Matrix true_weights;  // n x k, with ceil(sparsity * n) all-zero rows
};

/// Draws a joint-sparsity regression problem: a ground-truth weight matrix
/// whose zero rows are shared across all tasks, standard-normal designs,
/// and targets y_j = A_j w_j + noise. Deterministic given the seed.
SyntheticProblem generate_synthetic(const SyntheticSpec& spec);

}  // namespace mtfl::io
