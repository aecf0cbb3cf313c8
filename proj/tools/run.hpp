#pragma once

#include "mtfl/types.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace mtfl::io {

/// Parsed command line for the tool. `run` validates the combination
/// (e.g. the penalized form takes --rho, the ball form takes --z).
struct RunConfig {
  enum class Command { solve, path, bench, gen };
  enum class LossKind { least_squares, logistic };
  enum class Reformulation { amtfl1, amtfl2 };

  Command command = Command::solve;
  LossKind loss = LossKind::least_squares;
  Reformulation reformulation = Reformulation::amtfl1;

  std::optional<double> rho;
  std::optional<double> z;
  std::vector<double> params;  // path parameter sequence
  bool warm = false;

  double l0 = 1.0;
  double tol = 1e-4;
  int max_iters = 1000;

  std::filesystem::path input;
  std::filesystem::path out = ".";
  std::optional<std::uint64_t> seed;

  // gen shape flags (also used by bench when no --input is given)
  Index gen_n = 28;
  Index gen_k = 20;
  Index gen_m_per_task = 50;
  double gen_sparsity = 0.5;
  double gen_noise_sigma = 0.1;
};

/// Executes one command and writes its artifacts under config.out.
/// Returns 0 on convergence, 2 when an iteration cap was hit, 1 on error.
int run(const RunConfig& config);

}  // namespace mtfl::io
