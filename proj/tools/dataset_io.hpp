#pragma once

#include "mtfl/solver.hpp"
#include "mtfl/types.hpp"

#include <filesystem>
#include <vector>

namespace mtfl::io {

/// A CSV file could not be read or did not match the expected layout.
/// Messages carry the 1-based line number where available.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Reads a multi-task dataset from CSV. Layout: a header line, then one
/// sample per row with an integer task id in the first column, n feature
/// columns, and the target in the last column. Task ids must cover 1..k
/// with no gaps; rows of one task need not be contiguous.
TaskDataset load_dataset(const std::filesystem::path& path);

/// Writes a dataset in the load_dataset layout, tasks in order. Floats are
/// printed with 17 significant digits so a reload is value-identical.
void save_dataset(const TaskDataset& dataset,
                  const std::filesystem::path& path);

/// Writes an n x k matrix with header col_1,...,col_k.
void write_weights_csv(const Matrix& w, const std::filesystem::path& path);

/// Reads a matrix written by write_weights_csv.
Matrix load_weights_csv(const std::filesystem::path& path);

/// Writes per-iteration solver records with header
/// iteration,objective,gamma,linesearch_trials,elapsed_seconds.
void write_trace_csv(const std::vector<TraceEntry>& trace,
                     const std::filesystem::path& path);

/// Shortest decimal form that round-trips the exact double.
std::string format_double(double value);

}  // namespace mtfl::io
