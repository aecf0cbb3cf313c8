#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace mtfl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a documented precondition (shape, sign, finiteness, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

class EmptyTaskError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

class NonFiniteError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

/// The doubling line search exhausted its budget; usually a gradient bug or
/// non-finite data.
class LineSearchFailureError : public Error {
 public:
  using Error::Error;
};

/// The objective became non-finite during a solve.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// One regression task: a design matrix (samples x features) and its targets.
struct Task {
  Matrix features;  // m_j x n
  Vector targets;   // m_j
};

/// A collection of k tasks sharing n features. Columns of every design
/// matrix line up featurewise; sample counts may differ per task.
struct TaskDataset {
  std::vector<Task> tasks;
  Index n = 0;  // shared feature count
  Index k = 0;  // task count
  Index m = 0;  // total sample count over all tasks

  /// Builds a dataset from per-task blocks and validates it.
  static TaskDataset from_tasks(std::vector<Task> tasks);
};

/// Checks every TaskDataset invariant; throws a subclass of
/// InvalidInputError naming the offending task on failure.
void validate_dataset(const TaskDataset& dataset);

/// A point (t, W) of the augmented space used by the cone-constrained
/// formulation: t holds per-row norm bounds for the n x k weight matrix.
/// Feasibility (norm(row i of w) <= t[i]) is NOT an invariant of the type;
/// intermediate gradient steps leave the feasible set and only projection
/// outputs satisfy it.
struct AugmentedPoint {
  Vector t;  // n
  Matrix w;  // n x k
};

}  // namespace mtfl
