#pragma once

#include "mtfl/types.hpp"

namespace mtfl {

/// A smooth convex loss over an n x k weight matrix, evaluated against a
/// TaskDataset. Implementations must produce a finite value and a gradient
/// with exactly the shape of W for finite inputs. Convexity and smoothness
/// are assumed, not checked at runtime.
class LossFunction {
 public:
  virtual ~LossFunction() = default;

  virtual double value(const Matrix& w, const TaskDataset& dataset) const = 0;

  /// Evaluates value and gradient together; `grad` is resized to W's shape.
  virtual double value_and_gradient(const Matrix& w, const TaskDataset& dataset,
                                    Matrix& grad) const = 0;

  /// Rejects datasets this loss cannot consume (e.g. non-binary labels).
  virtual void validate(const TaskDataset& dataset) const;
};

/// 1/2 sum_j norm(y_j - A_j w_j)^2. Gradient column j is A_j^T (A_j w_j - y_j).
class LeastSquaresLoss final : public LossFunction {
 public:
  double value(const Matrix& w, const TaskDataset& dataset) const override;
  double value_and_gradient(const Matrix& w, const TaskDataset& dataset,
                            Matrix& grad) const override;
};

/// Binary logistic loss with labels in {-1, +1}, summed (not averaged) over
/// all samples of all tasks:
///   sum_j sum_i log(1 + exp(-y_i^j * <w_j, a_i^j>)).
/// Evaluated via softplus so large margins neither overflow nor lose the
/// tail.
class LogisticLoss final : public LossFunction {
 public:
  double value(const Matrix& w, const TaskDataset& dataset) const override;
  double value_and_gradient(const Matrix& w, const TaskDataset& dataset,
                            Matrix& grad) const override;
  void validate(const TaskDataset& dataset) const override;
};

}  // namespace mtfl
