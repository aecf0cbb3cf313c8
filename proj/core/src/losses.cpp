#include "mtfl/losses.hpp"

#include <cmath>
#include <string>

namespace mtfl {

namespace {

void check_shape(const Matrix& w, const TaskDataset& dataset,
                 const char* what) {
  if (w.rows() != dataset.n || w.cols() != dataset.k) {
    throw DimensionMismatchError(
        std::string(what) + ": weight matrix is " + std::to_string(w.rows()) +
        "x" + std::to_string(w.cols()) + ", dataset expects " +
        std::to_string(dataset.n) + "x" + std::to_string(dataset.k));
  }
}

// log(1 + exp(x)) without overflow for large |x|.
double softplus(double x) {
  return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

// 1 / (1 + exp(x)), i.e. sigmoid(-x), stable for large |x|.
double sigmoid_neg(double x) {
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

void check_labels(const TaskDataset& dataset) {
  for (std::size_t j = 0; j < dataset.tasks.size(); ++j) {
    const Vector& y = dataset.tasks[j].targets;
    for (Index i = 0; i < y.size(); ++i) {
      if (y[i] != 1.0 && y[i] != -1.0) {
        throw InvalidInputError("logistic loss: task " + std::to_string(j + 1) +
                                " sample " + std::to_string(i + 1) +
                                " has label " + std::to_string(y[i]) +
                                ", expected -1 or +1");
      }
    }
  }
}

}  // namespace

void LossFunction::validate(const TaskDataset& dataset) const {
  validate_dataset(dataset);
}

double LeastSquaresLoss::value(const Matrix& w,
                               const TaskDataset& dataset) const {
  check_shape(w, dataset, "least squares");
  double total = 0.0;
  for (Index j = 0; j < dataset.k; ++j) {
    const Task& task = dataset.tasks[static_cast<std::size_t>(j)];
    total += (task.features * w.col(j) - task.targets).squaredNorm();
  }
  return 0.5 * total;
}

double LeastSquaresLoss::value_and_gradient(const Matrix& w,
                                            const TaskDataset& dataset,
                                            Matrix& grad) const {
  check_shape(w, dataset, "least squares");
  grad.resize(dataset.n, dataset.k);
  double total = 0.0;
  for (Index j = 0; j < dataset.k; ++j) {
    const Task& task = dataset.tasks[static_cast<std::size_t>(j)];
    const Vector residual = task.features * w.col(j) - task.targets;
    total += residual.squaredNorm();
    grad.col(j) = task.features.transpose() * residual;
  }
  return 0.5 * total;
}

double LogisticLoss::value(const Matrix& w, const TaskDataset& dataset) const {
  check_shape(w, dataset, "logistic");
  check_labels(dataset);
  double total = 0.0;
  for (Index j = 0; j < dataset.k; ++j) {
    const Task& task = dataset.tasks[static_cast<std::size_t>(j)];
    const Vector margins =
        task.targets.cwiseProduct(task.features * w.col(j));
    for (Index i = 0; i < margins.size(); ++i) {
      total += softplus(-margins[i]);
    }
  }
  return total;
}

double LogisticLoss::value_and_gradient(const Matrix& w,
                                        const TaskDataset& dataset,
                                        Matrix& grad) const {
  check_shape(w, dataset, "logistic");
  check_labels(dataset);
  grad.setZero(dataset.n, dataset.k);
  double total = 0.0;
  for (Index j = 0; j < dataset.k; ++j) {
    const Task& task = dataset.tasks[static_cast<std::size_t>(j)];
    const Vector margins =
        task.targets.cwiseProduct(task.features * w.col(j));
    Vector coeff(margins.size());
    for (Index i = 0; i < margins.size(); ++i) {
      total += softplus(-margins[i]);
      coeff[i] = -task.targets[i] * sigmoid_neg(margins[i]);
    }
    grad.col(j) = task.features.transpose() * coeff;
  }
  return total;
}

void LogisticLoss::validate(const TaskDataset& dataset) const {
  validate_dataset(dataset);
  check_labels(dataset);
}

}  // namespace mtfl
