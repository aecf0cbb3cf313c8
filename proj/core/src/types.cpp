#include "mtfl/types.hpp"

namespace mtfl {

TaskDataset TaskDataset::from_tasks(std::vector<Task> tasks) {
  TaskDataset d;
  d.tasks = std::move(tasks);
  d.k = static_cast<Index>(d.tasks.size());
  d.n = d.tasks.empty() ? 0 : d.tasks.front().features.cols();
  d.m = 0;
  for (const Task& task : d.tasks) {
    d.m += task.features.rows();
  }
  validate_dataset(d);
  return d;
}

void validate_dataset(const TaskDataset& dataset) {
  if (dataset.tasks.empty() || dataset.k < 1) {
    throw EmptyTaskError("dataset has no tasks");
  }
  if (dataset.k != static_cast<Index>(dataset.tasks.size())) {
    throw DimensionMismatchError("task count field disagrees with task list");
  }
  Index total = 0;
  for (std::size_t j = 0; j < dataset.tasks.size(); ++j) {
    const Task& task = dataset.tasks[j];
    const std::string where = "task " + std::to_string(j + 1);
    if (task.features.rows() < 1) {
      throw EmptyTaskError(where + " has no samples");
    }
    if (task.features.cols() != dataset.n) {
      throw DimensionMismatchError(
          where + " has " + std::to_string(task.features.cols()) +
          " feature columns, expected " + std::to_string(dataset.n));
    }
    if (task.targets.size() != task.features.rows()) {
      throw DimensionMismatchError(
          where + " has " + std::to_string(task.targets.size()) +
          " targets for " + std::to_string(task.features.rows()) + " samples");
    }
    if (!task.features.allFinite() || !task.targets.allFinite()) {
      throw NonFiniteError(where + " contains a non-finite value");
    }
    total += task.features.rows();
  }
  if (total != dataset.m) {
    throw DimensionMismatchError("total sample count field disagrees with task sizes");
  }
}

}  // namespace mtfl
