#include "dataset_io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace mtfl::io {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    const auto begin = field.find_first_not_of(" \t\r");
    const auto end = field.find_last_not_of(" \t\r");
    fields.push_back(begin == std::string::npos
                         ? std::string()
                         : field.substr(begin, end - begin + 1));
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

double parse_double(const std::string& text, std::size_t line_no) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || errno == ERANGE) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": cannot parse number '" + text + "'");
  }
  return value;
}

long parse_task_id(const std::string& text, std::size_t line_no) {
  errno = 0;
  char* end = nullptr;
  const long value = std::strtol(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0' || errno == ERANGE) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": cannot parse task id '" + text + "'");
  }
  return value;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open '" + path.string() + "' for writing");
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

TaskDataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("'" + path.string() + "' is empty");
  }
  const std::size_t columns = split_csv_line(line).size();
  if (columns < 3) {
    throw ParseError("header has " + std::to_string(columns) +
                     " columns; need at least 3 (task id, features, target)");
  }
  const Index n = static_cast<Index>(columns) - 2;

  // Collect rows per task id; ids may arrive in any order.
  std::map<long, std::vector<std::vector<double>>> rows_by_task;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != columns) {
      throw ParseError("line " + std::to_string(line_no) + ": has " +
                       std::to_string(fields.size()) + " columns, expected " +
                       std::to_string(columns));
    }
    const long id = parse_task_id(fields[0], line_no);
    if (id < 1) {
      throw ParseError("line " + std::to_string(line_no) + ": task id " +
                       std::to_string(id) + " must be >= 1");
    }
    std::vector<double> row(columns - 1);
    for (std::size_t c = 1; c < columns; ++c) {
      row[c - 1] = parse_double(fields[c], line_no);
    }
    rows_by_task[id].push_back(std::move(row));
  }
  if (rows_by_task.empty()) {
    throw ParseError("'" + path.string() + "' has no data rows");
  }

  const long k = rows_by_task.rbegin()->first;
  std::vector<Task> tasks;
  tasks.reserve(static_cast<std::size_t>(k));
  for (long id = 1; id <= k; ++id) {
    const auto it = rows_by_task.find(id);
    if (it == rows_by_task.end()) {
      throw ParseError("task ids must be dense 1..k: id " + std::to_string(id) +
                       " is missing while id " + std::to_string(k) + " exists");
    }
    const auto& rows = it->second;
    Task task;
    task.features.resize(static_cast<Index>(rows.size()), n);
    task.targets.resize(static_cast<Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (Index c = 0; c < n; ++c) {
        task.features(static_cast<Index>(r), c) =
            rows[r][static_cast<std::size_t>(c)];
      }
      task.targets[static_cast<Index>(r)] = rows[r][static_cast<std::size_t>(n)];
    }
    tasks.push_back(std::move(task));
  }
  return TaskDataset::from_tasks(std::move(tasks));
}

void save_dataset(const TaskDataset& dataset,
                  const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  out << "task";
  for (Index c = 1; c <= dataset.n; ++c) {
    out << ",f" << c;
  }
  out << ",target\n";
  for (Index j = 0; j < dataset.k; ++j) {
    const Task& task = dataset.tasks[static_cast<std::size_t>(j)];
    for (Index r = 0; r < task.features.rows(); ++r) {
      out << (j + 1);
      for (Index c = 0; c < dataset.n; ++c) {
        out << ',' << format_double(task.features(r, c));
      }
      out << ',' << format_double(task.targets[r]) << '\n';
    }
  }
}

void write_weights_csv(const Matrix& w, const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  for (Index c = 0; c < w.cols(); ++c) {
    out << (c == 0 ? "" : ",") << "col_" << (c + 1);
  }
  out << '\n';
  for (Index r = 0; r < w.rows(); ++r) {
    for (Index c = 0; c < w.cols(); ++c) {
      out << (c == 0 ? "" : ",") << format_double(w(r, c));
    }
    out << '\n';
  }
}

Matrix load_weights_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("'" + path.string() + "' is empty");
  }
  const std::size_t columns = split_csv_line(line).size();
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != columns) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": inconsistent column count");
    }
    std::vector<double> row(columns);
    for (std::size_t c = 0; c < columns; ++c) {
      row[c] = parse_double(fields[c], line_no);
    }
    rows.push_back(std::move(row));
  }
  Matrix w(static_cast<Index>(rows.size()), static_cast<Index>(columns));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < columns; ++c) {
      w(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
    }
  }
  return w;
}

void write_trace_csv(const std::vector<TraceEntry>& trace,
                     const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  out << "iteration,objective,gamma,linesearch_trials,elapsed_seconds\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << (i + 1) << ',' << format_double(trace[i].objective) << ','
        << format_double(trace[i].gamma) << ',' << trace[i].linesearch_trials
        << ',' << format_double(trace[i].elapsed_seconds) << '\n';
  }
}

}  // namespace mtfl::io
