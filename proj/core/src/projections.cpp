#include "mtfl/projections.hpp"

#include "mtfl/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace mtfl {

namespace {

constexpr Index kRowBlock = 4096;  // keeps per-block scale segments in L1

void check_ball(const L21Ball& ball) {
  if (!(ball.z > 0.0) || !std::isfinite(ball.z)) {
    throw InvalidInputError("l2,1-ball radius must be finite and > 0");
  }
}

void check_norms(const Vector& norms) {
  for (Index i = 0; i < norms.size(); ++i) {
    if (!(norms[i] >= 0.0) || !std::isfinite(norms[i])) {
      throw InvalidInputError("row norms must be finite and nonnegative");
    }
  }
}

void check_root_inputs(const Vector& norms, double radius, double tol,
                       const char* who) {
  if (!(radius > 0.0)) {
    throw InvalidInputError(std::string(who) + ": radius must be > 0");
  }
  if (!(tol > 0.0)) {
    throw InvalidInputError(std::string(who) + ": tol must be > 0");
  }
  check_norms(norms);
}

// out = u scaled rowwise, swept in row blocks so the scale segment stays
// cache resident across the k column passes.
Matrix scale_rows(const Matrix& u, const Vector& scale) {
  Matrix out(u.rows(), u.cols());
  for (Index r0 = 0; r0 < u.rows(); r0 += kRowBlock) {
    const Index len = std::min(kRowBlock, u.rows() - r0);
    const auto seg = scale.segment(r0, len);
    for (Index j = 0; j < u.cols(); ++j) {
      out.col(j).segment(r0, len) = u.col(j).segment(r0, len).cwiseProduct(seg);
    }
  }
  return out;
}

}  // namespace

AugmentedPoint project_onto_cones(const Vector& v, const Matrix& u) {
  if (v.size() != u.rows()) {
    throw DimensionMismatchError("bound vector length must equal row count");
  }
  if (!v.allFinite() || !u.allFinite()) {
    throw NonFiniteError("project_onto_cones: non-finite input");
  }
  const Vector norms = row_norms(u);

  // Branch order: keep-as-is, collapse, rescale. The formulas agree at the
  // case boundaries, so ordering only affects rounding.
  AugmentedPoint out;
  out.t.resize(v.size());
  Vector scale(v.size());
  for (Index i = 0; i < u.rows(); ++i) {
    if (norms[i] <= v[i]) {
      scale[i] = 1.0;
      out.t[i] = v[i];
    } else if (norms[i] <= -v[i]) {
      scale[i] = 0.0;
      out.t[i] = 0.0;
    } else {
      // norms[i] > |v_i| here, so the division is safe.
      const double bound = 0.5 * (norms[i] + v[i]);
      scale[i] = bound / norms[i];
      out.t[i] = bound;
    }
  }
  out.w = scale_rows(u, scale);
  return out;
}

double dual_residual(double lambda, const Vector& norms, double radius) {
  double total = 0.0;
  for (Index i = 0; i < norms.size(); ++i) {
    total += std::max(norms[i] - lambda, 0.0);
  }
  return total - radius;
}

DualRoot find_dual_lambda(const Vector& norms, double radius, double tol) {
  check_root_inputs(norms, radius, tol, "find_dual_lambda");

  if (norms.sum() <= radius) {
    // Already feasible: the multiplier is exactly zero and no root solve
    // runs, so the reported residual is zero by convention.
    return DualRoot{0.0, 0, 0.0};
  }

  // Exact piecewise-linear solve by iterative threshold refinement: the
  // root satisfies lambda = (sum of active norms - radius) / #active, so
  // alternate between that mean equation and re-partitioning the active
  // set until no row drops out. Each round strictly shrinks the set, so
  // this terminates, and random inputs settle in a handful of linear
  // passes.
  std::vector<double> active(norms.begin(), norms.end());
  double active_sum = std::accumulate(active.begin(), active.end(), 0.0);
  double lambda = 0.0;
  int rounds = 0;
  while (true) {
    ++rounds;
    lambda = (active_sum - radius) / static_cast<double>(active.size());
    const auto kept = std::partition(active.begin(), active.end(),
                                     [lambda](double d) { return d > lambda; });
    if (kept == active.end()) {
      break;  // fixed point: every active norm exceeds lambda
    }
    active.erase(kept, active.end());
    // the largest norm always stays, so the set can never empty out
    active_sum = std::accumulate(active.begin(), active.end(), 0.0);
  }
  lambda = std::max(lambda, 0.0);

  DualRoot root;
  root.lambda = lambda;
  root.iterations = rounds;
  root.residual = std::abs(dual_residual(lambda, norms, radius));
  return root;
}

DualRoot find_dual_lambda_sorted(const Vector& norms, double radius,
                                 double tol) {
  check_root_inputs(norms, radius, tol, "find_dual_lambda_sorted");

  if (norms.sum() <= radius) {
    return DualRoot{0.0, 0, 0.0};
  }

  // Sort norms descending; on the segment between consecutive sorted norms
  // the residual is linear with slope -(number of active rows). Scan for
  // the segment whose linear root is consistent with its active set.
  std::vector<double> sorted(norms.begin(), norms.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());

  double prefix = 0.0;
  double lambda = 0.0;
  int segments = 0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    prefix += sorted[j];
    const double candidate = (prefix - radius) / static_cast<double>(j + 1);
    ++segments;
    if (j + 1 == sorted.size() || sorted[j + 1] <= candidate) {
      lambda = candidate;
      break;
    }
  }
  lambda = std::max(lambda, 0.0);

  DualRoot root;
  root.lambda = lambda;
  root.iterations = segments;
  root.residual = std::abs(dual_residual(lambda, norms, radius));
  return root;
}

DualRoot find_dual_lambda_bisection(const Vector& norms, double radius,
                                    double tol) {
  check_root_inputs(norms, radius, tol, "find_dual_lambda_bisection");

  if (norms.sum() <= radius) {
    return DualRoot{0.0, 0, 0.0};
  }

  // The root lies in (0, max norm): the residual is positive at 0 and
  // equals -radius at the largest norm.
  double lo = 0.0;
  double hi = norms.maxCoeff();
  int iterations = 0;
  while (hi - lo > tol && iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (dual_residual(mid, norms, radius) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }

  DualRoot root;
  root.lambda = 0.5 * (lo + hi);
  root.iterations = iterations;
  root.residual = std::abs(dual_residual(root.lambda, norms, radius));
  return root;
}

Matrix project_onto_l21_ball(const Matrix& u, const L21Ball& ball,
                             double tol) {
  check_ball(ball);
  const Vector norms = row_norms(u);  // also rejects non-finite input

  if (norms.sum() <= ball.z) {
    return u;
  }

  const DualRoot root = find_dual_lambda(norms, ball.z, tol);
  Vector scale(u.rows());
  for (Index i = 0; i < u.rows(); ++i) {
    scale[i] = norms[i] > root.lambda ? 1.0 - root.lambda / norms[i] : 0.0;
  }
  return scale_rows(u, scale);
}

}  // namespace mtfl
