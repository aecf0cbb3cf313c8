#pragma once

#include "mtfl/types.hpp"

namespace mtfl {

/// The feasible set { W : l21_norm(W) <= z }. The radius must be strictly
/// positive; z = 0 collapses the set to the zero matrix and is rejected.
struct L21Ball {
  double z;
};

/// The optimal Lagrange multiplier of the l2,1-ball projection together
/// with diagnostics from the root solve. `residual` is |dual_residual| at
/// the returned lambda, or 0 when the input was already feasible and no
/// root solve ran.
struct DualRoot {
  double lambda = 0.0;
  int iterations = 0;
  double residual = 0.0;
};

/// Projects (v, U) onto the product of second-order cones
/// { (t_i, w^i) : norm(w^i) <= t_i, i = 1..n }. Rowwise closed form: a row
/// is kept when norm(u^i) <= v_i, collapsed to (0, 0) when
/// norm(u^i) <= -v_i, and otherwise rescaled onto the cone boundary with
/// t_i = (norm(u^i) + v_i) / 2.
AugmentedPoint project_onto_cones(const Vector& v, const Matrix& u);

/// Sum of the row norms after shrinking each by lambda, minus the radius:
///   sum_i max(norms[i] - lambda, 0) - radius.
/// Continuous, piecewise linear and nonincreasing in lambda; its root is
/// the optimal multiplier of the ball projection.
double dual_residual(double lambda, const Vector& norms, double radius);

/// Optimal multiplier for projecting a matrix with the given row norms onto
/// the l2,1-ball of the given radius. Returns lambda = 0 exactly when the
/// norms already sum to at most the radius; otherwise solves
/// dual_residual = 0 exactly by iterative threshold refinement over the
/// shrinking active set (linear passes, a handful of rounds on typical
/// inputs). `tol` only scales the reported residual check; the root itself
/// is exact.
DualRoot find_dual_lambda(const Vector& norms, double radius, double tol);

/// The same exact root via descending sort and a scan for the sign-change
/// segment (O(n log n)); kept as a cross-check of the refinement solve.
DualRoot find_dual_lambda_sorted(const Vector& norms, double radius,
                                 double tol);

/// Plain bisection on (0, max norm) down to interval width `tol`; kept as
/// an independent cross-check of the exact solves.
DualRoot find_dual_lambda_bisection(const Vector& norms, double radius,
                                    double tol);

/// Euclidean projection of U onto the l2,1-ball: rows shrink toward zero by
/// the optimal multiplier, so every output row is a nonnegative scaling of
/// its input row. Returns U unchanged when it is already inside the ball.
Matrix project_onto_l21_ball(const Matrix& u, const L21Ball& ball,
                             double tol = 1e-10);

}  // namespace mtfl
