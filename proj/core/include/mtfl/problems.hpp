#pragma once

#include "mtfl/losses.hpp"
#include "mtfl/projections.hpp"
#include "mtfl/solver.hpp"
#include "mtfl/types.hpp"

#include <span>

namespace mtfl {

/// The penalized smooth form of the l2,1-regularized problem: minimize
/// loss(W) + rho * sum_i t_i over the cone product {norm(w^i) <= t_i}.
/// Holds non-owning pointers; keep the loss and dataset alive for
/// the lifetime of any problem built from it.
struct Amtfl1Spec {
  const LossFunction* loss = nullptr;
  const TaskDataset* dataset = nullptr;
  double rho = 0.0;
};

/// The ball-constrained smooth form: minimize loss(W) over
/// { W : l21_norm(W) <= z }.
struct Amtfl2Spec {
  const LossFunction* loss = nullptr;
  const TaskDataset* dataset = nullptr;
  L21Ball ball{0.0};
};

// Flattening helpers. The augmented point (t, W) packs as [t; vec(W)],
// column-major; the ball form uses vec(W) alone.
Vector pack_augmented(const Vector& t, const Matrix& w);
AugmentedPoint unpack_augmented(const Vector& x, Index n, Index k);
Vector pack_weights(const Matrix& w);
Matrix unpack_weights(const Vector& x, Index n, Index k);

/// Assembles the penalized form as a ConstrainedProblem over packed
/// augmented points. The penalty is linear in t, so the gradient's t-block
/// is the constant vector rho * ones and the smoothness constant of the
/// objective equals the loss's.
ConstrainedProblem build_amtfl1(const Amtfl1Spec& spec);

/// Assembles the ball-constrained form as a ConstrainedProblem over packed
/// weight matrices.
ConstrainedProblem build_amtfl2(const Amtfl2Spec& spec,
                                double projection_tol = 1e-10);

/// The empirical map from a converged penalized solution to the matching
/// ball radius: z = l21_norm(W). A zero matrix maps to z = 0, which is not
/// a valid ball radius; callers must treat that as the fully sparse signal.
double rho_to_z(const Matrix& solution);

struct PathPoint {
  double param = 0.0;  // rho or z
  Matrix weights;
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct PathResult {
  std::vector<PathPoint> points;
  long total_iterations = 0;
  bool warm = false;
};

/// Solves the penalized form along a strictly decreasing rho sequence.
/// Cold mode starts every solve from zero; warm mode starts each solve at
/// the previous solution (always feasible, the cones do not depend on rho).
PathResult solve_rho_path(const LossFunction& loss, const TaskDataset& dataset,
                          std::span<const double> rhos, bool warm,
                          const SolverConfig& config);

/// Solves the ball form along a strictly increasing z sequence. Warm mode
/// reuses the previous solution, which is feasible because the balls nest;
/// that containment is checked at every step.
PathResult solve_z_path(const LossFunction& loss, const TaskDataset& dataset,
                        std::span<const double> zs, bool warm,
                        const SolverConfig& config);

}  // namespace mtfl
