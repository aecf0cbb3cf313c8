#pragma once

#include "mtfl/types.hpp"

namespace mtfl {

/// Euclidean norm of each row of W. Rows of a weight matrix group one
/// feature across tasks, so these are the per-feature group magnitudes.
Vector row_norms(const Matrix& w);

/// l2,1-norm: the sum of the Euclidean norms of the rows. Reduces to the
/// l1-norm when W has a single column.
double l21_norm(const Matrix& w);

}  // namespace mtfl
