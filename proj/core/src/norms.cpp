#include "mtfl/norms.hpp"

#include <algorithm>

namespace mtfl {

Vector row_norms(const Matrix& w) {
  if (!w.allFinite()) {
    throw NonFiniteError("row_norms: matrix contains a non-finite entry");
  }
  // column sweeps in row blocks: sequential access on column-major storage
  // with the accumulator segment staying cache resident
  constexpr Index block = 4096;
  Vector squares(w.rows());
  for (Index r0 = 0; r0 < w.rows(); r0 += block) {
    const Index len = std::min(block, w.rows() - r0);
    auto seg = squares.segment(r0, len);
    seg.setZero();
    for (Index j = 0; j < w.cols(); ++j) {
      seg += w.col(j).segment(r0, len).cwiseAbs2();
    }
  }
  return squares.cwiseSqrt();
}

double l21_norm(const Matrix& w) { return row_norms(w).sum(); }

}  // namespace mtfl
