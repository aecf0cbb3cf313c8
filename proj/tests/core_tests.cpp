#include "mtfl/norms.hpp"
#include "mtfl/types.hpp"

#include "support/random_instances.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

using namespace mtfl;
using testsupport::gaussian_matrix;
using testsupport::make_rng;

TEST_CASE("row_norms: worked examples") {
  Matrix w(2, 2);
  w << 3, 4, 0, 0;
  const Vector norms = row_norms(w);
  CHECK(norms[0] == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(norms[1] == 0.0);

  CHECK(row_norms(Matrix::Zero(4, 3)).isZero(0.0));

  Matrix w2(2, 2);
  w2 << 1, 1, 2, 2;
  const Vector norms2 = row_norms(w2);
  // sum-of-squares oracle for each row
  for (Index i = 0; i < 2; ++i) {
    double ss = 0.0;
    for (Index j = 0; j < 2; ++j) {
      ss += w2(i, j) * w2(i, j);
    }
    CHECK(norms2[i] == doctest::Approx(std::sqrt(ss)).epsilon(1e-15));
  }
  CHECK(norms2[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(norms2[1] == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("row_norms: rejects non-finite entries") {
  Matrix w = Matrix::Zero(2, 2);
  w(1, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(row_norms(w), NonFiniteError);
  w(1, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(l21_norm(w), NonFiniteError);
}

TEST_CASE("row_norms: permutation equivariant over rows") {
  auto rng = make_rng(11);
  const Matrix w = gaussian_matrix(rng, 7, 4);
  std::vector<Index> perm(7);
  std::iota(perm.begin(), perm.end(), Index{0});
  std::shuffle(perm.begin(), perm.end(), rng);

  Matrix shuffled(7, 4);
  for (Index i = 0; i < 7; ++i) {
    shuffled.row(i) = w.row(perm[static_cast<std::size_t>(i)]);
  }
  const Vector base = row_norms(w);
  const Vector permuted = row_norms(shuffled);
  for (Index i = 0; i < 7; ++i) {
    CHECK(permuted[i] == base[perm[static_cast<std::size_t>(i)]]);  // bitwise
  }
}

TEST_CASE("l21_norm: worked examples") {
  Matrix w(2, 2);
  w << 3, 4, 0, 0;
  CHECK(l21_norm(w) == doctest::Approx(5.0).epsilon(1e-15));

  // single column: reduces to the l1-norm
  Matrix col(3, 1);
  col << 1, -2, 3;
  CHECK(l21_norm(col) == doctest::Approx(6.0).epsilon(1e-15));

  auto rng = make_rng(3);
  const Matrix r = gaussian_matrix(rng, 5, 3);
  CHECK(l21_norm(r) == doctest::Approx(row_norms(r).sum()).epsilon(1e-15));
}

TEST_CASE("l21_norm: norm axioms on random matrices") {
  auto rng = make_rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = gaussian_matrix(rng, 6, 3);
    const Matrix b = gaussian_matrix(rng, 6, 3);
    const double na = l21_norm(a);
    const double nb = l21_norm(b);

    // triangle inequality
    CHECK(l21_norm(a + b) <= na + nb + 1e-12 * (na + nb));

    // absolute homogeneity
    const double c = testsupport::uniform_vector(rng, 1, -3.0, 3.0)[0];
    CHECK(l21_norm(c * a) ==
          doctest::Approx(std::abs(c) * na).epsilon(1e-12));

    // positive definiteness
    CHECK(na > 0.0);
  }
  CHECK(l21_norm(Matrix::Zero(6, 3)) == 0.0);
}

TEST_CASE("l21_norm equals l1 norm for one task") {
  auto rng = make_rng(29);
  const Matrix col = gaussian_matrix(rng, 9, 1);
  CHECK(l21_norm(col) ==
        doctest::Approx(col.cwiseAbs().sum()).epsilon(1e-13));
}

namespace {

TaskDataset two_task_dataset() {
  Task t1{Matrix::Random(3, 4), Vector::Random(3)};
  Task t2{Matrix::Random(2, 4), Vector::Random(2)};
  return TaskDataset::from_tasks({t1, t2});
}

}  // namespace

TEST_CASE("validate_dataset: consistent shapes pass") {
  const TaskDataset d = two_task_dataset();
  CHECK(d.k == 2);
  CHECK(d.n == 4);
  CHECK(d.m == 5);
  CHECK_NOTHROW(validate_dataset(d));
}

TEST_CASE("validate_dataset: column mismatch names the offending task") {
  TaskDataset d;
  d.tasks.push_back({Matrix::Random(3, 4), Vector::Random(3)});
  d.tasks.push_back({Matrix::Random(2, 5), Vector::Random(2)});
  d.n = 4;
  d.k = 2;
  d.m = 5;
  try {
    validate_dataset(d);
    FAIL("expected DimensionMismatchError");
  } catch (const DimensionMismatchError& e) {
    CHECK(std::string(e.what()).find("task 2") != std::string::npos);
  }
}

TEST_CASE("validate_dataset: empty task list and empty tasks") {
  TaskDataset empty;
  CHECK_THROWS_AS(validate_dataset(empty), EmptyTaskError);

  TaskDataset d;
  d.tasks.push_back({Matrix(0, 3), Vector(0)});
  d.n = 3;
  d.k = 1;
  d.m = 0;
  CHECK_THROWS_AS(validate_dataset(d), EmptyTaskError);
}

TEST_CASE("validate_dataset: NaN target rejected") {
  TaskDataset d = two_task_dataset();
  d.tasks[0].targets[1] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(validate_dataset(d), NonFiniteError);
}

TEST_CASE("validate_dataset: target length mismatch rejected") {
  TaskDataset d;
  d.tasks.push_back({Matrix::Random(3, 2), Vector::Random(4)});
  d.n = 2;
  d.k = 1;
  d.m = 3;
  CHECK_THROWS_AS(validate_dataset(d), DimensionMismatchError);
}
