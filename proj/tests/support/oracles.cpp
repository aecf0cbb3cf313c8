#include "oracles.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace oracle {

double golden_section_min(const std::function<double(double)>& f, double lo,
                          double hi, int iters) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

std::pair<double, Vector> project_cone_reference(double v, const Vector& u) {
  const double norm_u = u.norm();
  if (norm_u <= v) {
    return {v, u};  // already a member
  }
  if (norm_u == 0.0) {
    return {0.0, Vector::Zero(u.size())};  // v < 0 here; apex is nearest
  }
  // Exterior point: search the boundary radius.
  const auto h = [&](double r) {
    const double dr = r - norm_u;
    const double dt = r - v;
    return 0.5 * dr * dr + 0.5 * dt * dt;
  };
  double r = golden_section_min(h, 0.0, norm_u + std::abs(v) + 1.0);
  if (h(0.0) <= h(r)) {
    r = 0.0;
  }
  return {r, (r / norm_u) * u};
}

std::pair<Vector, Matrix> project_cones_reference(const Vector& v,
                                                  const Matrix& u) {
  Vector t(v.size());
  Matrix w(u.rows(), u.cols());
  for (Index i = 0; i < u.rows(); ++i) {
    auto [ti, wi] = project_cone_reference(v[i], u.row(i).transpose());
    t[i] = ti;
    w.row(i) = wi.transpose();
  }
  return {t, w};
}

std::pair<double, Vector> project_cone_grid2(double v, const Vector& u,
                                             int rounds, int steps) {
  if (u.size() != 2) {
    throw std::invalid_argument("grid oracle is written for k = 2");
  }
  const double span = u.norm() + std::abs(v) + 1.0;
  double t_lo = 0.0, t_hi = span;
  double w1_lo = -span, w1_hi = span;
  double w2_lo = -span, w2_hi = span;

  double best_t = 0.0;
  Vector best_w = Vector::Zero(2);
  for (int round = 0; round < rounds; ++round) {
    double best = std::numeric_limits<double>::infinity();
    for (int it = 0; it <= steps; ++it) {
      const double t = t_lo + (t_hi - t_lo) * it / steps;
      for (int i1 = 0; i1 <= steps; ++i1) {
        const double w1 = w1_lo + (w1_hi - w1_lo) * i1 / steps;
        for (int i2 = 0; i2 <= steps; ++i2) {
          const double w2 = w2_lo + (w2_hi - w2_lo) * i2 / steps;
          if (w1 * w1 + w2 * w2 > t * t) {
            continue;  // infeasible cell
          }
          const double obj = 0.5 * ((w1 - u[0]) * (w1 - u[0]) +
                                    (w2 - u[1]) * (w2 - u[1])) +
                             0.5 * (t - v) * (t - v);
          if (obj < best) {
            best = obj;
            best_t = t;
            best_w << w1, w2;
          }
        }
      }
    }
    // Shrink the box around the incumbent for the next round. The margin
    // must cover the incumbent's quantization error in every coordinate,
    // so it uses the largest cell of this round.
    const double cell = std::max({(t_hi - t_lo) / steps, (w1_hi - w1_lo) / steps,
                                  (w2_hi - w2_lo) / steps});
    const double margin = 3.0 * cell;
    t_lo = std::max(0.0, best_t - margin);
    t_hi = best_t + margin;
    w1_lo = best_w[0] - margin;
    w1_hi = best_w[0] + margin;
    w2_lo = best_w[1] - margin;
    w2_hi = best_w[1] + margin;
  }
  return {best_t, best_w};
}

namespace {

// argmin over r in [0, d] of 0.5*(r - d)^2 + lam*r, found numerically.
double shrunken_radius(double d, double lam) {
  if (d == 0.0) {
    return 0.0;
  }
  const auto h = [&](double r) { return 0.5 * (r - d) * (r - d) + lam * r; };
  double r = golden_section_min(h, 0.0, d);
  if (h(0.0) <= h(r)) {
    r = 0.0;
  }
  return r;
}

}  // namespace

Matrix project_ball_reference(const Matrix& u, double z) {
  Vector norms(u.rows());
  for (Index i = 0; i < u.rows(); ++i) {
    norms[i] = u.row(i).norm();
  }
  if (norms.sum() <= z) {
    return u;
  }

  const auto total_mass = [&](double lam) {
    double total = 0.0;
    for (Index i = 0; i < norms.size(); ++i) {
      total += shrunken_radius(norms[i], lam);
    }
    return total;
  };

  double lo = 0.0, hi = norms.maxCoeff();
  while (hi - lo > 1e-13 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (total_mass(mid) > z) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double lam = 0.5 * (lo + hi);

  Matrix w(u.rows(), u.cols());
  for (Index i = 0; i < u.rows(); ++i) {
    if (norms[i] == 0.0) {
      w.row(i).setZero();
    } else {
      w.row(i) = (shrunken_radius(norms[i], lam) / norms[i]) * u.row(i);
    }
  }
  return w;
}

Vector cd_lasso(const Matrix& a, const Vector& y, double rho, int max_sweeps,
                double tol) {
  const Index n = a.cols();
  Vector x = Vector::Zero(n);
  Vector residual = y;
  Vector col_sq(n);
  for (Index i = 0; i < n; ++i) {
    col_sq[i] = a.col(i).squaredNorm();
  }

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double max_delta = 0.0;
    for (Index i = 0; i < n; ++i) {
      if (col_sq[i] == 0.0) {
        continue;
      }
      const double c = a.col(i).dot(residual) + col_sq[i] * x[i];
      const double shrunk = std::abs(c) <= rho
                                ? 0.0
                                : (c > 0 ? c - rho : c + rho) / col_sq[i];
      const double delta = shrunk - x[i];
      if (delta != 0.0) {
        residual -= a.col(i) * delta;
        x[i] = shrunk;
      }
      max_delta = std::max(max_delta, std::abs(delta));
    }
    if (max_delta <= tol * std::max(1.0, x.cwiseAbs().maxCoeff())) {
      break;
    }
  }
  return x;
}

BallQuadraticOptimum ball_quadratic_optimum(const Matrix& q, const Vector& b,
                                            double radius) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(q);
  const Vector eigs = es.eigenvalues();
  const Matrix vecs = es.eigenvectors();
  if (eigs.minCoeff() <= 0.0) {
    throw std::invalid_argument("quadratic oracle needs positive definite Q");
  }
  const Vector y = vecs.transpose() * b;

  const auto x_of_mu = [&](double mu) -> Vector {
    return -(vecs * (y.array() / (eigs.array() + mu)).matrix());
  };

  Vector x = x_of_mu(0.0);
  if (x.norm() > radius) {
    // norm(x(mu)) decreases monotonically to 0; bracket then bisect.
    double lo = 0.0, hi = 1.0;
    while (x_of_mu(hi).norm() > radius) {
      hi *= 2.0;
    }
    while (hi - lo > 1e-14 * std::max(1.0, hi)) {
      const double mid = 0.5 * (lo + hi);
      if (x_of_mu(mid).norm() > radius) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    x = x_of_mu(0.5 * (lo + hi));
  }

  BallQuadraticOptimum result;
  result.x_star = x;
  result.g_star = 0.5 * x.dot(q * x) + b.dot(x);
  result.lipschitz = eigs.maxCoeff();
  return result;
}

Matrix fd_gradient(const mtfl::LossFunction& loss, const Matrix& w,
                   const TaskDataset& dataset, double step) {
  Matrix grad(w.rows(), w.cols());
  Matrix probe = w;
  for (Index r = 0; r < w.rows(); ++r) {
    for (Index c = 0; c < w.cols(); ++c) {
      probe(r, c) = w(r, c) + step;
      const double up = loss.value(probe, dataset);
      probe(r, c) = w(r, c) - step;
      const double down = loss.value(probe, dataset);
      probe(r, c) = w(r, c);
      grad(r, c) = (up - down) / (2.0 * step);
    }
  }
  return grad;
}

Matrix group_soft_threshold(const Matrix& y, double rho) {
  Matrix w(y.rows(), y.cols());
  for (Index i = 0; i < y.rows(); ++i) {
    const double norm = y.row(i).norm();
    if (norm <= rho) {
      w.row(i).setZero();
    } else {
      w.row(i) = (1.0 - rho / norm) * y.row(i);
    }
  }
  return w;
}

Matrix normal_equation_solution(const TaskDataset& dataset) {
  Matrix w(dataset.n, dataset.k);
  for (Index j = 0; j < dataset.k; ++j) {
    const Matrix& a = dataset.tasks[static_cast<std::size_t>(j)].features;
    const Vector& y = dataset.tasks[static_cast<std::size_t>(j)].targets;
    w.col(j) = (a.transpose() * a).ldlt().solve(a.transpose() * y);
  }
  return w;
}

}  // namespace oracle
