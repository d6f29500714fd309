#pragma once

#include <cmath>
#include <vector>

#include "axiocat/linalg.hpp"

namespace axiocat {

struct LassoResult {
  Vector w;
  std::vector<double> objective;  // value before the first sweep, then after each sweep
  int sweeps = 0;
  bool converged = false;
};

inline double soft_threshold(double value, double threshold) {
  if (value > threshold) return value - threshold;
  if (value < -threshold) return value + threshold;
  return 0.0;
}

inline double lasso_objective(const Matrix& A, const Vector& b, const Vector& w, double lambda) {
  return (A * w - b).squaredNorm() + lambda * w.lpNorm<1>();
}

/// Cyclic coordinate descent on |Aw - b|^2 + lambda |w|_1, starting from w = 0.
/// Stops when the largest coordinate change in a sweep is at most `tol`.
inline LassoResult lasso_coordinate_descent(const Matrix& A, const Vector& b, double lambda, int max_sweeps = 1000,
                                            double tol = 1e-12) {
  if (A.rows() != b.size()) throw ShapeError("lasso: A has " + std::to_string(A.rows()) + " rows, b has " + std::to_string(b.size()));
  require_finite(A, "lasso design matrix");
  require_finite(b, "lasso target");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lasso: lambda must be positive");

  const Index tau = A.cols();
  LassoResult r;
  r.w = Vector::Zero(tau);
  const Vector col_sq = A.colwise().squaredNorm().transpose();
  Vector residual = b;  // b - A w
  r.objective.push_back(lasso_objective(A, b, r.w, lambda));

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double max_change = 0.0;
    for (Index j = 0; j < tau; ++j) {
      if (col_sq(j) == 0.0) continue;
      const double old = r.w(j);
      const double rho = A.col(j).dot(residual) + col_sq(j) * old;
      const double updated = soft_threshold(rho, 0.5 * lambda) / col_sq(j);
      if (updated != old) {
        residual -= (updated - old) * A.col(j);
        r.w(j) = updated;
        max_change = std::max(max_change, std::abs(updated - old));
      }
    }
    r.sweeps = sweep + 1;
    r.objective.push_back(lasso_objective(A, b, r.w, lambda));
    if (!r.w.allFinite()) throw NumericalError("lasso: coordinate descent diverged");
    if (max_change <= tol) {
      r.converged = true;
      break;
    }
  }
  return r;
}

}  // namespace axiocat
