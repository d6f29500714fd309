#pragma once

#include <cmath>
#include <limits>

#include "axiocat/linalg.hpp"

namespace axiocat {

/// Solves (A + ridge I) x = b for symmetric positive-definite A by Cholesky.
inline Vector solve_spd(const Matrix& A, const Vector& b, double ridge = 0.0) {
  if (A.rows() != A.cols() || A.rows() != b.size())
    throw ShapeError("solve_spd: A is " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                     ", b has " + std::to_string(b.size()) + " entries");
  if (ridge < 0.0) throw DomainError("solve_spd: ridge must be nonnegative");
  require_finite(A, "solve_spd matrix");
  require_finite(b, "solve_spd right-hand side");
  if (!is_symmetric(A, 1e-9 * std::max(1.0, A.cwiseAbs().maxCoeff())))
    throw ShapeError("solve_spd: matrix is not symmetric");

  Matrix m = 0.5 * (A + A.transpose());
  m.diagonal().array() += ridge;
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success) throw NumericalError("solve_spd: matrix is not positive definite after ridge");
  const Vector d = Matrix(llt.matrixL()).diagonal();
  const double dmax = d.cwiseAbs().maxCoeff();
  const double dmin = d.cwiseAbs().minCoeff();
  // Pivot ratio squared bounds the condition number from below.
  if (dmax == 0.0 || (dmin / dmax) * (dmin / dmax) < std::numeric_limits<double>::epsilon() * static_cast<double>(A.rows()))
    throw NumericalError("solve_spd: matrix is numerically singular after ridge");
  Vector x = llt.solve(b);
  if (!x.allFinite()) throw NumericalError("solve_spd: non-finite solution");
  return x;
}

}  // namespace axiocat
