#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <string>

#include "axiocat/error.hpp"

namespace axiocat {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

inline bool all_finite(const Eigen::Ref<const Matrix>& m) { return m.allFinite(); }

inline void require_finite(const Eigen::Ref<const Matrix>& m, const std::string& what) {
  if (!m.allFinite()) throw NumericalError(what + " contains a non-finite entry");
}

inline double squared_distance(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b) {
  return (a - b).squaredNorm();
}

// Pairwise Euclidean distances between the rows of X.
inline Matrix pairwise_distances(const Matrix& X) {
  const Index n = X.rows();
  Matrix D = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double d = (X.row(i) - X.row(j)).norm();
      D(i, j) = d;
      D(j, i) = d;
    }
  }
  return D;
}

// Flip v so that its largest-magnitude component is positive (first index wins
// ties). Keeps eigenvector-derived outputs stable across runs and refits.
inline void canonicalize_sign(Eigen::Ref<Vector> v) {
  Index arg = 0;
  double best = -1.0;
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > best) {
      best = std::abs(v(i));
      arg = i;
    }
  }
  if (v.size() > 0 && v(arg) < 0.0) v = -v;
}

inline bool is_symmetric(const Matrix& A, double tol) {
  if (A.rows() != A.cols()) return false;
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = i + 1; j < A.cols(); ++j)
      if (std::abs(A(i, j) - A(j, i)) > tol) return false;
  return true;
}

}  // namespace axiocat
