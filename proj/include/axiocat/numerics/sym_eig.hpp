#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "axiocat/linalg.hpp"

namespace axiocat {

/// Eigenpairs of a symmetric matrix: eigenvalues descending, eigenvector
/// columns orthonormal and aligned, each with its largest-magnitude component
/// positive.
struct SymmetricEigenResult {
  Vector eigenvalues;
  Matrix eigenvectors;
};

/// Cyclic Jacobi eigensolver. Deterministic for identical input.
inline SymmetricEigenResult sym_eig(const Matrix& input, double symmetry_tol = 1e-9, int max_sweeps = 100) {
  if (input.rows() != input.cols())
    throw ShapeError("sym_eig needs a square matrix, got " + std::to_string(input.rows()) + "x" +
                     std::to_string(input.cols()));
  require_finite(input, "sym_eig input");
  const double scale_tol = symmetry_tol * std::max(1.0, input.cwiseAbs().maxCoeff());
  if (!is_symmetric(input, scale_tol)) throw ShapeError("sym_eig input is not symmetric");

  const Index n = input.rows();
  Matrix a = 0.5 * (input + input.transpose());
  Matrix v = Matrix::Identity(n, n);

  auto off_norm = [&] {
    double s = 0.0;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };
  const double total = a.norm();

  bool converged = n <= 1 || total == 0.0;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    Index rotations = 0;
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Skip rotations too small to change the diagonal in floating point.
        if (std::abs(apq) < 1e-300 ||
            (std::abs(app) + 1e2 * std::abs(apq) == std::abs(app) &&
             std::abs(aqq) + 1e2 * std::abs(apq) == std::abs(aqq))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        ++rotations;
        for (Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    converged = rotations == 0 || off_norm() <= 1e-15 * total;
  }
  if (!converged) throw NumericalError("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) + " sweeps");

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) { return a(i, i) > a(j, j); });

  SymmetricEigenResult r;
  r.eigenvalues.resize(n);
  r.eigenvectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    r.eigenvalues(k) = a(src, src);
    Vector col = v.col(src);
    col.normalize();
    canonicalize_sign(col);
    r.eigenvectors.col(k) = col;
  }
  return r;
}

}  // namespace axiocat
