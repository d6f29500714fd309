#pragma once

#include <vector>

#include "axiocat/core/bundle.hpp"
#include "axiocat/numerics/neighbors.hpp"
#include "axiocat/numerics/solve.hpp"
#include "axiocat/numerics/sym_eig.hpp"

namespace axiocat {

/// Reconstruction weights, stored densely; w(k, j) = 0 outside N(k).
struct LleRepresentation {
  Matrix weights;
  Index K = 0;
};

struct LleFit {
  LleRepresentation rep;
  DataMatrix embedding;
  Vector kept_eigenvalues;          // eigenvalues of (I-W)^T(I-W) for the d kept vectors
  double weight_objective = 0.0;    // sum_k |x_k - sum_j w_kj x_j|^2
  double embedding_objective = 0.0; // sum_k |y_k - sum_j w_kj y_j|^2
};

struct LocalReconstruction {
  std::vector<Index> neighbors;
  Vector weights;  // sums to 1
  double residual = 0.0;
};

inline constexpr double kLleRidge = 1e-3;

/// Affine weights reconstructing x from its K nearest rows of `points`,
/// from the ridge-regularized local Gram system G w = 1.
inline LocalReconstruction lle_local_weights(const Matrix& points, const Vector& x, Index K, Index exclude = -1) {
  LocalReconstruction out;
  out.neighbors = nearest_rows(points, x, K, exclude);
  Matrix diffs(K, points.cols());
  for (Index j = 0; j < K; ++j) diffs.row(j) = x.transpose() - points.row(out.neighbors[static_cast<std::size_t>(j)]);
  const Matrix gram = diffs * diffs.transpose();
  const double ridge = kLleRidge * gram.trace() / static_cast<double>(K);
  Vector w = solve_spd(gram, Vector::Ones(K), ridge);
  const double total = w.sum();
  if (!(std::abs(total) > 0.0)) throw NumericalError("lle: local weights sum to zero");
  out.weights = w / total;
  out.residual = (diffs.transpose() * out.weights).squaredNorm();
  return out;
}

inline double lle_reconstruction_error(const Matrix& points, const Matrix& weights) {
  return (points - weights * points).squaredNorm();
}

inline LleFit fit_lle(const DataMatrix& X, Index d, Index K) {
  const Index n = X.n();
  if (K < 1 || K >= n) throw ShapeError("lle: neighborhood size must be in 1.." + std::to_string(n - 1));
  if (d < 1 || d + 1 > n) throw ShapeError("lle: target dimension must be in 1.." + std::to_string(n - 1));

  LleFit fit;
  fit.rep.K = K;
  fit.rep.weights = Matrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) {
    const auto local = lle_local_weights(X.values(), X.row(k), K, k);
    for (Index j = 0; j < K; ++j) fit.rep.weights(k, local.neighbors[static_cast<std::size_t>(j)]) = local.weights(j);
  }
  fit.weight_objective = lle_reconstruction_error(X.values(), fit.rep.weights);

  const Matrix iw = Matrix::Identity(n, n) - fit.rep.weights;
  const auto eig = sym_eig(iw.transpose() * iw);
  // Eigenvalues are descending: the last one belongs to the constant vector.
  Matrix y(n, d);
  fit.kept_eigenvalues.resize(d);
  for (Index r = 0; r < d; ++r) {
    y.col(r) = eig.eigenvectors.col(n - 2 - r);
    fit.kept_eigenvalues(r) = eig.eigenvalues(n - 2 - r);
  }
  fit.embedding = DataMatrix(y);
  fit.embedding_objective = lle_reconstruction_error(y, fit.rep.weights);
  return fit;
}

namespace detail {

inline Index exact_row_match(const Matrix& points, const Vector& x) {
  for (Index k = 0; k < points.rows(); ++k)
    if (points.row(k).transpose() == x) return k;
  return -1;
}

// Ds(x, W): training objects use their stored weights, new objects fresh local weights.
inline InnerRepresentation lle_side_inner(const Matrix& points, const LleRepresentation& rep) {
  return InnerRepresentation("lle", 1, points.cols(), Polarity::dissimilarity, BoxKind::white,
                             {{"weights", rep.weights}}, [points, rep](const Vector& x) {
                               const Index k = exact_row_match(points, x);
                               if (k >= 0) {
                                 const Vector recon = (rep.weights.row(k) * points).transpose();
                                 return Vector::Constant(1, (x - recon).squaredNorm());
                               }
                               return Vector::Constant(1, lle_local_weights(points, x, rep.K).residual);
                             });
}

}  // namespace detail

inline CategorizationBundle lle_input_bundle(const DataMatrix& X, const LleFit& fit) {
  return CategorizationBundle(X, MembershipMatrix::single_category(X.n()),
                              detail::lle_side_inner(X.values(), fit.rep));
}

inline CategorizationBundle lle_output_bundle(const LleFit& fit) {
  return CategorizationBundle(fit.embedding, MembershipMatrix::single_category(fit.embedding.n()),
                              detail::lle_side_inner(fit.embedding.values(), fit.rep));
}

}  // namespace axiocat
