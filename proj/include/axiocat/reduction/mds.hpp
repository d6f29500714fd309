#pragma once

#include <cmath>
#include <string>

#include "axiocat/core/bundle.hpp"
#include "axiocat/numerics/sym_eig.hpp"

namespace axiocat {

/// Validated n x n distance matrix: symmetric, zero diagonal, nonnegative.
class DistanceRepresentation {
 public:
  explicit DistanceRepresentation(Matrix D) : d_(std::move(D)) {
    if (d_.rows() != d_.cols() || d_.rows() < 1) throw ShapeError("distance matrix must be square and nonempty");
    require_finite(d_, "distance matrix");
    if ((d_.array() < 0.0).any()) throw DomainError("distance matrix has a negative entry");
    if (!d_.diagonal().isZero(0.0)) throw DomainError("distance matrix has a nonzero diagonal entry");
    if (!is_symmetric(d_, 1e-9 * std::max(1.0, d_.maxCoeff()))) throw ShapeError("distance matrix is not symmetric");
    d_ = 0.5 * (d_ + d_.transpose());
  }

  static DistanceRepresentation euclidean(const DataMatrix& X) {
    return DistanceRepresentation(pairwise_distances(X.values()));
  }

  const Matrix& matrix() const { return d_; }
  Index n() const { return d_.rows(); }

 private:
  Matrix d_;
};

enum class MdsLoss { strain, stress };

struct MdsOptions {
  MdsLoss loss = MdsLoss::strain;
  int max_iterations = 300;
  double tolerance = 1e-10;
};

struct MdsFit {
  DataMatrix embedding;
  Vector eigenvalues;   // top-d eigenvalues of the double-centered matrix
  double stress = 0.0;  // sum_{k<l} (D_X - D_Y)^2
  int iterations = 0;   // stress refinement iterations (0 for strain)
};

inline double mds_stress(const Matrix& dx, const Matrix& dy) {
  return 0.5 * (dx - dy).squaredNorm();
}

namespace detail {

// Guttman transform iterations minimizing raw stress, started from `y`.
inline int smacof(const Matrix& dx, Matrix& y, const MdsOptions& opts) {
  const Index n = dx.rows();
  double prev = mds_stress(dx, pairwise_distances(y));
  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    const Matrix dy = pairwise_distances(y);
    Matrix b = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (i != j && dy(i, j) > 0.0) b(i, j) = -dx(i, j) / dy(i, j);
    for (Index i = 0; i < n; ++i) b(i, i) = -b.row(i).sum();
    y = b * y / static_cast<double>(n);
    const double cur = mds_stress(dx, pairwise_distances(y));
    if (prev - cur <= opts.tolerance * std::max(prev, 1e-300)) {
      ++it;
      break;
    }
    prev = cur;
  }
  return it;
}

}  // namespace detail

/// Classical scaling: top-d eigenpairs of -1/2 J D^2 J. With MdsLoss::stress the
/// classical solution seeds SMACOF.
inline MdsFit fit_mds(const DistanceRepresentation& D, Index d, const MdsOptions& opts = {}) {
  const Index n = D.n();
  if (d < 1 || d > n - 1) throw ShapeError("mds: target dimension must be in 1.." + std::to_string(n - 1));

  const Matrix sq = D.matrix().array().square().matrix();
  const Matrix j = Matrix::Identity(n, n) - Matrix::Constant(n, n, 1.0 / static_cast<double>(n));
  Matrix b = -0.5 * j * sq * j;
  b = 0.5 * (b + b.transpose());
  // The constant vector is always in the null space of b. Push its eigenvalue
  // below the rest so the leading n-1 eigenpairs are the configuration ones.
  const double shift = 1.0 + b.norm();
  const auto eig = sym_eig(b - Matrix::Constant(n, n, shift / static_cast<double>(n)));
  const Vector lambda = eig.eigenvalues.head(n - 1);
  const double scale = std::max(lambda.cwiseAbs().maxCoeff(), 1e-300);
  if (lambda(d - 1) < -1e-9 * scale)
    throw EmbeddingRankError("mds: only " + std::to_string((lambda.array() >= -1e-9 * scale).count()) +
                             " nonnegative eigenvalues for target dimension " + std::to_string(d));

  Matrix y(n, d);
  for (Index r = 0; r < d; ++r) y.col(r) = eig.eigenvectors.col(r) * std::sqrt(std::max(lambda(r), 0.0));

  MdsFit fit{DataMatrix(y), lambda.head(d), 0.0, 0};
  if (opts.loss == MdsLoss::stress) {
    fit.iterations = detail::smacof(D.matrix(), y, opts);
    fit.embedding = DataMatrix(y);
  }
  fit.stress = mds_stress(D.matrix(), pairwise_distances(fit.embedding.values()));
  return fit;
}

namespace detail {

inline InnerRepresentation configuration_inner(const std::string& id, const Matrix& y) {
  const Matrix dy = pairwise_distances(y);
  return InnerRepresentation(id, 1, y.cols(), Polarity::dissimilarity, BoxKind::white, {{"distances", dy}},
                             [y](const Vector& v) {
                               return Vector::Constant(1, (y.rowwise() - v.transpose()).rowwise().norm().mean());
                             });
}

}  // namespace detail

/// Input side when only distances are known: object k is row k of D and its
/// dissimilarity is its mean distance to the objects.
inline CategorizationBundle mds_input_bundle(const DistanceRepresentation& D) {
  const Matrix dx = D.matrix();
  InnerRepresentation inner("mds", 1, D.n(), Polarity::dissimilarity, BoxKind::white, {{"distances", dx}},
                            [](const Vector& row) { return Vector::Constant(1, row.mean()); });
  return CategorizationBundle(DataMatrix(dx), MembershipMatrix::single_category(D.n()), std::move(inner));
}

inline CategorizationBundle mds_output_bundle(const MdsFit& fit) {
  return CategorizationBundle(fit.embedding, MembershipMatrix::single_category(fit.embedding.n()),
                              detail::configuration_inner("mds", fit.embedding.values()));
}

}  // namespace axiocat
