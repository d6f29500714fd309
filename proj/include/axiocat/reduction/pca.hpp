#pragma once

#include "axiocat/core/bundle.hpp"
#include "axiocat/numerics/sym_eig.hpp"

namespace axiocat {

/// Origin plus ordered orthonormal basis: the single category's inner
/// representation, shared by the input and output sides.
struct PcaRepresentation {
  Vector origin;      // x0, length p
  Matrix basis;       // d x p, orthonormal rows, descending eigenvalue order
  Vector eigenvalues; // the d kept scatter eigenvalues
};

struct PcaFit {
  PcaRepresentation rep;
  DataMatrix embedding;          // n x d coordinates y_kr = (x_k - x0) . w_r
  Vector scatter_eigenvalues;    // all p eigenvalues of the scatter matrix
  double residual = 0.0;         // sum_k Ds(x_k, rep)
};

/// Squared distance from x to the affine subspace x0 + span(basis).
inline double pca_dissimilarity(const Vector& x, const PcaRepresentation& rep) {
  if (x.size() != rep.origin.size())
    throw ShapeError("pca_dissimilarity: expected a " + std::to_string(rep.origin.size()) + "-vector");
  const Vector centered = x - rep.origin;
  const Vector coords = rep.basis * centered;
  return (centered - rep.basis.transpose() * coords).squaredNorm();
}

/// Minimizes the summed residual over origins and d-dimensional orthonormal
/// bases: x0 is the sample mean, the basis the top-d eigenvectors of the
/// (unnormalized) scatter matrix.
inline PcaFit fit_pca(const DataMatrix& X, Index d) {
  const Index n = X.n();
  const Index p = X.p();
  if (d < 1 || d > p) throw ShapeError("pca: target dimension " + std::to_string(d) + " outside 1.." + std::to_string(p));
  if (n < 2) throw ShapeError("pca: needs at least two objects");

  const Vector origin = X.values().colwise().mean().transpose();
  const Matrix centered = X.values().rowwise() - origin.transpose();
  const Matrix scatter = centered.transpose() * centered;
  if (scatter.trace() == 0.0) throw DegenerateData("pca: all objects are identical");

  const auto eig = sym_eig(scatter);
  PcaFit fit{
      {origin, eig.eigenvectors.leftCols(d).transpose(), eig.eigenvalues.head(d)},
      DataMatrix(centered * eig.eigenvectors.leftCols(d)),
      eig.eigenvalues,
      0.0,
  };
  for (Index k = 0; k < n; ++k) fit.residual += pca_dissimilarity(X.row(k), fit.rep);
  return fit;
}

inline std::vector<ParameterBlock> pca_parameters(const PcaRepresentation& rep) {
  return {{"origin", rep.origin.transpose()}, {"basis", rep.basis}};
}

/// Ds_X on p-dimensional objects.
inline InnerRepresentation pca_input_inner(const PcaRepresentation& rep) {
  return InnerRepresentation("pca", 1, rep.origin.size(), Polarity::dissimilarity, BoxKind::white,
                             pca_parameters(rep),
                             [rep](const Vector& x) { return Vector::Constant(1, pca_dissimilarity(x, rep)); });
}

/// Ds_Y on d-dimensional coordinates: the residual of the reconstruction x0 + y W.
inline InnerRepresentation pca_output_inner(const PcaRepresentation& rep) {
  return InnerRepresentation("pca", 1, rep.basis.rows(), Polarity::dissimilarity, BoxKind::white,
                             pca_parameters(rep), [rep](const Vector& y) {
                               const Vector x = rep.origin + rep.basis.transpose() * y;
                               return Vector::Constant(1, pca_dissimilarity(x, rep));
                             });
}

inline CategorizationBundle pca_input_bundle(const DataMatrix& X, const PcaFit& fit) {
  return CategorizationBundle(X, MembershipMatrix::single_category(X.n()), pca_input_inner(fit.rep));
}

inline CategorizationBundle pca_output_bundle(const PcaFit& fit) {
  return CategorizationBundle(fit.embedding, MembershipMatrix::single_category(fit.embedding.n()),
                              pca_output_inner(fit.rep));
}

}  // namespace axiocat
