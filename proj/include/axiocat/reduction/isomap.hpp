#pragma once

#include <limits>

#include "axiocat/numerics/neighbors.hpp"
#include "axiocat/numerics/shortest_paths.hpp"
#include "axiocat/reduction/mds.hpp"

namespace axiocat {

struct IsomapFit {
  Matrix geodesic;  // shortest-path distances over the neighborhood graph
  MdsFit mds;
  Index K = 0;
};

/// Union of directed K-nearest-neighbor edges weighted by Euclidean distance.
/// K >= n-1 gives the complete graph.
inline Matrix knn_graph(const DataMatrix& X, Index K) {
  const Index n = X.n();
  if (K < 1) throw ShapeError("isomap: neighborhood size must be at least 1");
  const Index k = std::min(K, n - 1);
  const Matrix euclid = pairwise_distances(X.values());
  Matrix w = Matrix::Constant(n, n, kNoEdge);
  w.diagonal().setZero();
  for (Index i = 0; i < n; ++i)
    for (Index j : nearest_rows(X.values(), X.row(i), k, i)) {
      w(i, j) = euclid(i, j);
      w(j, i) = euclid(i, j);
    }
  return w;
}

inline IsomapFit fit_isomap(const DataMatrix& X, Index d, Index K, const MdsOptions& opts = {}) {
  if (X.n() < 2) throw ShapeError("isomap: needs at least two objects");
  IsomapFit fit;
  fit.K = K;
  fit.geodesic = all_pairs_shortest_paths(knn_graph(X, K));
  fit.mds = fit_mds(DistanceRepresentation(fit.geodesic), d, opts);
  return fit;
}

/// Input side: the dissimilarity of x is its mean geodesic distance to the
/// objects, routing through its K nearest objects.
inline CategorizationBundle isomap_input_bundle(const DataMatrix& X, const IsomapFit& fit) {
  const Matrix points = X.values();
  const Matrix geo = fit.geodesic;
  const Index k = std::min(fit.K, X.n());
  InnerRepresentation inner("isomap", 1, X.p(), Polarity::dissimilarity, BoxKind::white, {{"distances", geo}},
                            [points, geo, k](const Vector& x) {
                              const auto near = nearest_rows(points, x, k);
                              double total = 0.0;
                              for (Index l = 0; l < geo.cols(); ++l) {
                                double best = std::numeric_limits<double>::infinity();
                                for (Index j : near)
                                  best = std::min(best, (points.row(j).transpose() - x).norm() + geo(j, l));
                                total += best;
                              }
                              return Vector::Constant(1, total / static_cast<double>(geo.cols()));
                            });
  return CategorizationBundle(X, MembershipMatrix::single_category(X.n()), std::move(inner));
}

inline CategorizationBundle isomap_output_bundle(const IsomapFit& fit) {
  return CategorizationBundle(fit.mds.embedding, MembershipMatrix::single_category(fit.mds.embedding.n()),
                              detail::configuration_inner("isomap", fit.mds.embedding.values()));
}

}  // namespace axiocat
