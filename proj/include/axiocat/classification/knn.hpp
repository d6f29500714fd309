#pragma once

#include "axiocat/classification/common.hpp"
#include "axiocat/numerics/neighbors.hpp"

namespace axiocat {

struct KnnModel {
  Matrix training;
  std::vector<std::size_t> labels;
  Index c = 0;
  Index K = 0;
};

inline KnnModel fit_knn(const DataMatrix& X, const MembershipMatrix& U, Index K) {
  const LabeledData data(X, U);
  if (K < 1 || K > X.n()) throw ShapeError("knn: K must be in 1.." + std::to_string(X.n()) + ", got " + std::to_string(K));
  return {X.values(), data.labels, data.c, K};
}

/// Sim_i(x) = |N_i(x)| / K over the K nearest training objects (ties to the lower index).
inline SimilarityProfile predict_knn(const KnnModel& model, const Vector& x) {
  if (x.size() != model.training.cols()) throw ShapeError("knn: dimension mismatch");
  Vector s = Vector::Zero(model.c);
  for (Index j : nearest_rows(model.training, x, model.K)) s(static_cast<Index>(model.labels[static_cast<std::size_t>(j)])) += 1.0;
  return {s / static_cast<double>(model.K), Polarity::similarity};
}

inline SimilarityProfile predict_knn(const DataMatrix& X, const MembershipMatrix& U, const Vector& x, Index K) {
  return predict_knn(fit_knn(X, U, K), x);
}

inline InnerRepresentation knn_inner(const KnnModel& model) {
  Matrix labels(1, static_cast<Index>(model.labels.size()));
  for (std::size_t k = 0; k < model.labels.size(); ++k) labels(0, static_cast<Index>(k)) = static_cast<double>(model.labels[k] + 1);
  return InnerRepresentation("knn", model.c, model.training.cols(), Polarity::similarity, BoxKind::black,
                             {{"training", model.training}, {"labels", labels}},
                             [model](const Vector& x) { return predict_knn(model, x).scores; });
}

}  // namespace axiocat
