#pragma once

#include <cmath>
#include <numbers>

#include "axiocat/core/bundle.hpp"

namespace axiocat {

/// Isotropic Gaussian with one variance shared by every dimension.
struct IsotropicGaussian {
  Vector mean;
  double variance = 0.0;
};

/// Mean of the rows and the per-dimension pooled variance sum |x_k - mu|^2 / (n p).
inline IsotropicGaussian fit_gaussian_mle(const DataMatrix& X) {
  if (X.n() < 2) throw DegenerateData("gaussian: needs at least two objects");
  IsotropicGaussian g;
  g.mean = X.values().colwise().mean().transpose();
  g.variance = (X.values().rowwise() - g.mean.transpose()).squaredNorm() / static_cast<double>(X.n() * X.p());
  if (!(g.variance > 0.0)) throw DegenerateData("gaussian: all objects are identical");
  return g;
}

/// -log p(x | theta) for one object.
inline double gaussian_dissimilarity(const Vector& x, const IsotropicGaussian& g) {
  if (!(g.variance > 0.0)) throw DomainError("gaussian: variance must be positive");
  if (x.size() != g.mean.size()) throw ShapeError("gaussian: dimension mismatch");
  const double p = static_cast<double>(x.size());
  return 0.5 * (x - g.mean).squaredNorm() / g.variance + 0.5 * p * std::log(2.0 * std::numbers::pi * g.variance);
}

inline double gaussian_nll(const DataMatrix& X, const IsotropicGaussian& g) {
  double total = 0.0;
  for (Index k = 0; k < X.n(); ++k) total += gaussian_dissimilarity(X.row(k), g);
  return total;
}

inline InnerRepresentation gaussian_inner(const IsotropicGaussian& g) {
  return InnerRepresentation("gaussian", 1, g.mean.size(), Polarity::dissimilarity, BoxKind::white,
                             {{"mean", g.mean.transpose()}, {"variance", Matrix::Constant(1, 1, g.variance)}},
                             [g](const Vector& x) { return Vector::Constant(1, gaussian_dissimilarity(x, g)); });
}

inline CategorizationBundle gaussian_bundle(const DataMatrix& X, const IsotropicGaussian& g) {
  return CategorizationBundle(X, MembershipMatrix::single_category(X.n()), gaussian_inner(g));
}

}  // namespace axiocat
