#pragma once

#include <cmath>

#include "axiocat/classification/common.hpp"
#include "axiocat/numerics/solve.hpp"

namespace axiocat {

/// g_i(x) = w_i x^T + w_i0 = log Sim(x, Y_i), from Gaussian classes with a shared covariance.
struct LinearDiscriminantModel {
  Matrix weights;  // c x p
  Vector offsets;  // c
  Vector priors;
  Matrix means;       // c x p
  Matrix covariance;  // pooled, ridge included

  Vector discriminants(const Vector& x) const {
    if (x.size() != weights.cols()) throw ShapeError("lda: dimension mismatch");
    return weights * x + offsets;
  }
};

inline LinearDiscriminantModel fit_gaussian_lda(const DataMatrix& X, const MembershipMatrix& U, double ridge = 0.0) {
  const LabeledData data(X, U);
  if (data.c < 2) throw ShapeError("lda: needs at least two categories");
  if (ridge < 0.0) throw DomainError("lda: ridge must be nonnegative");
  for (Index i = 0; i < data.c; ++i)
    if (data.counts[static_cast<std::size_t>(i)] < 2)
      throw DegenerateData("lda: category " + std::to_string(i + 1) + " has fewer than two objects");

  LinearDiscriminantModel m;
  m.means = data.class_means();
  const Index n = X.n();
  const Index p = X.p();
  Matrix scatter = Matrix::Zero(p, p);
  for (Index k = 0; k < n; ++k) {
    const Vector d = X.row(k) - m.means.row(static_cast<Index>(data.labels[static_cast<std::size_t>(k)])).transpose();
    scatter += d * d.transpose();
  }
  m.covariance = scatter / static_cast<double>(n - data.c);
  m.covariance.diagonal().array() += ridge;

  m.weights.resize(data.c, p);
  m.offsets.resize(data.c);
  m.priors.resize(data.c);
  for (Index i = 0; i < data.c; ++i) {
    const Vector v = m.means.row(i).transpose();
    const Vector w = solve_spd(m.covariance, v);
    m.priors(i) = static_cast<double>(data.counts[static_cast<std::size_t>(i)]) / static_cast<double>(n);
    m.weights.row(i) = w.transpose();
    m.offsets(i) = -0.5 * v.dot(w) + std::log(m.priors(i));
  }
  return m;
}

inline InnerRepresentation lda_inner(const LinearDiscriminantModel& m) {
  return InnerRepresentation("lda", m.weights.rows(), m.weights.cols(), Polarity::similarity, BoxKind::white,
                             {{"weights", m.weights}, {"offsets", m.offsets.transpose()}},
                             [m](const Vector& x) { return m.discriminants(x); });
}

}  // namespace axiocat
