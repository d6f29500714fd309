#pragma once

#include <cmath>
#include <vector>

#include "axiocat/classification/common.hpp"

namespace axiocat {

/// Categories 1..c-1 carry (w_i, w_i0); category c is the reference with
/// Sim = 1 / (1 + sum_i exp(w_i x^T + w_i0)).
struct LogisticModel {
  Matrix weights;  // (c-1) x p
  Vector offsets;  // c-1
  std::vector<double> objective;
  int iterations = 0;
  bool converged = false;

  Index c() const { return weights.rows() + 1; }

  Vector probabilities(const Vector& x) const {
    if (x.size() != weights.cols()) throw ShapeError("logistic: dimension mismatch");
    Vector z(c());
    z.head(c() - 1) = weights * x + offsets;
    z(c() - 1) = 0.0;
    const double top = z.maxCoeff();
    const Vector e = (z.array() - top).exp();
    return e / e.sum();
  }
};

struct LogisticOptions {
  double step = 1.0;
  int max_iterations = 2000;
  double tolerance = 1e-8;  // on the largest gradient entry
  double l2 = 0.0;          // penalty on the weights, never the offsets
};

/// Parameters laid out as [w_1, w_10, w_2, w_20, ...].
inline Vector logistic_parameters(const LogisticModel& m) {
  const Index p = m.weights.cols();
  Vector theta((p + 1) * m.weights.rows());
  for (Index i = 0; i < m.weights.rows(); ++i) {
    theta.segment(i * (p + 1), p) = m.weights.row(i).transpose();
    theta(i * (p + 1) + p) = m.offsets(i);
  }
  return theta;
}

inline LogisticModel logistic_from_parameters(const Vector& theta, Index c, Index p) {
  if (theta.size() != (c - 1) * (p + 1)) throw ShapeError("logistic: parameter vector has the wrong length");
  LogisticModel m;
  m.weights.resize(c - 1, p);
  m.offsets.resize(c - 1);
  for (Index i = 0; i < c - 1; ++i) {
    m.weights.row(i) = theta.segment(i * (p + 1), p).transpose();
    m.offsets(i) = theta(i * (p + 1) + p);
  }
  return m;
}

/// sum_k sum_i u_ik log Sim(x_k, Y_i) - l2 * sum_i |w_i|^2.
inline double logistic_objective(const DataMatrix& X, const MembershipMatrix& U, const Vector& theta, double l2 = 0.0) {
  const LabeledData data(X, U);
  const auto m = logistic_from_parameters(theta, data.c, X.p());
  double total = 0.0;
  for (Index k = 0; k < X.n(); ++k) {
    Vector z(data.c);
    z.head(data.c - 1) = m.weights * X.row(k) + m.offsets;
    z(data.c - 1) = 0.0;
    const double top = z.maxCoeff();
    const double lse = top + std::log((z.array() - top).exp().sum());
    total += z(static_cast<Index>(data.labels[static_cast<std::size_t>(k)])) - lse;
  }
  return total - l2 * m.weights.squaredNorm();
}

inline Vector logistic_gradient(const DataMatrix& X, const MembershipMatrix& U, const Vector& theta, double l2 = 0.0) {
  const LabeledData data(X, U);
  const Index p = X.p();
  const auto m = logistic_from_parameters(theta, data.c, p);
  Vector g = Vector::Zero(theta.size());
  for (Index k = 0; k < X.n(); ++k) {
    const Vector pi = m.probabilities(X.row(k));
    for (Index i = 0; i < data.c - 1; ++i) {
      const double r = (data.labels[static_cast<std::size_t>(k)] == static_cast<std::size_t>(i) ? 1.0 : 0.0) - pi(i);
      g.segment(i * (p + 1), p) += r * X.row(k);
      g(i * (p + 1) + p) += r;
    }
  }
  for (Index i = 0; i < data.c - 1; ++i) g.segment(i * (p + 1), p) -= 2.0 * l2 * m.weights.row(i).transpose();
  return g;
}

/// Gradient ascent with a backtracking (Armijo) step.
inline LogisticModel fit_logistic(const DataMatrix& X, const MembershipMatrix& U, const LogisticOptions& opts = {}) {
  const LabeledData data(X, U);
  if (data.c < 2) throw ShapeError("logistic: needs at least two categories");
  if (!(opts.step > 0.0)) throw DomainError("logistic: step must be positive");
  if (!(opts.l2 >= 0.0)) throw DomainError("logistic: l2 must be nonnegative");

  Vector theta = Vector::Zero((data.c - 1) * (X.p() + 1));
  double value = logistic_objective(X, U, theta, opts.l2);
  std::vector<double> log{value};
  double step = opts.step;
  int it = 0;
  bool converged = false;
  for (; it < opts.max_iterations; ++it) {
    const Vector g = logistic_gradient(X, U, theta, opts.l2);
    if (!g.allFinite()) throw NumericalError("logistic: non-finite gradient");
    if (g.cwiseAbs().maxCoeff() <= opts.tolerance) {
      converged = true;
      break;
    }
    const double g2 = g.squaredNorm();
    bool accepted = false;
    for (int halvings = 0; halvings < 60; ++halvings) {
      const Vector trial = theta + step * g;
      const double v = logistic_objective(X, U, trial, opts.l2);
      if (std::isnan(v)) throw NumericalError("logistic: objective became NaN");
      if (v >= value + 1e-4 * step * g2) {
        theta = trial;
        value = v;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      converged = true;  // no ascent direction left at machine precision
      break;
    }
    log.push_back(value);
    step = std::min(step * 2.0, opts.step * 1024.0);
  }
  auto m = logistic_from_parameters(theta, data.c, X.p());
  m.objective = std::move(log);
  m.iterations = it;
  m.converged = converged;
  return m;
}

inline InnerRepresentation logistic_inner(const LogisticModel& m) {
  return InnerRepresentation("logistic", m.c(), m.weights.cols(), Polarity::similarity, BoxKind::white,
                             {{"weights", m.weights}, {"offsets", m.offsets.transpose()}},
                             [m](const Vector& x) { return m.probabilities(x); });
}

}  // namespace axiocat
