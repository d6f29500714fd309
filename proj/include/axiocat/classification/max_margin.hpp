#pragma once

#include <cmath>
#include <limits>

#include "axiocat/classification/common.hpp"

namespace axiocat {

/// Category 1 is the side w x^T + b >= 1, category 2 the side <= -1.
struct MaxMarginModel {
  Vector w;
  double b = 0.0;
  std::vector<std::size_t> support_indices;  // 0-based training objects on either hyperplane
  Vector alpha;                              // dual variables
  int iterations = 0;
  double kkt_gap = 0.0;

  double decision(const Vector& x) const {
    if (x.size() != w.size()) throw ShapeError("max-margin: dimension mismatch");
    return w.dot(x) + b;
  }
  /// (g_1, g_2) = (w x^T + b - 1, -w x^T - b - 1).
  Vector discriminants(const Vector& x) const {
    const double f = decision(x);
    return Vector{{f - 1.0, -f - 1.0}};
  }
};

struct MaxMarginOptions {
  int max_iterations = 100000;
  double tolerance = 1e-10;  // on the maximal KKT violation
};

inline constexpr double kSupportTolerance = 1e-6;

/// Hard-margin dual, solved by repeatedly optimizing the maximally violating
/// pair (two-variable analytic steps, lowest index among equal violations).
inline MaxMarginModel fit_max_margin(const DataMatrix& X, const MembershipMatrix& U, const MaxMarginOptions& opts = {}) {
  const LabeledData data(X, U);
  if (data.c != 2) throw ShapeError("max-margin: needs exactly two categories");
  data.require_nonempty_classes("max-margin");
  const Index n = X.n();
  Vector y(n);
  for (Index k = 0; k < n; ++k) y(k) = data.labels[static_cast<std::size_t>(k)] == 0 ? 1.0 : -1.0;

  const Matrix gram = X.values() * X.values().transpose();
  const Matrix q = y.asDiagonal() * gram * y.asDiagonal();
  Vector alpha = Vector::Zero(n);
  Vector grad = -Vector::Ones(n);  // gradient of 1/2 a Q a - sum a
  const double alpha_cap = 1e12;

  MaxMarginModel m;
  int it = 0;
  double gap = std::numeric_limits<double>::infinity();
  for (; it < opts.max_iterations; ++it) {
    Index i = -1, j = -1;
    double up = -std::numeric_limits<double>::infinity(), low = std::numeric_limits<double>::infinity();
    for (Index t = 0; t < n; ++t) {
      const double v = -y(t) * grad(t);
      const bool in_up = y(t) > 0 || alpha(t) > 0;
      const bool in_low = y(t) < 0 || alpha(t) > 0;
      if (in_up && v > up) up = v, i = t;
      if (in_low && v < low) low = v, j = t;
    }
    gap = up - low;
    if (gap <= opts.tolerance) break;

    const double old_i = alpha(i), old_j = alpha(j);
    if (y(i) != y(j)) {
      double quad = q(i, i) + q(j, j) + 2.0 * q(i, j);
      if (quad <= 0.0) quad = 1e-12;
      const double delta = (-grad(i) - grad(j)) / quad;
      const double diff = alpha(i) - alpha(j);
      alpha(i) += delta;
      alpha(j) += delta;
      if (diff > 0.0 && alpha(j) < 0.0) {
        alpha(j) = 0.0;
        alpha(i) = diff;
      } else if (diff <= 0.0 && alpha(i) < 0.0) {
        alpha(i) = 0.0;
        alpha(j) = -diff;
      }
    } else {
      double quad = q(i, i) + q(j, j) - 2.0 * q(i, j);
      if (quad <= 0.0) quad = 1e-12;
      const double delta = (grad(i) - grad(j)) / quad;
      const double sum = alpha(i) + alpha(j);
      alpha(i) -= delta;
      alpha(j) += delta;
      if (alpha(i) < 0.0) {
        alpha(i) = 0.0;
        alpha(j) = sum;
      } else if (alpha(j) < 0.0) {
        alpha(j) = 0.0;
        alpha(i) = sum;
      }
    }
    grad += q.col(i) * (alpha(i) - old_i) + q.col(j) * (alpha(j) - old_j);
    if (!alpha.allFinite() || alpha.maxCoeff() > alpha_cap)
      throw NotSeparable("max-margin: dual diverged, the categories are not linearly separable");
  }
  if (gap > opts.tolerance)
    throw NotSeparable("max-margin: no separating solution within " + std::to_string(opts.max_iterations) + " iterations");

  m.alpha = alpha;
  m.iterations = it;
  m.kkt_gap = gap;
  m.w = X.values().transpose() * (alpha.array() * y.array()).matrix();
  const double amax = alpha.maxCoeff();
  double bsum = 0.0;
  int bcount = 0;
  for (Index k = 0; k < n; ++k)
    if (alpha(k) > 1e-12 * amax) {
      bsum += y(k) - m.w.dot(X.row(k));
      ++bcount;
    }
  if (bcount == 0) throw NotSeparable("max-margin: no active constraints");
  m.b = bsum / bcount;

  for (Index k = 0; k < n; ++k) {
    const double f = m.decision(X.row(k));
    if (y(k) * f < 1.0 - kSupportTolerance)
      throw NotSeparable("max-margin: object " + std::to_string(k + 1) + " violates its margin constraint");
    if (std::abs(f - y(k)) <= kSupportTolerance) m.support_indices.push_back(static_cast<std::size_t>(k));
  }
  return m;
}

/// 2 / |w|, the distance between the two hyperplanes.
inline double margin_of(const MaxMarginModel& m) {
  const double norm = m.w.norm();
  if (!(norm > 0.0)) throw DomainError("margin undefined for w = 0");
  return 2.0 / norm;
}

inline double margin_of(const Vector& w) {
  MaxMarginModel m;
  m.w = w;
  return margin_of(m);
}

inline InnerRepresentation max_margin_inner(const MaxMarginModel& m) {
  return InnerRepresentation("max-margin", 2, m.w.size(), Polarity::similarity, BoxKind::white,
                             {{"w", m.w.transpose()}, {"b", Matrix::Constant(1, 1, m.b)}},
                             [m](const Vector& x) { return m.discriminants(x); });
}

}  // namespace axiocat
