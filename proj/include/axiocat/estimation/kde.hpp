#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "axiocat/core/bundle.hpp"

namespace axiocat {

/// Gaussian kernel density estimate over stored samples.
class KdeEstimator {
 public:
  KdeEstimator(DataMatrix samples, double bandwidth) : samples_(std::move(samples)), h_(bandwidth) {
    if (!(h_ > 0.0) || !std::isfinite(h_)) throw DomainError("kde: bandwidth must be positive");
  }

  double density(const Vector& x) const {
    if (x.size() != samples_.p()) throw ShapeError("kde: dimension mismatch");
    const double p = static_cast<double>(samples_.p());
    const double norm = std::pow(2.0 * std::numbers::pi * h_ * h_, -0.5 * p);
    double total = 0.0;
    for (Index k = 0; k < samples_.n(); ++k)
      total += std::exp(-0.5 * (samples_.values().row(k).transpose() - x).squaredNorm() / (h_ * h_));
    return norm * total / static_cast<double>(samples_.n());
  }

  const DataMatrix& samples() const { return samples_; }
  double bandwidth() const { return h_; }

 private:
  DataMatrix samples_;
  double h_;
};

/// h = s (4 / (3 n))^(1/5) with s the sample standard deviation; 1-D only.
inline double silverman_bandwidth(const DataMatrix& X) {
  if (X.p() != 1) throw ShapeError("kde: the default bandwidth is defined for one-dimensional data only");
  if (X.n() < 2) throw DegenerateData("kde: the default bandwidth needs at least two objects");
  const Vector col = X.values().col(0);
  const double sd = std::sqrt((col.array() - col.mean()).square().sum() / static_cast<double>(X.n() - 1));
  if (!(sd > 0.0)) throw DegenerateData("kde: zero spread, give a bandwidth explicitly");
  return sd * std::pow(4.0 / (3.0 * static_cast<double>(X.n())), 0.2);
}

inline KdeEstimator fit_kde(const DataMatrix& X, double h) { return KdeEstimator(X, h); }
inline KdeEstimator fit_kde(const DataMatrix& X) { return KdeEstimator(X, silverman_bandwidth(X)); }

/// Ds(x) = -log density(x); +inf where the density underflows.
inline InnerRepresentation kde_inner(const KdeEstimator& kde) {
  return InnerRepresentation("kde", 1, kde.samples().p(), Polarity::dissimilarity, BoxKind::grey,
                             {{"samples", kde.samples().values()}, {"bandwidth", Matrix::Constant(1, 1, kde.bandwidth())}},
                             [kde](const Vector& x) {
                               const double d = kde.density(x);
                               return Vector::Constant(1, d > 0.0 ? -std::log(d) : std::numeric_limits<double>::max());
                             });
}

inline CategorizationBundle kde_bundle(const DataMatrix& X, const KdeEstimator& kde) {
  return CategorizationBundle(X, MembershipMatrix::single_category(X.n()), kde_inner(kde));
}

}  // namespace axiocat
