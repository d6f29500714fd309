#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "axiocat/core/bundle.hpp"
#include "axiocat/random.hpp"

namespace axiocat {

// Both factors are nonnegative.
struct NmfRepresentation {
  Matrix basis;         // W, d x p
  Matrix coefficients;  // H, n x d
};

struct NmfOptions {
  int iterations = 500;
  std::uint64_t seed = 0;
};

struct NmfFit {
  NmfRepresentation rep;
  std::vector<double> objective;  // |X - HW|^2 at init and after every iteration
  std::uint64_t seed = 0;
};

inline constexpr double kNmfEpsilon = 1e-12;

inline double nmf_objective(const Matrix& X, const NmfRepresentation& rep) {
  return (X - rep.coefficients * rep.basis).squaredNorm();
}

/// Multiplicative updates for min |X - HW|^2 over nonnegative H (n x d) and W (d x p).
inline NmfFit fit_nmf(const DataMatrix& X, Index d, const NmfOptions& opts = {}) {
  const Matrix& x = X.values();
  if ((x.array() < 0.0).any()) throw DomainError("nmf: data has a negative entry");
  if (d < 1) throw ShapeError("nmf: rank must be at least 1");
  if (opts.iterations < 0) throw DomainError("nmf: iterations must be nonnegative");

  Rng rng(opts.seed);
  const double scale = std::sqrt(x.mean() / static_cast<double>(d));
  NmfFit fit;
  fit.seed = opts.seed;
  fit.rep.coefficients = rng.uniform_matrix(X.n(), d).cwiseAbs() * scale;
  fit.rep.basis = rng.uniform_matrix(d, X.p()).cwiseAbs() * scale;
  Matrix& H = fit.rep.coefficients;
  Matrix& W = fit.rep.basis;

  fit.objective.reserve(static_cast<std::size_t>(opts.iterations) + 1);
  fit.objective.push_back(nmf_objective(x, fit.rep));
  for (int it = 0; it < opts.iterations; ++it) {
    const Matrix h_num = x * W.transpose();
    const Matrix h_den = H * (W * W.transpose());
    H.array() *= h_num.array() / (h_den.array() + kNmfEpsilon);

    const Matrix w_num = H.transpose() * x;
    const Matrix w_den = (H.transpose() * H) * W;
    W.array() *= w_num.array() / (w_den.array() + kNmfEpsilon);

    fit.objective.push_back(nmf_objective(x, fit.rep));
  }
  if (!H.allFinite() || !W.allFinite()) throw NumericalError("nmf: updates produced non-finite factors");
  return fit;
}

/// Nonnegative coefficients of x on a fixed basis, by multiplicative updates.
inline Vector nmf_project(const Vector& x, const Matrix& basis, int iterations = 1000) {
  Vector h = Vector::Ones(basis.rows());
  const Vector num = (basis * x).cwiseMax(0.0);
  const Matrix gram = basis * basis.transpose();
  for (int it = 0; it < iterations; ++it) h.array() *= num.array() / ((gram * h).array() + kNmfEpsilon);
  return h;
}

/// Ds_X(x) = |x - h W|^2 with h the fitted coefficients of x.
inline InnerRepresentation nmf_input_inner(const NmfRepresentation& rep) {
  const Matrix basis = rep.basis;
  return InnerRepresentation("nmf", 1, basis.cols(), Polarity::dissimilarity, BoxKind::white, {{"basis", basis}},
                             [basis](const Vector& x) {
                               const Vector h = nmf_project(x, basis);
                               return Vector::Constant(1, (x - basis.transpose() * h).squaredNorm());
                             });
}

/// Ds_Y on coefficient vectors: hW reconstructs exactly, so the residual is 0.
inline InnerRepresentation nmf_output_inner(const NmfRepresentation& rep) {
  const Matrix basis = rep.basis;
  return InnerRepresentation("nmf", 1, basis.rows(), Polarity::dissimilarity, BoxKind::white, {{"basis", basis}},
                             [](const Vector&) { return Vector::Zero(1); });
}

inline CategorizationBundle nmf_input_bundle(const DataMatrix& X, const NmfFit& fit) {
  return CategorizationBundle(X, MembershipMatrix::single_category(X.n()), nmf_input_inner(fit.rep));
}

inline CategorizationBundle nmf_output_bundle(const NmfFit& fit) {
  DataMatrix y(fit.rep.coefficients);
  return CategorizationBundle(y, MembershipMatrix::single_category(y.n()), nmf_output_inner(fit.rep));
}

}  // namespace axiocat
