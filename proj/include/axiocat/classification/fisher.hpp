#pragma once

#include "axiocat/classification/common.hpp"
#include "axiocat/numerics/solve.hpp"
#include "axiocat/numerics/sym_eig.hpp"

namespace axiocat {

/// Rows of `directions` are unit-length discriminant directions.
struct FisherProjection {
  Matrix directions;  // d x p
  Matrix within;      // S_W
  Matrix between;     // S_B
  Matrix means;       // c x p class means
  Vector ratios;      // w S_B w^T / w S_W w^T per direction (ridge included in S_W)

  Matrix project(const Matrix& X) const { return X * directions.transpose(); }
};

struct FisherScatter {
  Matrix within;
  Matrix between;
  Matrix means;
};

inline FisherScatter fisher_scatter(const DataMatrix& X, const MembershipMatrix& U) {
  const LabeledData data(X, U);
  data.require_nonempty_classes("fisher");
  FisherScatter s;
  s.means = data.class_means();
  const Vector overall = X.values().colwise().mean().transpose();
  s.within = Matrix::Zero(X.p(), X.p());
  s.between = Matrix::Zero(X.p(), X.p());
  for (Index k = 0; k < X.n(); ++k) {
    const Vector d = X.row(k) - s.means.row(static_cast<Index>(data.labels[static_cast<std::size_t>(k)])).transpose();
    s.within += d * d.transpose();
  }
  for (Index i = 0; i < data.c; ++i) {
    const Vector d = s.means.row(i).transpose() - overall;
    s.between += static_cast<double>(data.counts[static_cast<std::size_t>(i)]) * d * d.transpose();
  }
  return s;
}

/// Minimizes w S_W w^T / w S_B w^T. Two categories use the closed form
/// w ~ (v_1 - v_2)(S_W + ridge I)^-1; more use the generalized eigenproblem.
/// `d` = 0 picks c - 1 directions (capped at p).
inline FisherProjection fit_fisher_projection(const DataMatrix& X, const MembershipMatrix& U, double ridge = 0.0,
                                              Index d = 0) {
  if (U.c() < 2) throw ShapeError("fisher: needs at least two categories");
  if (ridge < 0.0) throw DomainError("fisher: ridge must be nonnegative");
  const auto s = fisher_scatter(X, U);
  const Index p = X.p();
  if (d == 0) d = std::min<Index>(U.c() - 1, p);
  if (d < 1 || d > std::min<Index>(U.c() - 1, p)) throw ShapeError("fisher: at most min(c-1, p) directions");
  const double scale = s.within.trace() + s.between.trace();
  if (!(s.between.trace() > 1e-12 * scale)) throw DegenerateData("fisher: all class means coincide");

  Matrix sw = s.within;
  sw.diagonal().array() += ridge;
  FisherProjection f{Matrix(d, p), s.within, s.between, s.means, Vector(d)};
  if (U.c() == 2) {
    Vector w = solve_spd(sw, (s.means.row(0) - s.means.row(1)).transpose());
    w.normalize();
    canonicalize_sign(w);
    f.directions.row(0) = w.transpose();
  } else {
    Eigen::LLT<Matrix> llt(0.5 * (sw + sw.transpose()));
    if (llt.info() != Eigen::Success) throw NumericalError("fisher: within-class scatter is singular after ridge");
    const Matrix l = llt.matrixL();
    const Matrix linv = l.triangularView<Eigen::Lower>().solve(Matrix::Identity(p, p));
    Matrix m = linv * s.between * linv.transpose();
    const auto eig = sym_eig(0.5 * (m + m.transpose()));
    for (Index r = 0; r < d; ++r) {
      Vector w = linv.transpose() * eig.eigenvectors.col(r);
      w.normalize();
      canonicalize_sign(w);
      f.directions.row(r) = w.transpose();
    }
  }
  for (Index r = 0; r < d; ++r) {
    const Vector w = f.directions.row(r).transpose();
    f.ratios(r) = w.dot(s.between * w) / w.dot(sw * w);
  }
  return f;
}

/// Ds(x, Y_i) = |W (x - v_i)|^2 in the projected space.
inline InnerRepresentation fisher_inner(const FisherProjection& f) {
  return InnerRepresentation("fisher", f.means.rows(), f.directions.cols(), Polarity::dissimilarity, BoxKind::white,
                             {{"directions", f.directions}}, [f](const Vector& x) {
                               const Vector y = f.directions * x;
                               const Matrix centers = f.means * f.directions.transpose();
                               return Vector((centers.rowwise() - y.transpose()).rowwise().squaredNorm());
                             });
}

}  // namespace axiocat
