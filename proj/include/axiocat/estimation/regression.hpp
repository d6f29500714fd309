#pragma once

#include <cmath>
#include <string>

#include "axiocat/core/bundle.hpp"
#include "axiocat/numerics/lasso.hpp"
#include "axiocat/numerics/solve.hpp"
#include "axiocat/numerics/sym_eig.hpp"

namespace axiocat {

enum class PenaltyKind { none, l2, l1 };

inline const char* to_string(PenaltyKind k) {
  switch (k) {
    case PenaltyKind::none: return "none";
    case PenaltyKind::l2: return "l2";
    case PenaltyKind::l1: return "l1";
  }
  return "?";
}

struct Penalty {
  PenaltyKind kind = PenaltyKind::none;
  double lambda = 0.0;

  static Penalty none() { return {}; }
  static Penalty l2(double lambda) { return {PenaltyKind::l2, lambda}; }
  static Penalty l1(double lambda) { return {PenaltyKind::l1, lambda}; }
};

/// F(x) = w . x + b.
struct RegressionModel {
  Vector w;
  double b = 0.0;
  Penalty penalty;
  bool singular = false;  // unpenalized normal equations were singular; w is the minimum-norm solution

  double predict(const Vector& x) const {
    if (x.size() != w.size()) throw ShapeError("regression: expected " + std::to_string(w.size()) + " features");
    return w.dot(x) + b;
  }
  Vector predict(const Matrix& A) const { return (A * w).array() + b; }
};

namespace detail {

inline Vector min_norm_solution(const Matrix& gram, const Vector& rhs) {
  const auto eig = sym_eig(0.5 * (gram + gram.transpose()));
  const double cutoff = 1e-10 * std::max(eig.eigenvalues.cwiseAbs().maxCoeff(), 1.0);
  Vector w = Vector::Zero(gram.rows());
  for (Index i = 0; i < gram.rows(); ++i)
    if (eig.eigenvalues(i) > cutoff)
      w += eig.eigenvectors.col(i) * (eig.eigenvectors.col(i).dot(rhs) / eig.eigenvalues(i));
  return w;
}

}  // namespace detail

/// Least squares with an unpenalized intercept, optionally with an L2 or L1
/// penalty on w. Features are centered so the intercept drops out of the solve.
inline RegressionModel fit_regression(const Matrix& A, const Vector& f, Penalty penalty = {}) {
  if (A.rows() < 1 || A.cols() < 1) throw ShapeError("regression: empty feature matrix");
  if (A.rows() != f.size()) throw ShapeError("regression: feature rows and targets differ in count");
  require_finite(A, "regression features");
  require_finite(f, "regression targets");
  if (penalty.kind != PenaltyKind::none && (!(penalty.lambda > 0.0) || !std::isfinite(penalty.lambda)))
    throw DomainError("regression: lambda must be positive for a penalized fit");

  const Eigen::RowVectorXd a_mean = A.colwise().mean();
  const double f_mean = f.mean();
  const Matrix ac = A.rowwise() - a_mean;
  const Vector fc = f.array() - f_mean;

  RegressionModel m;
  m.penalty = penalty;
  switch (penalty.kind) {
    case PenaltyKind::none: {
      const Matrix gram = ac.transpose() * ac;
      const Vector rhs = ac.transpose() * fc;
      // Centering costs a rank, so n <= tau is always singular.
      m.singular = ac.rows() <= ac.cols();
      if (!m.singular) {
        try {
          m.w = solve_spd(gram, rhs);
        } catch (const NumericalError&) {
          m.singular = true;
        }
      }
      if (m.singular) m.w = detail::min_norm_solution(gram, rhs);
      break;
    }
    case PenaltyKind::l2:
      m.w = solve_spd(ac.transpose() * ac, ac.transpose() * fc, penalty.lambda);
      break;
    case PenaltyKind::l1:
      m.w = lasso_coordinate_descent(ac, fc, penalty.lambda, 100000, 1e-13).w;
      break;
  }
  m.b = f_mean - a_mean.dot(m.w);
  return m;
}

inline double regression_objective(const Matrix& A, const Vector& f, const RegressionModel& m) {
  const double fit = (f - m.predict(A)).squaredNorm();
  switch (m.penalty.kind) {
    case PenaltyKind::none: return fit;
    case PenaltyKind::l2: return fit + m.penalty.lambda * m.w.squaredNorm();
    case PenaltyKind::l1: return fit + m.penalty.lambda * m.w.lpNorm<1>();
  }
  return fit;
}

/// Objects are [x, f]; Ds = (f - F(x))^2.
inline InnerRepresentation regression_inner(const RegressionModel& m) {
  const Index tau = m.w.size();
  return InnerRepresentation("regression", 1, tau + 1, Polarity::dissimilarity, BoxKind::white,
                             {{"w", m.w.transpose()}, {"b", Matrix::Constant(1, 1, m.b)}}, [m, tau](const Vector& z) {
                               const double r = z(tau) - m.predict(Vector(z.head(tau)));
                               return Vector::Constant(1, r * r);
                             });
}

inline CategorizationBundle regression_bundle(const Matrix& A, const Vector& f, const RegressionModel& m) {
  Matrix z(A.rows(), A.cols() + 1);
  z << A, f;
  return CategorizationBundle(DataMatrix(z), MembershipMatrix::single_category(A.rows()), regression_inner(m));
}

}  // namespace axiocat
