#pragma once

#include <cmath>

#include "axiocat/core/bundle.hpp"
#include "axiocat/numerics/sym_eig.hpp"

namespace axiocat {

/// First canonical pair. Both blocks are centered; a and b are scaled so the
/// centered variates X a^T and Z b^T have unit norm.
struct CcaRepresentation {
  Vector a;            // length p
  Vector b;            // length q
  double correlation = 0.0;
  Vector x_mean;
  Vector z_mean;
};

namespace detail {

// Symmetric inverse square root of a scatter matrix; rank deficiency is degenerate data.
inline Matrix inverse_sqrt_scatter(const Matrix& scatter, const char* block) {
  const auto eig = sym_eig(scatter);
  const double top = eig.eigenvalues(0);
  if (!(top > 0.0) || eig.eigenvalues.minCoeff() <= 1e-12 * top)
    throw DegenerateData(std::string("cca: ") + block + " block has linearly dependent columns");
  return eig.eigenvectors * eig.eigenvalues.cwiseSqrt().cwiseInverse().asDiagonal() * eig.eigenvectors.transpose();
}

inline Matrix centered_checked(const DataMatrix& m, const char* block) {
  const Vector mean = m.values().colwise().mean().transpose();
  Matrix c = m.values().rowwise() - mean.transpose();
  for (Index j = 0; j < c.cols(); ++j)
    if (c.col(j).squaredNorm() == 0.0)
      throw DegenerateData(std::string("cca: column ") + std::to_string(j + 1) + " of the " + block +
                           " block has zero variance");
  return c;
}

}  // namespace detail

/// Maximizes a X^T Z b^T / (sqrt(a X^T X a^T) sqrt(b Z^T Z b^T)) in closed form
/// by whitening both blocks and taking the top singular pair of the whitened
/// cross-scatter.
inline CcaRepresentation fit_cca(const DataMatrix& X, const DataMatrix& Z) {
  if (X.n() != Z.n()) throw ShapeError("cca: blocks have different object counts");
  if (X.n() < 3) throw ShapeError("cca: needs at least three objects");
  const Matrix xc = detail::centered_checked(X, "first");
  const Matrix zc = detail::centered_checked(Z, "second");

  const Matrix wx = detail::inverse_sqrt_scatter(xc.transpose() * xc, "first");
  const Matrix wz = detail::inverse_sqrt_scatter(zc.transpose() * zc, "second");
  const Matrix m = wx * (xc.transpose() * zc) * wz;  // p x q

  const auto left = sym_eig(m * m.transpose());
  const Vector u = left.eigenvectors.col(0);
  const double sigma = std::sqrt(std::max(left.eigenvalues(0), 0.0));
  Vector v;
  if (sigma > 1e-12) {
    v = m.transpose() * u / sigma;
    v.normalize();
  } else {
    v = sym_eig(m.transpose() * m).eigenvectors.col(0);
  }

  CcaRepresentation rep;
  rep.x_mean = X.values().colwise().mean().transpose();
  rep.z_mean = Z.values().colwise().mean().transpose();
  rep.a = wx * u;
  rep.b = wz * v;
  rep.a /= (xc * rep.a).norm();
  rep.b /= (zc * rep.b).norm();
  rep.correlation = std::clamp((xc * rep.a).dot(zc * rep.b), -1.0, 1.0);
  return rep;
}

/// Unit-norm centered canonical variate X a^T / |X a^T|.
inline Vector cca_variate(const DataMatrix& data, const Vector& mean, const Vector& direction) {
  const Vector v = (data.values().rowwise() - mean.transpose()) * direction;
  return v / v.norm();
}

/// |X a^T/|X a^T| - Z b^T/|Z b^T||^2, which equals 2 - 2 * correlation at the optimum.
inline double cca_consistency(const DataMatrix& X, const DataMatrix& Z, const CcaRepresentation& rep) {
  return (cca_variate(X, rep.x_mean, rep.a) - cca_variate(Z, rep.z_mean, rep.b)).squaredNorm();
}

namespace detail {

// Inner rep of one CCA side: the normalized variate is the parameter; the
// dissimilarity of an object is its squared canonical coordinate.
inline InnerRepresentation cca_side_inner(const DataMatrix& data, const Vector& mean, const Vector& direction) {
  Matrix variate = cca_variate(data, mean, direction);
  return InnerRepresentation("cca", 1, direction.size(), Polarity::dissimilarity, BoxKind::white,
                             {{"variate", std::move(variate)}}, [mean, direction](const Vector& x) {
                               const double s = (x - mean).dot(direction);
                               return Vector::Constant(1, s * s);
                             });
}

}  // namespace detail

inline CategorizationBundle cca_input_bundle(const DataMatrix& X, const CcaRepresentation& rep) {
  return CategorizationBundle(X, MembershipMatrix::single_category(X.n()),
                              detail::cca_side_inner(X, rep.x_mean, rep.a));
}

inline CategorizationBundle cca_output_bundle(const DataMatrix& Z, const CcaRepresentation& rep) {
  return CategorizationBundle(Z, MembershipMatrix::single_category(Z.n()),
                              detail::cca_side_inner(Z, rep.z_mean, rep.b));
}

}  // namespace axiocat
