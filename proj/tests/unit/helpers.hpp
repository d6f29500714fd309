#pragma once

#include <catch_amalgamated.hpp>

#include <vector>

#include "axiocat/core/inner_representation.hpp"

namespace axiocat::test {

// Squared-distance prototype representation, written independently of the
// clustering module so core tests do not depend on it.
inline InnerRepresentation squared_distance_prototypes(const Matrix& prototypes, std::string id = "prototypes") {
  const Matrix protos = prototypes;
  return InnerRepresentation(std::move(id), protos.rows(), protos.cols(), Polarity::dissimilarity, BoxKind::white,
                             {{"prototypes", protos}}, [protos](const Vector& x) {
                               Vector s(protos.rows());
                               for (Index i = 0; i < protos.rows(); ++i) s(i) = (protos.row(i).transpose() - x).squaredNorm();
                               return s;
                             });
}

// Representation whose profile is looked up from a table keyed by the first coordinate.
inline InnerRepresentation fixed_profiles(const Matrix& table, Polarity polarity, std::string id = "table") {
  const Matrix t = table;
  return InnerRepresentation(std::move(id), t.cols(), 1, polarity, BoxKind::black, {}, [t](const Vector& x) {
    return Vector(t.row(static_cast<Index>(x(0))).transpose());
  });
}

inline Matrix column(std::initializer_list<double> values) {
  Matrix m(static_cast<Index>(values.size()), 1);
  Index i = 0;
  for (double v : values) m(i++, 0) = v;
  return m;
}

inline double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace axiocat::test
