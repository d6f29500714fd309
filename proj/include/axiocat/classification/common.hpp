#pragma once

#include <string>
#include <vector>

#include "axiocat/core/operators.hpp"

namespace axiocat {

/// Training data with a known hard partition, unpacked to labels.
struct LabeledData {
  const DataMatrix& X;
  std::vector<std::size_t> labels;  // 0-based
  Index c = 0;
  std::vector<Index> counts;

  LabeledData(const DataMatrix& data, const MembershipMatrix& U) : X(data) {
    if (U.n() != data.n())
      throw ShapeError("memberships cover " + std::to_string(U.n()) + " objects, data has " + std::to_string(data.n()));
    if (U.kind() != PartitionKind::hard) throw DomainError("classification needs a hard partition");
    labels = U.labels();
    c = U.c();
    counts.assign(static_cast<std::size_t>(c), 0);
    for (auto l : labels) ++counts[l];
  }

  Matrix class_means() const {
    Matrix means = Matrix::Zero(c, X.p());
    for (Index k = 0; k < X.n(); ++k) means.row(static_cast<Index>(labels[static_cast<std::size_t>(k)])) += X.values().row(k);
    for (Index i = 0; i < c; ++i)
      if (counts[static_cast<std::size_t>(i)] > 0) means.row(i) /= static_cast<double>(counts[static_cast<std::size_t>(i)]);
    return means;
  }

  void require_nonempty_classes(const char* who) const {
    for (Index i = 0; i < c; ++i)
      if (counts[static_cast<std::size_t>(i)] == 0)
        throw DegenerateData(std::string(who) + ": category " + std::to_string(i + 1) + " has no objects");
  }
};

/// Output bundle of a fitted classifier on X: V follows from the profiles.
inline CategorizationBundle classification_bundle(const DataMatrix& X, InnerRepresentation inner) {
  return referring_bundle(X, std::move(inner));
}

}  // namespace axiocat
