#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "axiocat/core/bundle.hpp"

namespace axiocat {

/// Indices attaining the best score: max for similarity, min for
/// dissimilarity. Scores within `tie_tol` of the best are tied; the default of
/// zero means only exactly equal scores tie.
inline AssignmentSet best_of(const SimilarityProfile& profile, double tie_tol = 0.0) {
  const auto& s = profile.scores;
  if (s.size() == 0) throw ShapeError("empty similarity profile");
  if (!s.allFinite()) throw NumericalError("similarity profile contains a non-finite entry");
  const double best = profile.polarity == Polarity::similarity ? s.maxCoeff() : s.minCoeff();
  std::vector<std::size_t> out;
  for (Index i = 0; i < s.size(); ++i)
    if (std::abs(s(i) - best) <= tie_tol) out.push_back(static_cast<std::size_t>(i));
  return AssignmentSet(std::move(out));
}

/// Assignment (outer referring) operator: per-column argmax of the memberships.
inline std::vector<AssignmentSet> assign_outer(const MembershipMatrix& memberships) {
  const Matrix& u = memberships.values();
  std::vector<AssignmentSet> out;
  out.reserve(static_cast<std::size_t>(u.cols()));
  for (Index k = 0; k < u.cols(); ++k) {
    if (u.rows() > 1 && (u.col(k).array() == 0.0).all())
      throw AmbiguousColumn("membership column " + std::to_string(k + 1) + " is all zeros");
    out.push_back(best_of({u.col(k), Polarity::similarity}));
  }
  return out;
}

/// Similarity (inner referring) operator: argmax of Sim, or argmin of Ds, per object.
inline std::vector<AssignmentSet> refer_inner(const DataMatrix& data, const InnerRepresentation& inner,
                                              double tie_tol = 0.0) {
  if (data.p() != inner.input_dim())
    throw ShapeError("data has " + std::to_string(data.p()) + " columns but the '" + inner.algorithm_id() +
                     "' representation expects " + std::to_string(inner.input_dim()));
  std::vector<AssignmentSet> out;
  out.reserve(static_cast<std::size_t>(data.n()));
  for (Index k = 0; k < data.n(); ++k) {
    const auto profile = inner.profile(data.row(k));
    if (!profile.scores.allFinite())
      throw NumericalError("profile of object " + std::to_string(k + 1) + " contains a non-finite entry");
    out.push_back(best_of(profile, tie_tol));
  }
  return out;
}

/// Objects (0-based) whose most similar category is not unique.
inline std::vector<std::size_t> boundary_set(const DataMatrix& data, const InnerRepresentation& inner,
                                             double tie_tol = 0.0) {
  const auto sets = refer_inner(data, inner, tie_tol);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sets.size(); ++k)
    if (sets[k].size() > 1) out.push_back(k);
  return out;
}

/// Output memberships derived from the inner referring operator, so that CE
/// holds by construction. Untied objects get a one-hot column; tied objects
/// share their unit mass equally across the tie, which makes the matrix soft.
inline MembershipMatrix memberships_from_referring(const std::vector<AssignmentSet>& sets, Index c) {
  Matrix v = Matrix::Zero(c, static_cast<Index>(sets.size()));
  bool tied = false;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto& idx = sets[k].indices();
    tied = tied || idx.size() > 1;
    for (auto i : idx) v(static_cast<Index>(i), static_cast<Index>(k)) = 1.0 / static_cast<double>(idx.size());
  }
  return MembershipMatrix(std::move(v), tied ? PartitionKind::soft : PartitionKind::hard);
}

inline MembershipMatrix memberships_from_referring(const DataMatrix& data, const InnerRepresentation& inner) {
  return memberships_from_referring(refer_inner(data, inner), inner.categories());
}

/// Output bundle (Y, V, Y_, Ds/Sim) with V derived by the referring operator.
inline CategorizationBundle referring_bundle(DataMatrix data, InnerRepresentation inner) {
  auto v = memberships_from_referring(data, inner);
  return CategorizationBundle(std::move(data), std::move(v), std::move(inner));
}

}  // namespace axiocat
