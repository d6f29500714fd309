#pragma once

#include <cmath>

#include "axiocat/core/operators.hpp"

namespace axiocat {

enum class LossMode { risk, utility };

/// Expected loss (risk) or gain (utility) of each action i:
/// sum_j table(i, j) P(Y_j | x).
inline Vector expected_values(const SimilarityProfile& posteriors, const Matrix& table) {
  const Vector& post = posteriors.scores;
  const Index c = post.size();
  if (c < 1) throw ShapeError("decision: empty posterior");
  if (table.rows() != c || table.cols() != c) throw ShapeError("decision: loss table must be c x c");
  require_finite(table, "decision table");
  if (!post.allFinite() || (post.array() < 0.0).any()) throw DomainError("decision: negative or non-finite posterior");
  if (std::abs(post.sum() - 1.0) > 1e-9) throw DomainError("decision: posteriors must sum to 1");
  return table * post;
}

/// Risk: the actions of least expected loss. Utility: the actions of greatest
/// expected gain. Ties are kept.
inline AssignmentSet decide_expected_loss(const SimilarityProfile& posteriors, const Matrix& table, LossMode mode,
                                          double tie_tol = 0.0) {
  const Vector values = expected_values(posteriors, table);
  return best_of({values, mode == LossMode::risk ? Polarity::dissimilarity : Polarity::similarity}, tie_tol);
}

inline Matrix zero_one_loss(Index c) { return Matrix::Ones(c, c) - Matrix::Identity(c, c); }

}  // namespace axiocat
