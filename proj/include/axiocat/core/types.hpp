#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "axiocat/linalg.hpp"

namespace axiocat {

/// n objects as rows of an n x p real matrix. Row k of the input side and row k
/// of the output side describe the same object.
class DataMatrix {
 public:
  DataMatrix() = default;

  explicit DataMatrix(Matrix values) : values_(std::move(values)) {
    if (values_.rows() < 1 || values_.cols() < 1)
      throw ShapeError("data matrix needs n >= 1 and p >= 1, got " + std::to_string(values_.rows()) +
                       "x" + std::to_string(values_.cols()));
    if (!values_.allFinite()) throw DomainError("data matrix contains a non-finite entry");
  }

  DataMatrix(std::initializer_list<std::initializer_list<double>> rows)
      : DataMatrix(from_rows(rows)) {}

  const Matrix& values() const noexcept { return values_; }
  Index n() const noexcept { return values_.rows(); }
  Index p() const noexcept { return values_.cols(); }
  Vector row(Index k) const { return values_.row(k).transpose(); }

  bool operator==(const DataMatrix& other) const { return values_ == other.values_; }

 private:
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const auto n = static_cast<Index>(rows.size());
    const auto p = n > 0 ? static_cast<Index>(rows.begin()->size()) : 0;
    Matrix m(n, p);
    Index i = 0;
    for (const auto& r : rows) {
      if (static_cast<Index>(r.size()) != p) throw ShapeError("ragged data matrix rows");
      Index j = 0;
      for (double v : r) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  Matrix values_;
};

enum class PartitionKind { hard, soft, overlapping, unknown };

inline const char* to_string(PartitionKind k) {
  switch (k) {
    case PartitionKind::hard: return "hard";
    case PartitionKind::soft: return "soft";
    case PartitionKind::overlapping: return "overlapping";
    case PartitionKind::unknown: return "unknown";
  }
  return "unknown";
}

/// c x n nonnegative membership values (U on the input side, V on the output
/// side). Column k holds the memberships of object k.
class MembershipMatrix {
 public:
  MembershipMatrix() = default;

  MembershipMatrix(Matrix values, PartitionKind kind) : values_(std::move(values)), kind_(kind) {
    validate();
  }

  /// One-hot memberships from 0-based labels.
  static MembershipMatrix from_labels(const std::vector<std::size_t>& labels, std::size_t c) {
    Matrix u = Matrix::Zero(static_cast<Index>(c), static_cast<Index>(labels.size()));
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k] >= c) throw ShapeError("label " + std::to_string(labels[k]) + " outside 0.." + std::to_string(c - 1));
      u(static_cast<Index>(labels[k]), static_cast<Index>(k)) = 1.0;
    }
    return MembershipMatrix(std::move(u), PartitionKind::hard);
  }

  /// The single-category partition: every object fully in category 1.
  static MembershipMatrix single_category(Index n) {
    return MembershipMatrix(Matrix::Ones(1, n), PartitionKind::hard);
  }

  const Matrix& values() const noexcept { return values_; }
  PartitionKind kind() const noexcept { return kind_; }
  Index c() const noexcept { return values_.rows(); }
  Index n() const noexcept { return values_.cols(); }

  /// 0-based labels; only defined for hard partitions.
  std::vector<std::size_t> labels() const {
    if (kind_ != PartitionKind::hard) throw DomainError("labels() requires a hard partition");
    std::vector<std::size_t> out(static_cast<std::size_t>(n()));
    for (Index k = 0; k < n(); ++k) {
      Index arg = 0;
      values_.col(k).maxCoeff(&arg);
      out[static_cast<std::size_t>(k)] = static_cast<std::size_t>(arg);
    }
    return out;
  }

 private:
  void validate() const {
    if (values_.rows() < 1) throw ShapeError("membership matrix needs c >= 1");
    if (!values_.allFinite()) throw DomainError("membership matrix contains a non-finite entry");
    if ((values_.array() < 0.0).any()) throw DomainError("membership matrix contains a negative entry");
    for (Index k = 0; k < values_.cols(); ++k) {
      const auto col = values_.col(k);
      switch (kind_) {
        case PartitionKind::hard: {
          const auto ones = (col.array() == 1.0).count();
          const auto zeros = (col.array() == 0.0).count();
          if (ones != 1 || ones + zeros != col.size())
            throw DomainError("hard membership column " + std::to_string(k) + " is not one-hot");
          break;
        }
        case PartitionKind::soft:
          if (std::abs(col.sum() - 1.0) > 1e-9)
            throw DomainError("soft membership column " + std::to_string(k) + " sums to " + std::to_string(col.sum()));
          break;
        case PartitionKind::overlapping:
          if (!(col.array() > 0.0).any())
            throw DomainError("overlapping membership column " + std::to_string(k) + " has no positive entry");
          break;
        case PartitionKind::unknown:
          break;
      }
    }
  }

  Matrix values_;
  PartitionKind kind_ = PartitionKind::unknown;
};

enum class Polarity { similarity, dissimilarity };

inline const char* to_string(Polarity p) {
  return p == Polarity::similarity ? "similarity" : "dissimilarity";
}

/// Per-object scores against every category (Sim or Ds values). Entries may be
/// negative; only the order matters to the referring operator.
struct SimilarityProfile {
  Vector scores;
  Polarity polarity = Polarity::similarity;

  Index size() const noexcept { return scores.size(); }
};

/// Nonempty, ascending set of 0-based category indices. Holds more than one
/// index exactly when the argmax/argmin is tied.
class AssignmentSet {
 public:
  AssignmentSet() = default;

  explicit AssignmentSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw DomainError("assignment set must be nonempty");
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  }

  AssignmentSet(std::initializer_list<std::size_t> indices)
      : AssignmentSet(std::vector<std::size_t>(indices)) {}

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool singleton() const noexcept { return indices_.size() == 1; }
  std::size_t front() const { return indices_.front(); }
  bool contains(std::size_t i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

  bool operator==(const AssignmentSet&) const = default;

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace axiocat
