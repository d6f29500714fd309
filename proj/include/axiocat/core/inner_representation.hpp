#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "axiocat/core/types.hpp"

namespace axiocat {

/// How much of its inner representation an algorithm exposes.
enum class BoxKind { white, grey, black };

inline const char* to_string(BoxKind b) {
  switch (b) {
    case BoxKind::white: return "white";
    case BoxKind::grey: return "grey";
    case BoxKind::black: return "black";
  }
  return "black";
}

/// A named, already-canonicalized parameter matrix (prototypes, bases, weights...).
struct ParameterBlock {
  std::string name;
  Matrix values;
};

/// Inner category representation: the per-category parameters together with
/// the category (dis)similarity mapping they induce.
///
/// Parameter blocks are stored canonicalized by the producing algorithm
/// (eigenvector signs fixed, rows ordered by category index), which makes the
/// flattened Euclidean distance between two comparable representations a
/// deterministic metric.
class InnerRepresentation {
 public:
  using ProfileFn = std::function<Vector(const Vector&)>;

  InnerRepresentation(std::string algorithm_id, Index categories, Index input_dim, Polarity polarity,
                      BoxKind box, std::vector<ParameterBlock> parameters, ProfileFn profile)
      : algorithm_id_(std::move(algorithm_id)),
        categories_(categories),
        input_dim_(input_dim),
        polarity_(polarity),
        box_(box),
        parameters_(std::make_shared<const std::vector<ParameterBlock>>(std::move(parameters))),
        profile_(std::move(profile)) {
    if (categories_ < 1) throw ShapeError("inner representation needs at least one category");
    if (input_dim_ < 1) throw ShapeError("inner representation needs a positive input dimension");
    if (!profile_) throw DomainError("inner representation needs a profile function");
  }

  const std::string& algorithm_id() const noexcept { return algorithm_id_; }
  Index categories() const noexcept { return categories_; }
  Index input_dim() const noexcept { return input_dim_; }
  Polarity polarity() const noexcept { return polarity_; }
  BoxKind box() const noexcept { return box_; }
  const std::vector<ParameterBlock>& parameters() const noexcept { return *parameters_; }

  const ParameterBlock* find(const std::string& name) const {
    for (const auto& b : *parameters_)
      if (b.name == name) return &b;
    return nullptr;
  }

  /// Scores of x against every category. Non-finite scores are passed through;
  /// the referring operators reject them.
  SimilarityProfile profile(const Vector& x) const {
    if (x.size() != input_dim_)
      throw ShapeError(algorithm_id_ + " profile expects a " + std::to_string(input_dim_) +
                       "-vector, got " + std::to_string(x.size()));
    Vector scores = profile_(x);
    if (scores.size() != categories_)
      throw ShapeError(algorithm_id_ + " profile returned " + std::to_string(scores.size()) +
                       " scores for " + std::to_string(categories_) + " categories");
    return {std::move(scores), polarity_};
  }

  /// Same algorithm and identical parameter block names and shapes.
  bool comparable(const InnerRepresentation& other) const {
    if (algorithm_id_ != other.algorithm_id_) return false;
    const auto& a = *parameters_;
    const auto& b = *other.parameters_;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].name != b[i].name || a[i].values.rows() != b[i].values.rows() ||
          a[i].values.cols() != b[i].values.cols())
        return false;
    }
    return true;
  }

  /// Euclidean norm of the difference of the flattened parameter vectors.
  double parameter_distance(const InnerRepresentation& other) const {
    if (!comparable(other))
      throw Incomparable("cannot compare '" + algorithm_id_ + "' and '" + other.algorithm_id_ +
                         "' inner representations");
    double sq = 0.0;
    for (std::size_t i = 0; i < parameters_->size(); ++i)
      sq += ((*parameters_)[i].values - (*other.parameters_)[i].values).squaredNorm();
    return std::sqrt(sq);
  }

  double parameter_norm() const {
    double sq = 0.0;
    for (const auto& b : *parameters_) sq += b.values.squaredNorm();
    return std::sqrt(sq);
  }

 private:
  std::string algorithm_id_;
  Index categories_;
  Index input_dim_;
  Polarity polarity_;
  BoxKind box_;
  std::shared_ptr<const std::vector<ParameterBlock>> parameters_;
  ProfileFn profile_;
};

}  // namespace axiocat
