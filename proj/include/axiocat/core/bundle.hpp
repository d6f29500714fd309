#pragma once

#include <optional>
#include <string>
#include <utility>

#include "axiocat/core/inner_representation.hpp"

namespace axiocat {

/// One side of a categorization: object representation, outer (membership)
/// representation and inner representation. Either of the last two may be
/// absent, e.g. memberships are unknown for clustering inputs.
class CategorizationBundle {
 public:
  explicit CategorizationBundle(DataMatrix data, std::optional<MembershipMatrix> memberships = std::nullopt,
                                std::optional<InnerRepresentation> inner = std::nullopt)
      : data_(std::move(data)), memberships_(std::move(memberships)), inner_(std::move(inner)) {
    if (memberships_ && memberships_->n() != data_.n())
      throw ShapeError("memberships cover " + std::to_string(memberships_->n()) + " objects but data has " +
                       std::to_string(data_.n()) + " rows");
    if (memberships_ && inner_ && memberships_->c() != inner_->categories())
      throw ShapeError("memberships have " + std::to_string(memberships_->c()) +
                       " categories but the inner representation has " + std::to_string(inner_->categories()));
  }

  const DataMatrix& data() const noexcept { return data_; }
  const std::optional<MembershipMatrix>& memberships() const noexcept { return memberships_; }
  const std::optional<InnerRepresentation>& inner() const noexcept { return inner_; }

  Index n() const noexcept { return data_.n(); }

  /// Category count, from whichever of memberships/inner is present.
  Index c() const {
    if (memberships_) return memberships_->c();
    if (inner_) return inner_->categories();
    throw IncompleteBundle("bundle has neither memberships nor an inner representation");
  }

  const MembershipMatrix& require_memberships() const {
    if (!memberships_) throw IncompleteBundle("bundle has no memberships");
    return *memberships_;
  }

  const InnerRepresentation& require_inner() const {
    if (!inner_) throw IncompleteBundle("bundle has no inner representation");
    return *inner_;
  }

 private:
  DataMatrix data_;
  std::optional<MembershipMatrix> memberships_;
  std::optional<InnerRepresentation> inner_;
};

}  // namespace axiocat
