#pragma once

#include "axiocat/classification/common.hpp"

namespace axiocat {

enum class Region { inside, outside, boundary };

inline const char* to_string(Region r) {
  switch (r) {
    case Region::inside: return "inside";
    case Region::outside: return "outside";
    case Region::boundary: return "boundary";
  }
  return "?";
}

/// Whether x lies in the decision region of category i. A tie that includes i
/// puts x on the boundary, in no region.
inline Region decision_region(const InnerRepresentation& inner, const Vector& x, std::size_t i) {
  if (i >= static_cast<std::size_t>(inner.categories())) throw ShapeError("category index out of range");
  const auto best = best_of(inner.profile(x));
  if (!best.contains(i)) return Region::outside;
  return best.singleton() ? Region::inside : Region::boundary;
}

inline bool decision_region_contains(const InnerRepresentation& inner, const Vector& x, std::size_t i) {
  return decision_region(inner, x, i) == Region::inside;
}

/// existential: x is at least as similar to category i as some training object
/// of the region (the literal reading). universal: as similar as every one.
enum class TrainingRegionRule { existential, universal };

inline Region training_decision_region(const InnerRepresentation& inner, const DataMatrix& X, const MembershipMatrix& U,
                                       const Vector& x, std::size_t i,
                                       TrainingRegionRule rule = TrainingRegionRule::existential) {
  const Region here = decision_region(inner, x, i);
  if (here != Region::inside) return here;
  const LabeledData data(X, U);
  auto similarity = [&](const Vector& z) {
    const auto prof = inner.profile(z);
    const double s = prof.scores(static_cast<Index>(i));
    return prof.polarity == Polarity::similarity ? s : -s;
  };
  const double sx = similarity(x);
  bool any = false, all = true, seen = false;
  for (Index k = 0; k < X.n(); ++k) {
    if (data.labels[static_cast<std::size_t>(k)] != i || !decision_region_contains(inner, X.row(k), i)) continue;
    seen = true;
    const bool ok = sx >= similarity(X.row(k));
    any = any || ok;
    all = all && ok;
  }
  if (!seen) return Region::outside;
  return (rule == TrainingRegionRule::existential ? any : all) ? Region::inside : Region::outside;
}

inline bool training_decision_region_contains(const InnerRepresentation& inner, const DataMatrix& X,
                                              const MembershipMatrix& U, const Vector& x, std::size_t i,
                                              TrainingRegionRule rule = TrainingRegionRule::existential) {
  return training_decision_region(inner, X, U, x, i, rule) == Region::inside;
}

}  // namespace axiocat
