#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "axiocat/core/bundle.hpp"

namespace axiocat {

enum class RobustnessMode { inner, local_outer };

inline const char* to_string(RobustnessMode m) { return m == RobustnessMode::inner ? "inner" : "local-outer"; }

/// One categorization: the input bundle (X, U) and what the algorithm made of it (Y, V).
struct Categorization {
  CategorizationBundle input;
  CategorizationBundle output;
};

/// Two categorizations whose objects correspond row by row (e.g. a dataset
/// and a perturbed copy of it).
struct RobustnessPair {
  Categorization a;
  Categorization b;
};

struct RobustnessReport {
  double k1 = 0.0;
  double k2 = 0.0;
  std::vector<double> samples;  // input distance / output distance, one per pair
  RobustnessMode mode = RobustnessMode::local_outer;
};

inline constexpr double kRatioGuard = 1e-12;

/// |(X, U) - (X_T, U_T)|: Frobenius norm over the stacked data and memberships.
inline double bundle_distance(const CategorizationBundle& a, const CategorizationBundle& b) {
  if (a.data().n() != b.data().n() || a.data().p() != b.data().p())
    throw ShapeError("bundle distance needs matching data shapes, got " + std::to_string(a.data().n()) + "x" +
                     std::to_string(a.data().p()) + " and " + std::to_string(b.data().n()) + "x" +
                     std::to_string(b.data().p()));
  double sq = (a.data().values() - b.data().values()).squaredNorm();
  if (a.memberships().has_value() != b.memberships().has_value())
    throw ShapeError("bundle distance: only one side has memberships");
  if (a.memberships()) {
    const Matrix& u = a.memberships()->values();
    const Matrix& v = b.memberships()->values();
    if (u.rows() != v.rows() || u.cols() != v.cols()) throw ShapeError("bundle distance: membership shapes differ");
    sq += (u - v).squaredNorm();
  }
  return std::sqrt(sq);
}

namespace detail {

inline std::pair<double, double> pair_distances(const RobustnessPair& p, RobustnessMode mode) {
  if (mode == RobustnessMode::local_outer)
    return {bundle_distance(p.a.input, p.b.input), bundle_distance(p.a.output, p.b.output)};
  return {p.a.input.require_inner().parameter_distance(p.b.input.require_inner()),
          p.a.output.require_inner().parameter_distance(p.b.output.require_inner())};
}

}  // namespace detail

/// k1 and k2 as the smallest and largest observed ratio. A ratio whose
/// numerator or denominator is below 1e-12 is rejected, never clamped.
inline RobustnessReport estimate_robustness(const std::vector<RobustnessPair>& pairs, RobustnessMode mode) {
  if (pairs.size() < 2)
    throw PreconditionFailed("robustness needs at least 2 pairs, got " + std::to_string(pairs.size()));
  RobustnessReport r;
  r.mode = mode;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [in, out] = detail::pair_distances(pairs[i], mode);
    if (!(out >= kRatioGuard))
      throw UndefinedRatio("pair " + std::to_string(i + 1) + " has output distance " + std::to_string(out));
    if (!(in >= kRatioGuard))
      throw UndefinedRatio("pair " + std::to_string(i + 1) + " has input distance " + std::to_string(in) +
                           " (ratio 0 admits no positive k1)");
    r.samples.push_back(in / out);
  }
  const auto [lo, hi] = std::minmax_element(r.samples.begin(), r.samples.end());
  r.k1 = *lo;
  r.k2 = *hi;
  return r;
}

/// Exchanges the roles of input and output in every pair, which inverts each ratio.
inline std::vector<RobustnessPair> swap_roles(const std::vector<RobustnessPair>& pairs) {
  std::vector<RobustnessPair> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back({{p.a.output, p.a.input}, {p.b.output, p.b.input}});
  return out;
}

inline nlohmann::json to_json(const RobustnessReport& r) {
  return {{"k1", r.k1}, {"k2", r.k2}, {"samples", r.samples}, {"mode", to_string(r.mode)}};
}

}  // namespace axiocat
