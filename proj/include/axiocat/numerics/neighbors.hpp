#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "axiocat/linalg.hpp"

namespace axiocat {

/// K nearest rows of X to `query` by Euclidean distance, ties broken by lower
/// row index. `exclude` (if >= 0) is never returned.
inline std::vector<Index> nearest_rows(const Matrix& X, const Vector& query, Index K, Index exclude = -1) {
  std::vector<Index> idx;
  idx.reserve(static_cast<std::size_t>(X.rows()));
  for (Index i = 0; i < X.rows(); ++i)
    if (i != exclude) idx.push_back(i);
  if (K > static_cast<Index>(idx.size()))
    throw ShapeError("asked for " + std::to_string(K) + " neighbors among " + std::to_string(idx.size()) + " candidates");
  std::vector<double> dist(static_cast<std::size_t>(X.rows()));
  for (auto i : idx) dist[static_cast<std::size_t>(i)] = (X.row(i).transpose() - query).squaredNorm();
  std::stable_sort(idx.begin(), idx.end(), [&](Index a, Index b) {
    return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
  });
  idx.resize(static_cast<std::size_t>(K));
  return idx;
}

}  // namespace axiocat
