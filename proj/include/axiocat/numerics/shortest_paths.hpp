#pragma once

#include <limits>
#include <string>
#include <vector>

#include "axiocat/error.hpp"
#include "axiocat/linalg.hpp"

namespace axiocat {

/// Thrown when a graph splits into several components. Components hold
/// 0-based vertex indices, each ascending, ordered by their smallest vertex.
class DisconnectedGraph : public Error {
 public:
  explicit DisconnectedGraph(std::vector<std::vector<Index>> components)
      : Error(ErrorKind::disconnected_graph, describe(components)), components_(std::move(components)) {}

  const std::vector<std::vector<Index>>& components() const noexcept { return components_; }

 private:
  static std::string describe(const std::vector<std::vector<Index>>& comps) {
    std::string s = "graph has " + std::to_string(comps.size()) + " components:";
    for (const auto& c : comps) {
      s += " {";
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i] + 1);
      s += "}";
    }
    return s;
  }

  std::vector<std::vector<Index>> components_;
};

constexpr double kNoEdge = std::numeric_limits<double>::infinity();

/// Floyd-Warshall metric closure of a symmetric, zero-diagonal weight matrix.
/// Absent edges are +infinity.
inline Matrix all_pairs_shortest_paths(const Matrix& weights) {
  const Index n = weights.rows();
  if (weights.cols() != n) throw ShapeError("weight matrix must be square");
  for (Index i = 0; i < n; ++i) {
    if (weights(i, i) != 0.0) throw ShapeError("weight matrix diagonal must be zero");
    for (Index j = 0; j < n; ++j) {
      const double w = weights(i, j);
      if (std::isnan(w) || w < 0.0) throw DomainError("edge weights must be nonnegative");
      if (w != weights(j, i)) throw ShapeError("weight matrix must be symmetric");
    }
  }

  Matrix d = weights;
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i) {
      const double dik = d(i, k);
      if (dik == kNoEdge) continue;
      for (Index j = 0; j < n; ++j) {
        const double via = dik + d(k, j);
        if (via < d(i, j)) d(i, j) = via;
      }
    }

  if (n > 0 && !d.allFinite()) {
    std::vector<std::vector<Index>> comps;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Index i = 0; i < n; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      std::vector<Index> comp;
      for (Index j = 0; j < n; ++j)
        if (std::isfinite(d(i, j))) {
          comp.push_back(j);
          seen[static_cast<std::size_t>(j)] = true;
        }
      comps.push_back(std::move(comp));
    }
    throw DisconnectedGraph(std::move(comps));
  }
  return d;
}

}  // namespace axiocat
