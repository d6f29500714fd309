#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "axiocat/core/operators.hpp"
#include "axiocat/random.hpp"

namespace axiocat {

/// One prototype per category (rows), compared by squared Euclidean distance.
class PrototypeSet {
 public:
  explicit PrototypeSet(Matrix prototypes) : protos_(std::move(prototypes)) {
    if (protos_.rows() < 1 || protos_.cols() < 1) throw ShapeError("prototype set needs c >= 1 and p >= 1");
    require_finite(protos_, "prototypes");
  }

  const Matrix& values() const { return protos_; }
  Index c() const { return protos_.rows(); }
  Index p() const { return protos_.cols(); }

  Vector dissimilarities(const Vector& x) const {
    if (x.size() != p()) throw ShapeError("prototypes: expected a " + std::to_string(p()) + "-vector");
    return (protos_.rowwise() - x.transpose()).rowwise().squaredNorm();
  }

  /// Distinct prototypes are necessary for the category separation axiom.
  bool pairwise_distinct() const {
    for (Index i = 0; i < c(); ++i)
      for (Index j = i + 1; j < c(); ++j)
        if (protos_.row(i) == protos_.row(j)) return false;
    return true;
  }

 private:
  Matrix protos_;
};

inline InnerRepresentation prototype_inner(const PrototypeSet& set) {
  return InnerRepresentation("prototypes", set.c(), set.p(), Polarity::dissimilarity, BoxKind::white,
                             {{"prototypes", set.values()}}, [set](const Vector& x) { return set.dissimilarities(x); });
}

/// Minimum pairwise Euclidean distance between prototypes.
inline double separation_value(const PrototypeSet& set) {
  if (set.c() < 2) throw DomainError("separation needs at least two categories");
  double best = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < set.c(); ++i)
    for (Index j = i + 1; j < set.c(); ++j) best = std::min(best, (set.values().row(i) - set.values().row(j)).norm());
  return best;
}

/// sum_i sum_k u_ik Ds(x_k, inner_i); similarity profiles count as -Sim.
inline double compactness_value(const CategorizationBundle& bundle) {
  const auto& u = bundle.require_memberships().values();
  const auto& inner = bundle.require_inner();
  double total = 0.0;
  for (Index k = 0; k < bundle.n(); ++k) {
    const auto prof = inner.profile(bundle.data().row(k));
    const Vector ds = prof.polarity == Polarity::dissimilarity ? prof.scores : Vector(-prof.scores);
    total += u.col(k).dot(ds);
  }
  return total;
}

struct ClusteringOptions {
  std::uint64_t seed = 0;
  std::optional<Matrix> initial_prototypes;
  int max_iterations = 100;
  double tolerance = 0.0;  // stop once the relative drop in J_C is at most this
};

struct EmptyCategoryEvent {
  int iteration = 0;
  Index category = 0;
  Index object = 0;  // moved into the empty category and used as its prototype
};

struct ClusteringResult {
  CategorizationBundle bundle;
  PrototypeSet prototypes;
  std::vector<double> objective;             // J_C after the first assignment, then after every update
  std::vector<EmptyCategoryEvent> empty_events;
  std::vector<std::size_t> optimizer_ties;   // objects the optimizer broke a tie for (lowest index won)
  int iterations = 0;
  bool converged = false;
};

/// Deterministic farthest-point seeding: a seeded first pick, then repeatedly
/// the object farthest from every chosen prototype (ties to the lower index).
inline Matrix farthest_point_prototypes(const DataMatrix& X, Index c, std::uint64_t seed) {
  const Index n = X.n();
  if (c < 1 || c > n) throw ShapeError("clustering: c must be in 1.." + std::to_string(n));
  Rng rng(seed);
  std::vector<Index> chosen{static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)))};
  Vector nearest = (X.values().rowwise() - X.values().row(chosen[0])).rowwise().squaredNorm();
  while (static_cast<Index>(chosen.size()) < c) {
    Index pick = 0;
    nearest.maxCoeff(&pick);
    chosen.push_back(pick);
    nearest = nearest.cwiseMin((X.values().rowwise() - X.values().row(pick)).rowwise().squaredNorm());
  }
  Matrix protos(c, X.p());
  for (Index i = 0; i < c; ++i) protos.row(i) = X.values().row(chosen[static_cast<std::size_t>(i)]);
  return protos;
}

namespace detail {

inline double assignment_cost(const DataMatrix& X, const Matrix& protos, const std::vector<Index>& labels) {
  double total = 0.0;
  for (Index k = 0; k < X.n(); ++k) total += (X.values().row(k) - protos.row(labels[static_cast<std::size_t>(k)])).squaredNorm();
  return total;
}

}  // namespace detail

/// Alternating minimization of the compactness criterion: nearest-prototype
/// assignment, then category means. Output memberships come from the referring
/// operator, so CE holds by construction.
inline ClusteringResult fit_prototype_clustering(const DataMatrix& X, Index c, const ClusteringOptions& opts = {}) {
  const Index n = X.n();
  if (c < 1 || c > n) throw ShapeError("clustering: c must be in 1.." + std::to_string(n) + ", got " + std::to_string(c));
  if (opts.max_iterations < 1) throw DomainError("clustering: max_iterations must be positive");
  Matrix protos;
  if (opts.initial_prototypes) {
    protos = *opts.initial_prototypes;
    if (protos.rows() != c || protos.cols() != X.p()) throw ShapeError("clustering: initial prototypes must be c x p");
    require_finite(protos, "initial prototypes");
  } else {
    protos = farthest_point_prototypes(X, c, opts.seed);
  }

  std::vector<Index> labels(static_cast<std::size_t>(n), -1);
  std::vector<std::size_t> ties;
  std::vector<EmptyCategoryEvent> events;
  std::vector<double> log;
  int it = 0;
  bool converged = false;
  for (it = 1; it <= opts.max_iterations; ++it) {
    bool changed = false;
    ties.clear();
    Matrix dist(n, c);
    for (Index k = 0; k < n; ++k) {
      dist.row(k) = (protos.rowwise() - X.values().row(k)).rowwise().squaredNorm().transpose();
      Index best = 0;
      dist.row(k).minCoeff(&best);  // first minimum: lowest index
      if ((dist.row(k).array() == dist(k, best)).count() > 1) ties.push_back(static_cast<std::size_t>(k));
      if (labels[static_cast<std::size_t>(k)] != best) changed = true;
      labels[static_cast<std::size_t>(k)] = best;
    }

    // Empty categories take the object farthest from its own prototype, from a
    // category that can spare it.
    std::vector<Index> sizes(static_cast<std::size_t>(c), 0);
    for (auto l : labels) ++sizes[static_cast<std::size_t>(l)];
    for (Index i = 0; i < c; ++i) {
      if (sizes[static_cast<std::size_t>(i)] > 0) continue;
      Index pick = -1;
      double far = -1.0;
      for (Index k = 0; k < n; ++k) {
        const Index l = labels[static_cast<std::size_t>(k)];
        if (sizes[static_cast<std::size_t>(l)] < 2) continue;
        if (dist(k, l) > far) {
          far = dist(k, l);
          pick = k;
        }
      }
      if (pick < 0) throw NumericalError("clustering: no object available to reseed an empty category");
      --sizes[static_cast<std::size_t>(labels[static_cast<std::size_t>(pick)])];
      labels[static_cast<std::size_t>(pick)] = i;
      ++sizes[static_cast<std::size_t>(i)];
      protos.row(i) = X.values().row(pick);
      events.push_back({it, i, pick});
      changed = true;
    }

    if (it == 1) log.push_back(detail::assignment_cost(X, protos, labels));
    if (!changed && it > 1) {
      converged = true;
      break;
    }

    Matrix sums = Matrix::Zero(c, X.p());
    for (Index k = 0; k < n; ++k) sums.row(labels[static_cast<std::size_t>(k)]) += X.values().row(k);
    for (Index i = 0; i < c; ++i) protos.row(i) = sums.row(i) / static_cast<double>(sizes[static_cast<std::size_t>(i)]);
    const double cost = detail::assignment_cost(X, protos, labels);
    const double prev = log.back();
    log.push_back(cost);
    if (opts.tolerance > 0.0 && prev - cost <= opts.tolerance * prev) {
      converged = true;
      break;
    }
  }
  if (it > opts.max_iterations) it = opts.max_iterations;

  PrototypeSet set(protos);
  return ClusteringResult{referring_bundle(X, prototype_inner(set)), set, std::move(log), std::move(events),
                          std::move(ties), it, converged};
}

/// "iteration,objective" rows, full precision.
inline std::string objective_log_csv(const std::vector<double>& objective) {
  std::string out = "iteration,objective\n";
  char buf[64];
  for (std::size_t i = 0; i < objective.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, objective[i]);
    out += buf;
  }
  return out;
}

}  // namespace axiocat
