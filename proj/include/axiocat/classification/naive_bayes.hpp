#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "axiocat/classification/common.hpp"

namespace axiocat {

enum class FeatureKind { categorical, real };

struct NaiveBayesOptions {
  double alpha = 1.0;               // additive smoothing for categorical features
  std::vector<FeatureKind> kinds;   // per column; empty means all real
};

struct FeatureConditional {
  FeatureKind kind = FeatureKind::real;
  std::vector<double> vocabulary;  // categorical: observed values, ascending
  Matrix counts;                   // categorical: c x |vocabulary|
  Vector means;                    // real: per category
  Vector variances;                // real: per category
};

struct NaiveBayesModel {
  Vector priors;  // card(X_i) / n
  std::vector<Index> class_sizes;
  std::vector<FeatureConditional> features;
  double alpha = 1.0;

  Index c() const { return priors.size(); }
  Index p() const { return static_cast<Index>(features.size()); }
};

/// Normalized posterior plus the log joint P(Y_i) prod_r P(x_r | Y_i).
struct NaiveBayesPosterior {
  SimilarityProfile profile;
  Vector log_joint;                       // -inf where a factor is zero
  bool zero_probability = false;          // some category got probability exactly zero
  std::vector<std::size_t> zero_classes;  // 0-based
};

inline NaiveBayesModel fit_naive_bayes(const DataMatrix& X, const MembershipMatrix& U, const NaiveBayesOptions& opts = {}) {
  const LabeledData data(X, U);
  if (!(opts.alpha >= 0.0) || !std::isfinite(opts.alpha)) throw DomainError("naive bayes: alpha must be nonnegative");
  if (!opts.kinds.empty() && static_cast<Index>(opts.kinds.size()) != X.p())
    throw ShapeError("naive bayes: one feature kind per column expected");
  data.require_nonempty_classes("naive bayes");

  NaiveBayesModel m;
  m.alpha = opts.alpha;
  m.class_sizes = data.counts;
  m.priors.resize(data.c);
  for (Index i = 0; i < data.c; ++i)
    m.priors(i) = static_cast<double>(data.counts[static_cast<std::size_t>(i)]) / static_cast<double>(X.n());

  for (Index r = 0; r < X.p(); ++r) {
    FeatureConditional f;
    f.kind = opts.kinds.empty() ? FeatureKind::real : opts.kinds[static_cast<std::size_t>(r)];
    const Vector col = X.values().col(r);
    if (f.kind == FeatureKind::categorical) {
      f.vocabulary.assign(col.data(), col.data() + col.size());
      std::sort(f.vocabulary.begin(), f.vocabulary.end());
      f.vocabulary.erase(std::unique(f.vocabulary.begin(), f.vocabulary.end()), f.vocabulary.end());
      f.counts = Matrix::Zero(data.c, static_cast<Index>(f.vocabulary.size()));
      for (Index k = 0; k < X.n(); ++k) {
        const auto at = std::lower_bound(f.vocabulary.begin(), f.vocabulary.end(), col(k)) - f.vocabulary.begin();
        f.counts(static_cast<Index>(data.labels[static_cast<std::size_t>(k)]), static_cast<Index>(at)) += 1.0;
      }
    } else {
      f.means = Vector::Zero(data.c);
      f.variances = Vector::Zero(data.c);
      for (Index k = 0; k < X.n(); ++k) f.means(static_cast<Index>(data.labels[static_cast<std::size_t>(k)])) += col(k);
      for (Index i = 0; i < data.c; ++i) f.means(i) /= static_cast<double>(data.counts[static_cast<std::size_t>(i)]);
      for (Index k = 0; k < X.n(); ++k) {
        const Index i = static_cast<Index>(data.labels[static_cast<std::size_t>(k)]);
        f.variances(i) += (col(k) - f.means(i)) * (col(k) - f.means(i));
      }
      for (Index i = 0; i < data.c; ++i) {
        f.variances(i) /= static_cast<double>(data.counts[static_cast<std::size_t>(i)]);
        if (!(f.variances(i) > 0.0))
          throw DegenerateData("naive bayes: feature " + std::to_string(r + 1) + " has zero variance in category " +
                               std::to_string(i + 1));
      }
    }
    m.features.push_back(std::move(f));
  }
  return m;
}

/// log P(x_r | Y_i) for one feature; -inf for a zero probability.
inline double naive_bayes_log_conditional(const NaiveBayesModel& m, Index r, double value, Index i) {
  const auto& f = m.features[static_cast<std::size_t>(r)];
  if (f.kind == FeatureKind::real) {
    const double v = f.variances(i);
    const double d = value - f.means(i);
    return -0.5 * d * d / v - 0.5 * std::log(2.0 * std::numbers::pi * v);
  }
  const auto it = std::lower_bound(f.vocabulary.begin(), f.vocabulary.end(), value);
  const bool seen = it != f.vocabulary.end() && *it == value;
  const double count = seen ? f.counts(i, static_cast<Index>(it - f.vocabulary.begin())) : 0.0;
  const double denom = static_cast<double>(m.class_sizes[static_cast<std::size_t>(i)]) +
                       m.alpha * static_cast<double>(f.vocabulary.size());
  const double num = count + m.alpha;
  if (num == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(num / denom);
}

/// Posterior P(Y_i | x). Zero-probability categories are flagged; if every
/// category has probability zero the posterior is uniform (every category tied).
inline NaiveBayesPosterior naive_bayes_posterior(const NaiveBayesModel& m, const Vector& x) {
  if (x.size() != m.p()) throw ShapeError("naive bayes: dimension mismatch");
  NaiveBayesPosterior out;
  out.log_joint.resize(m.c());
  for (Index i = 0; i < m.c(); ++i) {
    double s = std::log(m.priors(i));
    for (Index r = 0; r < m.p(); ++r) s += naive_bayes_log_conditional(m, r, x(r), i);
    out.log_joint(i) = s;
    if (s == -std::numeric_limits<double>::infinity()) out.zero_classes.push_back(static_cast<std::size_t>(i));
  }
  out.zero_probability = !out.zero_classes.empty();
  Vector post(m.c());
  if (static_cast<Index>(out.zero_classes.size()) == m.c()) {
    post.setConstant(1.0 / static_cast<double>(m.c()));
  } else {
    const double top = out.log_joint.maxCoeff();
    for (Index i = 0; i < m.c(); ++i) post(i) = std::exp(out.log_joint(i) - top);
    post /= post.sum();
  }
  out.profile = {post, Polarity::similarity};
  return out;
}

inline InnerRepresentation naive_bayes_inner(const NaiveBayesModel& m) {
  Matrix priors = m.priors.transpose();
  return InnerRepresentation("naive-bayes", m.c(), m.p(), Polarity::similarity, BoxKind::grey, {{"priors", priors}},
                             [m](const Vector& x) { return naive_bayes_posterior(m, x).profile.scores; });
}

/// Soft output bundle: v_ik = P(Y_i | x_k).
inline CategorizationBundle naive_bayes_bundle(const DataMatrix& X, const NaiveBayesModel& m) {
  Matrix v(m.c(), X.n());
  for (Index k = 0; k < X.n(); ++k) v.col(k) = naive_bayes_posterior(m, X.row(k)).profile.scores;
  return CategorizationBundle(X, MembershipMatrix(v, PartitionKind::soft), naive_bayes_inner(m));
}

}  // namespace axiocat
