#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "axiocat/core/operators.hpp"

namespace axiocat {

/// Verdict plus 0-based witnesses; `holds` is true exactly when there are no witnesses.
struct Verdict {
  bool holds = true;
  std::vector<std::size_t> witnesses;

  static Verdict from_witnesses(std::vector<std::size_t> w) { return {w.empty(), std::move(w)}; }
};

enum class InnerAgreement { agree, disagree, incomparable };

inline const char* to_string(InnerAgreement a) {
  switch (a) {
    case InnerAgreement::agree: return "agree";
    case InnerAgreement::disagree: return "disagree";
    case InnerAgreement::incomparable: return "incomparable";
  }
  return "incomparable";
}

/// The three equalities of the uniqueness axiom, checked separately.
struct UcrReport {
  Verdict assignment;        // outer referring agrees object by object
  InnerAgreement inner = InnerAgreement::incomparable;
  std::optional<double> inner_distance;
  Verdict referring;         // inner referring agrees object by object
  std::optional<Verdict> memberships;  // strict mode only: U == V column by column

  bool holds() const {
    return assignment.holds && inner == InnerAgreement::agree && referring.holds &&
           (!memberships || memberships->holds);
  }
};

struct AxiomReport {
  Verdict ss;  // witnesses: objects with a tied most-similar category
  Verdict cs;  // witnesses: categories no object refers to
  Verdict ce;  // witnesses: objects whose inner and outer referring differ
  std::optional<UcrReport> ucr;
  std::vector<std::size_t> boundary;
};

/// True when all entries are pairwise distinct, the premise under which the
/// referring operator is single-valued.
inline bool pairwise_distinct(const SimilarityProfile& profile) {
  const auto& s = profile.scores;
  for (Index i = 0; i < s.size(); ++i)
    for (Index j = i + 1; j < s.size(); ++j)
      if (s(i) == s(j)) return false;
  return true;
}

/// SS, CS and CE for a categorization result, plus its boundary set. SS is read
/// as "the referring set is single-valued".
inline AxiomReport check_axioms(const CategorizationBundle& output, double tie_tol = 0.0) {
  const auto& v = output.require_memberships();
  const auto& inner = output.require_inner();
  const auto inner_sets = refer_inner(output.data(), inner, tie_tol);
  const auto outer_sets = assign_outer(v);

  AxiomReport report;
  std::vector<std::size_t> ss_w, ce_w;
  std::vector<bool> claimed(static_cast<std::size_t>(inner.categories()), false);
  for (std::size_t k = 0; k < inner_sets.size(); ++k) {
    if (!inner_sets[k].singleton()) ss_w.push_back(k);
    if (inner_sets[k] != outer_sets[k]) ce_w.push_back(k);
    for (auto i : inner_sets[k].indices()) claimed[i] = true;
  }
  std::vector<std::size_t> cs_w;
  for (std::size_t i = 0; i < claimed.size(); ++i)
    if (!claimed[i]) cs_w.push_back(i);

  report.boundary = ss_w;
  report.ss = Verdict::from_witnesses(std::move(ss_w));
  report.cs = Verdict::from_witnesses(std::move(cs_w));
  report.ce = Verdict::from_witnesses(std::move(ce_w));
  return report;
}

/// Multi-label sample separation: every object refers to at least one
/// category. `witness_categories[k]` is one such category (the lowest index).
struct MultilabelSsReport {
  Verdict verdict;
  std::vector<std::size_t> witness_categories;
};

inline MultilabelSsReport check_multilabel_ss(const CategorizationBundle& output) {
  output.require_memberships();
  const auto sets = refer_inner(output.data(), output.require_inner());
  MultilabelSsReport r;
  std::vector<std::size_t> violating;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (sets[k].size() == 0) {
      violating.push_back(k);
      r.witness_categories.push_back(0);
    } else {
      r.witness_categories.push_back(sets[k].front());
    }
  }
  r.verdict = Verdict::from_witnesses(std::move(violating));
  return r;
}

namespace detail {

inline void require_same_shape(const CategorizationBundle& a, const CategorizationBundle& b) {
  if (a.n() != b.n())
    throw ShapeError("input has " + std::to_string(a.n()) + " objects but output has " + std::to_string(b.n()));
  if (a.c() != b.c())
    throw ShapeError("input has " + std::to_string(a.c()) + " categories but output has " + std::to_string(b.c()));
}

inline Verdict compare_sets(const std::vector<AssignmentSet>& a, const std::vector<AssignmentSet>& b) {
  std::vector<std::size_t> w;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) w.push_back(k);
  return Verdict::from_witnesses(std::move(w));
}

}  // namespace detail

/// Uniqueness axiom of category representation, checked component by
/// component. The inner representations are compared by canonical parameter
/// distance against `tol`. With `strict`, U == V (within 1e-9) is also required.
inline UcrReport check_ucr(const CategorizationBundle& input, const CategorizationBundle& output, double tol,
                           bool strict = false) {
  if (tol < 0.0) throw DomainError("tolerance must be nonnegative");
  detail::require_same_shape(input, output);
  UcrReport r;
  r.assignment = detail::compare_sets(assign_outer(input.require_memberships()),
                                      assign_outer(output.require_memberships()));
  const auto& in = input.require_inner();
  const auto& out = output.require_inner();
  if (in.comparable(out)) {
    const double d = in.parameter_distance(out);
    r.inner_distance = d;
    r.inner = d <= tol ? InnerAgreement::agree : InnerAgreement::disagree;
  } else {
    r.inner = InnerAgreement::incomparable;
  }
  r.referring = detail::compare_sets(refer_inner(input.data(), in), refer_inner(output.data(), out));
  if (strict) {
    const Matrix& u = input.require_memberships().values();
    const Matrix& v = output.require_memberships().values();
    std::vector<std::size_t> w;
    for (Index k = 0; k < u.cols(); ++k)
      if ((u.col(k) - v.col(k)).cwiseAbs().maxCoeff() > 1e-9) w.push_back(static_cast<std::size_t>(k));
    r.memberships = Verdict::from_witnesses(std::move(w));
  }
  return r;
}

/// For a pair where both sides satisfy CE, inner-referring agreement and
/// outer-referring agreement must coincide. Returns whether they do.
inline bool check_theorem2(const CategorizationBundle& input, const CategorizationBundle& output) {
  detail::require_same_shape(input, output);
  if (!check_axioms(input).ce.holds) throw PreconditionFailed("categorization input violates CE");
  if (!check_axioms(output).ce.holds) throw PreconditionFailed("categorization result violates CE");
  const bool inner_equal =
      detail::compare_sets(refer_inner(input.data(), input.require_inner()),
                           refer_inner(output.data(), output.require_inner()))
          .holds;
  const bool outer_equal =
      detail::compare_sets(assign_outer(input.require_memberships()), assign_outer(output.require_memberships()))
          .holds;
  return inner_equal == outer_equal;
}

/// Components of the consistency criterion J_E.
struct ConsistencyBreakdown {
  double assignment = 0.0;  // fraction of objects whose outer referring differs
  double referring = 0.0;   // fraction of objects whose inner referring differs
  double inner = 0.0;       // |a - b| / (|a| + |b|), in [0, 1]
  double total() const { return assignment + referring + inner; }
};

inline ConsistencyBreakdown consistency_breakdown(const CategorizationBundle& input,
                                                  const CategorizationBundle& output) {
  detail::require_same_shape(input, output);
  const auto& in = input.require_inner();
  const auto& out = output.require_inner();
  const double d = in.parameter_distance(out);  // throws Incomparable
  const double scale = in.parameter_norm() + out.parameter_norm();
  const auto n = static_cast<double>(input.n());

  ConsistencyBreakdown b;
  b.assignment = static_cast<double>(detail::compare_sets(assign_outer(input.require_memberships()),
                                                          assign_outer(output.require_memberships()))
                                         .witnesses.size()) /
                 n;
  b.referring =
      static_cast<double>(
          detail::compare_sets(refer_inner(input.data(), in), refer_inner(output.data(), out)).witnesses.size()) /
      n;
  b.inner = scale > 0.0 ? d / scale : 0.0;
  return b;
}

/// J_E with equal unit weights on its three normalized components.
inline double consistency_criterion(const CategorizationBundle& input, const CategorizationBundle& output) {
  return consistency_breakdown(input, output).total();
}

}  // namespace axiocat
