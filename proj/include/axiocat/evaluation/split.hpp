#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "axiocat/core/types.hpp"
#include "axiocat/random.hpp"

namespace axiocat {

struct SplitSpec {
  double test_fraction = 0.25;
  std::uint64_t seed = 0;
  bool stratified = false;
};

/// Rows are kept in their original order within each part.
struct Split {
  DataMatrix train;
  std::optional<MembershipMatrix> train_memberships;
  DataMatrix test;
  std::optional<MembershipMatrix> test_memberships;
  std::vector<std::size_t> train_rows;  // 0-based rows of the input
  std::vector<std::size_t> test_rows;
};

namespace detail {

inline std::size_t test_count(double fraction, std::size_t n) {
  const auto t = static_cast<std::size_t>(std::lround(fraction * static_cast<double>(n)));
  return std::clamp<std::size_t>(t, 1, n - 1);
}

inline Matrix take_rows(const Matrix& m, const std::vector<std::size_t>& rows) {
  Matrix out(static_cast<Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = m.row(static_cast<Index>(rows[i]));
  return out;
}

inline MembershipMatrix take_columns(const MembershipMatrix& u, const std::vector<std::size_t>& cols) {
  Matrix out(u.c(), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) out.col(static_cast<Index>(i)) = u.values().col(static_cast<Index>(cols[i]));
  return MembershipMatrix(std::move(out), u.kind());
}

}  // namespace detail

inline Split split(const DataMatrix& X, const std::optional<MembershipMatrix>& U, const SplitSpec& spec) {
  if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0))
    throw DomainError("split: test fraction must lie in (0, 1), got " + std::to_string(spec.test_fraction));
  const auto n = static_cast<std::size_t>(X.n());
  if (n < 2) throw ShapeError("split: needs at least 2 rows, got " + std::to_string(n));
  if (U && U->n() != X.n()) throw ShapeError("split: memberships and data disagree on n");

  Rng rng(spec.seed);
  std::vector<bool> in_test(n, false);
  if (spec.stratified) {
    if (!U) throw StratifyError("stratified split needs labels");
    const auto labels = U->labels();
    for (Index i = 0; i < U->c(); ++i) {
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < n; ++k)
        if (labels[k] == static_cast<std::size_t>(i)) members.push_back(k);
      if (members.empty()) continue;
      if (members.size() < 2)
        throw StratifyError("category " + std::to_string(i + 1) + " has " + std::to_string(members.size()) +
                            " object; stratification needs 2");
      rng.shuffle(members);
      const auto t = detail::test_count(spec.test_fraction, members.size());
      for (std::size_t j = 0; j < t; ++j) in_test[members[j]] = true;
    }
  } else {
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;
    rng.shuffle(order);
    const auto t = detail::test_count(spec.test_fraction, n);
    for (std::size_t j = 0; j < t; ++j) in_test[order[j]] = true;
  }

  std::vector<std::size_t> train_rows, test_rows;
  for (std::size_t k = 0; k < n; ++k) (in_test[k] ? test_rows : train_rows).push_back(k);
  Split s{DataMatrix(detail::take_rows(X.values(), train_rows)), std::nullopt,
          DataMatrix(detail::take_rows(X.values(), test_rows)), std::nullopt, train_rows, test_rows};
  if (U) {
    s.train_memberships = detail::take_columns(*U, train_rows);
    s.test_memberships = detail::take_columns(*U, test_rows);
  }
  return s;
}

}  // namespace axiocat
