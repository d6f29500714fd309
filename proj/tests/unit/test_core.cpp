#include "helpers.hpp"

#include "axiocat/core/axioms.hpp"
#include "axiocat/core/report_json.hpp"
#include "axiocat/random.hpp"

using namespace axiocat;
using axiocat::test::column;
using axiocat::test::fixed_profiles;
using axiocat::test::squared_distance_prototypes;

namespace {

std::vector<AssignmentSet> sets(std::initializer_list<std::initializer_list<std::size_t>> s) {
  std::vector<AssignmentSet> out;
  for (auto e : s) out.emplace_back(e);
  return out;
}

// Exhaustive argmax over a column, independent of best_of.
std::vector<std::size_t> scan_argmax(const Vector& v) {
  double best = v(0);
  for (Index i = 1; i < v.size(); ++i) best = std::max(best, v(i));
  std::vector<std::size_t> out;
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) == best) out.push_back(static_cast<std::size_t>(i));
  return out;
}

}  // namespace

TEST_CASE("membership matrix validates its kind", "[core][types]") {
  Matrix hard(2, 2);
  hard << 1, 0, 0, 1;
  CHECK_NOTHROW(MembershipMatrix(hard, PartitionKind::hard));

  Matrix soft(2, 1);
  soft << 0.3, 0.6;
  CHECK_THROWS_AS(MembershipMatrix(soft, PartitionKind::soft), DomainError);
  CHECK_THROWS_AS(MembershipMatrix(soft, PartitionKind::hard), DomainError);

  Matrix neg(1, 1);
  neg << -0.1;
  CHECK_THROWS_AS(MembershipMatrix(neg, PartitionKind::unknown), DomainError);

  Matrix empty_col = Matrix::Zero(2, 1);
  CHECK_THROWS_AS(MembershipMatrix(empty_col, PartitionKind::overlapping), DomainError);
}

TEST_CASE("data matrix rejects empty and non-finite input", "[core][types]") {
  CHECK_THROWS_AS(DataMatrix(Matrix(0, 2)), ShapeError);
  Matrix bad(1, 1);
  bad << std::nan("");
  CHECK_THROWS_AS(DataMatrix(bad), DomainError);
}

TEST_CASE("assign_outer returns argmax sets", "[core][operators]") {
  SECTION("one-hot identity") {
    Matrix u(2, 2);
    u << 1, 0, 0, 1;
    CHECK(assign_outer(MembershipMatrix(u, PartitionKind::hard)) == sets({{0}, {1}}));
  }
  SECTION("symmetric tie") {
    Matrix u(2, 1);
    u << 0.5, 0.5;
    CHECK(assign_outer(MembershipMatrix(u, PartitionKind::soft)) == sets({{0, 1}}));
  }
  SECTION("column-wise enumeration") {
    Matrix u(2, 3);
    u << 0.2, 0.7, 0.4, 0.8, 0.3, 0.6;
    // 1-based {2},{1},{2}
    CHECK(assign_outer(MembershipMatrix(u, PartitionKind::soft)) == sets({{1}, {0}, {1}}));
  }
  SECTION("all-zero column is ambiguous") {
    Matrix u = Matrix::Zero(2, 1);
    CHECK_THROWS_AS(assign_outer(MembershipMatrix(u, PartitionKind::unknown)), AmbiguousColumn);
  }
  SECTION("matches an exhaustive scan on random columns") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const Index c = 1 + static_cast<Index>(rng.below(6));
      Matrix u(c, 5);
      for (Index i = 0; i < c; ++i)
        for (Index k = 0; k < 5; ++k) u(i, k) = static_cast<double>(rng.below(4));  // frequent ties
      for (Index k = 0; k < 5; ++k) u(0, k) += 0.5;  // no all-zero columns
      const auto got = assign_outer(MembershipMatrix(u, PartitionKind::unknown));
      for (Index k = 0; k < 5; ++k) CHECK(got[static_cast<std::size_t>(k)].indices() == scan_argmax(u.col(k)));
    }
  }
}

TEST_CASE("refer_inner takes argmax of Sim and argmin of Ds", "[core][operators]") {
  CHECK(best_of({Vector{{3.0, 1.0}}, Polarity::similarity}) == AssignmentSet{0});
  CHECK(best_of({Vector{{2.0, 2.0}}, Polarity::dissimilarity}) == AssignmentSet{0, 1});

  const auto protos = squared_distance_prototypes(column({0.0, 10.0}));
  CHECK(refer_inner(DataMatrix(column({2.0})), protos) == sets({{0}}));  // 4 < 64

  const auto nan_rep = fixed_profiles(Matrix::Constant(1, 2, std::nan("")), Polarity::similarity);
  CHECK_THROWS_AS(refer_inner(DataMatrix(column({0.0})), nan_rep), NumericalError);

  CHECK_THROWS_AS(refer_inner(DataMatrix(Matrix::Zero(1, 3)), protos), ShapeError);
}

TEST_CASE("boundary set holds exactly the tied objects", "[core][operators]") {
  const auto protos = squared_distance_prototypes(column({0.0, 10.0}));
  CHECK(boundary_set(DataMatrix(column({5.0})), protos) == std::vector<std::size_t>{0});
  CHECK(boundary_set(DataMatrix(column({1.0, 2.0, 9.0})), protos).empty());
  CHECK(boundary_set(DataMatrix(column({1.0, 5.0, 9.0})), protos) == std::vector<std::size_t>{1});
}

TEST_CASE("check_axioms", "[core][axioms]") {
  SECTION("single category holds trivially") {
    const auto rep = squared_distance_prototypes(column({3.0}));
    CategorizationBundle b(DataMatrix(column({0.0, 1.0, 7.0})), MembershipMatrix::single_category(3), rep);
    const auto r = check_axioms(b);
    CHECK(r.ss.holds);
    CHECK(r.cs.holds);
    CHECK(r.ce.holds);
    CHECK(r.boundary.empty());
  }
  SECTION("unclaimed category breaks CS") {
    const auto rep = squared_distance_prototypes(column({0.0, 10.0, 100.0}));
    DataMatrix data(column({0.0, 1.0, 9.0, 10.0}));
    const auto b = referring_bundle(data, rep);
    const auto r = check_axioms(b);
    CHECK(r.ss.holds);
    CHECK(r.ce.holds);
    CHECK_FALSE(r.cs.holds);
    CHECK(r.cs.witnesses == std::vector<std::size_t>{2});
  }
  SECTION("outer labels disagreeing with referring break CE") {
    const auto rep = squared_distance_prototypes(column({0.0, 10.0}));
    DataMatrix data(column({0.0, 1.0, 9.0}));
    CategorizationBundle b(data, MembershipMatrix::from_labels({0, 1, 1}, 2), rep);
    const auto r = check_axioms(b);
    CHECK_FALSE(r.ce.holds);
    CHECK(r.ce.witnesses == std::vector<std::size_t>{1});
  }
  SECTION("ties break SS and land in the boundary; derived V keeps CE") {
    const auto rep = squared_distance_prototypes(column({0.0, 10.0}));
    const auto b = referring_bundle(DataMatrix(column({0.0, 5.0, 10.0})), rep);
    CHECK(b.memberships()->kind() == PartitionKind::soft);
    const auto r = check_axioms(b);
    CHECK_FALSE(r.ss.holds);
    CHECK(r.ce.holds);
    CHECK(r.boundary == std::vector<std::size_t>{1});
  }
  SECTION("missing parts") {
    CategorizationBundle b(DataMatrix(column({0.0})));
    CHECK_THROWS_AS(check_axioms(b), IncompleteBundle);
  }
}

TEST_CASE("boundary set is empty exactly when SS holds", "[core][axioms][property]") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix protos(3, 1);
    protos << 0.0, static_cast<double>(1 + rng.below(4)) * 2.0, 20.0;
    Matrix pts(6, 1);
    for (Index k = 0; k < 6; ++k) pts(k, 0) = static_cast<double>(rng.below(21));
    const auto b = referring_bundle(DataMatrix(pts), squared_distance_prototypes(protos));
    const auto r = check_axioms(b);
    CHECK(r.boundary.empty() == r.ss.holds);
  }
}

TEST_CASE("multi-label SS", "[core][axioms]") {
  const auto rep = squared_distance_prototypes(column({0.0, 10.0}));
  Matrix v(2, 2);
  v << 1, 1, 0, 1;
  CategorizationBundle b(DataMatrix(column({0.0, 5.0})), MembershipMatrix(v, PartitionKind::overlapping), rep);
  const auto r = check_multilabel_ss(b);
  CHECK(r.verdict.holds);
  CHECK(r.witness_categories == std::vector<std::size_t>{0, 0});

  const auto nan_rep = fixed_profiles(Matrix::Constant(1, 2, std::nan("")), Polarity::similarity);
  CategorizationBundle bad(DataMatrix(column({0.0})), MembershipMatrix::from_labels({0}, 2), nan_rep);
  CHECK_THROWS_AS(check_multilabel_ss(bad), NumericalError);
}

TEST_CASE("check_ucr", "[core][ucr]") {
  const auto rep = squared_distance_prototypes(column({0.0, 10.0}));
  const auto b = referring_bundle(DataMatrix(column({0.0, 1.0, 9.0})), rep);

  SECTION("reflexive") {
    const auto r = check_ucr(b, b, 0.0);
    CHECK(r.assignment.holds);
    CHECK(r.inner == InnerAgreement::agree);
    CHECK(r.referring.holds);
    CHECK(r.holds());
  }
  SECTION("single category agrees on both referring operators whatever the inner reps") {
    CategorizationBundle a(DataMatrix(column({0.0, 1.0})), MembershipMatrix::single_category(2),
                           squared_distance_prototypes(column({5.0}), "a"));
    CategorizationBundle c(DataMatrix(column({-4.0, 8.0})), MembershipMatrix::single_category(2),
                           squared_distance_prototypes(column({-100.0}), "b"));
    const auto r = check_ucr(a, c, 0.0);
    CHECK(r.assignment.holds);
    CHECK(r.referring.holds);
    CHECK(r.inner == InnerAgreement::incomparable);
  }
  SECTION("parameter distance against tol") {
    const auto moved = referring_bundle(DataMatrix(column({0.0, 1.0, 9.0})),
                                        squared_distance_prototypes(column({0.0, 10.5})));
    CHECK(check_ucr(b, moved, 0.4).inner == InnerAgreement::disagree);
    CHECK(check_ucr(b, moved, 0.5).inner == InnerAgreement::agree);
    CHECK(*check_ucr(b, moved, 0.5).inner_distance == Catch::Approx(0.5));
  }
  SECTION("strict mode compares U and V") {
    Matrix v(2, 3);
    v << 0.9, 0.9, 0.0, 0.1, 0.1, 1.0;
    CategorizationBundle soft(b.data(), MembershipMatrix(v, PartitionKind::soft), rep);
    CHECK(check_ucr(b, soft, 0.0).holds());
    const auto strict = check_ucr(b, soft, 0.0, true);
    CHECK_FALSE(strict.holds());
    CHECK(strict.memberships->witnesses == std::vector<std::size_t>{0, 1});
  }
  SECTION("object count mismatch") {
    const auto other = referring_bundle(DataMatrix(column({0.0, 1.0})), rep);
    CHECK_THROWS_AS(check_ucr(b, other, 0.0), ShapeError);
  }
}

TEST_CASE("check_theorem2", "[core][theorem2]") {
  const auto rep = squared_distance_prototypes(column({0.0, 10.0}));
  const auto b = referring_bundle(DataMatrix(column({0.0, 1.0, 9.0})), rep);
  CHECK(check_theorem2(b, b));

  SECTION("CE-consistent pair with differing referring agrees on both") {
    const auto other = referring_bundle(DataMatrix(column({0.0, 9.0, 9.0})), rep);
    CHECK(check_theorem2(b, other));
  }
  SECTION("perturbing U alone breaks CE on the input") {
    CategorizationBundle perturbed(b.data(), MembershipMatrix::from_labels({0, 1, 1}, 2), rep);
    CHECK_THROWS_AS(check_theorem2(perturbed, b), PreconditionFailed);
  }
  SECTION("single category is vacuous") {
    const auto one = squared_distance_prototypes(column({0.0}));
    CategorizationBundle a(DataMatrix(column({1.0, 2.0})), MembershipMatrix::single_category(2), one);
    CHECK(check_theorem2(a, a));
  }
}

TEST_CASE("consistency criterion", "[core][consistency]") {
  Matrix pts(10, 1);
  pts << 0, 1, 2, 3, 4, 6, 7, 8, 9, 10;
  const auto rep = squared_distance_prototypes(column({2.0, 8.0}));
  const auto b = referring_bundle(DataMatrix(pts), rep);
  CHECK(consistency_criterion(b, b) == 0.0);

  SECTION("one flipped object counts once per operator") {
    Matrix moved = pts;
    moved(4, 0) = 7.0;  // object 5 now refers to category 2 on the output side
    const auto out = referring_bundle(DataMatrix(moved), rep);
    const auto br = consistency_breakdown(b, out);
    CHECK(br.assignment == Catch::Approx(0.1));
    CHECK(br.referring == Catch::Approx(0.1));
    CHECK(br.inner == 0.0);
    CHECK(consistency_criterion(b, out) == Catch::Approx(0.2));
    CHECK(consistency_criterion(out, b) == consistency_criterion(b, out));
  }
  SECTION("incomparable representations") {
    const auto other = referring_bundle(DataMatrix(pts), squared_distance_prototypes(column({2.0, 8.0}), "other"));
    CHECK_THROWS_AS(consistency_criterion(b, other), Incomparable);
  }
}

TEST_CASE("UCR with tol 0 implies zero consistency criterion; criterion is symmetric", "[core][consistency][property]") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix pa(8, 1), pb(8, 1);
    for (Index k = 0; k < 8; ++k) {
      pa(k, 0) = rng.uniform(-5, 5);
      pb(k, 0) = rng.below(2) ? pa(k, 0) : rng.uniform(-5, 5);
    }
    Matrix qa(2, 1), qb(2, 1);
    qa << -2.0, 2.0;
    qb = qa;
    if (rng.below(2)) qb(1, 0) += 0.25;
    const auto a = referring_bundle(DataMatrix(pa), squared_distance_prototypes(qa));
    const auto b = referring_bundle(DataMatrix(pb), squared_distance_prototypes(qb));
    const double je = consistency_criterion(a, b);
    CHECK(je >= 0.0);
    CHECK(je == consistency_criterion(b, a));
    if (check_ucr(a, b, 0.0).holds()) CHECK(je == 0.0);
    if (je == 0.0) CHECK(check_ucr(a, b, 0.0).holds());
  }
}

TEST_CASE("distinct profile values give singleton referring sets", "[core][property]") {
  Rng rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const Index c = 2 + static_cast<Index>(rng.below(8));
    SimilarityProfile p{Vector(c), rng.below(2) ? Polarity::similarity : Polarity::dissimilarity};
    for (Index i = 0; i < c; ++i) p.scores(i) = rng.uniform(-3, 3);
    if (pairwise_distinct(p)) CHECK(best_of(p).singleton());
  }
}

TEST_CASE("axiom report JSON uses 1-based ascending indices", "[core][json]") {
  const auto rep = squared_distance_prototypes(column({0.0, 10.0, 100.0}));
  const auto b = referring_bundle(DataMatrix(column({5.0, 0.0, 5.0})), rep);
  auto report = check_axioms(b);
  report.ucr = check_ucr(b, b, 0.0);
  const auto j = to_json(report);
  for (const char* key : {"ss", "cs", "ce", "ucr", "boundary", "witnesses"}) CHECK(j.contains(key));
  CHECK(j["boundary"] == nlohmann::json::array({1, 3}));
  CHECK(j["witnesses"]["cs"] == nlohmann::json::array({3}));
  CHECK(j["ss"] == false);
  CHECK(j["ucr"]["inner"] == "agree");
}
