#include "helpers.hpp"

#include <functional>

#include "axiocat/numerics/lasso.hpp"
#include "axiocat/numerics/shortest_paths.hpp"
#include "axiocat/numerics/solve.hpp"
#include "axiocat/numerics/sym_eig.hpp"
#include "axiocat/random.hpp"

using namespace axiocat;

namespace {

Matrix random_symmetric(Rng& rng, Index n) {
  Matrix a = rng.normal_matrix(n, n);
  return 0.5 * (a + a.transpose());
}

// Shortest simple path by exhaustive DFS; the oracle for small graphs.
double brute_force_path(const Matrix& w, Index from, Index to) {
  const Index n = w.rows();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  double best = kNoEdge;
  std::function<void(Index, double)> dfs = [&](Index at, double len) {
    if (at == to) {
      best = std::min(best, len);
      return;
    }
    used[static_cast<std::size_t>(at)] = true;
    for (Index nxt = 0; nxt < n; ++nxt)
      if (!used[static_cast<std::size_t>(nxt)] && nxt != at && w(at, nxt) != kNoEdge) dfs(nxt, len + w(at, nxt));
    used[static_cast<std::size_t>(at)] = false;
  };
  dfs(from, 0.0);
  return best;
}

}  // namespace

TEST_CASE("sym_eig small cases", "[numerics][eig]") {
  const auto id = sym_eig(Matrix::Identity(3, 3));
  CHECK(id.eigenvalues.isApprox(Vector::Ones(3)));

  Matrix d(2, 2);
  d << 1, 0, 0, 4;
  const auto r = sym_eig(d);
  CHECK(r.eigenvalues(0) == Catch::Approx(4));
  CHECK(r.eigenvalues(1) == Catch::Approx(1));
  CHECK(std::abs(r.eigenvectors(1, 0)) == Catch::Approx(1));
  CHECK(std::abs(r.eigenvectors(0, 1)) == Catch::Approx(1));

  Matrix asym(2, 2);
  asym << 1, 2, 3, 4;
  CHECK_THROWS_AS(sym_eig(asym), ShapeError);
}

TEST_CASE("sym_eig reconstructs random symmetric matrices", "[numerics][eig][property]") {
  Rng rng(42);
  for (Index n : {1, 2, 5, 13, 30, 50}) {
    const Matrix a = random_symmetric(rng, n);
    const auto r = sym_eig(a);
    const Matrix recon = r.eigenvectors * r.eigenvalues.asDiagonal() * r.eigenvectors.transpose();
    CHECK((a - recon).norm() / a.norm() <= 1e-7);
    CHECK((r.eigenvectors.transpose() * r.eigenvectors - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-8);
    for (Index i = 0; i + 1 < n; ++i) CHECK(r.eigenvalues(i) >= r.eigenvalues(i + 1));
    for (Index i = 0; i < n; ++i) {
      const Vector v = r.eigenvectors.col(i);
      Index arg;
      v.cwiseAbs().maxCoeff(&arg);
      CHECK(v(arg) > 0.0);
      CHECK((a * v - r.eigenvalues(i) * v).norm() <= 1e-7 * std::max(1.0, a.norm()));
    }
    // Independent solver agrees on the spectrum.
    Eigen::SelfAdjointEigenSolver<Matrix> oracle(a);
    Vector expected = oracle.eigenvalues().reverse();
    CHECK((expected - r.eigenvalues).cwiseAbs().maxCoeff() <= 1e-9 * std::max(1.0, a.norm()));
    // Deterministic.
    const auto again = sym_eig(a);
    CHECK(again.eigenvectors == r.eigenvectors);
  }
}

TEST_CASE("solve_spd", "[numerics][solve]") {
  CHECK(solve_spd(Matrix::Identity(2, 2), Vector{{2.0, 3.0}}).isApprox(Vector{{2.0, 3.0}}));
  Matrix d(2, 2);
  d << 2, 0, 0, 4;
  CHECK(solve_spd(d, Vector{{2.0, 4.0}}).isApprox(Vector{{1.0, 1.0}}));

  Rng rng(5);
  const Matrix g = rng.normal_matrix(6, 6);
  const Matrix spd = g * g.transpose() + Matrix::Identity(6, 6);
  const Vector b = rng.normal_matrix(6, 1);
  for (double ridge : {0.0, 0.5}) {
    const Vector x = solve_spd(spd, b, ridge);
    CHECK(((spd + ridge * Matrix::Identity(6, 6)) * x - b).norm() <= 1e-8 * b.norm());
  }

  Matrix singular(2, 2);
  singular << 1, 1, 1, 1;
  CHECK_THROWS_AS(solve_spd(singular, Vector{{1.0, 1.0}}), NumericalError);
  CHECK_NOTHROW(solve_spd(singular, Vector{{1.0, 1.0}}, 1e-3));
}

TEST_CASE("all pairs shortest paths", "[numerics][graph]") {
  SECTION("path graph") {
    Matrix w(3, 3);
    w << 0, 1, kNoEdge, 1, 0, 1, kNoEdge, 1, 0;
    CHECK(all_pairs_shortest_paths(w)(0, 2) == 2.0);
  }
  SECTION("complete Euclidean graph is already closed") {
    Rng rng(9);
    const Matrix pts = rng.normal_matrix(7, 3);
    const Matrix d = pairwise_distances(pts);
    CHECK(all_pairs_shortest_paths(d) == d);
  }
  SECTION("random sparse graphs match exhaustive enumeration") {
    Rng rng(13);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const Index n = 3 + static_cast<Index>(rng.below(4));
      Matrix w = Matrix::Constant(n, n, kNoEdge);
      w.diagonal().setZero();
      for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
          if (rng.uniform() < 0.6 || j == i + 1) w(i, j) = w(j, i) = rng.uniform(0.1, 5.0);
      const Matrix d = all_pairs_shortest_paths(w);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
          if (i == j) continue;
          CHECK(d(i, j) == Catch::Approx(brute_force_path(w, i, j)).epsilon(1e-12));
          ++checked;
        }
      CHECK(d == d.transpose());
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          for (Index k = 0; k < n; ++k) CHECK(d(i, k) <= d(i, j) + d(j, k) + 1e-12);
    }
    CHECK(checked > 0);
  }
  SECTION("disconnected graph lists its components") {
    Matrix w = Matrix::Constant(4, 4, kNoEdge);
    w.diagonal().setZero();
    w(0, 2) = w(2, 0) = 1.0;
    w(1, 3) = w(3, 1) = 1.0;
    try {
      all_pairs_shortest_paths(w);
      FAIL("expected DisconnectedGraph");
    } catch (const DisconnectedGraph& e) {
      REQUIRE(e.components().size() == 2);
      CHECK(e.components()[0] == std::vector<Index>{0, 2});
      CHECK(e.components()[1] == std::vector<Index>{1, 3});
    }
  }
}

TEST_CASE("lasso coordinate descent", "[numerics][lasso]") {
  Rng rng(21);
  const Matrix A = rng.normal_matrix(30, 5);
  const Vector b = rng.normal_matrix(30, 1);

  SECTION("large lambda kills every coordinate") {
    const double lambda = 2.0 * (A.transpose() * b).cwiseAbs().maxCoeff();
    CHECK(lasso_coordinate_descent(A, b, lambda).w.isZero(0.0));
  }
  SECTION("orthonormal design matches the per-coordinate closed form") {
    const Matrix Q = Eigen::HouseholderQR<Matrix>(A).householderQ() * Matrix::Identity(30, 5);
    const Vector c = Q.transpose() * b;
    const double lambda = 0.8;
    // min_w (w_j - c_j)^2 + lambda |w_j|  =>  w_j = sign(c_j) max(|c_j| - lambda/2, 0)
    Vector expected(5);
    for (Index j = 0; j < 5; ++j)
      expected(j) = c(j) > 0 ? std::max(c(j) - lambda / 2, 0.0) : -std::max(-c(j) - lambda / 2, 0.0);
    CHECK((lasso_coordinate_descent(Q, b, lambda).w - expected).cwiseAbs().maxCoeff() <= 1e-9);
  }
  SECTION("small lambda approaches least squares") {
    const Vector ls = (A.transpose() * A).ldlt().solve(A.transpose() * b);
    const auto r = lasso_coordinate_descent(A, b, 1e-8, 100000, 1e-14);
    CHECK((r.w - ls).cwiseAbs().maxCoeff() <= 1e-6);
  }
  SECTION("objective is nonincreasing per sweep") {
    const auto r = lasso_coordinate_descent(A, b, 1.5);
    for (std::size_t i = 1; i < r.objective.size(); ++i) CHECK(r.objective[i] <= r.objective[i - 1] + 1e-12);
  }
  SECTION("error paths") {
    CHECK_THROWS_AS(lasso_coordinate_descent(A, b, 0.0), DomainError);
    Matrix bad = A;
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS(lasso_coordinate_descent(bad, b, 1.0), NumericalError);
  }
}
