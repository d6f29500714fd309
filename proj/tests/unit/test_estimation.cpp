#include "helpers.hpp"

#include <cmath>
#include <numbers>

#include "axiocat/core/axioms.hpp"
#include "axiocat/estimation/gaussian.hpp"
#include "axiocat/estimation/kde.hpp"
#include "axiocat/estimation/regression.hpp"
#include "axiocat/random.hpp"

using namespace axiocat;

TEST_CASE("gaussian maximum likelihood", "[estimation][gaussian]") {
  const auto g = fit_gaussian_mle(DataMatrix{{0}, {2}});
  CHECK(g.mean(0) == 1.0);
  CHECK(g.variance == 1.0);

  CHECK_THROWS_AS(fit_gaussian_mle(DataMatrix{{3, 1}, {3, 1}, {3, 1}}), DegenerateData);
  CHECK_THROWS_AS(fit_gaussian_mle(DataMatrix{{3, 1}}), DegenerateData);

  Rng rng(2);
  const DataMatrix X(rng.normal_matrix(30, 3, 2.0));
  const auto fit = fit_gaussian_mle(X);
  CHECK((fit.mean - X.values().colwise().sum().transpose() / 30.0).cwiseAbs().maxCoeff() < 1e-12);
  double ss = 0.0;
  for (Index k = 0; k < 30; ++k)
    for (Index j = 0; j < 3; ++j) ss += std::pow(X.values()(k, j) - fit.mean(j), 2);
  CHECK(fit.variance == Catch::Approx(ss / 90.0).epsilon(1e-12));

  // Optimality spot check over perturbed parameters.
  const double best = gaussian_nll(X, fit);
  for (int i = 0; i < 100; ++i) {
    IsotropicGaussian other = fit;
    other.mean += rng.normal_matrix(3, 1, 0.1);
    other.variance *= std::exp(rng.uniform(-0.3, 0.3));
    CHECK(gaussian_nll(X, other) >= best);
  }
}

TEST_CASE("gaussian negative log likelihood", "[estimation][gaussian]") {
  const IsotropicGaussian unit{Vector::Constant(1, 4.0), 1.0};
  CHECK(gaussian_nll(DataMatrix{{4}}, unit) == Catch::Approx(0.5 * std::log(2.0 * std::numbers::pi)));
  // Direct formula for a 2-D point.
  const IsotropicGaussian g{Vector{{1.0, -1.0}}, 0.5};
  const double expected = 0.5 * (4.0 + 1.0) / 0.5 + std::log(2.0 * std::numbers::pi * 0.5);
  CHECK(gaussian_nll(DataMatrix{{3, 0}}, g) == Catch::Approx(expected));
  CHECK_THROWS_AS(gaussian_nll(DataMatrix{{4}}, IsotropicGaussian{Vector::Constant(1, 4.0), 0.0}), DomainError);
}

TEST_CASE("kernel density", "[estimation][kde]") {
  CHECK(fit_kde(DataMatrix{{0.5}}, 1.0).density(Vector::Constant(1, 0.5)) ==
        Catch::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)));
  CHECK_THROWS_AS(fit_kde(DataMatrix{{0}}, 0.0), DomainError);
  CHECK_THROWS_AS(fit_kde(DataMatrix{{0}}, -1.0), DomainError);

  Rng rng(4);
  const DataMatrix X(rng.normal_matrix(40, 1));
  for (const auto& kde : {fit_kde(X, 0.3), fit_kde(X)}) {
    // Trapezoid rule over a wide grid.
    const double lo = -12.0, hi = 12.0;
    const int steps = 24000;
    const double dx = (hi - lo) / steps;
    double integral = 0.0;
    for (int i = 0; i <= steps; ++i) {
      const double v = kde.density(Vector::Constant(1, lo + dx * i));
      CHECK(v >= 0.0);
      integral += (i == 0 || i == steps ? 0.5 : 1.0) * v * dx;
    }
    CHECK(std::abs(integral - 1.0) < 1e-3);
  }

  // Default bandwidth formula.
  const Vector col = X.values().col(0);
  const double sd = std::sqrt((col.array() - col.mean()).square().sum() / 39.0);
  CHECK(silverman_bandwidth(X) == Catch::Approx(sd * std::pow(4.0 / 120.0, 0.2)));
  CHECK_THROWS_AS(fit_kde(DataMatrix(rng.normal_matrix(5, 2))), ShapeError);

  // 2-D kernel normalization at the peak.
  CHECK(fit_kde(DataMatrix{{0, 0}}, 0.5).density(Vector::Zero(2)) ==
        Catch::Approx(1.0 / (2.0 * std::numbers::pi * 0.25)));
}

TEST_CASE("unpenalized regression", "[estimation][regression]") {
  SECTION("exact linear data") {
    const Matrix A = test::column({0, 1, 2, 3, 4});
    const Vector f = (2.0 * A.col(0)).array() + 1.0;
    const auto m = fit_regression(A, f);
    CHECK(m.w(0) == Catch::Approx(2.0));
    CHECK(m.b == Catch::Approx(1.0));
    CHECK((f - m.predict(A)).norm() < 1e-12);
    CHECK_FALSE(m.singular);
  }
  SECTION("normal equations certificate") {
    Rng rng(6);
    const Matrix A = rng.normal_matrix(20, 4);
    const Vector f = rng.normal_matrix(20, 1);
    const auto m = fit_regression(A, f);
    const Vector r = f - m.predict(A);
    CHECK((A.transpose() * r).cwiseAbs().maxCoeff() <= 1e-7);
    CHECK(std::abs(r.sum()) <= 1e-7);
    // Independent least-squares oracle on the augmented design.
    Matrix aug(20, 5);
    aug << A, Vector::Ones(20);
    const Vector sol = aug.colPivHouseholderQr().solve(f);
    CHECK((sol.head(4) - m.w).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(sol(4) == Catch::Approx(m.b).margin(1e-9));
  }
  SECTION("underdetermined gives the minimum norm solution") {
    Rng rng(7);
    const Matrix A = rng.normal_matrix(3, 5);
    const Vector f = rng.normal_matrix(3, 1);
    const auto m = fit_regression(A, f);
    CHECK(m.singular);
    CHECK((f - m.predict(A)).norm() < 1e-9);
    const Matrix ac = A.rowwise() - A.colwise().mean();
    const Vector fc = f.array() - f.mean();
    const Vector oracle = Eigen::CompleteOrthogonalDecomposition<Matrix>(ac).solve(fc);
    CHECK((oracle - m.w).cwiseAbs().maxCoeff() < 1e-8);
  }
  SECTION("errors") {
    Matrix A = test::column({1, 2, 3});
    Vector f = Vector::Ones(3);
    f(1) = std::nan("");
    CHECK_THROWS_AS(fit_regression(A, f), NumericalError);
    CHECK_THROWS_AS(fit_regression(A, Vector::Ones(2)), ShapeError);
    CHECK_THROWS_AS(fit_regression(A, Vector::Ones(3), Penalty::l2(0.0)), DomainError);
  }
}

TEST_CASE("ridge regression", "[estimation][regression]") {
  Rng rng(9);
  const Matrix A = rng.normal_matrix(25, 4);
  const Vector f = rng.normal_matrix(25, 1);
  const Matrix ac = A.rowwise() - A.colwise().mean();
  const Vector fc = f.array() - f.mean();

  CHECK(fit_regression(A, f, Penalty::l2(1e9)).w.norm() < 1e-6);

  double prev = std::numeric_limits<double>::infinity();
  for (double lambda : {1e-3, 0.1, 1.0, 10.0, 100.0, 1e4}) {
    const auto m = fit_regression(A, f, Penalty::l2(lambda));
    // Oracle: stacked least squares [Ac; sqrt(lambda) I] w = [fc; 0].
    Matrix stacked(29, 4);
    stacked << ac, std::sqrt(lambda) * Matrix::Identity(4, 4);
    Vector rhs = Vector::Zero(29);
    rhs.head(25) = fc;
    const Vector oracle = stacked.colPivHouseholderQr().solve(rhs);
    CHECK((oracle - m.w).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(m.w.norm() <= prev + 1e-12);
    prev = m.w.norm();
    // Intercept unpenalized: residuals sum to zero.
    CHECK(std::abs((f - m.predict(A)).sum()) < 1e-9);
  }
}

TEST_CASE("lasso regression", "[estimation][regression]") {
  Rng rng(10);
  SECTION("orthonormal centered features match soft thresholding") {
    Matrix raw = rng.normal_matrix(30, 4);
    raw = raw.rowwise() - raw.colwise().mean();
    const Matrix Q = Eigen::HouseholderQR<Matrix>(raw).householderQ() * Matrix::Identity(30, 4);
    const Vector f = rng.normal_matrix(30, 1);
    const Vector c = Q.transpose() * (f.array() - f.mean()).matrix();
    for (double lambda : {0.2, 0.8, 2.0}) {
      const auto m = fit_regression(Q, f, Penalty::l1(lambda));
      for (Index j = 0; j < 4; ++j) {
        const double expected = std::copysign(std::max(std::abs(c(j)) - lambda / 2.0, 0.0), c(j));
        CHECK(m.w(j) == Catch::Approx(expected).margin(1e-9));
      }
    }
  }
  SECTION("sparsity is monotone in lambda") {
    const Matrix A = rng.normal_matrix(40, 8);
    const Vector f = A * Vector{{3, -2, 0, 0, 1, 0, 0.5, 0}} + rng.normal_matrix(40, 1, 0.1);
    Index prev = 9;
    for (double lambda : {0.01, 0.1, 1.0, 10.0, 50.0, 200.0, 1000.0}) {
      const auto m = fit_regression(A, f, Penalty::l1(lambda));
      const Index nnz = (m.w.array().abs() > 1e-8).count();
      CHECK(nnz <= prev);
      prev = nnz;
    }
    CHECK(prev == 0);
  }
}

TEST_CASE("one-category estimation bundles satisfy the axioms", "[estimation][axioms]") {
  Rng rng(12);
  const DataMatrix X(rng.normal_matrix(10, 2));
  for (const auto& bundle : {gaussian_bundle(X, fit_gaussian_mle(X)), kde_bundle(X, fit_kde(X, 0.5))}) {
    const auto r = check_axioms(bundle);
    CHECK(r.ss.holds);
    CHECK(r.cs.holds);
    CHECK(r.ce.holds);
  }
  const Matrix A = rng.normal_matrix(10, 2);
  const Vector f = rng.normal_matrix(10, 1);
  const auto m = fit_regression(A, f);
  const auto r = check_axioms(regression_bundle(A, f, m));
  CHECK((r.ss.holds && r.cs.holds && r.ce.holds));
  const auto bundle = regression_bundle(A, f, m);
  CHECK(bundle.require_inner().profile(bundle.data().row(0)).scores(0) ==
        Catch::Approx(std::pow(f(0) - m.predict(Vector(A.row(0).transpose())), 2)));
}
