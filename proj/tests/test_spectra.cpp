#include <doctest.h>

#include <algorithm>
#include <random>
#include <cmath>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "xdg/spectra.hpp"

using namespace xdg;
using namespace oracle;

TEST_CASE("eigenvalues agree with the characteristic polynomial oracle") {
  for (int n = 1; n <= 8; ++n)
    for (unsigned seed : {1u, 2u, 3u}) {
      Eigen::MatrixXd A = random_matrix(n, seed * 100 + n);
      Spectrum s = eigenvalues(A);
      REQUIRE(s.eigenvalues.size() == static_cast<size_t>(n));
      CHECK(match_error(s.eigenvalues, char_poly_roots(A)) < 1e-9);
    }
}

TEST_CASE("residual certificates are small") {
  for (int n : {5, 40, 120}) {
    Eigen::MatrixXd A = random_matrix(n, 9 + n);
    Spectrum s = eigenvalues(A);
    CHECK(s.max_residual <= 1e-8 * s.norm);
    CHECK(s.norm == doctest::Approx(A.cwiseAbs().rowwise().sum().maxCoeff()));
  }
  Eigen::MatrixXd A = stability_matrix(8, 2, 10, 20.0, 10.0, 1.0);
  Spectrum s = eigenvalues(A);
  CHECK(s.max_residual <= 1e-8 * s.norm);
  CHECK(eigenvalues(A, false).max_residual == 0.0);
}

TEST_CASE("known spectra") {
  Eigen::Matrix2d R;
  R << 0, -2, 2, 0;
  Spectrum s = eigenvalues(R);
  CHECK(s.max_real() == doctest::Approx(0.0).scale(1.0));
  CHECK(std::abs(std::abs(s.eigenvalues[0].imag()) - 2.0) < 1e-14);
  Eigen::Matrix3d T;
  T << -1, 5, 7, 0, -2, 3, 0, 0, 0.5;
  CHECK(eigenvalues(T).max_real() == doctest::Approx(0.5));
  CHECK_THROWS_AS(eigenvalues(Eigen::MatrixXd(2, 3)), std::invalid_argument);
}

TEST_CASE("spectrum is invariant under permutation and balancing") {
  Eigen::MatrixXd A = random_matrix(10, 77);
  A.row(3) *= 1e4;
  A.col(3) /= 1e4;
  Eigen::PermutationMatrix<Eigen::Dynamic> P(10);
  P.setIdentity();
  std::mt19937 gen(4);
  std::shuffle(P.indices().data(), P.indices().data() + 10, gen);
  Eigen::MatrixXd B = P * A * P.transpose();
  auto ea = eigenvalues(A).eigenvalues;
  CHECK(match_error(ea, eigenvalues(B).eigenvalues) < 1e-10);
  Eigen::MatrixXd C = balance(A);
  CHECK(match_error(ea, eigenvalues(C).eigenvalues) < 1e-10);
  CHECK(C.cwiseAbs().rowwise().sum().maxCoeff() <= A.cwiseAbs().rowwise().sum().maxCoeff());
}

TEST_CASE("critical dz at a moderate peclet number") {
  CriticalDz c = critical_dz(1, 20, 20.0, 100.0);
  CHECK(c.N == 7);
  CHECK(c.dz == doctest::Approx(1.0 / 7.0));
  CHECK(c.monotone);
  double re = 0.0;
  CHECK(is_stable(stability_matrix(7, 1, 20, 20.0, 100.0, 1.0), 1e-9, &re));
  CHECK(re <= 0.0);
  CHECK_FALSE(is_stable(stability_matrix(6, 1, 20, 20.0, 100.0, 1.0), 1e-9, &re));
  CHECK(re > 0.0);
  CriticalDzOptions opt;
  opt.n_max = 3;
  CHECK_THROWS_AS(critical_dz(2, 180, 200.0, 1000.0, 1.0, opt), NoStableResolution);
}

TEST_CASE("appendix variant names round trip") {
  auto vs = appendix_variants();
  CHECK(vs.size() == 16);
  std::set<std::string> names;
  for (const auto& v : vs) {
    names.insert(v.name());
    AppendixVariant w = AppendixVariant::parse(v.name());
    CHECK(w.name() == v.name());
  }
  CHECK(names.size() == 16);
  CHECK_THROWS_AS(AppendixVariant::parse("weak-lf-neu"), std::invalid_argument);
}

TEST_CASE("appendix operators have the expected size") {
  for (const auto& v : appendix_variants()) {
    AppendixOperator op = appendix_operator(v, 2.0, 1.0, 1.0, 12);
    CHECK(op.A.rows() == op.A.cols());
    CHECK(op.A.allFinite());
    CHECK(op.g.size() == op.A.rows());
  }
}

TEST_CASE("strong Laguerre function form with Dirichlet data is stable everywhere") {
  AppendixVariant v = AppendixVariant::parse("strong-lf-dir");
  for (double Pe : {1.0, 100.0}) {
    std::vector<double> grid;
    for (double f : {0.01, 0.1, 1.0, 10.0, 100.0}) grid.push_back(f * Pe);
    BetaScan s = beta_stability_scan(v, Pe, 30, grid);
    CHECK(s.all_stable());
    CHECK_FALSE(s.lower.has_value());
    CHECK_FALSE(s.upper.has_value());
  }
}

TEST_CASE("Laguerre polynomial form loses stability for large beta") {
  AppendixVariant v = AppendixVariant::parse("modal-lp-dir");
  std::vector<double> grid = {0.5, 1.0, 2.0, 20.0, 50.0};
  BetaScan s = beta_stability_scan(v, 1.0, 30, grid);
  CHECK_FALSE(s.all_stable());
  CHECK(s.points.front().stable);
  CHECK_FALSE(s.points.back().stable);
  REQUIRE(s.upper.has_value());
  CHECK(*s.upper >= 2.0);
  CHECK(*s.upper < 20.0);
}
