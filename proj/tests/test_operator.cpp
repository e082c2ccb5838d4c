#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "xdg/operator.hpp"
#include "xdg/quadrature.hpp"

using namespace xdg;

namespace {

Eigen::VectorXd random_vector(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> U(-1, 1);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = U(gen);
  return v;
}

double max_sym_eig(const Eigen::MatrixXd& A) {
  Eigen::MatrixXd S = 0.5 * (A + A.transpose());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(S, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
}

}  // namespace

TEST_CASE("rusanov flux is consistent") {
  for (const Flux& f : {Flux::linear(1.5), Flux::linear(-0.7), Flux::burgers()})
    for (double w : {-2.0, -0.1, 0.0, 0.4, 3.0}) CHECK(rusanov(f, w, w) == doctest::Approx(f.f(w)));
}

TEST_CASE("rusanov flux is monotone") {
  Flux b = Flux::burgers();
  const double h = 1e-3;
  for (double a = -2.0; a <= 2.0; a += 0.25)
    for (double c = -2.0; c <= 2.0; c += 0.25) {
      CHECK(rusanov(b, a + h, c) >= rusanov(b, a, c) - 1e-14);
      CHECK(rusanov(b, a, c + h) <= rusanov(b, a, c) + 1e-14);
    }
  // Linear flux reduces to upwinding.
  CHECK(rusanov(Flux::linear(2.0), 1.0, 5.0) == doctest::Approx(2.0));
  CHECK(rusanov(Flux::linear(-2.0), 1.0, 5.0) == doctest::Approx(-10.0));
}

TEST_CASE("mass diagonal") {
  Space s = build_space(2.0, 4, 1, 3, 2.5);
  Eigen::VectorXd m = mass_diagonal(s);
  CHECK(m[s.dg(2, 1)] == doctest::Approx(0.5));
  CHECK(m[s.lag(3)] == doctest::Approx(0.4));
}

TEST_CASE("SIPG diffusion matrix is symmetric") {
  for (int q : {-1, 0, 6}) {
    Space s = q < 0 ? build_dg_space(1.5, 7, 3) : build_space(1.5, 7, 3, q, 2.0);
    Eigen::MatrixXd A = Eigen::MatrixXd(assemble_diffusion(s, 0.8, 50.0, false));
    double asym = (A - A.transpose()).cwiseAbs().maxCoeff();
    CHECK(asym <= 1e-12 * A.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("SIPG diffusion is coercive at sigma = 200") {
  Space s = build_space(1.0, 10, 2, 8, 4.0);
  Eigen::MatrixXd A = Eigen::MatrixXd(assemble_diffusion(s, 1.0, 200.0, false));
  CHECK(max_sym_eig(A) < 0.0);
}

TEST_CASE("diffusion annihilates constants away from the boundary") {
  // A constant state only feels the weak Dirichlet penalty on the first element.
  Space s = build_dg_space(1.0, 6, 2);
  SpMat A = assemble_diffusion(s, 1.0, 10.0);
  Eigen::VectorXd c = load_vector(s, [](double) { return 1.0; });
  Eigen::VectorXd r = A * c;
  for (int m = 1; m < 5; ++m)
    for (int l = 0; l <= 2; ++l) CHECK(std::abs(r[s.dg(m, l)]) < 1e-10);
}

TEST_CASE("diffusion with a coefficient function matches the constant form") {
  Space s = build_space(1.0, 5, 2, 4, 3.0);
  SpMat a = assemble_diffusion(s, 0.3, 20.0);
  SpMat b = assemble_diffusion(s, [](double, double) { return 0.3; }, 20.0, 0.0);
  CHECK((Eigen::MatrixXd(a) - Eigen::MatrixXd(b)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("upwind advection and diffusion dissipate energy") {
  Space s = build_space(2.0, 8, 2, 10, 3.0);
  CHECK(max_sym_eig(Eigen::MatrixXd(assemble_linear_advection(s, 1.3, false))) <= 1e-12);
  CHECK(max_sym_eig(Eigen::MatrixXd(assemble_diffusion(s, 1.0, 20.0, false))) <= 1e-12);
}

TEST_CASE("hyperbolic rhs with a linear flux equals the advection matrix product") {
  Space s = build_space(1.0, 6, 2, 7, 5.0);
  const double u = 0.9;
  Eigen::VectorXd c = random_vector(s.dofs(), 5);
  SpMat B = assemble_linear_advection(s, u);
  Eigen::VectorXd lhs = eval_hyperbolic_rhs(
      s, c, Flux::linear(u), [](double, double) { return 0.0; }, [](double) { return 0.0; }, 0.0);
  Eigen::VectorXd rhs = B * c;
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11 * std::max(1.0, rhs.cwiseAbs().maxCoeff()));
}

TEST_CASE("inflow data enters the hyperbolic rhs through the first element") {
  Space s = build_dg_space(1.0, 4, 1);
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(s.dofs());
  const double u = 2.0, g = 0.5;
  Eigen::VectorXd r = eval_hyperbolic_rhs(
      s, zero, Flux::linear(u), [](double, double) { return 0.0; }, [&](double) { return g; }, 0.0);
  // f(g) phi(0) / dz with phi_l(0) = (-1)^l sqrt(2l+1).
  CHECK(r[s.dg(0, 0)] == doctest::Approx(u * g / 0.25));
  CHECK(r[s.dg(0, 1)] == doctest::Approx(-u * g * std::sqrt(3.0) / 0.25));
  for (int i = 2; i < s.dofs(); ++i) CHECK(r[i] == 0.0);
}

TEST_CASE("load vector reproduces functions in the space") {
  Space s = build_space(1.0, 4, 3, 5, 2.0);
  auto f = [&](double z) {
    if (z < 1.0) return 1.0 - 2.0 * z + z * z * z;
    double x = z - 1.0;
    return std::exp(-x) * (3.0 - 2.0 * (1.0 - 2.0 * x));
  };
  Eigen::VectorXd c = load_vector(s, f);
  for (double z : {0.05, 0.3, 0.77, 0.999, 1.2, 2.5, 6.0}) CHECK(evaluate(s, c, z) == doctest::Approx(f(z)));
}

TEST_CASE("damping profile shape") {
  const int q = 12;
  const double beta = 0.5;
  Space s = build_space(3.0, 3, 1, q, beta);
  DampingProfile d = make_damping(s, 2.0);
  // Largest zero of L^(1)_q from the Jacobi matrix.
  Eigen::VectorXd diag(q), sub(q - 1);
  for (int i = 0; i < q; ++i) diag[i] = 2.0 * i + 2.0;
  for (int i = 1; i < q; ++i) sub[i - 1] = -std::sqrt(i * (i + 1.0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  double L0 = es.eigenvalues().maxCoeff() / beta;
  CHECK(d.L0 == doctest::Approx(L0).epsilon(1e-10));
  CHECK(d.sigma_d == doctest::Approx(L0 / 18.0));
  CHECK(d(3.0 + 0.3 * L0) == doctest::Approx(1.0));
  CHECK(d(3.0) < 0.01);
  CHECK(d(3.0 + 2 * L0) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK_THROWS_AS(make_damping(build_dg_space(1.0, 2, 1), 1.0), std::invalid_argument);
}

TEST_CASE("damping matrix is symmetric and dissipative") {
  Space s = build_space(1.0, 4, 2, 10, 1.0);
  DampingProfile d = make_damping(s, 1.0);
  Eigen::MatrixXd D = Eigen::MatrixXd(assemble_damping(s, d, false));
  CHECK((D - D.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(max_sym_eig(D) <= 1e-12);
  // The damping lives on the tail only.
  CHECK(D.topRows(s.ndg()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dirichlet vector vanishes for zero data") {
  Space s = build_space(1.0, 3, 2, 4, 2.0);
  BoundaryVector g = assemble_dirichlet_vector(
      s, [](double, double) { return 1.0; }, 10.0, Flux::linear(1.0), [](double) { return 0.0; });
  CHECK(g(0.3).cwiseAbs().maxCoeff() == 0.0);
  BoundaryVector h = assemble_dirichlet_vector(
      s, [](double, double) { return 1.0; }, 10.0, std::nullopt, [](double) { return 1.0; });
  // Only the first element sees the boundary.
  CHECK(h(0.0).segment(3, s.dofs() - 3).cwiseAbs().maxCoeff() == 0.0);
  CHECK(h(0.0)[0] != 0.0);
}
