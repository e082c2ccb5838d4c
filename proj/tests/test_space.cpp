#include <doctest.h>

#include <cmath>
#include <random>

#include "xdg/operator.hpp"
#include "xdg/quadrature.hpp"
#include "xdg/space.hpp"

using namespace xdg;

TEST_CASE("space layout") {
  Space s = build_space(2.0, 10, 2, 5, 3.0);
  CHECK(s.has_tail());
  CHECK(s.ndg() == 30);
  CHECK(s.nlag() == 6);
  CHECK(s.dofs() == 36);
  CHECK(s.dg(3, 1) == 10);
  CHECK(s.lag(0) == 30);
  CHECK(s.dz(4) == doctest::Approx(0.2));
  Space d = build_dg_space(2.0, 10, 1);
  CHECK_FALSE(d.has_tail());
  CHECK(d.dofs() == 20);
}

TEST_CASE("pack and unpack are inverse") {
  Space s = build_space(1.0, 4, 3, 7, 2.0);
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> U(-1, 1);
  Eigen::VectorXd c(s.dofs());
  for (int i = 0; i < c.size(); ++i) c[i] = U(gen);
  Blocks b = unpack(s, c);
  CHECK(b.dg.rows() == 4);
  CHECK(b.dg.cols() == 4);
  CHECK(b.dg(2, 1) == c[s.dg(1, 2)]);
  CHECK(b.lag[3] == c[s.lag(3)]);
  CHECK((pack(s, b) - c).norm() == 0.0);
}

TEST_CASE("evaluate follows the basis definitions") {
  Space s = build_space(1.0, 4, 2, 3, 2.0);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(s.dofs());
  c[s.dg(1, 2)] = 0.5;
  c[s.lag(2)] = -1.5;
  double z = 0.3;
  CHECK(evaluate(s, c, z) == doctest::Approx(0.5 * element_basis_eval(1, 2, z, s.mesh).value));
  CHECK(evaluate(s, c, 1.7) == doctest::Approx(-1.5 * tail_basis_eval(2, 1.7, 1.0, 2.0).value));
  Space d = build_dg_space(1.0, 4, 2);
  Eigen::VectorXd e = Eigen::VectorXd::Ones(d.dofs());
  CHECK(evaluate(d, e, 1.5) == 0.0);
}

TEST_CASE("interface traces come from both sides of L") {
  Space s = build_space(1.0, 5, 2, 4, 1.5);
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> U(-1, 1);
  Eigen::VectorXd c(s.dofs());
  for (int i = 0; i < c.size(); ++i) c[i] = U(gen);
  Traces t = interface_traces(s, c);
  CHECK(t.left_value == doctest::Approx(evaluate(s, c, 1.0)));
  CHECK(t.right_value == doctest::Approx(evaluate(s, c, 1.0 + 1e-12)).epsilon(1e-9));
  const double h = 1e-6;
  CHECK(t.left_slope == doctest::Approx((evaluate(s, c, 1.0) - evaluate(s, c, 1.0 - h)) / h).epsilon(1e-5));
  CHECK(t.right_slope == doctest::Approx((evaluate(s, c, 1.0 + 2 * h) - evaluate(s, c, 1.0 + h)) / h).epsilon(1e-4));
}

TEST_CASE("jump and average identity on interface traces") {
  Space s = build_space(1.0, 3, 2, 4, 1.0);
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> U(-1, 1);
  Eigen::VectorXd a(s.dofs()), b(s.dofs());
  for (int i = 0; i < a.size(); ++i) {
    a[i] = U(gen);
    b[i] = U(gen);
  }
  Traces ta = interface_traces(s, a), tb = interface_traces(s, b);
  double jump_ab = ta.left_value * tb.left_value - ta.right_value * tb.right_value;
  double avg_a = 0.5 * (ta.left_value + ta.right_value), avg_b = 0.5 * (tb.left_value + tb.right_value);
  double jump_a = ta.left_value - ta.right_value, jump_b = tb.left_value - tb.right_value;
  CHECK(jump_ab == doctest::Approx(avg_a * jump_b + jump_a * avg_b).epsilon(1e-14));
}

TEST_CASE("discrete norms of simple functions") {
  Space s = build_dg_space(3.0, 6, 2);
  Eigen::VectorXd c = load_vector(s, [](double) { return 2.0; });
  CHECK(discrete_norm(s, c, NormKind::L1) == doctest::Approx(6.0));
  CHECK(discrete_norm(s, c, NormKind::L2) == doctest::Approx(std::sqrt(12.0)));
  CHECK(discrete_norm(s, c, NormKind::Linf) == doctest::Approx(2.0));
  auto f = [](double z) { return z * z; };
  // Four Gauss points per element integrate z^4 exactly.
  CHECK(discrete_norm(s, f, NormKind::L2) == doctest::Approx(std::sqrt(243.0 / 5.0)));
  CHECK(discrete_norm(s, f, NormKind::L1) == doctest::Approx(9.0));
}

TEST_CASE("error report: absolute and relative") {
  Space s = build_dg_space(1.0, 5, 2);
  Eigen::VectorXd c = load_vector(s, [](double z) { return z; });
  NormReport zero = error_report(s, c, [](double z) { return z; }, false);
  CHECK(zero.l2 < 1e-14);
  CHECK(zero.ng == 4);
  NormReport rel = error_report(s, c, [](double z) { return 2 * z; }, true);
  CHECK(rel.relative);
  CHECK(rel.l1 == doctest::Approx(0.5));
  CHECK(rel.l2 == doctest::Approx(0.5));
  CHECK(rel.linf == doctest::Approx(0.5));
}

TEST_CASE("match_beta spaces the first two GLR nodes by dz") {
  for (double dz : {0.02, 0.1, 2.5})
    for (int q : {5, 20, 40}) {
      double beta = match_beta(dz, q);
      QuadRule r = laguerre_rule(Family::GLR, beta, q);
      CHECK(r.nodes[1] - r.nodes[0] == doctest::Approx(dz).epsilon(1e-12));
    }
  // More modes pack the nodes closer, so a smaller beta is needed.
  CHECK(match_beta(0.02, 40) < match_beta(0.02, 20));
  CHECK_THROWS_AS(match_beta(0.0, 5), std::invalid_argument);
}
