#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "xdg/basis.hpp"

using namespace xdg;
using oracle::simpson_extrapolated;

namespace {

// Plain long double three-term recurrence, no rescaling.
long double laguerre_ref(int k, long double y) {
  long double a = 1.0L, b = 1.0L - y;
  if (k == 0) return a;
  for (int n = 1; n < k; ++n) {
    long double c = ((2 * n + 1 - y) * b - n * a) / (n + 1);
    a = b;
    b = c;
  }
  return b;
}

}  // namespace

TEST_CASE("legendre closed forms and derivatives") {
  for (double x : {-1.0, -0.3, 0.0, 0.45, 1.0}) {
    CHECK(legendre_eval(0, x).value == doctest::Approx(1.0));
    CHECK(legendre_eval(2, x).value == doctest::Approx(0.5 * (3 * x * x - 1)));
    CHECK(legendre_eval(3, x).value == doctest::Approx(0.5 * (5 * x * x * x - 3 * x)));
    CHECK(legendre_eval(3, x).deriv == doctest::Approx(0.5 * (15 * x * x - 3)));
  }
  const double h = 1e-6;
  for (int l = 0; l <= 8; ++l) {
    double x = 0.37;
    double fd = (legendre_eval(l, x + h).value - legendre_eval(l, x - h).value) / (2 * h);
    CHECK(legendre_eval(l, x).deriv == doctest::Approx(fd).epsilon(1e-7));
  }
  CHECK(legendre_eval(7, 1.0).value == doctest::Approx(1.0));
  CHECK(legendre_eval(7, -1.0).value == doctest::Approx(-1.0));
}

TEST_CASE("legendre_all agrees with single evaluation") {
  std::vector<double> v(7), d(7);
  legendre_all(6, -0.62, v.data(), d.data());
  for (int l = 0; l <= 6; ++l) {
    CHECK(v[l] == doctest::Approx(legendre_eval(l, -0.62).value));
    CHECK(d[l] == doctest::Approx(legendre_eval(l, -0.62).deriv));
  }
}

TEST_CASE("element basis is orthogonal with mass dz") {
  Mesh mesh = Mesh::uniform(3.0, 4);
  const int m = 2;
  double a = mesh.left(m), b = mesh.right(m);
  for (int k = 0; k <= 5; ++k)
    for (int l = 0; l <= 5; ++l) {
      double s = simpson_extrapolated(
          [&](double z) {
            return element_basis_eval(m, k, z, mesh).value * element_basis_eval(m, l, z, mesh).value;
          },
          a, b, 2000);
      CHECK(s == doctest::Approx(k == l ? mesh.width(m) : 0.0).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("element basis derivative matches finite differences") {
  Mesh mesh = Mesh::uniform(1.0, 5);
  const double h = 1e-6;
  for (int l = 0; l <= 4; ++l) {
    double z = 0.51;
    double fd = (element_basis_eval(2, l, z + h, mesh).value - element_basis_eval(2, l, z - h, mesh).value) /
                (2 * h);
    CHECK(element_basis_eval(2, l, z, mesh).deriv == doctest::Approx(fd).epsilon(1e-6));
  }
  CHECK_THROWS_AS(element_basis_eval(5, 1, 0.5, mesh), std::out_of_range);
  CHECK_THROWS_AS(element_basis_eval(-1, 1, 0.5, mesh), std::out_of_range);
}

TEST_CASE("reference basis values at the end points") {
  std::vector<double> v(4), d(4);
  element_basis_ref(3, 1.0, v.data(), d.data());
  for (int l = 0; l <= 3; ++l) CHECK(v[l] == doctest::Approx(std::sqrt(2.0 * l + 1)));
  element_basis_ref(3, -1.0, v.data(), d.data());
  for (int l = 0; l <= 3; ++l) CHECK(v[l] == doctest::Approx(std::pow(-1.0, l) * std::sqrt(2.0 * l + 1)));
}

TEST_CASE("mesh locate") {
  Mesh mesh = Mesh::uniform(2.0, 4);
  CHECK(mesh.size() == 4);
  CHECK(mesh.locate(0.0) == 0);
  CHECK(mesh.locate(0.7) == 1);
  // Interior edges belong to the element on their left.
  CHECK(mesh.locate(1.0) == 1);
  CHECK(mesh.locate(2.0) == 3);
}

TEST_CASE("laguerre polynomials match closed forms") {
  for (double y : {0.0, 0.5, 3.0, 11.0}) {
    CHECK(laguerre_eval(0, 1.0, y, LaguerreKind::Polynomial).value == doctest::Approx(1.0));
    CHECK(laguerre_eval(1, 1.0, y, LaguerreKind::Polynomial).value == doctest::Approx(1.0 - y));
    CHECK(laguerre_eval(2, 1.0, y, LaguerreKind::Polynomial).value ==
          doctest::Approx(0.5 * (y * y - 4 * y + 2)));
    CHECK(laguerre_eval(3, 1.0, y, LaguerreKind::Polynomial).value ==
          doctest::Approx((-y * y * y + 9 * y * y - 18 * y + 6) / 6.0));
  }
  // beta scales the argument.
  CHECK(laguerre_eval(2, 4.0, 0.5, LaguerreKind::Polynomial).value ==
        doctest::Approx(laguerre_eval(2, 1.0, 2.0, LaguerreKind::Polynomial).value));
  CHECK(laguerre_eval(2, 4.0, 0.5, LaguerreKind::Function).value ==
        doctest::Approx(std::exp(-1.0) * laguerre_eval(2, 1.0, 2.0, LaguerreKind::Polynomial).value));
}

TEST_CASE("laguerre derivatives match finite differences") {
  const double h = 1e-6;
  for (auto kind : {LaguerreKind::Polynomial, LaguerreKind::Function})
    for (int k : {0, 1, 4, 9}) {
      double beta = 1.7, x = 2.3;
      double fd = (laguerre_eval(k, beta, x + h, kind).value - laguerre_eval(k, beta, x - h, kind).value) /
                  (2 * h);
      CHECK(laguerre_eval(k, beta, x, kind).deriv == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("laguerre functions are orthogonal with mass 1/beta") {
  const double beta = 2.5;
  for (int j = 0; j <= 8; j += 2)
    for (int k = 0; k <= 8; ++k) {
      double s = simpson_extrapolated(
          [&](double x) {
            return laguerre_eval(j, beta, x, LaguerreKind::Function).value *
                   laguerre_eval(k, beta, x, LaguerreKind::Function).value;
          },
          0.0, 80.0 / beta, 20000);
      CHECK(s == doctest::Approx(j == k ? 1.0 / beta : 0.0).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("high index laguerre functions stay accurate") {
  std::vector<double> v(181), d(181);
  for (double y : {0.01, 5.0, 60.0, 150.0, 600.0}) {
    laguerre_all(180, 1.0, y, LaguerreKind::Function, v.data(), d.data());
    for (int k : {0, 50, 120, 180}) {
      long double ref = laguerre_ref(k, y) * std::exp(-(long double)y / 2);
      CHECK(std::isfinite(v[k]));
      CHECK(v[k] == doctest::Approx((double)ref).epsilon(1e-9).scale(1.0));
    }
  }
  // Far out the function kind underflows cleanly instead of overflowing.
  laguerre_all(180, 1.0, 5000.0, LaguerreKind::Function, v.data(), d.data());
  for (int k = 0; k <= 180; ++k) CHECK(std::isfinite(v[k]));
  CHECK(std::abs(v[180]) < 1e-300);
}

TEST_CASE("tail basis lives on [L, inf)") {
  ValDer a = tail_basis_eval(3, 2.5, 2.0, 1.5);
  ValDer b = laguerre_eval(3, 1.5, 0.5, LaguerreKind::Function);
  CHECK(a.value == doctest::Approx(b.value));
  CHECK(a.deriv == doctest::Approx(b.deriv));
  CHECK(tail_basis_eval(4, 2.0, 2.0, 1.5).value == doctest::Approx(1.0));
  CHECK_THROWS_AS(tail_basis_eval(0, 1.99, 2.0, 1.0), std::domain_error);
}
