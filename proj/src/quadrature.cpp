#include "xdg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace xdg {

namespace {

constexpr int kMaxNewton = 200;
constexpr double kNodeTol = 1e-12;

// f/f' for L^(alpha)_n at y > 0, from rescaled recurrence values.
double laguerre_newton_ratio(int n, double alpha, double y) {
  double lprev = 0.0, lcur = 1.0;
  for (int k = 0; k < n; ++k) {
    double lnext = ((2 * k + 1 + alpha - y) * lcur - (k + alpha) * lprev) / (k + 1);
    lprev = lcur;
    lcur = lnext;
    if (std::abs(lcur) > 1e150) {
      lprev /= 1e150;
      lcur /= 1e150;
    }
  }
  double deriv = (n * lcur - (n + alpha) * lprev) / y;
  return lcur / deriv;
}

}  // namespace

std::vector<double> QuadRule::standard_weights() const {
  std::vector<double> w = weights;
  if (modified)
    for (int j = 0; j < size(); ++j) w[j] *= std::exp(-beta * nodes[j]);
  return w;
}

QuadRule gauss_legendre_rule(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs n >= 1");
  QuadRule rule;
  rule.family = Family::GaussLegendre;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  std::vector<double> val(n + 1), der(n + 1);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    int it = 0;
    for (; it < kMaxNewton; ++it) {
      legendre_all(n, x, val.data(), der.data());
      double dx = val[n] / der[n];
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    if (it == kMaxNewton) throw RootFindingError("Gauss-Legendre Newton iteration stalled");
    legendre_all(n, x, val.data(), der.data());
    double w = 2.0 / ((1.0 - x * x) * der[n] * der[n]);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

std::vector<double> laguerre_zeros(int n, double alpha) {
  std::vector<double> x(n);
  // x^((alpha+1)/2) exp(-x/2) L^(alpha)_n(x) oscillates with local wavenumber
  // sqrt(k2(x)); consecutive zeros sit about pi/sqrt(k2) apart.
  auto k2 = [&](double t) {
    return (2.0 * n + alpha + 1.0) / (2.0 * t) + (1.0 - alpha * alpha) / (4.0 * t * t) - 0.25;
  };
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * n + 1.8 * alpha);
    } else {
      double zp = x[i - 1];
      double h = i > 1 ? x[i - 1] - x[i - 2] : zp;
      if (k2(zp) > 0) h = std::numbers::pi / std::sqrt(k2(zp));
      if (k2(zp + 0.5 * h) > 0) h = std::numbers::pi / std::sqrt(k2(zp + 0.5 * h));
      z = zp + h;
    }
    // Maehly deflation keeps Newton away from zeros already found; steps
    // falling below the previous zero are halved back.
    const double lo = i > 0 ? x[i - 1] : 0.0;
    bool converged = false;
    for (int it = 0; it < kMaxNewton; ++it) {
      double r = laguerre_newton_ratio(n, alpha, z);
      double sum = 0.0;
      for (int k = 0; k < i; ++k) sum += 1.0 / (z - x[k]);
      double dz = r / (1.0 - r * sum);
      double znew = z - dz;
      if (znew <= lo) znew = 0.5 * (z + lo);
      dz = z - znew;
      z = znew;
      if (std::abs(dz) <= kNodeTol * std::max(1.0, z)) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw RootFindingError("Laguerre zero " + std::to_string(i) + " of degree " +
                             std::to_string(n) + " did not converge");
    x[i] = z;
  }
  std::sort(x.begin(), x.end());
  for (int i = 1; i < n; ++i)
    if (!(x[i] > x[i - 1])) throw RootFindingError("Laguerre zeros not distinct");
  return x;
}

QuadRule laguerre_rule(Family family, double beta, int M) {
  if (!(beta > 0)) throw std::invalid_argument("Laguerre rule needs beta > 0");
  if (M < 0) throw std::invalid_argument("Laguerre rule needs M >= 0");
  QuadRule rule;
  rule.family = family;
  rule.beta = beta;
  rule.modified = true;
  std::vector<double> y;
  int kw = 0;
  if (family == Family::GLR) {
    y.push_back(0.0);
    auto interior = laguerre_zeros(M, 1.0);
    y.insert(y.end(), interior.begin(), interior.end());
    kw = M;
  } else if (family == Family::GL) {
    y = laguerre_zeros(M + 1, 0.0);
    kw = M + 2;
  } else {
    throw std::invalid_argument("laguerre_rule needs GL or GLR");
  }
  std::vector<double> val(kw + 1), der(kw + 1);
  for (double yj : y) {
    laguerre_all(kw, 1.0, yj, LaguerreKind::Function, val.data(), der.data());
    double f = val[kw];
    double w = family == Family::GLR ? 1.0 / ((M + 1) * f * f)
                                     : yj / ((M + 2.0) * (M + 2.0) * f * f);
    rule.nodes.push_back(yj / beta);
    rule.weights.push_back(w / beta);
  }
  return rule;
}

DiffMatrix diff_matrix(const QuadRule& rule, LaguerreKind kind, DiffFormula formula) {
  if (rule.family == Family::GaussLegendre)
    throw std::invalid_argument("differentiation matrices exist only for GL and GLR rules");
  const int n = rule.size();
  const int M = n - 1;
  const double beta = rule.beta;
  const bool glr = rule.family == Family::GLR;
  const bool fn = kind == LaguerreKind::Function;
  const bool exact_gl = !glr && formula == DiffFormula::Exact;
  const int K = glr ? M + 1 : M;
  const auto& z = rule.nodes;

  std::vector<double> lk(n), val(K + 1), der(K + 1);
  for (int i = 0; i < n; ++i) {
    laguerre_all(K, beta, z[i], kind, val.data(), der.data());
    lk[i] = val[K];
  }

  DiffMatrix D{Eigen::MatrixXd::Zero(n, n), rule.family, kind, beta};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double d = lk[i] / ((z[i] - z[j]) * lk[j]);
      if (exact_gl) d *= z[j] / z[i];
      D.entries(i, j) = d;
    }
    double diag;
    if (glr) {
      if (fn) diag = i == 0 ? -beta * (M + 1) / 2.0 : 0.0;
      else diag = i == 0 ? -beta * M / 2.0 : beta / 2.0;
    } else if (exact_gl) {
      diag = fn ? -1.0 / (2.0 * z[i]) : (beta * z[i] - 1.0) / (2.0 * z[i]);
    } else {
      diag = fn ? -(M + 2.0) / (2.0 * z[i]) : (beta * z[i] - M - 2.0) / (2.0 * z[i]);
    }
    D.entries(i, i) = diag;
  }
  return D;
}

}  // namespace xdg
