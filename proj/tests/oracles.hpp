#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance driver. Nothing here calls into the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;

// Composite Simpson on [a, b] with n (even) panels.
template <class F>
double simpson(F f, double a, double b, int n) {
  double h = (b - a) / n, s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// One Richardson step on Simpson, error O(h^6).
template <class F>
double simpson_extrapolated(F f, double a, double b, int n) {
  return (16.0 * simpson(f, a, b, 2 * n) - simpson(f, a, b, n)) / 15.0;
}

// Binomial coefficient in floating point.
inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// int_0^inf x^k exp(-beta x) dx = k! / beta^(k+1).
inline double laguerre_moment(int k, double beta) {
  double r = 1.0 / beta;
  for (int i = 1; i <= k; ++i) r *= i / beta;
  return r;
}

inline Eigen::MatrixXd random_matrix(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> U(-1, 1);
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = U(gen);
  return A;
}

// Determinant by cofactor expansion along the first row.
inline cd det_laplace(const std::vector<std::vector<cd>>& M) {
  const size_t n = M.size();
  if (n == 1) return M[0][0];
  cd d = 0.0;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<cd>> sub;
    for (size_t i = 1; i < n; ++i) {
      std::vector<cd> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(M[i][k]);
      sub.push_back(row);
    }
    d += (j % 2 ? -1.0 : 1.0) * M[0][j] * det_laplace(sub);
  }
  return d;
}

inline cd char_poly(const Eigen::MatrixXd& A, cd z) {
  const int n = static_cast<int>(A.rows());
  std::vector<std::vector<cd>> M(n, std::vector<cd>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = (i == j ? z : 0.0) - A(i, j);
  return det_laplace(M);
}

// Durand-Kerner on the monic characteristic polynomial.
inline std::vector<cd> char_poly_roots(const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.rows());
  double R = 1.0 + A.cwiseAbs().rowwise().sum().maxCoeff();
  std::vector<cd> z(n);
  for (int k = 0; k < n; ++k) z[k] = R * std::pow(cd(0.4, 0.9), k);
  for (int it = 0; it < 2000; ++it) {
    double change = 0.0;
    for (int k = 0; k < n; ++k) {
      cd den = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != k) den *= z[k] - z[j];
      cd dz = char_poly(A, z[k]) / den;
      z[k] -= dz;
      change = std::max(change, std::abs(dz));
    }
    if (change < 1e-15 * R) break;
  }
  return z;
}

// Largest distance after greedily pairing every entry of a with one of b.
inline double match_error(const std::vector<cd>& a, std::vector<cd> b) {
  double worst = 0.0;
  for (cd x : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](cd u, cd v) { return std::abs(u - x) < std::abs(v - x); });
    worst = std::max(worst, std::abs(*it - x));
    b.erase(it);
  }
  return worst;
}

}  // namespace oracle
