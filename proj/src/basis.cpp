#include "xdg/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace xdg {

Mesh Mesh::uniform(double L, int N) {
  if (!(L > 0) || N < 1) throw std::invalid_argument("uniform mesh needs L > 0 and N >= 1");
  Mesh mesh;
  mesh.edges.resize(N + 1);
  for (int m = 0; m <= N; ++m) mesh.edges[m] = L * m / N;
  mesh.edges[N] = L;
  return mesh;
}

int Mesh::locate(double z) const {
  // Interior edges belong to the element on their left.
  auto it = std::lower_bound(edges.begin() + 1, edges.end(), z);
  if (it == edges.end()) return size() - 1;
  return static_cast<int>(it - edges.begin()) - 1;
}

void legendre_all(int p, double xi, double* val, double* der) {
  val[0] = 1.0;
  der[0] = 0.0;
  if (p == 0) return;
  val[1] = xi;
  der[1] = 1.0;
  for (int k = 1; k < p; ++k) {
    val[k + 1] = ((2 * k + 1) * xi * val[k] - k * val[k - 1]) / (k + 1);
    der[k + 1] = der[k - 1] + (2 * k + 1) * val[k];
  }
}

ValDer legendre_eval(int l, double xi) {
  if (l < 0) throw std::invalid_argument("negative Legendre degree");
  std::vector<double> v(l + 1), d(l + 1);
  legendre_all(l, xi, v.data(), d.data());
  return {v[l], d[l]};
}

void element_basis_ref(int p, double xi, double* val, double* der) {
  legendre_all(p, xi, val, der);
  for (int l = 0; l <= p; ++l) {
    double s = std::sqrt(2.0 * l + 1.0);
    val[l] *= s;
    der[l] *= s;
  }
}

ValDer element_basis_eval(int m, int l, double z, const Mesh& mesh) {
  if (m < 0 || m >= mesh.size()) throw std::out_of_range("element index out of range");
  double dz = mesh.width(m);
  double xi = 2.0 * (z - mesh.center(m)) / dz;
  ValDer r = legendre_eval(l, xi);
  double s = std::sqrt(2.0 * l + 1.0);
  return {s * r.value, s * r.deriv * 2.0 / dz};
}

void laguerre_all(int q, double beta, double x, LaguerreKind kind, double* val, double* der) {
  // Recurrence in y = beta x on rescaled values: true = stored * exp(logscale).
  const double y = beta * x;
  const double big = 1e150;
  const double log_big = std::log(big);
  double logscale = kind == LaguerreKind::Function ? -0.5 * y : 0.0;
  double shift = kind == LaguerreKind::Function ? 0.5 : 0.0;

  double lprev = 0.0;
  double lcur = 1.0, dcur = 0.0;
  for (int k = 0; k <= q; ++k) {
    double s = std::exp(logscale);
    val[k] = lcur * s;
    der[k] = beta * (dcur - shift * lcur) * s;
    if (k == q) break;
    double lnext = ((2 * k + 1 - y) * lcur - k * lprev) / (k + 1);
    double dnext = dcur - lcur;
    lprev = lcur;
    lcur = lnext;
    dcur = dnext;
    if (std::abs(lcur) > big || std::abs(dcur) > big) {
      lprev /= big;
      lcur /= big;
      dcur /= big;
      logscale += log_big;
    }
  }
}

ValDer laguerre_eval(int k, double beta, double x, LaguerreKind kind) {
  if (k < 0) throw std::invalid_argument("negative Laguerre index");
  std::vector<double> v(k + 1), d(k + 1);
  laguerre_all(k, beta, x, kind, v.data(), d.data());
  return {v[k], d[k]};
}

ValDer tail_basis_eval(int j, double z, double L, double beta) {
  if (z < L) throw std::domain_error("tail basis evaluated left of the interface");
  return laguerre_eval(j, beta, z - L, LaguerreKind::Function);
}

}  // namespace xdg
