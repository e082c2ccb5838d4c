#pragma once

#include <vector>

namespace xdg {

struct ValDer {
  double value;
  double deriv;
};

enum class LaguerreKind { Polynomial, Function };

// Element edges z_{1/2} < ... < z_{N+1/2}.
struct Mesh {
  std::vector<double> edges;

  static Mesh uniform(double L, int N);
  int size() const { return static_cast<int>(edges.size()) - 1; }
  double left(int m) const { return edges.at(m); }
  double right(int m) const { return edges.at(m + 1); }
  double width(int m) const { return right(m) - left(m); }
  double center(int m) const { return 0.5 * (left(m) + right(m)); }
  int locate(double z) const;
};

ValDer legendre_eval(int l, double xi);
// Unnormalized L_0..L_p and derivatives at xi.
void legendre_all(int p, double xi, double* val, double* der);

// phi^m_l = sqrt(2l+1) L_l(2(z - z_m)/dz_m), derivative in z.
ValDer element_basis_eval(int m, int l, double z, const Mesh& mesh);
// Normalized basis on the reference element, derivative in xi.
void element_basis_ref(int p, double xi, double* val, double* der);

ValDer laguerre_eval(int k, double beta, double x, LaguerreKind kind);
// Modes 0..q at x, derivatives in x.
void laguerre_all(int q, double beta, double x, LaguerreKind kind, double* val, double* der);

// Laguerre function of z - L; z below the interface is a domain error.
ValDer tail_basis_eval(int j, double z, double L, double beta);

}  // namespace xdg
