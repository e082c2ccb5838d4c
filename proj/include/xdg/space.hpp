#pragma once

#include <functional>

#include <Eigen/Dense>

#include "xdg/basis.hpp"

namespace xdg {

// Legendre DG on [0, L] joined to one Laguerre element on [L, inf).
// A space without tail (q < 0) is a plain DG space on [0, L].
struct Space {
  Mesh mesh;
  double L = 1.0;
  int N = 1;
  int p = 0;
  int q = -1;
  double beta = 1.0;

  bool has_tail() const { return q >= 0; }
  int ndg() const { return N * (p + 1); }
  int nlag() const { return has_tail() ? q + 1 : 0; }
  int dofs() const { return ndg() + nlag(); }
  int dg(int m, int l) const { return m * (p + 1) + l; }
  int lag(int j) const { return ndg() + j; }
  double dz(int m) const { return mesh.width(m); }
};

Space build_space(double L, int N, int p, int q, double beta);
Space build_dg_space(double L, int N, int p);

struct State {
  Eigen::VectorXd coeffs;
  double time = 0.0;
};

// Block view of a coefficient vector: dg(l, m) holds mode l of element m.
struct Blocks {
  Eigen::MatrixXd dg;
  Eigen::VectorXd lag;
};
Blocks unpack(const Space& space, const Eigen::VectorXd& c);
Eigen::VectorXd pack(const Space& space, const Blocks& blocks);

// Left limit at interior edges.
double evaluate(const Space& space, const Eigen::VectorXd& c, double z);

struct Traces {
  double left_value;
  double right_value;
  double left_slope;
  double right_slope;
};
Traces interface_traces(const Space& space, const Eigen::VectorXd& c);

enum class NormKind { L1, L2, Linf };

// Per-element Gauss sums over [0, L]; ng <= 0 selects p + 2 points.
double discrete_norm(const Space& space, const Eigen::VectorXd& c, NormKind kind, int ng = 0);
double discrete_norm(const Space& space, const std::function<double(double)>& f, NormKind kind,
                     int ng = 0);

struct NormReport {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  bool relative = false;
  int ng = 0;
};

NormReport error_report(const Space& space, const Eigen::VectorXd& c,
                        const std::function<double(double)>& reference, bool relative,
                        int ng = 0);

// beta for which the first two GLR nodes of a q-mode tail are dz apart.
double match_beta(double dz, int q);

}  // namespace xdg
