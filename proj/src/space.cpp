#include "xdg/space.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "xdg/quadrature.hpp"

namespace xdg {

Space build_space(double L, int N, int p, int q, double beta) {
  if (!(L > 0) || N < 1 || p < 0 || q < 0 || !(beta > 0))
    throw std::invalid_argument("build_space needs L > 0, N >= 1, p >= 0, q >= 0, beta > 0");
  Space s;
  s.mesh = Mesh::uniform(L, N);
  s.L = L;
  s.N = N;
  s.p = p;
  s.q = q;
  s.beta = beta;
  return s;
}

Space build_dg_space(double L, int N, int p) {
  if (!(L > 0) || N < 1 || p < 0)
    throw std::invalid_argument("build_dg_space needs L > 0, N >= 1, p >= 0");
  Space s;
  s.mesh = Mesh::uniform(L, N);
  s.L = L;
  s.N = N;
  s.p = p;
  s.q = -1;
  return s;
}

Blocks unpack(const Space& space, const Eigen::VectorXd& c) {
  Blocks b;
  b.dg = Eigen::Map<const Eigen::MatrixXd>(c.data(), space.p + 1, space.N);
  b.lag = c.tail(space.nlag());
  return b;
}

Eigen::VectorXd pack(const Space& space, const Blocks& blocks) {
  Eigen::VectorXd c(space.dofs());
  c.head(space.ndg()) = Eigen::Map<const Eigen::VectorXd>(blocks.dg.data(), space.ndg());
  c.tail(space.nlag()) = blocks.lag;
  return c;
}

double evaluate(const Space& space, const Eigen::VectorXd& c, double z) {
  if (z <= space.L || !space.has_tail()) {
    if (z > space.L) return 0.0;
    int m = space.mesh.locate(z);
    double xi = 2.0 * (z - space.mesh.center(m)) / space.dz(m);
    std::vector<double> v(space.p + 1), d(space.p + 1);
    element_basis_ref(space.p, xi, v.data(), d.data());
    double s = 0.0;
    for (int l = 0; l <= space.p; ++l) s += c[space.dg(m, l)] * v[l];
    return s;
  }
  std::vector<double> v(space.q + 1), d(space.q + 1);
  laguerre_all(space.q, space.beta, z - space.L, LaguerreKind::Function, v.data(), d.data());
  double s = 0.0;
  for (int j = 0; j <= space.q; ++j) s += c[space.lag(j)] * v[j];
  return s;
}

Traces interface_traces(const Space& space, const Eigen::VectorXd& c) {
  Traces t{0.0, 0.0, 0.0, 0.0};
  const int m = space.N - 1;
  std::vector<double> v(space.p + 1), d(space.p + 1);
  element_basis_ref(space.p, 1.0, v.data(), d.data());
  for (int l = 0; l <= space.p; ++l) {
    t.left_value += c[space.dg(m, l)] * v[l];
    t.left_slope += c[space.dg(m, l)] * d[l] * 2.0 / space.dz(m);
  }
  for (int j = 0; j < space.nlag(); ++j) {
    t.right_value += c[space.lag(j)];
    t.right_slope += c[space.lag(j)] * (-space.beta * (j + 0.5));
  }
  return t;
}

namespace {

struct NormAccumulator {
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
  void add(double v, double w) {
    l1 += std::abs(v) * w;
    l2 += v * v * w;
    linf = std::max(linf, std::abs(v));
  }
};

// Visits every Gauss point of [0, L] with its weight.
template <class F>
void for_each_gauss_point(const Space& space, int ng, F&& f) {
  QuadRule g = gauss_legendre_rule(ng);
  for (int m = 0; m < space.N; ++m) {
    double h = 0.5 * space.dz(m);
    for (int k = 0; k < ng; ++k) f(m, g.nodes[k], space.mesh.center(m) + h * g.nodes[k], h * g.weights[k]);
  }
}

double pick(const NormAccumulator& a, NormKind kind) {
  switch (kind) {
    case NormKind::L1: return a.l1;
    case NormKind::L2: return std::sqrt(a.l2);
    case NormKind::Linf: return a.linf;
  }
  throw std::invalid_argument("invalid norm");
}

int default_ng(const Space& space, int ng) { return ng > 0 ? ng : space.p + 2; }

}  // namespace

double discrete_norm(const Space& space, const std::function<double(double)>& f, NormKind kind, int ng) {
  NormAccumulator acc;
  for_each_gauss_point(space, default_ng(space, ng), [&](int, double, double z, double w) { acc.add(f(z), w); });
  return pick(acc, kind);
}

double discrete_norm(const Space& space, const Eigen::VectorXd& c, NormKind kind, int ng) {
  NormAccumulator acc;
  std::vector<double> v(space.p + 1), d(space.p + 1);
  for_each_gauss_point(space, default_ng(space, ng), [&](int m, double xi, double, double w) {
    element_basis_ref(space.p, xi, v.data(), d.data());
    double s = 0.0;
    for (int l = 0; l <= space.p; ++l) s += c[space.dg(m, l)] * v[l];
    acc.add(s, w);
  });
  return pick(acc, kind);
}

NormReport error_report(const Space& space, const Eigen::VectorXd& c,
                        const std::function<double(double)>& reference, bool relative, int ng) {
  ng = default_ng(space, ng);
  NormAccumulator err, ref;
  std::vector<double> v(space.p + 1), d(space.p + 1);
  for_each_gauss_point(space, ng, [&](int m, double xi, double z, double w) {
    element_basis_ref(space.p, xi, v.data(), d.data());
    double s = 0.0;
    for (int l = 0; l <= space.p; ++l) s += c[space.dg(m, l)] * v[l];
    double r = reference(z);
    err.add(s - r, w);
    ref.add(r, w);
  });
  NormReport rep;
  rep.ng = ng;
  rep.relative = relative;
  rep.l1 = pick(err, NormKind::L1);
  rep.l2 = pick(err, NormKind::L2);
  rep.linf = pick(err, NormKind::Linf);
  if (relative) {
    rep.l1 /= pick(ref, NormKind::L1);
    rep.l2 /= pick(ref, NormKind::L2);
    rep.linf /= pick(ref, NormKind::Linf);
  }
  return rep;
}

double match_beta(double dz, int q) {
  if (!(dz > 0) || q < 1) throw std::invalid_argument("match_beta needs dz > 0 and q >= 1");
  // GLR nodes scale as 1/beta, so the gap at beta = 1 fixes beta directly.
  QuadRule r = laguerre_rule(Family::GLR, 1.0, q);
  return (r.nodes[1] - r.nodes[0]) / dz;
}

}  // namespace xdg
