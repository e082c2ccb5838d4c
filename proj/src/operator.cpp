#include "xdg/operator.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "xdg/quadrature.hpp"

namespace xdg {

Flux Flux::linear(double u) {
  return {[u](double c) { return u * c; }, [u](double) { return u; }};
}

Flux Flux::burgers() {
  return {[](double c) { return 0.5 * c * c; }, [](double c) { return c; }};
}

double rusanov(const Flux& flux, double cminus, double cplus) {
  double lam = std::max(std::abs(flux.df(cminus)), std::abs(flux.df(cplus)));
  return 0.5 * (flux.f(cplus) + flux.f(cminus)) - 0.5 * lam * (cplus - cminus);
}

Eigen::VectorXd mass_diagonal(const Space& space) {
  Eigen::VectorXd m(space.dofs());
  for (int e = 0; e < space.N; ++e)
    for (int l = 0; l <= space.p; ++l) m[space.dg(e, l)] = space.dz(e);
  for (int j = 0; j < space.nlag(); ++j) m[space.lag(j)] = 1.0 / space.beta;
  return m;
}

SpMat Operator::linear() const {
  SpMat M = A;
  if (advection.size()) M += advection;
  if (damping.size()) M += damping;
  return M;
}

namespace {

// Traces of the basis functions of one element (or the tail) at an edge.
struct Side {
  int offset = 0;
  std::vector<double> val;
  std::vector<double> slope;

  double value_of(const Eigen::VectorXd& c) const {
    double s = 0.0;
    for (size_t i = 0; i < val.size(); ++i) s += c[offset + i] * val[i];
    return s;
  }
};

struct Edge {
  std::optional<Side> left;
  std::optional<Side> right;
  double z;
  double h;
};

Side element_side(const Space& space, int m, double xi) {
  Side s;
  s.offset = space.dg(m, 0);
  s.val.resize(space.p + 1);
  s.slope.resize(space.p + 1);
  element_basis_ref(space.p, xi, s.val.data(), s.slope.data());
  for (double& d : s.slope) d *= 2.0 / space.dz(m);
  return s;
}

Side tail_side(const Space& space) {
  Side s;
  s.offset = space.lag(0);
  for (int j = 0; j <= space.q; ++j) {
    s.val.push_back(1.0);
    s.slope.push_back(-space.beta * (j + 0.5));
  }
  return s;
}

std::vector<Edge> edges(const Space& space) {
  std::vector<Edge> out;
  out.push_back({std::nullopt, element_side(space, 0, -1.0), 0.0, space.dz(0)});
  for (int m = 0; m + 1 < space.N; ++m)
    out.push_back({element_side(space, m, 1.0), element_side(space, m + 1, -1.0),
                   space.mesh.right(m), space.dz(m)});
  int last = space.N - 1;
  if (space.has_tail())
    out.push_back({element_side(space, last, 1.0), tail_side(space), space.L, space.dz(last)});
  else
    out.push_back({element_side(space, last, 1.0), std::nullopt, space.L, space.dz(last)});
  return out;
}

// Sparse vector over the global dofs, built from edge sides.
using Terms = std::vector<std::pair<int, double>>;

void append(Terms& t, const Side& s, const std::vector<double>& coef, double scale) {
  for (size_t i = 0; i < coef.size(); ++i) t.emplace_back(s.offset + static_cast<int>(i), scale * coef[i]);
}

void add_outer(std::vector<Eigen::Triplet<double>>& trip, const Terms& rows, const Terms& cols,
               double scale) {
  for (auto [i, a] : rows)
    for (auto [j, b] : cols) trip.emplace_back(i, j, scale * a * b);
}

SpMat finish(const Space& space, std::vector<Eigen::Triplet<double>>& trip, bool mass_scaled) {
  SpMat M(space.dofs(), space.dofs());
  M.setFromTriplets(trip.begin(), trip.end());
  if (mass_scaled) {
    Eigen::VectorXd inv = mass_diagonal(space).cwiseInverse();
    M = inv.asDiagonal() * M;
  }
  M.prune(0.0);
  return M;
}

struct TailSamples {
  std::vector<double> x;
  std::vector<double> w;
  Eigen::MatrixXd val;  // (mode, node)
  Eigen::MatrixXd der;
};

TailSamples tail_samples(const Space& space, int M) {
  QuadRule r = laguerre_rule(Family::GLR, space.beta, M);
  TailSamples t;
  t.x = r.nodes;
  t.w = r.weights;
  int n = r.size();
  t.val.resize(space.q + 1, n);
  t.der.resize(space.q + 1, n);
  std::vector<double> v(space.q + 1), d(space.q + 1);
  for (int k = 0; k < n; ++k) {
    laguerre_all(space.q, space.beta, r.nodes[k], LaguerreKind::Function, v.data(), d.data());
    for (int j = 0; j <= space.q; ++j) {
      t.val(j, k) = v[j];
      t.der(j, k) = d[j];
    }
  }
  return t;
}

struct ElementSamples {
  QuadRule g;
  Eigen::MatrixXd val;  // (mode, node)
  Eigen::MatrixXd der;  // derivative in xi
};

ElementSamples element_samples(int p, int ng) {
  ElementSamples e{gauss_legendre_rule(ng), Eigen::MatrixXd(p + 1, ng), Eigen::MatrixXd(p + 1, ng)};
  std::vector<double> v(p + 1), d(p + 1);
  for (int k = 0; k < ng; ++k) {
    element_basis_ref(p, e.g.nodes[k], v.data(), d.data());
    for (int l = 0; l <= p; ++l) {
      e.val(l, k) = v[l];
      e.der(l, k) = d[l];
    }
  }
  return e;
}

}  // namespace

SpMat assemble_diffusion(const Space& space, const Coefficient& mu, double sigma, double t,
                         bool mass_scaled) {
  if (sigma < 0) throw std::invalid_argument("penalty must be non-negative");
  std::vector<Eigen::Triplet<double>> trip;
  const int p = space.p;
  ElementSamples es = element_samples(p, p + 2);
  for (int m = 0; m < space.N; ++m) {
    double h = space.dz(m);
    double jac = 2.0 / h;
    for (int k = 0; k < es.g.size(); ++k) {
      double z = space.mesh.center(m) + 0.5 * h * es.g.nodes[k];
      double w = -mu(z, t) * es.g.weights[k] * 0.5 * h * jac * jac;
      if (w == 0.0) continue;
      for (int l = 0; l <= p; ++l)
        for (int i = 0; i <= p; ++i)
          trip.emplace_back(space.dg(m, l), space.dg(m, i), w * es.der(l, k) * es.der(i, k));
    }
  }
  if (space.has_tail()) {
    TailSamples ts = tail_samples(space, space.q);
    for (size_t k = 0; k < ts.x.size(); ++k) {
      double w = -mu(space.L + ts.x[k], t) * ts.w[k];
      if (w == 0.0) continue;
      for (int l = 0; l <= space.q; ++l)
        for (int i = 0; i <= space.q; ++i)
          trip.emplace_back(space.lag(l), space.lag(i), w * ts.der(l, k) * ts.der(i, k));
    }
  }
  for (const Edge& e : edges(space)) {
    double mue = mu(e.z, t);
    double half = e.left && e.right ? 0.5 : 1.0;
    Terms jump, avg;
    if (e.left) {
      append(jump, *e.left, e.left->val, 1.0);
      append(avg, *e.left, e.left->slope, half * mue);
    }
    if (e.right) {
      append(jump, *e.right, e.right->val, -1.0);
      append(avg, *e.right, e.right->slope, half * mue);
    }
    add_outer(trip, jump, avg, 1.0);
    add_outer(trip, avg, jump, 1.0);
    add_outer(trip, jump, jump, -sigma / e.h);
  }
  return finish(space, trip, mass_scaled);
}

SpMat assemble_diffusion(const Space& space, double mu, double sigma, bool mass_scaled) {
  return assemble_diffusion(space, [mu](double, double) { return mu; }, sigma, 0.0, mass_scaled);
}

namespace {

void advection_volume(const Space& space, double u, std::vector<Eigen::Triplet<double>>& trip) {
  const int p = space.p;
  ElementSamples es = element_samples(p, p + 2);
  for (int m = 0; m < space.N; ++m) {
    // The Jacobian of v' cancels the element half-width.
    for (int k = 0; k < es.g.size(); ++k) {
      double w = u * es.g.weights[k];
      for (int l = 0; l <= p; ++l)
        for (int i = 0; i <= p; ++i)
          trip.emplace_back(space.dg(m, l), space.dg(m, i), w * es.der(l, k) * es.val(i, k));
    }
  }
  if (space.has_tail()) {
    TailSamples ts = tail_samples(space, space.q);
    for (size_t k = 0; k < ts.x.size(); ++k) {
      double w = u * ts.w[k];
      for (int l = 0; l <= space.q; ++l)
        for (int i = 0; i <= space.q; ++i)
          trip.emplace_back(space.lag(l), space.lag(i), w * ts.der(l, k) * ts.val(i, k));
    }
  }
}

}  // namespace

SpMat assemble_advection_volume(const Space& space, double u, bool mass_scaled) {
  std::vector<Eigen::Triplet<double>> trip;
  advection_volume(space, u, trip);
  return finish(space, trip, mass_scaled);
}

SpMat assemble_linear_advection(const Space& space, double u, bool mass_scaled) {
  std::vector<Eigen::Triplet<double>> trip;
  advection_volume(space, u, trip);
  const double up = 0.5 * (u + std::abs(u));
  const double down = 0.5 * (u - std::abs(u));
  for (const Edge& e : edges(space)) {
    if (!e.left) continue;
    Terms jump, flux;
    append(jump, *e.left, e.left->val, 1.0);
    append(flux, *e.left, e.left->val, up);
    if (e.right) {
      append(jump, *e.right, e.right->val, -1.0);
      append(flux, *e.right, e.right->val, down);
    }
    add_outer(trip, jump, flux, -1.0);
  }
  return finish(space, trip, mass_scaled);
}

BoundaryVector assemble_dirichlet_vector(const Space& space, const Coefficient& mu, double sigma,
                                         const std::optional<Flux>& flux, ScalarFn g0) {
  Side s = element_side(space, 0, -1.0);
  double h = space.dz(0);
  Eigen::VectorXd inv = mass_diagonal(space).cwiseInverse();
  int n = space.dofs();
  return [=](double t) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
    double gv = g0(t);
    if (gv == 0.0) return g;
    double fg = flux ? flux->f(gv) : 0.0;
    double m0 = mu(0.0, t);
    for (size_t l = 0; l < s.val.size(); ++l)
      g[s.offset + l] = (m0 * s.slope[l] * gv + sigma / h * s.val[l] * gv + fg * s.val[l]) *
                        inv[s.offset + l];
    return g;
  };
}

Eigen::VectorXd eval_hyperbolic_rhs(const Space& space, const Eigen::VectorXd& c,
                                    const Flux& flux, const SourceFn& source,
                                    const ScalarFn& g0, double t) {
  Eigen::VectorXd r = Eigen::VectorXd::Zero(space.dofs());
  const int p = space.p;
  ElementSamples es = element_samples(p, p + 3);
  for (int m = 0; m < space.N; ++m) {
    for (int k = 0; k < es.g.size(); ++k) {
      double ch = 0.0;
      for (int i = 0; i <= p; ++i) ch += c[space.dg(m, i)] * es.val(i, k);
      double fw = flux.f(ch) * es.g.weights[k];
      for (int l = 0; l <= p; ++l) r[space.dg(m, l)] += fw * es.der(l, k);
    }
  }
  if (space.has_tail()) {
    TailSamples ts = tail_samples(space, 2 * space.q + 1);
    Eigen::VectorXd ch = ts.val.transpose() * c.tail(space.nlag());
    for (size_t k = 0; k < ts.x.size(); ++k) {
      double fw = flux.f(ch[k]) * ts.w[k];
      if (fw == 0.0) continue;
      r.tail(space.nlag()) += fw * ts.der.col(k);
    }
  }
  for (const Edge& e : edges(space)) {
    if (!e.left) continue;
    double cm = e.left->value_of(c);
    double cp = e.right ? e.right->value_of(c) : 0.0;
    if (!std::isfinite(cm) || !std::isfinite(cp))
      throw std::runtime_error("non-finite trace at z = " + std::to_string(e.z));
    double fh = rusanov(flux, cm, cp);
    for (size_t i = 0; i < e.left->val.size(); ++i) r[e.left->offset + i] -= fh * e.left->val[i];
    if (e.right)
      for (size_t i = 0; i < e.right->val.size(); ++i) r[e.right->offset + i] += fh * e.right->val[i];
  }
  if (g0) {
    Side s = element_side(space, 0, -1.0);
    double fg = flux.f(g0(t));
    for (size_t l = 0; l < s.val.size(); ++l) r[s.offset + l] += fg * s.val[l];
  }
  Eigen::VectorXd inv = mass_diagonal(space).cwiseInverse();
  r = r.cwiseProduct(inv);
  if (source) r += load_vector(space, [&](double z) { return source(z, t); });
  return r;
}

Eigen::VectorXd load_vector(const Space& space, const ScalarFn& f) {
  Eigen::VectorXd b = Eigen::VectorXd::Zero(space.dofs());
  const int p = space.p;
  ElementSamples es = element_samples(p, p + 6);
  for (int m = 0; m < space.N; ++m) {
    double h = space.dz(m);
    for (int k = 0; k < es.g.size(); ++k) {
      double fw = f(space.mesh.center(m) + 0.5 * h * es.g.nodes[k]) * es.g.weights[k] * 0.5;
      for (int l = 0; l <= p; ++l) b[space.dg(m, l)] += fw * es.val(l, k);
    }
  }
  if (space.has_tail()) {
    TailSamples ts = tail_samples(space, 2 * space.q + 1);
    for (size_t k = 0; k < ts.x.size(); ++k) {
      double fw = f(space.L + ts.x[k]) * ts.w[k] * space.beta;
      if (fw == 0.0) continue;
      b.tail(space.nlag()) += fw * ts.val.col(k);
    }
  }
  return b;
}

double DampingProfile::operator()(double z) const {
  return dgamma / (1.0 + std::exp((alpha * L0 - z + L) / sigma_d));
}

DampingProfile make_damping(const Space& space, double dgamma, double alpha, double sigma_d) {
  if (!space.has_tail()) throw std::invalid_argument("damping needs a Laguerre tail");
  QuadRule r = laguerre_rule(Family::GLR, space.beta, space.q);
  DampingProfile d;
  d.dgamma = dgamma;
  d.alpha = alpha;
  d.L0 = r.nodes.back() - r.nodes.front();
  d.sigma_d = sigma_d > 0 ? sigma_d : d.L0 / 18.0;
  d.L = space.L;
  return d;
}

SpMat assemble_damping(const Space& space, const DampingProfile& profile, bool mass_scaled) {
  std::vector<Eigen::Triplet<double>> trip;
  if (space.has_tail() && profile.dgamma != 0.0) {
    TailSamples ts = tail_samples(space, 2 * space.q + 1);
    for (size_t k = 0; k < ts.x.size(); ++k) {
      double w = -profile(space.L + ts.x[k]) * ts.w[k];
      if (w == 0.0) continue;
      for (int l = 0; l <= space.q; ++l)
        for (int i = 0; i <= space.q; ++i)
          trip.emplace_back(space.lag(l), space.lag(i), w * ts.val(l, k) * ts.val(i, k));
    }
  }
  return finish(space, trip, mass_scaled);
}

}  // namespace xdg
