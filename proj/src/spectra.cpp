#include "xdg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "xdg/operator.hpp"
#include "xdg/space.hpp"

namespace xdg {

double Spectrum::max_real() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& l : eigenvalues) m = std::max(m, l.real());
  return m;
}

Eigen::MatrixXd balance(const Eigen::MatrixXd& A) {
  Eigen::MatrixXd B = A;
  const int n = static_cast<int>(B.rows());
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(B(j, i));
        r += std::abs(B(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / 2.0, f = 1.0, s = c + r;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c > g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        B.row(i) /= f;
        B.col(i) *= f;
      }
    }
  }
  return B;
}

Spectrum eigenvalues(const Eigen::MatrixXd& A, bool certify) {
  if (A.rows() != A.cols()) throw std::invalid_argument("eigenvalues needs a square matrix");
  if (!A.allFinite()) throw std::invalid_argument("eigenvalues needs finite entries");
  Spectrum s;
  s.norm = A.cwiseAbs().rowwise().sum().maxCoeff();
  if (A.rows() == 0) return s;
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, certify);
  if (es.info() != Eigen::Success) throw std::runtime_error("QR iteration did not converge");
  const auto& ev = es.eigenvalues();
  s.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  if (certify) {
    Eigen::MatrixXcd V = es.eigenvectors();
    Eigen::MatrixXcd Ac = A.cast<std::complex<double>>();
    for (int k = 0; k < V.cols(); ++k) {
      double r = (Ac * V.col(k) - ev[k] * V.col(k)).norm() / V.col(k).norm();
      s.max_residual = std::max(s.max_residual, r);
    }
  }
  return s;
}

Eigen::MatrixXd stability_matrix(int N, int p, int q, double sigma, double Pe, double mu,
                                 const CriticalDzOptions& opt) {
  Space space = build_space(opt.L, N, p, q, opt.beta);
  double u = Pe * mu;
  SpMat A = assemble_diffusion(space, mu, sigma);
  if (opt.model == StabilityModel::VolumeOnly)
    A -= assemble_advection_volume(space, u);
  else
    A += assemble_linear_advection(space, u);
  return Eigen::MatrixXd(A);
}

bool is_stable(const Eigen::MatrixXd& A, double threshold, double* max_re) {
  Spectrum s = eigenvalues(A, false);
  double m = s.max_real();
  if (max_re) *max_re = m;
  return m <= threshold * s.norm;
}

CriticalDz critical_dz(int p, int q, double sigma, double Pe, double mu, const CriticalDzOptions& opt) {
  if (!(Pe > 0)) throw std::invalid_argument("critical_dz needs Pe > 0");
  for (int N = 1; N <= opt.n_max; ++N) {
    double m;
    if (!is_stable(stability_matrix(N, p, q, sigma, Pe, mu, opt), opt.threshold, &m)) continue;
    CriticalDz r;
    r.N = N;
    r.dz = opt.L / N;
    r.max_re = m;
    for (int k = 1; k <= opt.probe; ++k)
      if (!is_stable(stability_matrix(N + k, p, q, sigma, Pe, mu, opt), opt.threshold)) r.monotone = false;
    return r;
  }
  std::ostringstream os;
  os << "no stable N <= " << opt.n_max << " for p=" << p << " q=" << q << " sigma=" << sigma
     << " Pe=" << Pe;
  throw NoStableResolution(os.str());
}

std::string AppendixVariant::name() const {
  std::string f = form == Form::Strong ? "strong" : form == Form::WeakNodal ? "nodal" : "modal";
  if (form == Form::WeakNodal) f += rule == Family::GL ? "-gl" : "-glr";
  f += kind == LaguerreKind::Function ? "-lf" : "-lp";
  f += bc == Boundary::Dirichlet ? "-dir" : "-neu";
  return f;
}

AppendixVariant AppendixVariant::parse(const std::string& name) {
  for (const auto& v : appendix_variants())
    if (v.name() == name) return v;
  throw std::invalid_argument("unknown appendix variant '" + name + "'");
}

std::vector<AppendixVariant> appendix_variants() {
  std::vector<AppendixVariant> out;
  for (LaguerreKind k : {LaguerreKind::Function, LaguerreKind::Polynomial}) {
    for (Boundary b : {Boundary::Neumann, Boundary::Dirichlet}) {
      out.push_back({Form::Strong, k, b, Family::GLR});
      out.push_back({Form::WeakNodal, k, b, Family::GLR});
      out.push_back({Form::WeakNodal, k, b, Family::GL});
      out.push_back({Form::WeakModal, k, b, Family::GLR});
    }
  }
  return out;
}

namespace {

// Lagrange basis at the nodes evaluated at z = 0.
Eigen::VectorXd lagrange_at_zero(const QuadRule& r, LaguerreKind kind) {
  const int n = r.size();
  Eigen::VectorXd h(n);
  for (int j = 0; j < n; ++j) {
    double v = 1.0;
    for (int k = 0; k < n; ++k)
      if (k != j) v *= -r.nodes[k] / (r.nodes[j] - r.nodes[k]);
    if (kind == LaguerreKind::Function) v *= std::exp(0.5 * r.beta * r.nodes[j]);
    h[j] = v;
  }
  return h;
}

}  // namespace

AppendixOperator appendix_operator(const AppendixVariant& v, double beta, double mu, double u, int M,
                                   double cL, double neumann_d, DiffFormula formula) {
  if (M < 0 || !(beta > 0)) throw std::invalid_argument("appendix operator needs M >= 0, beta > 0");
  if (v.form == Form::Strong && v.rule != Family::GLR)
    throw std::invalid_argument("collocation needs GLR nodes");
  AppendixOperator op;
  op.variant = v;
  op.beta = beta;
  op.mu = mu;
  op.u = u;
  op.M = M;
  const int n = M + 1;
  const bool fn = v.kind == LaguerreKind::Function;
  const bool dir = v.bc == Boundary::Dirichlet;
  const double dc = neumann_d * cL;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const Eigen::VectorXd e = Eigen::VectorXd::Ones(n);

  if (v.form == Form::WeakModal) {
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) L(i, j) = 1.0;
    double b2 = mu * beta * beta;
    if (fn) {
      L.diagonal().setConstant(0.5);
      if (dir) {
        op.A = -b2 * L.transpose() * L - u * beta * L;
        op.g = b2 * cL * L.transpose() * e + u * beta * cL * e;
      } else {
        op.A = -b2 * L * L.transpose() + u * beta * L.transpose();
        op.g = -mu * beta * dc * e;
      }
    } else {
      if (dir) {
        op.A = -b2 * L.transpose() * (L + I) - u * beta * (L + I);
        op.g = u * beta * cL * e;
      } else {
        op.A = -b2 * (L + I) * L.transpose() + u * beta * L.transpose();
        op.g = -mu * beta * dc * e;
      }
    }
    return op;
  }

  QuadRule rule = laguerre_rule(v.rule, beta, M);
  Eigen::MatrixXd D = diff_matrix(rule, v.kind, formula).entries;

  if (v.form == Form::Strong) {
    if (dir) {
      Eigen::MatrixXd D2 = D * D;
      op.A = mu * D2.bottomRightCorner(M, M) - u * D.bottomRightCorner(M, M);
      op.g = cL * (mu * D2.col(0).tail(M) - u * D.col(0).tail(M));
    } else {
      Eigen::MatrixXd D0 = D;
      D0.row(0).setZero();
      op.A = mu * D * D0 - u * D0;
      Eigen::VectorXd e1 = Eigen::VectorXd::Unit(n, 0);
      op.g = dc * (mu * D.col(0) - u * e1);
    }
    return op;
  }

  std::vector<double> w = fn ? rule.weights : rule.standard_weights();
  Eigen::VectorXd om = Eigen::Map<Eigen::VectorXd>(w.data(), n);
  Eigen::MatrixXd W = om.cwiseInverse().asDiagonal() * D.transpose() * om.asDiagonal();
  Eigen::VectorXd r = lagrange_at_zero(rule, v.kind).cwiseQuotient(om);
  if (fn) {
    if (dir) {
      op.A = -mu * D * W + u * W;
      op.g = cL * (-mu * D * r + u * r);
    } else {
      op.A = -mu * W * D - u * D;
      op.g = -mu * dc * r;
    }
  } else {
    if (dir) {
      op.A = -mu * D * W + mu * beta * D + u * W - u * beta * I;
      op.g = cL * (-mu * D * r + u * r);
    } else {
      op.A = -mu * W * D + mu * beta * D - u * D;
      op.g = -mu * dc * r;
    }
  }
  return op;
}

bool appendix_stable(const Eigen::MatrixXd& A, double* max_re) {
  Eigen::MatrixXd B = balance(A);
  Spectrum s = eigenvalues(B, false);
  double m = s.max_real();
  if (max_re) *max_re = m;
  return m <= 8.0 * std::numeric_limits<double>::epsilon() * s.norm;
}

bool BetaScan::all_stable() const {
  return std::all_of(points.begin(), points.end(), [](const StabilityPoint& p) { return p.stable; });
}

BetaScan beta_stability_scan(const AppendixVariant& v, double Pe, int q,
                             const std::vector<double>& beta_grid, double mu) {
  const double u = Pe * mu;
  auto stable_at = [&](double beta, double* m) {
    return appendix_stable(appendix_operator(v, beta, mu, u, q).A, m);
  };
  BetaScan scan;
  std::vector<double> grid = beta_grid;
  std::sort(grid.begin(), grid.end());
  for (double b : grid) {
    double m;
    bool st = stable_at(b, &m);
    scan.points.push_back({b, m, st});
  }
  for (size_t i = 0; i + 1 < scan.points.size(); ++i) {
    const auto& a = scan.points[i];
    const auto& b = scan.points[i + 1];
    if (a.stable == b.stable) continue;
    double lo = a.beta, hi = b.beta;
    for (int it = 0; it < 40; ++it) {
      double mid = std::sqrt(lo * hi);
      if (stable_at(mid, nullptr) == a.stable) lo = mid;
      else hi = mid;
    }
    if (a.stable) scan.upper = lo;
    else if (!scan.lower) scan.lower = hi;
  }
  return scan;
}

}  // namespace xdg
