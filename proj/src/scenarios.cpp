#include "xdg/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xdg/spectra.hpp"

namespace xdg {

void Scenario::validate() const {
  if (!(L > 0) || N < 1 || p < 0 || q < 0) throw std::invalid_argument("invalid domain parameters");
  if (!(T > 0) || nsteps < 1) throw std::invalid_argument("invalid time parameters");
  if (!(mu > 0)) throw std::invalid_argument("viscosity must be positive");
  if (sigma < 0) throw std::invalid_argument("penalty must be non-negative");
  if (initial == InitialKind::Manufactured && equation != Equation::LinearAdvDiff)
    throw std::invalid_argument("manufactured solution needs the linear equation");
  if (reference == ReferenceKind::Exact && initial != InitialKind::Manufactured)
    throw std::invalid_argument("exact reference exists only for the manufactured solution");
  if (reference == ReferenceKind::SingleDomain && !(L_ref > L))
    throw std::invalid_argument("reference domain must extend beyond L");
  if (bc == BcKind::Sine && !(bc_A > 0 && bc_k > 0)) throw std::invalid_argument("sine data needs A, k > 0");
}

double Scenario::resolved_beta() const { return beta > 0 ? beta : match_beta(L / N, q); }

ManufacturedValue manufactured_eval(double z, double t, double mu, double u) {
  double e = std::exp(-z), S = std::sin(z - t), C = std::cos(z - t);
  double c = z * e * S * S;
  double ct = -2.0 * z * e * S * C;
  double cz = e * S * (S - z * S + 2.0 * z * C);
  double czz = (-e * S * S + 2.0 * e * S * C) + (-e * S * S + z * e * S * S - 2.0 * z * e * S * C) +
               (2.0 * e * S * C - 2.0 * z * e * S * C + 2.0 * z * e * (C * C - S * S));
  return {c, ct + u * cz - mu * czz};
}

Eigen::VectorXd project_initial(const Space& space, const ScalarFn& c0) { return load_vector(space, c0); }

ScalarFn wave_train_bc(double A, double k, double T) {
  if (!(A > 0 && k > 0 && T > 0)) throw std::invalid_argument("wave train needs A, k, T > 0");
  return [=](double t) { return A * std::sin(2.0 * std::numbers::pi * k * t / T); };
}

double RunArtifacts::tail_share() const {
  return static_cast<double>(space.nlag()) / space.dofs();
}

namespace {

using clock = std::chrono::steady_clock;

double seconds_since(clock::time_point t0) {
  return std::chrono::duration<double>(clock::now() - t0).count();
}

ScalarFn boundary_data(const Scenario& sc) {
  switch (sc.bc) {
    case BcKind::Zero: return [](double) { return 0.0; };
    case BcKind::Constant: return [v = sc.bc_value](double) { return v; };
    case BcKind::Sine: return wave_train_bc(sc.bc_A, sc.bc_k, sc.T);
  }
  return {};
}

ScalarFn initial_data(const Scenario& sc) {
  switch (sc.initial) {
    case InitialKind::Zero: return [](double) { return 0.0; };
    case InitialKind::Gaussian:
      return [zc = sc.zc, s = sc.sigma_c](double z) {
        double a = (z - zc) / s;
        return std::exp(-a * a);
      };
    case InitialKind::Manufactured:
      return [mu = sc.mu, u = sc.u](double z) { return manufactured_eval(z, 0.0, mu, u).c; };
  }
  return {};
}

struct Assembled {
  Operator op;
  System sys;
};

Assembled assemble(const Scenario& sc, const Space& space) {
  Assembled a;
  Coefficient mu = [m = sc.mu](double, double) { return m; };
  ScalarFn g0 = boundary_data(sc);
  a.op.mass = mass_diagonal(space);
  a.op.A = assemble_diffusion(space, mu, sc.sigma, 0.0);
  if (sc.damping && space.has_tail())
    a.op.damping = assemble_damping(space, make_damping(space, sc.damping->dgamma, sc.damping->alpha,
                                                        sc.damping->sigma_d));
  if (sc.equation == Equation::LinearAdvDiff) {
    a.op.advection = assemble_linear_advection(space, sc.u);
    a.op.g = assemble_dirichlet_vector(space, mu, sc.sigma, Flux::linear(sc.u), g0);
    a.sys.linear = a.op.linear();
    BoundaryVector g = a.op.g;
    if (sc.initial == InitialKind::Manufactured) {
      double m = sc.mu, u = sc.u;
      a.sys.forcing = [space, g, m, u](double t) {
        Eigen::VectorXd f = load_vector(space, [&](double z) { return manufactured_eval(z, t, m, u).s; });
        return Eigen::VectorXd(f + g(t));
      };
    } else {
      a.sys.forcing = g;
    }
  } else {
    a.op.g = assemble_dirichlet_vector(space, mu, sc.sigma, std::nullopt, g0);
    Flux flux = Flux::burgers();
    a.op.rhs = [space, flux, g0](const Eigen::VectorXd& c, double t) {
      return eval_hyperbolic_rhs(space, c, flux, SourceFn{}, g0, t);
    };
    a.sys.linear = a.op.linear();
    a.sys.forcing = a.op.g;
    a.sys.nonlinear = a.op.rhs;
  }
  return a;
}

double tail_wall_share(const SpMat& M, const Space& space, const Eigen::VectorXd& c) {
  Eigen::SparseMatrix<double, Eigen::RowMajor> R = M;
  const int ndg = space.ndg(), nlag = space.nlag();
  const int reps = std::max(20, 2000000 / std::max<int>(1, static_cast<int>(R.nonZeros())));
  Eigen::VectorXd y(space.dofs());
  double t_dg = 0.0, t_tail = 0.0;
  for (int r = 0; r < reps; ++r) {
    auto t0 = clock::now();
    y.head(ndg).noalias() = R.topRows(ndg) * c;
    t_dg += seconds_since(t0);
    t0 = clock::now();
    y.tail(nlag).noalias() = R.bottomRows(nlag) * c;
    t_tail += seconds_since(t0);
  }
  return t_tail / (t_dg + t_tail);
}

RunArtifacts integrate(const Scenario& sc, const Space& space, int snapshot_every) {
  RunArtifacts art;
  art.scenario = sc;
  art.space = space;
  auto t0 = clock::now();
  Assembled a = assemble(sc, space);
  State init{project_initial(space, initial_data(sc)), 0.0};
  art.timings.assembly = seconds_since(t0);

  TimeLoop loop;
  loop.dt = sc.dt();
  loop.nsteps = sc.nsteps;
  loop.scheme = sc.equation == Equation::LinearAdvDiff ? Scheme::CrankNicolson : Scheme::IMEX2;
  loop.startup = sc.startup;
  std::vector<Observer> obs;
  if (snapshot_every > 0)
    obs.push_back({snapshot_every, [&art](int, const State& s) { art.snapshots.push_back(s); }});
  RunLog log;
  art.final = run(loop, a.sys, init, obs, &log);
  art.timings.factorization = log.factor_seconds;
  art.timings.stepping = log.step_seconds;
  if (space.has_tail()) art.timings.tail_wall_share = tail_wall_share(a.sys.linear, space, art.final.coeffs);
  return art;
}

}  // namespace

RunArtifacts reference_run(const Scenario& sc) {
  sc.validate();
  if (!(sc.L_ref > sc.L)) throw std::invalid_argument("reference run needs L_ref > L");
  double dz = sc.L / sc.N;
  int nref = static_cast<int>(std::lround(sc.L_ref / dz));
  Space space = build_dg_space(nref * dz, nref, sc.p);
  Scenario ref = sc;
  ref.damping.reset();
  return integrate(ref, space, 0);
}

RunArtifacts run_scenario(const Scenario& sc, int snapshot_every) {
  sc.validate();
  Space space = build_space(sc.L, sc.N, sc.p, sc.q, sc.resolved_beta());
  RunArtifacts art = integrate(sc, space, snapshot_every);

  std::function<double(double)> ref;
  if (sc.reference == ReferenceKind::Exact) {
    ref = [&sc](double z) { return manufactured_eval(z, sc.T, sc.mu, sc.u).c; };
  } else if (sc.reference == ReferenceKind::SingleDomain) {
    auto t0 = clock::now();
    RunArtifacts r = reference_run(sc);
    art.timings.reference = seconds_since(t0);
    art.ref_space = r.space;
    art.ref_final = r.final;
    ref = [rs = r.space, rc = r.final.coeffs](double z) { return evaluate(rs, rc, z); };
  } else if (sc.reference == ReferenceKind::Zero) {
    ref = [](double) { return 0.0; };
  }
  if (ref) {
    art.absolute = error_report(art.space, art.final.coeffs, ref, false, sc.ng);
    if (sc.reference != ReferenceKind::Zero)
      art.relative = error_report(art.space, art.final.coeffs, ref, true, sc.ng);
  }
  return art;
}

std::optional<double> linear_max_real(const Scenario& sc, int max_dofs) {
  sc.validate();
  Space space = build_space(sc.L, sc.N, sc.p, sc.q, sc.resolved_beta());
  if (space.dofs() > max_dofs) return std::nullopt;
  Eigen::MatrixXd A = Eigen::MatrixXd(assemble(sc, space).sys.linear);
  return eigenvalues(A, false).max_real();
}

}  // namespace xdg
