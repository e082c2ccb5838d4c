#include "xdg/timestep.hpp"

#include <chrono>
#include <cmath>
#include <string>

namespace xdg {

Eigen::VectorXd solve_dense(const Eigen::MatrixXd& M, const Eigen::VectorXd& rhs) {
  if (M.rows() != M.cols() || M.rows() != rhs.size())
    throw std::invalid_argument("solve_dense needs a square matrix and a conforming rhs");
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
  const auto& U = lu.matrixLU();
  double scale = M.cwiseAbs().maxCoeff();
  double pivot = scale;
  for (int i = 0; i < U.rows(); ++i) pivot = std::min(pivot, std::abs(U(i, i)));
  if (!(pivot > 1e-14 * scale))
    throw SingularMatrixError("matrix singular to working precision, pivot " + std::to_string(pivot),
                              pivot);
  return lu.solve(rhs);
}

Eigen::VectorXd System::explicit_part(const Eigen::VectorXd& c, double t) const {
  Eigen::VectorXd r = Eigen::VectorXd::Zero(c.size());
  if (forcing) r += forcing(t);
  if (nonlinear) r += nonlinear(c, t);
  return r;
}

namespace {
const double kGamma = 1.0 - 1.0 / std::sqrt(2.0);

void check_finite(const Eigen::VectorXd& v, const char* where) {
  if (!v.allFinite()) throw NumericalFailure(std::string("non-finite state in ") + where, -1);
}
}  // namespace

Stepper::Stepper(const System& system, double dt, Scheme scheme, bool cache)
    : sys_(system), dt_(dt), scheme_(scheme), cache_(cache) {
  if (!(dt > 0)) throw std::invalid_argument("time step must be positive");
  if (scheme == Scheme::CrankNicolson && system.nonlinear)
    throw std::invalid_argument("Crank-Nicolson needs a fully linear system");
  coef_ = scheme == Scheme::CrankNicolson ? 0.5 * dt : kGamma * dt;
  if (cache_) lu_ = factor(coef_);
}

std::shared_ptr<Stepper::LU> Stepper::factor(double coef) const {
  const int n = static_cast<int>(sys_.linear.rows());
  SpMat I(n, n);
  I.setIdentity();
  SpMat K = I - coef * sys_.linear;
  K.makeCompressed();
  auto lu = std::make_shared<LU>();
  lu->compute(K);
  if (lu->info() != Eigen::Success)
    throw SingularMatrixError("sparse LU failed: " + lu->lastErrorMessage(), 0.0);
  return lu;
}

Eigen::VectorXd Stepper::solve(const std::shared_ptr<LU>& lu, double coef, const Eigen::VectorXd& b) const {
  if (lu) return lu->solve(b);
  return factor(coef)->solve(b);
}

State Stepper::step(const State& s) const {
  const double t = s.time;
  const Eigen::VectorXd& c = s.coeffs;
  State out;
  out.time = t + dt_;
  if (scheme_ == Scheme::CrankNicolson) {
    Eigen::VectorXd b = c + 0.5 * dt_ * (sys_.linear * c);
    if (sys_.forcing) b += 0.5 * dt_ * (sys_.forcing(t) + sys_.forcing(t + dt_));
    out.coeffs = solve(lu_, coef_, b);
  } else {
    Eigen::VectorXd u1 = solve(lu_, coef_, c);
    check_finite(u1, "IMEX stage 1");
    Eigen::VectorXd fe1 = sys_.explicit_part(u1, t);
    Eigen::VectorXd fi1 = sys_.linear * u1;
    Eigen::VectorXd u2 = solve(lu_, coef_, c + dt_ * fe1 + dt_ * (1.0 - 2.0 * kGamma) * fi1);
    check_finite(u2, "IMEX stage 2");
    Eigen::VectorXd fe2 = sys_.explicit_part(u2, t + dt_);
    Eigen::VectorXd fi2 = sys_.linear * u2;
    out.coeffs = c + 0.5 * dt_ * (fe1 + fe2 + fi1 + fi2);
  }
  return out;
}

State Stepper::startup_step(const State& s) const {
  if (scheme_ != Scheme::CrankNicolson) return step(s);
  const double h = 0.5 * dt_;
  State cur = s;
  for (int k = 0; k < 2; ++k) {
    Eigen::VectorXd b = cur.coeffs;
    if (sys_.forcing) b += h * sys_.forcing(cur.time + h);
    cur.coeffs = solve(lu_, coef_, b);
    cur.time += h;
  }
  return cur;
}

State crank_nicolson_step(const System& system, const State& s, double dt) {
  return Stepper(system, dt, Scheme::CrankNicolson).step(s);
}

State imex2_step(const System& system, const State& s, double dt) {
  return Stepper(system, dt, Scheme::IMEX2).step(s);
}

State run(const TimeLoop& loop, const System& system, const State& initial,
          const std::vector<Observer>& observers, RunLog* log) {
  State s = initial;
  s.time = loop.t0;
  if (loop.nsteps == 0) return s;
  using clock = std::chrono::steady_clock;
  auto t_start = clock::now();
  Stepper stepper(system, loop.dt, loop.scheme);
  auto t_factored = clock::now();
  auto notify = [&](int k) {
    for (const auto& o : observers) {
      if (o.every > 0 && k % o.every == 0) {
        o.fn(k, s);
        if (log) log->observed.emplace_back(k, s.time);
      }
    }
  };
  notify(0);
  for (int k = 1; k <= loop.nsteps; ++k) {
    s = k <= loop.startup ? stepper.startup_step(s) : stepper.step(s);
    // Accumulating dt drifts; pin the clock to t0 + k dt.
    s.time = loop.t0 + k * loop.dt;
    if (!s.coeffs.allFinite())
      throw NumericalFailure("non-finite state at step " + std::to_string(k), k);
    notify(k);
  }
  if (log) {
    log->factor_seconds = std::chrono::duration<double>(t_factored - t_start).count();
    log->step_seconds = std::chrono::duration<double>(clock::now() - t_factored).count();
  }
  return s;
}

}  // namespace xdg
