#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "xdg/space.hpp"

namespace xdg {

using SpMat = Eigen::SparseMatrix<double>;

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, double pivot)
      : std::runtime_error(what), pivot(pivot) {}
  double pivot;
};

class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, int step) : std::runtime_error(what), step(step) {}
  int step;
};

// LU with partial pivoting; throws when a pivot is negligible.
Eigen::VectorXd solve_dense(const Eigen::MatrixXd& M, const Eigen::VectorXd& rhs);

// dc/dt = linear c + forcing(t) + nonlinear(c, t).
struct System {
  SpMat linear;
  std::function<Eigen::VectorXd(double)> forcing;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)> nonlinear;

  Eigen::VectorXd explicit_part(const Eigen::VectorXd& c, double t) const;
};

enum class Scheme { CrankNicolson, IMEX2 };

struct TimeLoop {
  double dt = 0.0;
  int nsteps = 0;
  Scheme scheme = Scheme::CrankNicolson;
  double t0 = 0.0;
  // Leading Crank-Nicolson steps replaced by two backward Euler half steps each.
  int startup = 0;
};

// One integrator per (system, dt, scheme); the implicit matrix is factored once
// unless cache is false.
class Stepper {
 public:
  Stepper(const System& system, double dt, Scheme scheme, bool cache = true);

  State step(const State& s) const;
  State startup_step(const State& s) const;
  double dt() const { return dt_; }

 private:
  using LU = Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>>;
  std::shared_ptr<LU> factor(double coef) const;
  Eigen::VectorXd solve(const std::shared_ptr<LU>& lu, double coef, const Eigen::VectorXd& b) const;

  const System& sys_;
  double dt_;
  Scheme scheme_;
  bool cache_;
  std::shared_ptr<LU> lu_;
  double coef_;
};

State crank_nicolson_step(const System& system, const State& s, double dt);
State imex2_step(const System& system, const State& s, double dt);

struct Observer {
  int every = 1;
  std::function<void(int step, const State&)> fn;
};

struct RunLog {
  std::vector<std::pair<int, double>> observed;
  double factor_seconds = 0.0;
  double step_seconds = 0.0;
};

State run(const TimeLoop& loop, const System& system, const State& initial,
          const std::vector<Observer>& observers = {}, RunLog* log = nullptr);

}  // namespace xdg
