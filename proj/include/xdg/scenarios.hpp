#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "xdg/operator.hpp"
#include "xdg/space.hpp"
#include "xdg/timestep.hpp"

namespace xdg {

enum class Equation { LinearAdvDiff, Burgers };
enum class BcKind { Zero, Constant, Sine };
enum class InitialKind { Zero, Gaussian, Manufactured };
enum class ReferenceKind { None, Exact, SingleDomain, Zero };

struct DampingSpec {
  double dgamma = 0.0;
  double alpha = 0.3;
  // <= 0 selects L0/18.
  double sigma_d = 0.0;
};

struct Scenario {
  std::string name;
  Equation equation = Equation::LinearAdvDiff;
  double mu = 1.0;
  double u = 0.0;
  double L = 1.0;
  int N = 1;
  int p = 2;
  int q = 0;
  // <= 0 selects match_beta(L/N, q).
  double beta = 0.0;
  double sigma = 200.0;
  double T = 1.0;
  int nsteps = 1;
  int startup = 0;
  BcKind bc = BcKind::Zero;
  double bc_value = 0.0;
  double bc_A = 0.0;
  double bc_k = 0.0;
  InitialKind initial = InitialKind::Zero;
  double zc = 0.0;
  double sigma_c = 1.0;
  std::optional<DampingSpec> damping;
  ReferenceKind reference = ReferenceKind::None;
  double L_ref = 0.0;
  int ng = 0;

  void validate() const;
  double resolved_beta() const;
  double dt() const { return T / nsteps; }
};

struct ManufacturedValue {
  double c;
  double s;
};

// c = z exp(-z) sin^2(z - t) and s = c_t + u c_z - mu c_zz.
ManufacturedValue manufactured_eval(double z, double t, double mu, double u);

Eigen::VectorXd project_initial(const Space& space, const ScalarFn& c0);

ScalarFn wave_train_bc(double A, double k, double T);

struct Timings {
  double assembly = 0.0;
  double factorization = 0.0;
  double stepping = 0.0;
  double reference = 0.0;
  // Measured share of one operator application spent on Laguerre rows.
  double tail_wall_share = 0.0;
};

struct RunArtifacts {
  Scenario scenario;
  Space space;
  State final;
  std::vector<State> snapshots;
  std::optional<NormReport> absolute;
  std::optional<NormReport> relative;
  std::optional<Space> ref_space;
  std::optional<State> ref_final;
  Timings timings;

  // Laguerre share of the unknowns, identical to its share of dof-steps.
  double tail_share() const;
};

// snapshot_every > 0 keeps every such state, including the initial one.
RunArtifacts run_scenario(const Scenario& sc, int snapshot_every = 0);
// Pure DG on [0, L_ref] with the scenario's dz, p, sigma and dt.
RunArtifacts reference_run(const Scenario& sc);

// Max Re lambda of the linear part, for failure diagnostics; empty above max_dofs.
std::optional<double> linear_max_real(const Scenario& sc, int max_dofs = 3000);

}  // namespace xdg
