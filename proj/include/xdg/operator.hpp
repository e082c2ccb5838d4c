#pragma once

#include <functional>
#include <optional>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "xdg/space.hpp"

namespace xdg {

using SpMat = Eigen::SparseMatrix<double>;
using Coefficient = std::function<double(double z, double t)>;
using ScalarFn = std::function<double(double)>;
using BoundaryVector = std::function<Eigen::VectorXd(double t)>;
using SourceFn = std::function<double(double z, double t)>;

struct Flux {
  ScalarFn f;
  ScalarFn df;

  static Flux linear(double u);
  static Flux burgers();
};

// Rusanov flux with Lambda = max(|f'(c-)|, |f'(c+)|).
double rusanov(const Flux& flux, double cminus, double cplus);

// Diagonal of the mass matrix: dz per DG mode, 1/beta per Laguerre mode.
Eigen::VectorXd mass_diagonal(const Space& space);

// All assembled objects are left-multiplied by the inverse mass unless
// mass_scaled is false. z = 0 is an inflow boundary with weak Dirichlet data.
// A space without tail gets weak homogeneous Dirichlet data at z = L.
SpMat assemble_diffusion(const Space& space, const Coefficient& mu, double sigma, double t,
                         bool mass_scaled = true);
SpMat assemble_diffusion(const Space& space, double mu, double sigma, bool mass_scaled = true);

// Volume term int u c v' plus upwind Rusanov fluxes on every edge but z = 0.
SpMat assemble_linear_advection(const Space& space, double u, bool mass_scaled = true);
// Only the element and tail volume terms int u c v'.
SpMat assemble_advection_volume(const Space& space, double u, bool mass_scaled = true);

// mu(0,t) phi'(0) g0 + sigma/dz phi(0) g0 [+ f(g0) phi(0) when a flux is given].
BoundaryVector assemble_dirichlet_vector(const Space& space, const Coefficient& mu, double sigma,
                                         const std::optional<Flux>& flux, ScalarFn g0);

// Mass-scaled -b(c, phi) plus source and inflow terms.
Eigen::VectorXd eval_hyperbolic_rhs(const Space& space, const Eigen::VectorXd& c,
                                    const Flux& flux, const SourceFn& source,
                                    const ScalarFn& g0, double t);

// Mass-scaled load vector int f phi; equals the L2 projection coefficients.
Eigen::VectorXd load_vector(const Space& space, const ScalarFn& f);

struct DampingProfile {
  double dgamma = 0.0;
  double alpha = 0.3;
  double sigma_d = 1.0;
  double L0 = 1.0;
  double L = 0.0;

  double operator()(double z) const;
};

// L0 is the span of the tail GLR nodes; sigma_d <= 0 selects L0/18.
DampingProfile make_damping(const Space& space, double dgamma, double alpha = 0.3,
                            double sigma_d = 0.0);
SpMat assemble_damping(const Space& space, const DampingProfile& profile, bool mass_scaled = true);

struct Operator {
  SpMat A;
  SpMat advection;
  SpMat damping;
  BoundaryVector g;
  // Nonlinear hyperbolic terms and sources; empty for fully linear problems.
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)> rhs;
  Eigen::VectorXd mass;

  SpMat linear() const;
};

}  // namespace xdg
