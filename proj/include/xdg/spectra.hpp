#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "xdg/basis.hpp"
#include "xdg/quadrature.hpp"

namespace xdg {

struct Spectrum {
  std::vector<std::complex<double>> eigenvalues;
  // max_k |A v_k - lambda_k v_k| / |v_k|; zero when not certified.
  double max_residual = 0.0;
  // Infinity norm of the analysed matrix.
  double norm = 0.0;

  double max_real() const;
};

// Diagonal similarity by powers of two that equalizes row and column norms.
Eigen::MatrixXd balance(const Eigen::MatrixXd& A);

Spectrum eigenvalues(const Eigen::MatrixXd& A, bool certify = true);

// VolumeOnly pairs the SIPG diffusion matrix with the negated element volume
// advection term and no edge fluxes; Consistent is the full upwind operator.
enum class StabilityModel { VolumeOnly, Consistent };

struct CriticalDzOptions {
  int n_max = 100;
  StabilityModel model = StabilityModel::VolumeOnly;
  double threshold = 1e-9;
  double L = 1.0;
  double beta = 1.0;
  int probe = 5;
};

struct CriticalDz {
  int N = 0;
  double dz = 0.0;
  double max_re = 0.0;
  // N+1 .. N+probe stable as well.
  bool monotone = true;
};

class NoStableResolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Eigen::MatrixXd stability_matrix(int N, int p, int q, double sigma, double Pe, double mu,
                                 const CriticalDzOptions& opt = {});
bool is_stable(const Eigen::MatrixXd& A, double threshold, double* max_re = nullptr);
CriticalDz critical_dz(int p, int q, double sigma, double Pe, double mu = 1.0,
                       const CriticalDzOptions& opt = {});

enum class Form { Strong, WeakNodal, WeakModal };
enum class Boundary { Dirichlet, Neumann };

struct AppendixVariant {
  Form form = Form::WeakModal;
  LaguerreKind kind = LaguerreKind::Function;
  Boundary bc = Boundary::Dirichlet;
  Family rule = Family::GLR;

  std::string name() const;
  static AppendixVariant parse(const std::string& name);
};

// All rows of the operator table, nodal forms once per rule.
std::vector<AppendixVariant> appendix_variants();

struct AppendixOperator {
  AppendixVariant variant;
  double beta = 1.0;
  double mu = 1.0;
  double u = 0.0;
  int M = 0;
  Eigen::MatrixXd A;
  Eigen::VectorXd g;
};

// cL is the Dirichlet datum, neumann_d the factor D of the Neumann datum D cL.
AppendixOperator appendix_operator(const AppendixVariant& v, double beta, double mu, double u, int M,
                                   double cL = 1.0, double neumann_d = 1.0,
                                   DiffFormula formula = DiffFormula::Tabulated);

// Balanced spectrum with max Re lambda <= 8 eps |B|_inf counted as stable.
bool appendix_stable(const Eigen::MatrixXd& A, double* max_re = nullptr);

struct StabilityPoint {
  double beta;
  double max_re;
  bool stable;
};

struct BetaScan {
  std::vector<StabilityPoint> points;
  // Smallest stable beta above an unstable range and largest stable beta below one.
  std::optional<double> lower;
  std::optional<double> upper;

  bool all_stable() const;
};

BetaScan beta_stability_scan(const AppendixVariant& v, double Pe, int q,
                             const std::vector<double>& beta_grid, double mu = 1.0);

}  // namespace xdg
