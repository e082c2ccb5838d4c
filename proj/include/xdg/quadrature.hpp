#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "xdg/basis.hpp"

namespace xdg {

enum class Family { GaussLegendre, GL, GLR };

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  Family family = Family::GaussLegendre;
  double beta = 1.0;
  // Laguerre rules carry weights that already absorb exp(-beta x).
  bool modified = false;

  int size() const { return static_cast<int>(nodes.size()); }
  // Weights for integrals of the form int exp(-beta x) P(x) dx.
  std::vector<double> standard_weights() const;
};

class RootFindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

QuadRule gauss_legendre_rule(int n);
QuadRule laguerre_rule(Family family, double beta, int M);

// Zeros of the generalized Laguerre polynomial L^(alpha)_n, ascending.
std::vector<double> laguerre_zeros(int n, double alpha);

// Tabulated follows the closed forms used by the appendix operators; for GL
// nodes they are not an exact differentiation, Exact is the Lagrange form.
enum class DiffFormula { Tabulated, Exact };

struct DiffMatrix {
  Eigen::MatrixXd entries;
  Family family;
  LaguerreKind kind;
  double beta;
};

DiffMatrix diff_matrix(const QuadRule& rule, LaguerreKind kind,
                       DiffFormula formula = DiffFormula::Tabulated);

}  // namespace xdg
