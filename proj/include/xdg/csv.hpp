#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "xdg/quadrature.hpp"
#include "xdg/space.hpp"

namespace xdg {

// Scientific notation with 6 significant digits.
std::string fmt(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const;
  void write(const std::string& path) const;
};

CsvTable solution_table(const Space& space, const Eigen::VectorXd& c, double plot_tail, int points);
CsvTable coefficient_table(const Space& space, const Eigen::VectorXd& c);
CsvTable rule_table(const QuadRule& rule);
CsvTable triplet_table(const Eigen::SparseMatrix<double>& M);

}  // namespace xdg
