#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "xdg/csv.hpp"
#include "xdg/scenarios.hpp"

namespace xdg {

// Built-in recipes. Scenario builders take the parameters that vary between
// table rows; everything else is fixed per table.
Scenario manufactured_scenario(int q, double beta);
Scenario peclet_scenario(double Pe);
Scenario gaussian_coupling_scenario(int q, double beta, double sigma_c);
Scenario burgers_coupling_scenario(int N, int q, double beta);
Scenario damped_gaussian_scenario(int q, int N, int nsteps, double beta);
// N = 20 k; the damping amplitude is 2A.
Scenario wave_train_scenario(double A, int k, int q, double beta);
Scenario burgers_damping_scenario(int q, double beta);

// Scenario rows of t2..t9 in table order.
std::vector<Scenario> table_scenarios(const std::string& id);

struct CriticalCell {
  double sigma;
  int q;
  int p;
  double Pe;
  int N;
};
std::vector<CriticalCell> critical_cells();

struct AppendixBound {
  std::string variant;
  // Multiples of Pe; negative when the side is unbounded.
  double lower;
  double upper;
};
std::vector<AppendixBound> appendix_bounds();
std::vector<double> appendix_beta_grid(double Pe);

class UnknownTable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TableOutput {
  std::string id;
  CsvTable result;
  CsvTable expected;
};

std::vector<std::string> table_ids();
// progress, when set, receives one line per finished row.
TableOutput make_table(const std::string& id,
                       const std::function<void(const std::string&)>& progress = {});

}  // namespace xdg
