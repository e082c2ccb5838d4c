#include "xdg/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace xdg {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

std::string CsvTable::str() const {
  std::ostringstream os;
  auto line = [&os](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

void CsvTable::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << str();
}

CsvTable solution_table(const Space& space, const Eigen::VectorXd& c, double plot_tail, int points) {
  CsvTable t{{"z", "c"}, {}};
  double zmax = space.L + (space.has_tail() ? plot_tail : 0.0);
  for (int i = 0; i < points; ++i) {
    double z = points > 1 ? zmax * i / (points - 1) : 0.0;
    t.rows.push_back({fmt(z), fmt(evaluate(space, c, z))});
  }
  return t;
}

CsvTable coefficient_table(const Space& space, const Eigen::VectorXd& c) {
  CsvTable t{{"index", "block", "element", "mode", "value"}, {}};
  for (int m = 0; m < space.N; ++m)
    for (int l = 0; l <= space.p; ++l) {
      int i = space.dg(m, l);
      t.rows.push_back({std::to_string(i), "dg", std::to_string(m), std::to_string(l), fmt(c[i])});
    }
  for (int j = 0; j < space.nlag(); ++j) {
    int i = space.lag(j);
    t.rows.push_back({std::to_string(i), "lag", "", std::to_string(j), fmt(c[i])});
  }
  return t;
}

CsvTable rule_table(const QuadRule& rule) {
  CsvTable t{{"index", "node", "weight"}, {}};
  for (int j = 0; j < rule.size(); ++j)
    t.rows.push_back({std::to_string(j), fmt(rule.nodes[j]), fmt(rule.weights[j])});
  return t;
}

CsvTable triplet_table(const Eigen::SparseMatrix<double>& M) {
  CsvTable t{{"row", "col", "value"}, {}};
  for (int k = 0; k < M.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(M, k); it; ++it)
      t.rows.push_back({std::to_string(it.row()), std::to_string(it.col()), fmt(it.value())});
  return t;
}

}  // namespace xdg
