#include "xdg/tables.hpp"

#include <cmath>
#include <sstream>

#include "xdg/spectra.hpp"

namespace xdg {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string bound_str(const std::optional<double>& b, double Pe) {
  return b ? fmt(*b / Pe) : "none";
}

std::vector<std::string> norm_cols(const NormReport& r) { return {fmt(r.l2), fmt(r.l1), fmt(r.linf)}; }

struct ErrRow {
  std::vector<std::string> keys;
  double l2, l1, linf;
};

CsvTable err_table(std::vector<std::string> header, const std::vector<ErrRow>& rows) {
  header.insert(header.end(), {"l2", "l1", "linf"});
  CsvTable t{header, {}};
  for (const auto& r : rows) {
    auto row = r.keys;
    row.insert(row.end(), {fmt(r.l2), fmt(r.l1), fmt(r.linf)});
    t.rows.push_back(row);
  }
  return t;
}

Scenario base_linear(std::string name) {
  Scenario s;
  s.name = std::move(name);
  s.mu = 1.0;
  s.u = 1.0;
  return s;
}

}  // namespace

Scenario manufactured_scenario(int q, double beta) {
  Scenario s = base_linear("manufactured");
  s.L = 2.0;
  s.N = 100;
  s.p = 2;
  s.q = q;
  s.beta = beta;
  s.T = 10.0;
  s.nsteps = 2000;
  s.startup = 2;
  s.initial = InitialKind::Manufactured;
  s.reference = ReferenceKind::Exact;
  return s;
}

Scenario peclet_scenario(double Pe) {
  Scenario s = manufactured_scenario(180, 1.0);
  s.name = "peclet";
  s.u = 2.0 * Pe * s.mu;
  s.nsteps = 200;
  s.startup = 0;
  return s;
}

Scenario gaussian_coupling_scenario(int q, double beta, double sigma_c) {
  Scenario s = base_linear("gaussian-coupling");
  s.L = 10.0;
  s.N = 500;
  s.p = 2;
  s.q = q;
  s.beta = beta;
  s.T = 4.0;
  s.nsteps = 200;
  s.initial = InitialKind::Gaussian;
  s.zc = 8.0;
  s.sigma_c = sigma_c;
  s.reference = ReferenceKind::SingleDomain;
  s.L_ref = 50.0;
  return s;
}

Scenario burgers_coupling_scenario(int N, int q, double beta) {
  Scenario s;
  s.name = "burgers-coupling";
  s.equation = Equation::Burgers;
  s.mu = 0.05;
  s.L = 3.0;
  s.N = N;
  s.p = 2;
  s.q = q;
  s.beta = beta;
  s.T = 10.0;
  s.nsteps = 1000;
  s.initial = InitialKind::Gaussian;
  s.zc = 3.0;
  s.sigma_c = 1.0;
  s.reference = ReferenceKind::SingleDomain;
  s.L_ref = 10.0;
  return s;
}

Scenario damped_gaussian_scenario(int q, int N, int nsteps, double beta) {
  Scenario s = base_linear("damped-gaussian");
  s.L = 1000.0;
  s.N = N;
  s.p = 2;
  s.q = q;
  s.beta = beta;
  s.T = 500.0;
  s.nsteps = nsteps;
  s.initial = InitialKind::Gaussian;
  s.zc = 750.0;
  s.sigma_c = 50.0;
  s.damping = DampingSpec{1.0, 0.3, 0.0};
  s.reference = ReferenceKind::Zero;
  return s;
}

Scenario wave_train_scenario(double A, int k, int q, double beta) {
  Scenario s = base_linear("wave-train");
  s.L = 500.0;
  s.N = 20 * k;
  s.p = 1;
  s.q = q;
  s.beta = beta;
  s.T = 5000.0;
  s.nsteps = 16000;
  s.bc = BcKind::Sine;
  s.bc_A = A;
  s.bc_k = k;
  s.damping = DampingSpec{2.0 * A, 0.3, 0.0};
  s.reference = ReferenceKind::SingleDomain;
  s.L_ref = 1000.0;
  return s;
}

Scenario burgers_damping_scenario(int q, double beta) {
  Scenario s;
  s.name = "burgers-damping";
  s.equation = Equation::Burgers;
  s.mu = 0.05;
  s.L = 30.0;
  s.N = 30;
  s.p = 2;
  s.q = q;
  s.beta = beta;
  s.T = 3600.0;
  s.nsteps = 36000;
  s.initial = InitialKind::Gaussian;
  s.zc = 25.0;
  s.sigma_c = 1.0;
  s.damping = DampingSpec{2.0, 0.3, 0.0};
  s.reference = ReferenceKind::SingleDomain;
  s.L_ref = 100.0;
  return s;
}

namespace {

struct T2Row { int q; double beta, l2, l1, linf; };
const std::vector<T2Row> kT2 = {{5, 30, 5.40e-2, 5.43e-2, 7.93e-2},
                                {10, 16, 2.39e-3, 2.46e-3, 3.23e-3},
                                {20, 8, 3.30e-6, 4.14e-6, 2.86e-6},
                                {40, 4, 3.28e-6, 4.12e-6, 2.85e-6},
                                {80, 2, 3.28e-6, 4.12e-6, 2.85e-6}};

struct T3Row { double Pe, l2, l1, linf; };
const std::vector<T3Row> kT3 = {{0.001, 2.65e-4, 3.16e-4, 2.23e-4},
                                {10, 4.69e-5, 4.63e-5, 5.15e-5},
                                {100, 4.13e-6, 4.54e-6, 4.94e-6},
                                {500, 8.28e-6, 1.01e-5, 9.20e-6},
                                {1000, 3.81e-5, 4.50e-5, 3.83e-5}};

struct T4Row { int q; double beta, sigma_c, l2, l1, linf; };
const std::vector<T4Row> kT4 = {{10, 16, 1, 1.90e-2, 1.11e-2, 3.79e-2},
                                {10, 16, 2, 1.97e-2, 1.13e-2, 4.10e-2},
                                {10, 16, 0.5, 1.87e-2, 1.11e-2, 3.70e-2},
                                {40, 4, 1, 4.63e-9, 2.31e-9, 5.76e-8},
                                {40, 4, 2, 3.70e-9, 2.83e-9, 5.63e-9},
                                {40, 4, 0.5, 2.47e-9, 1.94e-9, 2.88e-9}};

struct T5Row { int N, q; double beta, l2, l1, linf; };
const std::vector<T5Row> kT5 = {{15, 10, 1.6, 1.98e-2, 7.80e-3, 4.07e-2},
                                {15, 20, 0.85, 2.51e-2, 1.04e-2, 5.03e-2},
                                {15, 40, 0.45, 2.65e-2, 1.17e-2, 5.17e-2},
                                {15, 80, 0.23, 2.62e-2, 1.18e-2, 5.07e-2},
                                {30, 10, 3.6, 6.81e-4, 4.60e-4, 9.18e-4},
                                {30, 30, 1.2, 5.62e-4, 3.82e-4, 7.59e-4},
                                {30, 60, 0.6, 6.36e-4, 4.31e-4, 7.96e-4},
                                {30, 100, 0.36, 6.76e-4, 4.61e-4, 8.77e-5}};

struct T6Row { int q, N, n; double bnum, bden, l2, l1, linf; };
const std::vector<T6Row> kT6 = {
    {40, 400, 600, 1, 28, 9.51e-5, 1.34e-4, 1.03e-4}, {30, 400, 600, 1, 21, 5.98e-6, 1.18e-5, 6.73e-6},
    {20, 400, 600, 2, 29, 2.58e-5, 4.25e-5, 2.70e-5}, {10, 400, 600, 2, 15, 1.85e-6, 6.84e-6, 1.28e-6},
    {5, 400, 600, 1, 4, 1.52e-6, 6.19e-6, 8.15e-7},   {30, 300, 450, 1, 28, 3.55e-4, 4.99e-4, 3.53e-4},
    {20, 300, 450, 1, 19, 2.59e-4, 3.63e-4, 2.59e-4}, {10, 300, 450, 1, 10, 5.00e-6, 1.18e-5, 4.59e-6},
    {5, 300, 450, 11, 60, 1.67e-6, 6.57e-6, 1.03e-6}, {20, 250, 375, 1, 23, 2.59e-4, 3.63e-4, 2.59e-4},
    {10, 250, 375, 1, 12, 5.00e-6, 1.18e-5, 4.59e-6}, {5, 250, 375, 1, 6, 1.67e-6, 6.57e-6, 1.03e-6},
    {10, 200, 300, 1, 15, 4.56e-5, 6.83e-5, 3.84e-5}, {5, 200, 300, 1, 7, 1.95e-6, 7.48e-6, 1.31e-6}};

struct WaveRow { double A; int k; double beta, l2, l1, linf; };
const std::vector<WaveRow> kT7 = {{0.025, 30, 0.286, 1.67e-6, 2.25e-5, 1.30e-7},
                                  {0.025, 60, 0.571, 1.10e-7, 1.18e-8, 1.31e-6},
                                  {0.05, 30, 0.286, 2.25e-6, 1.78e-7, 2.98e-5},
                                  {0.05, 60, 0.571, 2.55e-7, 2.11e-8, 3.23e-6},
                                  {0.1, 30, 0.286, 2.15e-6, 1.85e-7, 2.62e-5},
                                  {0.1, 60, 0.571, 4.74e-7, 3.92e-8, 5.99e-6}};
const std::vector<WaveRow> kT8 = {{0.025, 30, 0.74, 9.23e-5, 6.74e-6, 1.30e-3},
                                  {0.025, 60, 1.48, 7.57e-6, 7.57e-7, 5.74e-5},
                                  {0.05, 30, 0.74, 4.23e-5, 3.11e-6, 5.91e-4},
                                  {0.05, 60, 1.48, 1.01e-5, 1.03e-6, 7.73e-5},
                                  {0.1, 30, 0.74, 3.15e-5, 2.35e-6, 4.41e-4},
                                  {0.1, 60, 1.48, 1.36e-5, 1.44e-6, 9.93e-5}};

struct T9Row { int q; double beta, l2, l1, linf; };
const std::vector<T9Row> kT9 = {{60, 0.06, 2.25e-3, 1.15e-2, 5.54e-4},
                                {40, 0.09, 2.24e-3, 1.14e-2, 5.50e-4},
                                {20, 0.175, 2.17e-3, 1.10e-2, 5.34e-4},
                                {10, 0.34, 1.96e-3, 9.95e-3, 4.83e-4},
                                {5, 0.68, 1.54e-3, 7.76e-3, 3.84e-4}};

// Denominators for Pe = 100, 500, 1000.
struct T1Row { double sigma; int q, p, N[3]; };
const std::vector<T1Row> kT1 = {
    {200, 180, 3, {2, 4, 9}},   {200, 180, 2, {2, 8, 20}},  {200, 180, 1, {2, 9, 20}},
    {200, 90, 3, {2, 5, 13}},   {200, 90, 2, {2, 9, 21}},   {200, 90, 1, {2, 10, 21}},
    {200, 50, 3, {2, 6, 10}},   {200, 50, 2, {2, 10, 22}},  {200, 50, 1, {2, 10, 21}},
    {200, 20, 3, {2, 5, 8}},    {200, 20, 2, {2, 10, 22}},  {200, 20, 1, {2, 10, 21}},
    {20, 180, 3, {6, 21, 40}},  {20, 180, 2, {7, 35, 73}},  {20, 180, 1, {6, 30, 61}},
    {20, 90, 3, {5, 20, 34}},   {20, 90, 2, {7, 37, 75}},   {20, 90, 1, {5, 30, 61}},
    {20, 50, 3, {4, 18, 30}},   {20, 50, 2, {7, 37, 75}},   {20, 50, 1, {5, 30, 61}},
    {20, 20, 3, {5, 15, 27}},   {20, 20, 2, {8, 38, 76}},   {20, 20, 1, {7, 30, 61}}};

const double kPe[3] = {100, 500, 1000};

TableOutput scenario_table(const std::string& id, const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& keys,
                           const std::vector<Scenario>& scenarios, const std::vector<ErrRow>& expected,
                           bool absolute, const std::function<void(const std::string&)>& progress) {
  std::vector<ErrRow> got;
  for (size_t i = 0; i < scenarios.size(); ++i) {
    RunArtifacts r = run_scenario(scenarios[i]);
    const NormReport& e = absolute ? *r.absolute : *r.relative;
    got.push_back({keys[i], e.l2, e.l1, e.linf});
    if (progress) {
      std::string line = id;
      for (const auto& k : keys[i]) line += " " + k;
      for (const auto& c : norm_cols(e)) line += " " + c;
      progress(line);
    }
  }
  return {id, err_table(header, got), err_table(header, expected)};
}

}  // namespace

std::vector<Scenario> table_scenarios(const std::string& id) {
  std::vector<Scenario> out;
  if (id == "t2") {
    for (const auto& r : kT2) out.push_back(manufactured_scenario(r.q, r.beta));
  } else if (id == "t3") {
    for (const auto& r : kT3) out.push_back(peclet_scenario(r.Pe));
  } else if (id == "t4") {
    for (const auto& r : kT4) out.push_back(gaussian_coupling_scenario(r.q, r.beta, r.sigma_c));
  } else if (id == "t5") {
    for (const auto& r : kT5) out.push_back(burgers_coupling_scenario(r.N, r.q, r.beta));
  } else if (id == "t6") {
    for (const auto& r : kT6) out.push_back(damped_gaussian_scenario(r.q, r.N, r.n, r.bnum / r.bden));
  } else if (id == "t7") {
    for (const auto& r : kT7) out.push_back(wave_train_scenario(r.A, r.k, 15, r.beta));
  } else if (id == "t8") {
    for (const auto& r : kT8) out.push_back(wave_train_scenario(r.A, r.k, 5, r.beta));
  } else if (id == "t9") {
    for (const auto& r : kT9) out.push_back(burgers_damping_scenario(r.q, r.beta));
  } else {
    throw UnknownTable("no scenario rows for table '" + id + "'");
  }
  return out;
}

std::vector<CriticalCell> critical_cells() {
  std::vector<CriticalCell> out;
  for (const auto& r : kT1)
    for (int j = 0; j < 3; ++j) out.push_back({r.sigma, r.q, r.p, kPe[j], r.N[j]});
  return out;
}

std::vector<AppendixBound> appendix_bounds() {
  const double none = -1.0;
  return {{"strong-lf-neu", none, none},       {"strong-lf-dir", none, none},
          {"strong-lp-neu", none, 2.6},        {"strong-lp-dir", none, 3.0},
          {"nodal-glr-lf-neu", 0.58, none},    {"nodal-glr-lf-dir", none, none},
          {"nodal-glr-lp-neu", 0.017, 2.83},   {"nodal-glr-lp-dir", none, 3.0},
          {"nodal-gl-lf-neu", 2.0, none},      {"nodal-gl-lf-dir", none, none},
          {"nodal-gl-lp-neu", 0.25, 2.0},      {"nodal-gl-lp-dir", none, 8.5},
          {"modal-lf-neu", 0.58, none},        {"modal-lf-dir", none, none},
          {"modal-lp-neu", 0.017, 2.83},       {"modal-lp-dir", none, 3.0}};
}

std::vector<double> appendix_beta_grid(double Pe) {
  std::vector<double> g;
  for (int i = -30; i <= 30; ++i) g.push_back(Pe * std::pow(10.0, i / 10.0));
  return g;
}

std::vector<std::string> table_ids() { return {"t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9", "a2"}; }

TableOutput make_table(const std::string& id, const std::function<void(const std::string&)>& progress) {
  if (id == "t1") {
    CsvTable res{{"p", "q", "sigma", "Pe", "dz_cr"}, {}};
    CsvTable exp = res;
    for (const auto& c : critical_cells()) {
      std::vector<std::string> key{num(c.p), num(c.q), num(c.sigma), num(c.Pe)};
      std::string got;
      try {
        got = fmt(critical_dz(c.p, c.q, c.sigma, c.Pe).dz);
      } catch (const NoStableResolution&) {
        got = "none";
      }
      auto r = key;
      r.push_back(got);
      res.rows.push_back(r);
      key.push_back(fmt(1.0 / c.N));
      exp.rows.push_back(key);
      if (progress) progress("t1 p=" + num(c.p) + " q=" + num(c.q) + " sigma=" + num(c.sigma) +
                             " Pe=" + num(c.Pe) + " dz_cr=" + got);
    }
    return {id, res, exp};
  }
  if (id == "a2") {
    CsvTable res{{"variant", "Pe", "beta_lower_over_pe", "beta_upper_over_pe"}, {}};
    CsvTable exp = res;
    for (const auto& b : appendix_bounds()) {
      AppendixVariant v = AppendixVariant::parse(b.variant);
      for (double Pe : {1.0, 100.0}) {
        BetaScan s = beta_stability_scan(v, Pe, 50, appendix_beta_grid(Pe));
        res.rows.push_back({b.variant, num(Pe), bound_str(s.lower, Pe), bound_str(s.upper, Pe)});
        exp.rows.push_back({b.variant, num(Pe), b.lower < 0 ? "none" : fmt(b.lower),
                            b.upper < 0 ? "none" : fmt(b.upper)});
        if (progress) progress("a2 " + res.rows.back()[0] + " Pe=" + res.rows.back()[1] + " " +
                               res.rows.back()[2] + " " + res.rows.back()[3]);
      }
    }
    return {id, res, exp};
  }

  std::vector<Scenario> sc = table_scenarios(id);
  std::vector<std::vector<std::string>> keys;
  std::vector<ErrRow> exp;
  std::vector<std::string> header;
  bool absolute = false;
  if (id == "t2") {
    header = {"q", "beta"};
    for (const auto& r : kT2) {
      keys.push_back({num(r.q), num(r.beta)});
      exp.push_back({keys.back(), r.l2, r.l1, r.linf});
    }
  } else if (id == "t3") {
    header = {"Pe"};
    for (const auto& r : kT3) {
      keys.push_back({num(r.Pe)});
      exp.push_back({keys.back(), r.l2, r.l1, r.linf});
    }
  } else if (id == "t4") {
    header = {"q", "beta", "sigma_c"};
    for (const auto& r : kT4) {
      keys.push_back({num(r.q), num(r.beta), num(r.sigma_c)});
      exp.push_back({keys.back(), r.l2, r.l1, r.linf});
    }
  } else if (id == "t5") {
    header = {"N", "q", "beta"};
    for (const auto& r : kT5) {
      keys.push_back({num(r.N), num(r.q), num(r.beta)});
      exp.push_back({keys.back(), r.l2, r.l1, r.linf});
    }
  } else if (id == "t6") {
    header = {"q", "N", "n", "beta"};
    absolute = true;
    for (const auto& r : kT6) {
      keys.push_back({num(r.q), num(r.N), num(r.n), num(r.bnum) + "/" + num(r.bden)});
      exp.push_back({keys.back(), r.l2, r.l1, r.linf});
    }
  } else if (id == "t7" || id == "t8") {
    header = {"A", "k", "N", "beta"};
    for (const auto& r : id == "t7" ? kT7 : kT8) {
      keys.push_back({num(r.A), num(r.k), num(20 * r.k), num(r.beta)});
      exp.push_back({keys.back(), r.l2, r.l1, r.linf});
    }
  } else if (id == "t9") {
    header = {"q", "beta"};
    for (const auto& r : kT9) {
      keys.push_back({num(r.q), num(r.beta)});
      exp.push_back({keys.back(), r.l2, r.l1, r.linf});
    }
  }
  return scenario_table(id, header, keys, sc, exp, absolute, progress);
}

}  // namespace xdg
