#include "xdg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xdg/config.hpp"
#include "xdg/csv.hpp"
#include "xdg/quadrature.hpp"
#include "xdg/scenarios.hpp"
#include "xdg/spectra.hpp"
#include "xdg/tables.hpp"
#include "xdg/timestep.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace xdg {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path prepare_dir(const std::string& dir) {
  fs::path p(dir.empty() ? "." : dir);
  fs::create_directories(p);
  return p;
}

json norm_json(const NormReport& r) {
  return {{"l1", r.l1}, {"l2", r.l2}, {"linf", r.linf}, {"ng", r.ng}};
}

int cmd_run(const std::string& config_path, const std::string& out_override, std::ostream& out) {
  Config cfg = parse_config(read_file(config_path));
  Scenario sc = to_scenario(cfg);
  OutputOptions oo = output_options(cfg);
  fs::path dir = prepare_dir(out_override.empty() ? oo.dir : out_override);

  RunArtifacts art;
  try {
    art = run_scenario(sc, oo.snapshots);
  } catch (const NumericalFailure& e) {
    std::ostringstream os;
    os << e.what();
    if (auto m = linear_max_real(sc)) os << " (max Re lambda of the linear part " << *m << ")";
    throw NumericalFailure(os.str(), e.step);
  }

  std::vector<std::string> files;
  auto emit = [&](const std::string& name, const CsvTable& t) {
    t.write((dir / name).string());
    files.push_back(name);
  };
  emit("solution.csv", solution_table(art.space, art.final.coeffs, oo.plot_tail, oo.plot_points));
  emit("coefficients.csv", coefficient_table(art.space, art.final.coeffs));
  for (size_t i = 0; i < art.snapshots.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "snapshot_%05zu.csv", i * oo.snapshots);
    emit(name, solution_table(art.space, art.snapshots[i].coeffs, oo.plot_tail, oo.plot_points));
  }
  if (art.absolute) {
    CsvTable t{{"norm", "absolute", "relative"}, {}};
    auto rel = [&](double NormReport::*f) { return art.relative ? fmt((*art.relative).*f) : std::string("nan"); };
    t.rows.push_back({"l1", fmt(art.absolute->l1), rel(&NormReport::l1)});
    t.rows.push_back({"l2", fmt(art.absolute->l2), rel(&NormReport::l2)});
    t.rows.push_back({"linf", fmt(art.absolute->linf), rel(&NormReport::linf)});
    emit("errors.csv", t);
    out << "errors (absolute / relative)\n" << t.str();
  }

  const Space& s = art.space;
  json m;
  m["config"] = cfg.sections;
  m["config_text"] = render_config(cfg);
  m["resolved"] = {{"beta", s.beta},      {"dt", sc.dt()},      {"nsteps", sc.nsteps},
                   {"dofs", s.dofs()},    {"dg_dofs", s.ndg()}, {"tail_dofs", s.nlag()},
                   {"final_time", art.final.time}};
  m["timings"] = {{"assembly", art.timings.assembly},
                  {"factorization", art.timings.factorization},
                  {"stepping", art.timings.stepping},
                  {"reference", art.timings.reference},
                  {"tail_wall_share", art.timings.tail_wall_share}};
  m["cost"] = {{"tail_dof_share", art.tail_share()},
               {"tail_dof_steps", static_cast<long long>(s.nlag()) * sc.nsteps},
               {"total_dof_steps", static_cast<long long>(s.dofs()) * sc.nsteps}};
  if (art.absolute) m["errors"]["absolute"] = norm_json(*art.absolute);
  if (art.relative) m["errors"]["relative"] = norm_json(*art.relative);
  m["artifacts"] = files;
  std::ofstream((dir / "manifest.json").string()) << m.dump(2) << "\n";

  out << "dofs " << s.dofs() << " (tail " << s.nlag() << ", share " << fmt(art.tail_share()) << ")\n";
  out << "wrote " << files.size() + 1 << " files to " << dir.string() << "\n";
  return kOk;
}

int cmd_stability(const std::vector<int>& ps, const std::vector<int>& qs, const std::vector<double>& sigmas,
                  const std::vector<double>& pes, int n_max, const std::string& model, const std::string& out_dir,
                  std::ostream& out) {
  CriticalDzOptions opt;
  opt.n_max = n_max;
  if (model == "consistent") opt.model = StabilityModel::Consistent;
  else if (model != "volume") throw UsageError("unknown stability model '" + model + "'");
  CsvTable t{{"p", "q", "sigma", "Pe", "dz_cr"}, {}};
  for (double sigma : sigmas)
    for (int q : qs)
      for (int p : ps)
        for (double pe : pes) {
          std::string dz;
          try {
            CriticalDz c = critical_dz(p, q, sigma, pe, 1.0, opt);
            dz = fmt(c.dz);
            out << "p=" << p << " q=" << q << " sigma=" << sigma << " Pe=" << pe << " dz_cr=1/" << c.N
                << (c.monotone ? "" : " (non-monotone)") << "\n";
          } catch (const NoStableResolution& e) {
            dz = "none";
            out << e.what() << "\n";
          }
          t.rows.push_back({std::to_string(p), std::to_string(q), fmt(sigma), fmt(pe), dz});
        }
  fs::path dir = prepare_dir(out_dir);
  t.write((dir / "critical_dz.csv").string());
  return kOk;
}

int cmd_appendix(const std::string& form, const std::string& basis, const std::string& bc,
                 const std::string& rule, double pe, double bmin, double bmax, int points, int q,
                 const std::string& out_dir, std::ostream& out) {
  if (!(bmin > 0) || !(bmax > bmin) || points < 2) throw UsageError("need 0 < beta-min < beta-max, points >= 2");
  std::string name = form == "nodal" ? "nodal-" + rule : form;
  name += "-" + basis + "-" + bc;
  AppendixVariant v = AppendixVariant::parse(name);
  std::vector<double> grid;
  for (int i = 0; i < points; ++i) grid.push_back(bmin * std::pow(bmax / bmin, double(i) / (points - 1)));
  BetaScan s = beta_stability_scan(v, pe, q, grid);
  CsvTable t{{"variant", "beta", "Pe", "max_re_lambda", "stable"}, {}};
  for (const auto& pt : s.points)
    t.rows.push_back({name, fmt(pt.beta), fmt(pe), fmt(pt.max_re), pt.stable ? "1" : "0"});
  fs::path dir = prepare_dir(out_dir);
  t.write((dir / ("appendix_" + name + ".csv")).string());
  out << name << " Pe=" << pe << ": ";
  if (s.all_stable()) out << "stable for all sampled beta\n";
  else
    out << "lower " << (s.lower ? fmt(*s.lower) : "none") << ", upper " << (s.upper ? fmt(*s.upper) : "none")
        << "\n";
  return kOk;
}

int cmd_table(const std::string& id, const std::string& out_dir, std::ostream& out) {
  TableOutput t = make_table(id, [&out](const std::string& line) { out << line << "\n" << std::flush; });
  fs::path dir = prepare_dir(out_dir);
  t.result.write((dir / (id + ".csv")).string());
  t.expected.write((dir / (id + ".expected.csv")).string());
  out << "wrote " << (dir / (id + ".csv")).string() << "\n";
  return kOk;
}

int cmd_quad(const std::string& family, double beta, int m, const std::string& out_dir, std::ostream& out) {
  QuadRule r;
  if (family == "gauss") r = gauss_legendre_rule(m);
  else if (family == "gl") r = laguerre_rule(Family::GL, beta, m);
  else if (family == "glr") r = laguerre_rule(Family::GLR, beta, m);
  else throw UsageError("unknown family '" + family + "'");
  fs::path dir = prepare_dir(out_dir);
  std::string name = "quad_" + family + "_m" + std::to_string(m) + ".csv";
  rule_table(r).write((dir / name).string());
  out << r.size() << " nodes written to " << (dir / name).string() << "\n";
  return kOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended DG solver on a half line"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run one scenario from a config file");
  std::string config_path, run_out;
  run->add_option("config", config_path)->required();
  run->add_option("--out", run_out, "Override [output] dir");

  auto* stab = app.add_subcommand("stability", "Critical dz sweep");
  std::vector<int> ps{1, 2, 3}, qs{180};
  std::vector<double> sigmas{200}, pes{1000};
  int n_max = 100;
  std::string model = "volume", stab_out = ".";
  stab->add_option("--p", ps)->delimiter(',');
  stab->add_option("--q", qs)->delimiter(',');
  stab->add_option("--sigma", sigmas)->delimiter(',');
  stab->add_option("--pe", pes)->delimiter(',');
  stab->add_option("--n-max", n_max);
  stab->add_option("--model", model)->check(CLI::IsMember({"volume", "consistent"}));
  stab->add_option("--out", stab_out);

  auto* appx = app.add_subcommand("appendix", "Stability of a half-line operator over a beta range");
  std::string form, basis, bc, rule = "glr", appx_out = ".";
  double pe = 1.0, bmin = 0.0, bmax = 0.0;
  int points = 41, q = 50;
  appx->add_option("--form", form)->required()->check(CLI::IsMember({"strong", "nodal", "modal"}));
  appx->add_option("--basis", basis)->required()->check(CLI::IsMember({"lf", "lp"}));
  appx->add_option("--bc", bc)->required()->check(CLI::IsMember({"dir", "neu"}));
  appx->add_option("--rule", rule)->check(CLI::IsMember({"glr", "gl"}));
  appx->add_option("--pe", pe)->required();
  appx->add_option("--beta-min", bmin)->required();
  appx->add_option("--beta-max", bmax)->required();
  appx->add_option("--points", points);
  appx->add_option("--q", q);
  appx->add_option("--out", appx_out);

  auto* tab = app.add_subcommand("table", "Reproduce a built-in table");
  std::string table_id, tab_out = ".";
  tab->add_option("id", table_id)->required();
  tab->add_option("--out", tab_out);

  auto* quad = app.add_subcommand("quad", "Dump a quadrature rule");
  std::string family;
  double qbeta = 1.0;
  int m = 0;
  std::string quad_out = ".";
  quad->add_option("--family", family)->required()->check(CLI::IsMember({"gauss", "gl", "glr"}));
  quad->add_option("--beta", qbeta);
  quad->add_option("--m", m)->required();
  quad->add_option("--out", quad_out);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*run) return cmd_run(config_path, run_out, out);
    if (*stab) return cmd_stability(ps, qs, sigmas, pes, n_max, model, stab_out, out);
    if (*appx) return cmd_appendix(form, basis, bc, rule, pe, bmin, bmax, points, q, appx_out, out);
    if (*tab) return cmd_table(table_id, tab_out, out);
    if (*quad) return cmd_quad(family, qbeta, m, quad_out, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace xdg
