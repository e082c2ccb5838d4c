#include "xdg/config.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <vector>

namespace xdg {

namespace {

enum class Type { Real, Int, Word, RealOrAuto, Text };

struct KeySpec {
  Type type;
  std::set<std::string> words;
};

const std::map<std::string, std::map<std::string, KeySpec>>& schema() {
  static const std::map<std::string, std::map<std::string, KeySpec>> s = {
      {"domain", {{"L", {Type::Real}}, {"N", {Type::Int}}, {"p", {Type::Int}}, {"q", {Type::Int}},
                  {"beta", {Type::RealOrAuto}}}},
      {"equation", {{"kind", {Type::Word, {"linear", "burgers"}}}, {"mu", {Type::Real}},
                    {"u", {Type::Real}}, {"pe", {Type::Real}}}},
      {"time", {{"T", {Type::Real}}, {"nsteps", {Type::Int}}, {"dt", {Type::Real}},
                {"startup", {Type::Int}}}},
      {"bc", {{"type", {Type::Word, {"zero", "constant", "sine"}}}, {"A", {Type::Real}},
              {"k", {Type::Real}}, {"g0", {Type::Real}}}},
      {"initial", {{"kind", {Type::Word, {"zero", "gaussian", "manufactured"}}}, {"zc", {Type::Real}},
                   {"sigma_c", {Type::Real}}}},
      {"penalty", {{"sigma", {Type::Real}}}},
      {"damping", {{"dgamma", {Type::Real}}, {"alpha", {Type::Real}}, {"sigma_d", {Type::Real}}}},
      {"reference", {{"kind", {Type::Word, {"none", "exact", "single", "zero"}}}, {"L_ref", {Type::Real}}}},
      {"output", {{"dir", {Type::Text}}, {"snapshots", {Type::Int}}, {"plot_tail", {Type::Real}},
                  {"plot_points", {Type::Int}}}},
  };
  return s;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool parse_real(const std::string& v, double& out) {
  try {
    size_t pos = 0;
    out = std::stod(v, &pos);
    return pos == v.size() && std::isfinite(out);
  } catch (...) {
    return false;
  }
}

bool parse_int(const std::string& v, int& out) {
  try {
    size_t pos = 0;
    out = std::stoi(v, &pos);
    return pos == v.size();
  } catch (...) {
    return false;
  }
}

void check_value(const KeySpec& spec, const std::string& key, const std::string& v, int line) {
  double d;
  int i;
  bool ok = true;
  switch (spec.type) {
    case Type::Real: ok = parse_real(v, d); break;
    case Type::Int: ok = parse_int(v, i); break;
    case Type::RealOrAuto: ok = v == "auto" || parse_real(v, d); break;
    case Type::Word: ok = spec.words.count(v) > 0; break;
    case Type::Text: ok = !v.empty(); break;
  }
  if (!ok) throw ConfigError("line " + std::to_string(line) + ": bad value '" + v + "' for " + key, line);
}

double real(const Config& c, const std::string& s, const std::string& k, double fallback) {
  if (!c.has(s, k)) return fallback;
  return std::stod(c.get(s, k));
}

int integer(const Config& c, const std::string& s, const std::string& k, int fallback) {
  if (!c.has(s, k)) return fallback;
  return std::stoi(c.get(s, k));
}

std::string word(const Config& c, const std::string& s, const std::string& k, const std::string& fallback) {
  return c.has(s, k) ? c.get(s, k) : fallback;
}

}  // namespace

bool Config::has(const std::string& section, const std::string& key) const {
  auto it = sections.find(section);
  return it != sections.end() && it->second.count(key) > 0;
}

const std::string& Config::get(const std::string& section, const std::string& key) const {
  return sections.at(section).at(key);
}

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string raw, section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("line " + std::to_string(line) + ": malformed section header", line);
      section = trim(s.substr(1, s.size() - 2));
      if (!schema().count(section))
        throw ConfigError("line " + std::to_string(line) + ": unknown section [" + section + "]", line);
      cfg.sections[section];
      continue;
    }
    size_t eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line) + ": expected key = value", line);
    if (section.empty()) throw ConfigError("line " + std::to_string(line) + ": key outside any section", line);
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    const auto& keys = schema().at(section);
    auto it = keys.find(key);
    if (it == keys.end())
      throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "' in [" + section + "]", line);
    check_value(it->second, key, value, line);
    if (cfg.sections[section].count(key))
      throw ConfigError("line " + std::to_string(line) + ": duplicate key '" + key + "'", line);
    cfg.sections[section][key] = value;
  }
  std::vector<std::string> missing;
  for (const char* k : {"L", "N", "p", "q"})
    if (!cfg.has("domain", k)) missing.push_back(std::string("domain.") + k);
  if (!cfg.has("equation", "kind")) missing.push_back("equation.kind");
  if (!cfg.has("time", "T")) missing.push_back("time.T");
  if (!cfg.has("time", "nsteps") && !cfg.has("time", "dt")) missing.push_back("time.nsteps|time.dt");
  if (!missing.empty()) {
    std::string msg = "missing required keys:";
    for (const auto& m : missing) msg += " " + m;
    throw ConfigError(msg, 0);
  }
  if (cfg.has("equation", "u") && cfg.has("equation", "pe"))
    throw ConfigError("equation.u and equation.pe are exclusive", 0);
  return cfg;
}

std::string render_config(const Config& cfg) {
  std::ostringstream os;
  for (const auto& [section, keys] : cfg.sections) {
    os << '[' << section << "]\n";
    for (const auto& [k, v] : keys) os << k << " = " << v << '\n';
    os << '\n';
  }
  return os.str();
}

Scenario to_scenario(const Config& c) {
  Scenario sc;
  sc.name = "run";
  sc.L = real(c, "domain", "L", 1.0);
  sc.N = integer(c, "domain", "N", 1);
  sc.p = integer(c, "domain", "p", 0);
  sc.q = integer(c, "domain", "q", 0);
  std::string beta = word(c, "domain", "beta", "auto");
  sc.beta = beta == "auto" ? match_beta(sc.L / sc.N, sc.q) : std::stod(beta);

  sc.equation = word(c, "equation", "kind", "linear") == "burgers" ? Equation::Burgers : Equation::LinearAdvDiff;
  sc.mu = real(c, "equation", "mu", 1.0);
  sc.u = c.has("equation", "pe") ? real(c, "equation", "pe", 0.0) * sc.mu : real(c, "equation", "u", 0.0);

  sc.T = real(c, "time", "T", 1.0);
  sc.nsteps = c.has("time", "nsteps") ? integer(c, "time", "nsteps", 1)
                                      : static_cast<int>(std::lround(sc.T / real(c, "time", "dt", 1.0)));
  sc.startup = integer(c, "time", "startup", 0);

  std::string bc = word(c, "bc", "type", "zero");
  sc.bc = bc == "sine" ? BcKind::Sine : bc == "constant" ? BcKind::Constant : BcKind::Zero;
  sc.bc_A = real(c, "bc", "A", 0.0);
  sc.bc_k = real(c, "bc", "k", 0.0);
  sc.bc_value = real(c, "bc", "g0", 0.0);

  std::string init = word(c, "initial", "kind", "zero");
  sc.initial = init == "gaussian" ? InitialKind::Gaussian
               : init == "manufactured" ? InitialKind::Manufactured
                                        : InitialKind::Zero;
  sc.zc = real(c, "initial", "zc", 0.0);
  sc.sigma_c = real(c, "initial", "sigma_c", 1.0);

  sc.sigma = real(c, "penalty", "sigma", 200.0);
  if (c.sections.count("damping")) {
    DampingSpec d;
    d.dgamma = real(c, "damping", "dgamma", 0.0);
    d.alpha = real(c, "damping", "alpha", 0.3);
    d.sigma_d = real(c, "damping", "sigma_d", 0.0);
    sc.damping = d;
  }
  std::string ref = word(c, "reference", "kind", c.has("reference", "L_ref") ? "single" : "none");
  sc.reference = ref == "exact" ? ReferenceKind::Exact
                 : ref == "single" ? ReferenceKind::SingleDomain
                 : ref == "zero" ? ReferenceKind::Zero
                                 : ReferenceKind::None;
  sc.L_ref = real(c, "reference", "L_ref", 0.0);
  sc.validate();
  return sc;
}

OutputOptions output_options(const Config& c) {
  OutputOptions o;
  o.dir = word(c, "output", "dir", ".");
  o.snapshots = integer(c, "output", "snapshots", 0);
  o.plot_tail = real(c, "output", "plot_tail", 0.0);
  o.plot_points = integer(c, "output", "plot_points", 401);
  return o;
}

}  // namespace xdg
