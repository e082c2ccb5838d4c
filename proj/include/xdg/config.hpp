#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "xdg/scenarios.hpp"

namespace xdg {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line) : std::runtime_error(what), line(line) {}
  int line;
};

// [section] headers, key = value lines, # comments.
struct Config {
  std::map<std::string, std::map<std::string, std::string>> sections;

  bool has(const std::string& section, const std::string& key) const;
  const std::string& get(const std::string& section, const std::string& key) const;
  bool operator==(const Config& o) const { return sections == o.sections; }
};

Config parse_config(const std::string& text);
std::string render_config(const Config& cfg);

// beta = auto resolves through match_beta.
Scenario to_scenario(const Config& cfg);

struct OutputOptions {
  std::string dir = ".";
  int snapshots = 0;
  double plot_tail = 0.0;
  int plot_points = 401;
};
OutputOptions output_options(const Config& cfg);

}  // namespace xdg
