#ifndef DIEOUT_CONFIG_HPP
#define DIEOUT_CONFIG_HPP

#include "dieout/system.hpp"

#include <optional>
#include <string>

namespace dieout {

/** External problem description: the system, its resource signal, and the
 * simulation window. Rational fields travel as canonical "p/q" strings. */
struct Config {
  SystemSpec spec;
  ResourceSignal signal;
  std::vector<double> x0;
  double horizon = 0.0;
  double dt = 0.0;
  std::optional<double> beta;
};

/** Throws Error(ParseError/...) on malformed input; the result is validated. */
Config load_config(const std::string& path);
Config parse_config(const std::string& json_text);

std::string config_to_json(const Config& cfg);
void save_config(const Config& cfg, const std::string& path);

} // namespace dieout

#endif
