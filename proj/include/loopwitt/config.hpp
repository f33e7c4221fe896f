#pragma once

#include "loopwitt/glnrep.hpp"
#include "loopwitt/tensmod.hpp"

#include "json.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace loopwitt {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  int n = 2;
  std::vector<int> mu{1};
  GaussRat c = 1;
  std::vector<GaussRat> alpha;  // empty: 1/2 in every coordinate
  BPresPtr B = BPresentation::trivial();
  int window_radius = 3;
  std::uint64_t seed = 42;
  std::vector<std::string> suites;  // empty: every suite applicable to the configuration
  int cases_per_suite = 200;
};

/// All suite names in run order.
const std::vector<std::string>& all_suites();
/// Suites run when none are listed.
std::vector<std::string> default_suites(const RunConfig& cfg);

/// Parses a JSON document; missing keys take the RunConfig defaults. Malformed JSON
/// reports line and column. The result is validated.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Default configuration for rank n (mu = (1,0,...,0), or () for n = 1).
RunConfig default_config(int n = 2);

/// Fills defaults and checks every precondition; throws ConfigError naming the violation.
void validate(RunConfig& cfg);

nlohmann::json config_to_json(const RunConfig& cfg);
nlohmann::json presentation_to_json(const BPresentation& pres);
BPresPtr presentation_from_json(const nlohmann::json& j);

Irrep irrep_of(const RunConfig& cfg);
TensorModule module_of(const RunConfig& cfg);

}  // namespace loopwitt
