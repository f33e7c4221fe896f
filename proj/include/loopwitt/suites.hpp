#pragma once

#include "loopwitt/config.hpp"
#include "loopwitt/opcheck.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace loopwitt {

struct IdentityReport {
  std::string suite;
  nlohmann::json config;
  std::size_t cases = 0;
  std::vector<nlohmann::json> failures;  // each {"spec": ..., "residual_nonzero_entries": [...]}
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
  double wall_time_ms = 0;

  bool passed() const { return failures.empty(); }
  /// With timing = false the report is a pure function of config and seed.
  nlohmann::json to_json(bool timing = true) const;
};

/// Runs the named suites (cfg.suites) against one module built from cfg.
/// Reports come back in the order of cfg.suites. With threads > 1 suites run concurrently.
std::vector<IdentityReport> run_suites(const RunConfig& cfg, unsigned threads = 1);

/// Witness helpers, capped at a handful of entries.
nlohmann::json matrix_witness(const Matrix& m);
nlohmann::json modvector_witness(const ModVector& v);

}  // namespace loopwitt
