#pragma once

#include <cstdint>
#include <string>

namespace config {

/// Central tolerances, caps and the seed every randomized check draws from.
struct Config {
  double tol_orthogonality = 1e-10;
  double tol_curvature = 1e-4;
  double nullspace_sv_cutoff = 1e-9;  // reserved: exact path covers all CLI inputs
  std::uint64_t group_cap = 1u << 20;
  int exact_algebra_max_n = 16;
  std::uint64_t seed = 0;
  int curvature_samples = 50;
  double curvature_step = 1e-3;

  void validate() const;  // throws on non-positive tolerances or caps
};

/// Reads the JSON file named by the CLIFFCHECK_CONFIG environment variable
/// if set, defaults otherwise.
Config load_default();

Config from_json_file(const std::string& path);

}  // namespace config
