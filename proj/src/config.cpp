#include "cliffcheck/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace config {

void Config::validate() const {
  if (tol_orthogonality <= 0.0 || tol_curvature <= 0.0 || nullspace_sv_cutoff <= 0.0)
    throw std::invalid_argument("tolerances must be positive");
  if (group_cap < 2) throw std::invalid_argument("group cap must be >= 2");
  if (exact_algebra_max_n < 1 || exact_algebra_max_n > 16)
    throw std::invalid_argument("exact algebra cap must be in 1..16");
  if (curvature_samples < 1) throw std::invalid_argument("need >= 1 curvature sample");
  if (curvature_step < 1e-6 || curvature_step > 1e-2)
    throw std::invalid_argument("curvature step must lie in [1e-6, 1e-2]");
}

Config load_default() {
  if (const char* path = std::getenv("CLIFFCHECK_CONFIG"); path && *path)
    return from_json_file(path);
  return {};
}

Config from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  nlohmann::json j;
  in >> j;

  Config c;
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    c.tol_orthogonality = t.value("orthogonality", c.tol_orthogonality);
    c.tol_curvature = t.value("curvature", c.tol_curvature);
    c.nullspace_sv_cutoff = t.value("nullspace_sv_cutoff", c.nullspace_sv_cutoff);
  }
  if (j.contains("caps")) {
    const auto& k = j["caps"];
    c.group_cap = k.value("group", c.group_cap);
    c.exact_algebra_max_n = k.value("exact_algebra_max_n", c.exact_algebra_max_n);
  }
  c.seed = j.value("seed", c.seed);
  c.curvature_samples = j.value("curvature_samples", c.curvature_samples);
  c.curvature_step = j.value("curvature_step", c.curvature_step);
  c.validate();
  return c;
}

}  // namespace config
