#pragma once

#include <string>
#include <vector>

#include "cliffcheck/config.hpp"
#include "cliffcheck/cosmos.hpp"
#include "cliffcheck/report.hpp"

namespace checks {

// The individual suite checks, exposed so the acceptance runner can time
// and inspect them one by one.
report::Check check_generator_relations();
report::Check check_group_order(const config::Config& cfg);
report::Check check_twisted_iso();
report::Check check_tensor_power();
report::Check check_classifier();
report::Check check_cosmos_invariance(const config::Config& cfg);
report::Check check_commutant_dims();
report::Check check_realification(const config::Config& cfg);
report::Check check_sphere_decompositions(const config::Config& cfg);
report::Check check_minimality(const config::Config& cfg, const std::string& csv_path);
std::vector<report::Check> claim_checks();

report::VerificationReport run_gens(int p, bool extended);

/// (p,q) must be (r,r) or (r+1,r) for the shipped families; throws
/// std::invalid_argument otherwise.
report::VerificationReport run_iso(int p, int q);

report::VerificationReport run_cosmos(const cosmos::EndoF& f,
                                      const std::map<std::string, std::string>& params);

/// The aggregate verification suite; every randomized check derives its
/// stream from cfg.seed and the check name, so the serialized report is
/// byte-identical for a fixed seed.
report::VerificationReport run_all(const config::Config& cfg,
                                   const std::string& curvature_csv_path = "");

}  // namespace checks
