// cliffcheck: verification front door.
//
// Subcommands: gens, iso, cosmos, all.  Human-readable tables go to
// stdout; JSON reports are written only behind --out.  Exit codes:
// 0 success, 1 check failure, 2 usage/validation, 3 I/O.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "cliffcheck/arrowgroup.hpp"
#include "cliffcheck/checks.hpp"
#include "cliffcheck/config.hpp"
#include "cliffcheck/dyadic.hpp"
#include "cliffcheck/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int emit(report::VerificationReport& rep, const std::string& out_path,
         std::chrono::steady_clock::time_point started) {
  rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
  std::cout << report::render_table(rep);
  if (!out_path.empty()) {
    try {
      report::write_file(out_path, report::serialize(rep));
    } catch (const std::ios_base::failure& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitIo;
    }
  }
  return rep.all_passed() ? kExitOk : kExitCheckFailure;
}

void print_family(const dyadic::GeneratorFamily& fam) {
  std::cout << "generators on N = " << fam.dim << " indices:\n";
  for (std::size_t i = 0; i < fam.gens.size(); ++i)
    std::cout << "  " << fam.labels[i] << "  " << sigperm::cycle_notation(fam.gens[i])
              << "\n";
}

std::array<rat::Rational, 3> parse_gamma(const std::string& text) {
  std::array<rat::Rational, 3> out;
  std::string rest = text;
  for (int i = 0; i < 3; ++i) {
    const auto comma = rest.find(',');
    if ((i < 2) == (comma == std::string::npos))
      throw std::invalid_argument("gamma needs three comma-separated rationals");
    out[i] = rat::parse_rational(rest.substr(0, comma));
    if (comma != std::string::npos) rest = rest.substr(comma + 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numerical checks for signed-permutation Clifford "
               "constructions and sphere geometry"};
  app.require_subcommand(1);

  config::Config cfg;
  try {
    cfg = config::load_default();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  // gens
  auto* gens = app.add_subcommand("gens", "build a generator family and verify relations");
  int gens_p = 1;
  bool gens_extended = false;
  gens->add_option("--p", gens_p, "number of slots (1..8)")->required();
  gens->add_flag("--extended", gens_extended, "include the all-Z generator e0");
  std::string gens_out;
  gens->add_option("--out", gens_out, "write the JSON report here");

  // iso
  auto* iso = app.add_subcommand("iso", "twisted group algebra vs Cl(p,q)");
  int iso_p = 1, iso_q = 1;
  iso->add_option("--p", iso_p, "plus-square generator count")->required();
  iso->add_option("--q", iso_q, "minus-square generator count")->required();
  std::string iso_out;
  iso->add_option("--out", iso_out, "write the JSON report here");

  // cosmos
  auto* cosmos_cmd = app.add_subcommand("cosmos", "invariant subspaces and commutants of F");
  std::string alpha_text = "2", beta_text = "3", gamma_text = "0,0,0", cosmos_out;
  cosmos_cmd->add_option("--alpha", alpha_text, "rational, e.g. 2 or 5/2 or 0.5");
  cosmos_cmd->add_option("--beta", beta_text, "rational");
  cosmos_cmd->add_option("--gamma", gamma_text, "three rationals, e.g. 0,0,0");
  cosmos_cmd->add_option("--out", cosmos_out, "write the JSON report here");

  // all
  auto* all = app.add_subcommand("all", "run the aggregate verification suite");
  std::string all_out, csv_path;
  all->add_option("--seed", cfg.seed, "seed for every randomized check");
  all->add_option("--out", all_out, "write the aggregate JSON report here");
  all->add_option("--curvature-csv", csv_path, "dump curvature samples as CSV");
  all->add_option("--curvature-samples", cfg.curvature_samples, "sample count");
  all->add_option("--curvature-step", cfg.curvature_step, "finite-difference step");
  all->add_option("--tol-orthogonality", cfg.tol_orthogonality, "orthogonality tolerance");
  all->add_option("--tol-curvature", cfg.tol_curvature, "curvature tolerance");
  all->add_option("--group-cap", cfg.group_cap, "closure size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    if (gens->parsed()) {
      print_family(dyadic::pauli_string_family(gens_p, gens_extended));
      auto rep = checks::run_gens(gens_p, gens_extended);
      return emit(rep, gens_out, started);
    }
    if (iso->parsed()) {
      auto rep = checks::run_iso(iso_p, iso_q);
      return emit(rep, iso_out, started);
    }
    if (cosmos_cmd->parsed()) {
      cosmos::EndoF f;
      f.alpha = rat::parse_rational(alpha_text);
      f.beta = rat::parse_rational(beta_text);
      f.gamma = parse_gamma(gamma_text);
      auto rep = checks::run_cosmos(
          f, {{"alpha", alpha_text}, {"beta", beta_text}, {"gamma", gamma_text}});
      return emit(rep, cosmos_out, started);
    }
    if (all->parsed()) {
      cfg.validate();
      auto rep = checks::run_all(cfg, csv_path);
      return emit(rep, all_out, started);
    }
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
