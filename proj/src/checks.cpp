#include "cliffcheck/checks.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cliffcheck/arrowgroup.hpp"
#include "cliffcheck/classify.hpp"
#include "cliffcheck/cliffalg.hpp"
#include "cliffcheck/dyadic.hpp"
#include "cliffcheck/minimal.hpp"
#include "cliffcheck/unitary.hpp"

namespace checks {

namespace {

using report::Check;
using report::Status;
using report::VerificationReport;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::mt19937_64 check_rng(const config::Config& cfg, const std::string& name) {
  return std::mt19937_64(cfg.seed ^ fnv1a(name));
}

Check make_check(std::string name, std::string claim) {
  Check c;
  c.name = std::move(name);
  c.claim = std::move(claim);
  c.status = Status::pass;
  return c;
}

void fail(Check& c, const std::string& witness) {
  c.status = Status::fail;
  if (c.witness.empty()) c.witness = witness;
}

}  // namespace

// ---- the aggregate suite checks ---------------------------------------------

Check check_generator_relations() {
  Check c = make_check("01-generator-relations",
                       "g_i g_j = (g_j g_i)^-1 and g_i g_j = -g_j g_i");
  int pairs = 0;
  for (int p = 1; p <= 4; ++p) {
    const auto fam = dyadic::pauli_string_family(p);
    const auto rel = arrowgroup::verify_relations(fam);
    if (!rel.pass())
      fail(c, "p=" + std::to_string(p) + ": " + rel.failures.front().witness);
    // Inverse form holds exactly on pairs whose squares have equal sign;
    // on mixed pairs it is algebraically unsatisfiable while
    // anticommutation holds.
    if (!rel.inverse_form_matches_metric)
      fail(c, "p=" + std::to_string(p) +
                  ": inverse form does not match the square-sign prediction");
    pairs += static_cast<int>(rel.pairs.size());
  }

  // The relation pair holds literally on an all-negative-squares family.
  {
    dyadic::GeneratorFamily fam;
    fam.dim = 4;
    fam.gens.push_back(sigperm::kron(sigperm::brick_j(), sigperm::SignedPerm::identity(2)));
    fam.gens.push_back(sigperm::kron(sigperm::brick_z(), sigperm::brick_j()));
    fam.labels = {"j1", "j2"};
    const auto rel = arrowgroup::verify_relations(fam);
    if (!rel.pass() || !rel.pairs.front().inverse_form || !rel.pairs.front().anticommute)
      fail(c, "all-minus family does not satisfy the literal relation pair");
    const auto sig = dyadic::family_signature(fam);
    if (sig.plus != 0 || sig.minus != 2) fail(c, "all-minus family signature is off");
  }

  c.numbers["families"] = 4;
  c.numbers["pairs_checked"] = pairs;
  return c;
}

Check check_group_order(const config::Config& cfg) {
  Check c = make_check("02-group-order", "order of <family(p)> = 2^(2p+1)");
  for (int p = 1; p <= 3; ++p) {
    const auto g = arrowgroup::generate(dyadic::pauli_string_family(p), cfg.group_cap);
    const auto expected = arrowgroup::group_order_law(2 * p);
    c.numbers["order_p" + std::to_string(p)] = static_cast<double>(g.order());
    if (g.order() != expected)
      fail(c, "p=" + std::to_string(p) + ": BFS order " + std::to_string(g.order()) +
                  " != " + std::to_string(expected));
  }
  return c;
}

Check check_twisted_iso() {
  Check c = make_check("03-twisted-iso",
                       "twisted group algebra R[G]/(-1 = -1) = Cl(p,p), p = 1..4");
  std::size_t pairs = 0;
  for (int p = 1; p <= 4; ++p) {
    const auto res =
        cliffalg::iso_check(dyadic::pauli_string_family(p), cliffalg::Signature(p, p));
    pairs += res.pairs_checked;
    if (!res.pass) fail(c, "(p,p)=(" + std::to_string(p) + "," + std::to_string(p) +
                                "): " + res.witness);
  }
  c.numbers["pairs_checked"] = static_cast<double>(pairs);
  c.numbers["largest_dimension"] = 256;
  return c;
}

Check check_tensor_power() {
  Check c = make_check("04-tensor-power", "Cl(1,1)^(x m) = Cl(m,m), m = 1..3");
  for (int m = 1; m <= 3; ++m) {
    const auto res = cliffalg::tensor_power_check(m);
    if (!res.pass) fail(c, "m=" + std::to_string(m) + ": " + res.witness);
  }
  return c;
}

Check check_classifier() {
  Check c = make_check("05-classifier",
                       "mod-8 descriptor vs exact center/idempotent oracle, n <= 6");
  int checked = 0;
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; p + q <= 6; ++q) {
      const cliffalg::Signature s(p, q);
      const auto cls = cliffalg::classify(s);
      const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      if (cls.real_dim() != (std::uint64_t{1} << s.n()))
        fail(c, tag + ": descriptor dimension != 2^n");
      const int want_center = cls.factors * (cls.ring == cliffalg::Ring::C ? 2 : 1);
      if (cliffalg::center_dimension_exact(s) != want_center)
        fail(c, tag + ": center dimension mismatch");
      const int want_idem = cls.factors == 2 ? 4 : 2;
      if (cliffalg::central_idempotent_count_exact(s) != want_idem)
        fail(c, tag + ": central idempotent count mismatch");
      ++checked;
    }

  const auto cl44 = cliffalg::classify(cliffalg::Signature(4, 4));
  c.numbers["cl44_real_dim"] = static_cast<double>(cl44.real_dim());
  if (!(cl44 == cliffalg::AlgebraClass{cliffalg::Ring::R, 16, 1}))
    fail(c, "Cl(4,4) is not Mat16(R): got " + cl44.to_string());
  c.numbers["signatures_checked"] = checked;
  return c;
}

Check check_cosmos_invariance(const config::Config& cfg) {
  Check c = make_check("06-cosmos-invariance",
                       "E(5), E(1) always invariant; E(3) iff gamma = 0; "
                       "coefficients (alpha, beta, 1)");
  auto rng = check_rng(cfg, c.name);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);

  auto random_rational = [&]() { return rat::Rational(num(rng), den(rng)); };

  for (int trial = 0; trial < 100; ++trial) {
    cosmos::EndoF f;
    f.alpha = random_rational();
    f.beta = random_rational();
    const bool zero_gamma = trial % 2 == 0;
    for (auto& g : f.gamma) g = zero_gamma ? rat::Rational(0) : random_rational();
    const bool gamma_zero = f.gamma[0] == 0 && f.gamma[1] == 0 && f.gamma[2] == 0;

    const std::string tag = "trial " + std::to_string(trial);
    if (!cosmos::is_invariant(f, cosmos::CoordSubspace::e5())) fail(c, tag + ": E(5) lost");
    if (!cosmos::is_invariant(f, cosmos::CoordSubspace::e1())) fail(c, tag + ": E(1) lost");
    if (cosmos::is_invariant(f, cosmos::CoordSubspace::e3()) != gamma_zero)
      fail(c, tag + ": E(3) invariance does not track gamma = 0");
    if (cosmos::restriction_coefficient(f, cosmos::CoordSubspace::e5()) != f.alpha)
      fail(c, tag + ": E(5) coefficient != alpha");
    if (cosmos::restriction_coefficient(f, cosmos::CoordSubspace::e1()) != rat::Rational(1))
      fail(c, tag + ": E(1) coefficient != 1");
    if (gamma_zero &&
        cosmos::restriction_coefficient(f, cosmos::CoordSubspace::e3()) != f.beta)
      fail(c, tag + ": E(3) coefficient != beta");
  }
  c.numbers["trials"] = 100;
  return c;
}

Check check_commutant_dims() {
  Check c = make_check("07-commutant-dims",
                       "SU(5) -> SU(3)xSU(2)xU(1) -> SU(3)xU(1): 24 -> 12 -> 9; "
                       "commutant of F(2,3,0): 35 full, 13 antisymmetric");
  const cosmos::EndoF f{2, 3, {0, 0, 0}};
  const auto rep = cosmos::commutant(f);
  c.numbers["full_dim"] = static_cast<double>(rep.full_dim);
  c.numbers["antisym_dim"] = static_cast<double>(rep.antisym_dim);
  if (rep.full_dim != 35) fail(c, "full commutant dim != 35");
  if (rep.antisym_dim != 13) fail(c, "antisymmetric commutant dim != 13");

  const std::vector<rat::Rational> vev = {2, 2, 2, -3, -3};
  const std::vector<rat::Rational> zero(5, rat::Rational(0));
  const int d24 = cosmos::unitary_commutant_dim(zero, cosmos::Ambient::su);
  const int d12 = cosmos::unitary_commutant_dim(vev, cosmos::Ambient::su);
  const int d9 = cosmos::fundamental_stabilizer_dim(vev, 4);
  c.numbers["chain_su5"] = d24;
  c.numbers["chain_sm"] = d12;
  c.numbers["chain_su3_u1"] = d9;
  if (d24 != 24 || d12 != 12 || d9 != 9)
    fail(c, "breaking chain dims are (" + std::to_string(d24) + "," + std::to_string(d12) +
                "," + std::to_string(d9) + "), expected (24,12,9)");
  return c;
}

Check check_realification(const config::Config& cfg) {
  Check c = make_check("08-realification-orbits",
                       "SU(n) -> SO(2n); orbit of SO(10) on S^9 is transitive");
  auto rng = check_rng(cfg, c.name);
  double max_orth = 0.0, max_det = 0.0;

  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(trial % 5);
    const auto u = unitary::random_unitary(n, rng, true);
    unitary::RealOrthogonal ro;
    try {
      ro = unitary::realify(u, true);
    } catch (const std::exception& e) {
      fail(c, "realify rejected a sampled SU(" + std::to_string(n) + "): " + e.what());
      break;
    }
    max_orth = std::max(max_orth, ro.orth_defect);
    max_det = std::max(max_det, ro.det_defect);
    const Eigen::MatrixXd j = unitary::complex_structure(n);
    if (((ro.R * j - j * ro.R).cwiseAbs().maxCoeff()) != 0.0) {
      fail(c, "R J != J R exactly at SU(" + std::to_string(n) + ") sample");
      break;
    }
  }
  c.numbers["max_orthogonality_defect"] = max_orth;
  c.numbers["max_det_defect"] = max_det;
  if (max_orth >= cfg.tol_orthogonality) fail(c, "orthogonality defect above tolerance");
  if (max_det >= 1e-8) fail(c, "determinant defect above tolerance");

  double max_residual = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto u = unitary::random_unit_vector(10, rng);
    const auto v = unitary::random_unit_vector(10, rng);
    const Eigen::MatrixXd r = unitary::orbit_rotation(u, v);
    max_residual = std::max(max_residual, (r * u - v).norm());
    max_residual = std::max(
        max_residual,
        (r.transpose() * r - Eigen::MatrixXd::Identity(10, 10)).cwiseAbs().maxCoeff());
  }
  c.numbers["max_orbit_residual"] = max_residual;
  if (max_residual >= cfg.tol_orthogonality) fail(c, "orbit rotation residual above tolerance");
  return c;
}

Check check_sphere_decompositions(const config::Config& cfg) {
  Check c = make_check("09-sphere-decompositions",
                       "R5+R3+R1 = R9; S5 join S3 = S9 via the join chart");
  const auto split = unitary::coordinate_split({5, 3, 1});
  if (!(split.size() == 3 && split[0] == cosmos::CoordSubspace::e5() &&
        split[1] == cosmos::CoordSubspace::e3() && split[2] == cosmos::CoordSubspace::e1()))
    fail(c, "coordinate_split([5,3,1]) does not produce {1..5},{6..8},{9}");

  auto rng = check_rng(cfg, c.name);
  double max_residual = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto x = unitary::random_unit_vector(10, rng);
    const auto d = unitary::sphere_join_invert(x, 5, 3);
    const auto rebuilt = unitary::sphere_join(d.u, d.v, d.t);
    max_residual = std::max(max_residual, (rebuilt - x).norm());
  }
  c.numbers["samples"] = 10000;
  c.numbers["max_join_residual"] = max_residual;
  if (max_residual >= 1e-9) fail(c, "join inversion residual above 1e-9");
  return c;
}

Check check_minimality(const config::Config& cfg, const std::string& csv_path) {
  Check c = make_check("10-minimality",
                       "S4(1/sqrt2) x S4(1/sqrt2) is minimal in S9; "
                       "Vol(S8) < Vol(S4 x S4)");
  auto rng = check_rng(cfg, c.name);
  const double r = std::sqrt(0.5);
  const minimal::ProductSphereEmbedding emb(4, 4, r, std::sqrt(1.0 - r * r));

  std::vector<minimal::CurvatureSample> samples;
  double max_h = 0.0;
  for (int i = 0; i < cfg.curvature_samples; ++i) {
    const auto u = unitary::random_unit_vector(5, rng);
    const auto v = unitary::random_unit_vector(5, rng);
    samples.push_back(minimal::numeric_mean_curvature(emb, u, v, cfg.curvature_step));
    max_h = std::max(max_h, std::abs(samples.back().h_numeric));
  }
  c.numbers["max_abs_h"] = max_h;
  if (max_h >= cfg.tol_curvature) fail(c, "numeric |H| above curvature tolerance");

  {
    const minimal::ProductSphereEmbedding tilted(4, 4, 0.6, 0.8);
    const auto u = unitary::random_unit_vector(5, rng);
    const auto v = unitary::random_unit_vector(5, rng);
    const auto s = minimal::numeric_mean_curvature(tilted, u, v, cfg.curvature_step);
    samples.push_back(s);
    c.numbers["h_at_r06"] = s.h_numeric;
    const double expected = 7.0 / 24;  // (4*(0.8/0.6) - 4*(0.6/0.8)) / 8
    if (std::abs(s.h_numeric - expected) >= 1e-3)
      fail(c, "H at r = 0.6 misses the analytic value 7/24");
  }

  const double root = minimal::mean_curvature_root(4, 4);
  c.numbers["h_root"] = root;
  if (std::abs(root - std::sqrt(0.5)) >= 1e-10)
    fail(c, "H(r) root is not sqrt(1/2) within 1e-10");

  const auto vol = minimal::vacuum_volume_report(cfg.seed ^ fnv1a("10-volumes"), 8,
                                                 cfg.curvature_step);
  c.numbers["vol_great_s8"] = vol.great_volume;
  c.numbers["vol_product"] = vol.product_volume;
  c.numbers["max_abs_h_great"] = vol.max_abs_h_great;
  const double pi = std::numbers::pi;
  if (std::abs(vol.great_volume - 32.0 * std::pow(pi, 4) / 105.0) > 1e-9)
    fail(c, "Vol(S8) misses the closed form 32 pi^4 / 105");
  if (std::abs(vol.product_volume - 4.0 * std::pow(pi, 4) / 9.0) > 1e-9)
    fail(c, "product volume misses the closed form 4 pi^4 / 9");
  if (!vol.great_smaller) fail(c, "volume ordering Vol(S8) < Vol(S4xS4) violated");
  if (vol.max_abs_h_great != 0.0) fail(c, "great-sphere H defect is nonzero");

  if (!csv_path.empty()) minimal::write_curvature_csv(csv_path, samples);
  return c;
}

std::vector<Check> claim_checks() {
  std::vector<Check> out;
  for (const auto& row : cliffalg::claim_report()) {
    Check c;
    std::string slug;
    for (char ch : row.claim) {
      if (std::isalnum(static_cast<unsigned char>(ch)))
        slug += static_cast<char>(std::tolower(ch));
      else if (!slug.empty() && slug.back() != '-')
        slug += '-';
    }
    while (!slug.empty() && slug.back() == '-') slug.pop_back();
    c.name = "20-claim-" + slug;
    c.claim = row.claim + ": " + row.signature + " = " + row.descriptor;
    c.numbers["real_dim"] = static_cast<double>(row.real_dim);
    if (row.verdict == "MATCH" || row.verdict == "reference") {
      c.status = Status::pass;
    } else {
      c.status = Status::claim_mismatch;
      c.witness = row.verdict + ": " + row.note;
    }
    out.push_back(std::move(c));
  }
  return out;
}

VerificationReport run_gens(int p, bool extended) {
  VerificationReport r;
  r.command = "gens";
  r.params["p"] = std::to_string(p);
  r.params["extended"] = extended ? "true" : "false";

  const auto fam = dyadic::pauli_string_family(p, extended);
  const auto sig = dyadic::family_signature(fam);
  const auto rel = arrowgroup::verify_relations(fam);

  Check relations = make_check("relations", "g_i g_j = -g_j g_i, g_i^2 = +-1");
  relations.numbers["generators"] = static_cast<double>(fam.gens.size());
  relations.numbers["anticommuting_pairs"] = rel.anticommuting_pairs;
  relations.numbers["inverse_form_matches_square_signs"] =
      rel.inverse_form_matches_metric ? 1 : 0;
  if (!rel.pass())
    fail(relations, rel.failures.front().witness);
  r.add(relations);

  Check signature = make_check("signature", "plumbing");
  signature.numbers["plus"] = sig.plus;
  signature.numbers["minus"] = sig.minus;
  r.add(signature);
  return r;
}

VerificationReport run_iso(int p, int q) {
  if (!((p == q && p >= 1 && p <= 8) || (p == q + 1 && q >= 1 && q <= 7)))
    throw std::invalid_argument(
        "no shipped family realizes signature (" + std::to_string(p) + "," +
        std::to_string(q) + "); available: (r,r) or (r+1,r)");

  VerificationReport r;
  r.command = "iso";
  r.params["p"] = std::to_string(p);
  r.params["q"] = std::to_string(q);

  const auto fam = p == q ? dyadic::pauli_string_family(p)
                          : dyadic::pauli_string_family(q, true);
  const auto res = cliffalg::iso_check(fam, cliffalg::Signature(p, q));

  Check c = make_check("iso-structure-constants",
                       "twisted group algebra R[G]/(-1 = -1) = Cl(" +
                           std::to_string(p) + "," + std::to_string(q) + ")");
  c.numbers["dimension"] = std::pow(2.0, p + q);
  c.numbers["pairs_checked"] = static_cast<double>(res.pairs_checked);
  if (!res.pass) fail(c, res.witness);
  r.add(c);
  return r;
}

VerificationReport run_cosmos(const cosmos::EndoF& f,
                              const std::map<std::string, std::string>& params) {
  VerificationReport r;
  r.command = "cosmos";
  r.params = params;

  const auto g = cosmos::gauge_report(f);

  {
    Check c = make_check("invariant-e5", "E(5) invariant under F");
    c.numbers["coefficient"] = rat::to_double(g.coeff_e5);
    if (!g.e5_invariant) fail(c, "E(5) not invariant");
    r.add(c);
  }
  {
    Check c = make_check("invariant-e1", "E(1) invariant under F, coefficient 1");
    c.numbers["coefficient"] = rat::to_double(g.coeff_e1);
    if (!g.e1_invariant) fail(c, "E(1) not invariant");
    r.add(c);
  }
  {
    Check c = make_check("invariant-e3", "E(3) invariant iff gamma = 0");
    if (g.e3_invariant) {
      if (g.coeff_e3) c.numbers["coefficient"] = rat::to_double(*g.coeff_e3);
    } else {
      fail(c, g.e3_note + "; gamma = (" + rat::to_string(f.gamma[0]) + "," +
                  rat::to_string(f.gamma[1]) + "," + rat::to_string(f.gamma[2]) + ")");
    }
    r.add(c);
  }
  {
    Check c = make_check("invariant-lattice", "plumbing");
    c.numbers["count"] = static_cast<double>(g.lattice_size);
    r.add(c);
  }
  {
    Check c = make_check("commutant", "residual symmetry of F");
    c.numbers["full_dim"] = static_cast<double>(g.commutant.full_dim);
    c.numbers["antisym_dim"] = static_cast<double>(g.commutant.antisym_dim);
    if (g.fully_symmetric) c.witness = "fully symmetric: F is the identity";
    r.add(c);
  }
  {
    Check c = make_check("breaking-chain",
                         "SU(5) -> SU(3)xSU(2)xU(1) -> SU(3)xU(1) (names are the "
                         "claimed labels; dimensions are computed)");
    c.numbers["dim_su5"] = g.chain_dims[0];
    c.numbers["dim_sm"] = g.chain_dims[1];
    c.numbers["dim_su3_u1"] = g.chain_dims[2];
    r.add(c);
  }
  return r;
}

VerificationReport run_all(const config::Config& cfg, const std::string& curvature_csv_path) {
  cfg.validate();
  VerificationReport r;
  r.command = "all";
  r.params["curvature_samples"] = std::to_string(cfg.curvature_samples);
  r.params["curvature_step"] = std::to_string(cfg.curvature_step);
  r.seed = cfg.seed;

  // A module error becomes a failed check, never a crash of the run.
  auto guarded = [&r](const char* name, auto&& fn) {
    try {
      r.add(fn());
    } catch (const std::exception& e) {
      Check c;
      c.name = name;
      c.claim = "plumbing";
      c.status = Status::fail;
      c.witness = std::string("module error: ") + e.what();
      r.add(std::move(c));
    }
  };

  guarded("01-generator-relations", [] { return check_generator_relations(); });
  guarded("02-group-order", [&] { return check_group_order(cfg); });
  guarded("03-twisted-iso", [] { return check_twisted_iso(); });
  guarded("04-tensor-power", [] { return check_tensor_power(); });
  guarded("05-classifier", [] { return check_classifier(); });
  guarded("06-cosmos-invariance", [&] { return check_cosmos_invariance(cfg); });
  guarded("07-commutant-dims", [] { return check_commutant_dims(); });
  guarded("08-realification-orbits", [&] { return check_realification(cfg); });
  guarded("09-sphere-decompositions", [&] { return check_sphere_decompositions(cfg); });
  guarded("10-minimality", [&] { return check_minimality(cfg, curvature_csv_path); });
  for (auto& c : claim_checks()) r.add(std::move(c));
  return r;
}

}  // namespace checks
