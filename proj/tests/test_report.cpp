#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "cliffcheck/checks.hpp"
#include "cliffcheck/config.hpp"
#include "cliffcheck/report.hpp"

using report::Check;
using report::Status;
using report::VerificationReport;

namespace {

VerificationReport sample_report() {
  VerificationReport r;
  r.command = "iso";
  r.params = {{"p", "1"}, {"q", "1"}};
  r.seed = 7;
  Check c;
  c.name = "iso-structure-constants";
  c.claim = "twisted group algebra R[G]/(-1 = -1) = Cl(1,1)";
  c.status = Status::pass;
  c.numbers = {{"dimension", 4.0}, {"pairs_checked", 16.0}};
  r.add(c);
  return r;
}

}  // namespace

TEST_CASE("round trip is byte identical") {
  const auto r = sample_report();
  const std::string first = report::serialize(r);
  const auto parsed = report::from_json(nlohmann::json::parse(first));
  const std::string second = report::serialize(parsed);
  CHECK(first == second);
}

TEST_CASE("failing checks must carry a witness") {
  VerificationReport r;
  Check c;
  c.name = "x";
  c.claim = "plumbing";
  c.status = Status::fail;
  CHECK_THROWS_AS(r.add(c), std::logic_error);
  c.witness = "broken";
  CHECK_NOTHROW(r.add(c));
  CHECK(!r.all_passed());
}

TEST_CASE("claim mismatches do not fail the report") {
  VerificationReport r;
  Check c;
  c.name = "claim";
  c.claim = "Cl(4,4) = Mat16(R)";
  c.status = Status::claim_mismatch;
  c.witness = "dimensions differ";
  r.add(c);
  CHECK(r.all_passed());
}

TEST_CASE("checks are ordered by name regardless of insertion order") {
  VerificationReport r;
  Check b;
  b.name = "b-check";
  b.claim = "plumbing";
  b.status = Status::pass;
  Check a;
  a.name = "a-check";
  a.claim = "plumbing";
  a.status = Status::pass;
  r.add(b);
  r.add(a);
  CHECK(r.checks[0].name == "a-check");
  CHECK(r.checks[1].name == "b-check");
}

TEST_CASE("schema validation accepts generated reports") {
  const auto j = report::to_json(sample_report());
  CHECK(report::validate_schema(j).empty());
}

TEST_CASE("schema validation rejects malformed reports") {
  auto j = report::to_json(sample_report());

  auto broken = j;
  broken.erase("seed");
  CHECK(!report::validate_schema(broken).empty());

  broken = j;
  broken["checks"][0]["status"] = "maybe";
  CHECK(!report::validate_schema(broken).empty());

  broken = j;
  broken["checks"][0]["status"] = "fail";  // fail without witness
  CHECK(!report::validate_schema(broken).empty());

  broken = j;
  broken["checks"][0]["numbers"]["dim"] = "four";
  CHECK(!report::validate_schema(broken).empty());

  CHECK(!report::validate_schema(nlohmann::json::array()).empty());
}

TEST_CASE("shipped schema file stays in sync with the validator") {
  std::ifstream in("../../schema/report.schema.json");
  if (!in.good()) in = std::ifstream("schema/report.schema.json");
  REQUIRE_MESSAGE(in.good(), "schema file must ship in the repo");
  nlohmann::json schema;
  in >> schema;
  CHECK(schema.at("required") ==
        nlohmann::json({"artifact_version", "command", "params", "seed", "checks"}));
  const auto& check_schema = schema.at("properties").at("checks").at("items");
  CHECK(check_schema.at("required") ==
        nlohmann::json({"name", "claim", "status", "numbers"}));
  CHECK(check_schema.at("properties").at("status").at("enum") ==
        nlohmann::json({"pass", "fail", "claim-mismatch", "skipped"}));
}

TEST_CASE("wall time never reaches the serialized payload") {
  auto r = sample_report();
  r.wall_time_ms = 12345;
  const auto j = report::to_json(r);
  CHECK(!j.contains("wall_time_ms"));
  CHECK(report::serialize(r).find("12345") == std::string::npos);
}

TEST_CASE("aggregate run is deterministic for a fixed seed") {
  config::Config cfg;
  cfg.seed = 7;
  cfg.curvature_samples = 5;  // keep the double run cheap
  const std::string a = report::serialize(checks::run_all(cfg));
  const std::string b = report::serialize(checks::run_all(cfg));
  CHECK(a == b);
  CHECK(!a.empty());

  config::Config other = cfg;
  other.seed = 8;
  CHECK(report::serialize(checks::run_all(other)) != a);
}

TEST_CASE("run_gens and run_iso reports") {
  const auto gens = checks::run_gens(2, true);
  CHECK(gens.all_passed());
  bool saw_signature = false;
  for (const auto& c : gens.checks)
    if (c.name == "signature") {
      saw_signature = true;
      CHECK(c.numbers.at("plus") == 3);
      CHECK(c.numbers.at("minus") == 2);
    }
  CHECK(saw_signature);

  const auto iso = checks::run_iso(1, 1);
  CHECK(iso.all_passed());
  CHECK_THROWS_AS(checks::run_iso(3, 1), std::invalid_argument);

  // extended-family signature runs but honestly fails with the collision
  const auto ext = checks::run_iso(2, 1);
  CHECK(!ext.all_passed());
  CHECK(ext.checks.front().witness.find("collide") != std::string::npos);
}

TEST_CASE("config validation and file loading") {
  config::Config cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.tol_curvature = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

  const std::string path = "config_test.json";
  {
    std::ofstream out(path);
    out << R"({"seed": 11, "tolerances": {"curvature": 0.001}, "caps": {"group": 4096}})";
  }
  const auto loaded = config::from_json_file(path);
  CHECK(loaded.seed == 11);
  CHECK(loaded.tol_curvature == 0.001);
  CHECK(loaded.group_cap == 4096);
  CHECK(loaded.tol_orthogonality == 1e-10);  // untouched default
  std::remove(path.c_str());

  CHECK_THROWS_AS(config::from_json_file("missing.json"), std::runtime_error);
}
