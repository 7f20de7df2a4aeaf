#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace report {

inline constexpr const char* kArtifactVersion = "1.0.0";

enum class Status { pass, fail, claim_mismatch, skipped };

std::string status_name(Status s);
Status status_from_name(const std::string& name);

struct Check {
  std::string name;
  std::string claim;  // the certified claim, or "plumbing"
  Status status = Status::skipped;
  std::map<std::string, double> numbers;
  std::string witness;  // mandatory when status == fail

  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::string command;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  std::vector<Check> checks;  // kept sorted by name
  std::string artifact_version = kArtifactVersion;
  std::int64_t wall_time_ms = 0;  // stdout only; never serialized

  void add(Check c);  // enforces the fail-carries-witness invariant
  bool all_passed() const;  // claim-mismatch entries do not count as failures
};

/// Deterministic serialization: sorted keys, no timing fields.
nlohmann::json to_json(const VerificationReport& r);
VerificationReport from_json(const nlohmann::json& j);

std::string serialize(const VerificationReport& r);  // dump with indent 2 + '\n'

/// Structural validation mirroring schema/report.schema.json; returns the
/// list of violations (empty when valid).
std::vector<std::string> validate_schema(const nlohmann::json& j);

/// Human-readable table for stdout.
std::string render_table(const VerificationReport& r);

void write_file(const std::string& path, const std::string& bytes);

}  // namespace report
