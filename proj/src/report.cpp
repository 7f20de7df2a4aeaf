#include "cliffcheck/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace report {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::claim_mismatch: return "claim-mismatch";
    case Status::skipped: return "skipped";
  }
  return "?";
}

Status status_from_name(const std::string& name) {
  if (name == "pass") return Status::pass;
  if (name == "fail") return Status::fail;
  if (name == "claim-mismatch") return Status::claim_mismatch;
  if (name == "skipped") return Status::skipped;
  throw std::invalid_argument("unknown status '" + name + "'");
}

void VerificationReport::add(Check c) {
  if (c.status == Status::fail && c.witness.empty())
    throw std::logic_error("failing check '" + c.name + "' must carry a witness");
  checks.push_back(std::move(c));
  std::sort(checks.begin(), checks.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) {
    return c.status == Status::pass || c.status == Status::claim_mismatch;
  });
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["artifact_version"] = r.artifact_version;
  j["command"] = r.command;
  j["params"] = r.params;
  j["seed"] = r.seed;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["claim"] = c.claim;
    jc["status"] = status_name(c.status);
    jc["numbers"] = c.numbers;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    j["checks"].push_back(std::move(jc));
  }
  return j;
}

VerificationReport from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.artifact_version = j.at("artifact_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params").get<std::map<std::string, std::string>>();
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& jc : j.at("checks")) {
    Check c;
    c.name = jc.at("name").get<std::string>();
    c.claim = jc.at("claim").get<std::string>();
    c.status = status_from_name(jc.at("status").get<std::string>());
    c.numbers = jc.at("numbers").get<std::map<std::string, double>>();
    if (jc.contains("witness")) c.witness = jc.at("witness").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string serialize(const VerificationReport& r) { return to_json(r).dump(2) + "\n"; }

std::vector<std::string> validate_schema(const nlohmann::json& j) {
  std::vector<std::string> errors;
  auto need = [&](const nlohmann::json& obj, const char* key, const char* type,
                  const std::string& where) {
    if (!obj.contains(key)) {
      errors.push_back(where + ": missing required field '" + key + "'");
      return false;
    }
    const auto& v = obj.at(key);
    const std::string t = type;
    const bool ok = (t == "string" && v.is_string()) || (t == "object" && v.is_object()) ||
                    (t == "array" && v.is_array()) ||
                    (t == "integer" && v.is_number_integer()) ||
                    (t == "number" && v.is_number());
    if (!ok) errors.push_back(where + ": field '" + key + "' must be a " + t);
    return ok;
  };

  if (!j.is_object()) return {"top level: must be an object"};
  need(j, "artifact_version", "string", "top level");
  need(j, "command", "string", "top level");
  need(j, "seed", "integer", "top level");
  if (need(j, "params", "object", "top level"))
    for (const auto& [k, v] : j.at("params").items())
      if (!v.is_string()) errors.push_back("params." + k + ": must be a string");
  if (need(j, "checks", "array", "top level")) {
    int idx = 0;
    for (const auto& jc : j.at("checks")) {
      const std::string where = "checks[" + std::to_string(idx++) + "]";
      if (!jc.is_object()) {
        errors.push_back(where + ": must be an object");
        continue;
      }
      need(jc, "name", "string", where);
      need(jc, "claim", "string", where);
      if (need(jc, "status", "string", where)) {
        const std::string s = jc.at("status").get<std::string>();
        if (s != "pass" && s != "fail" && s != "claim-mismatch" && s != "skipped")
          errors.push_back(where + ": status '" + s + "' not in the allowed set");
        if (s == "fail" && (!jc.contains("witness") || !jc.at("witness").is_string() ||
                            jc.at("witness").get<std::string>().empty()))
          errors.push_back(where + ": failing check must carry a witness");
      }
      if (need(jc, "numbers", "object", where))
        for (const auto& [k, v] : jc.at("numbers").items())
          if (!v.is_number()) errors.push_back(where + ".numbers." + k + ": must be a number");
      if (jc.contains("witness") && !jc.at("witness").is_string())
        errors.push_back(where + ": witness must be a string");
    }
  }
  return errors;
}

std::string render_table(const VerificationReport& r) {
  std::ostringstream out;
  out << "command: " << r.command;
  for (const auto& [k, v] : r.params) out << "  " << k << "=" << v;
  out << "  seed=" << r.seed << "\n";

  std::size_t width = 4;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  for (const auto& c : r.checks) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << c.name
        << std::setw(16) << status_name(c.status) << c.claim << "\n";
    for (const auto& [k, v] : c.numbers) {
      std::ostringstream num;
      num << std::setprecision(15) << v;
      out << std::string(width + 2, ' ') << k << " = " << num.str() << "\n";
    }
    if (!c.witness.empty())
      out << std::string(width + 2, ' ') << "witness: " << c.witness << "\n";
  }
  out << (r.all_passed() ? "RESULT: all checks passed" : "RESULT: failures present");
  if (r.wall_time_ms > 0) out << "  (" << r.wall_time_ms << " ms)";
  out << "\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  out << bytes;
  if (!out) throw std::ios_base::failure("write failure on '" + path + "'");
}

}  // namespace report
