#include "plocal/report.hpp"

#include <cstdint>
#include <cstdio>

namespace plocal {

size_t SuiteReport::passed() const {
  size_t k = 0;
  for (const auto& c : cases) k += c.pass;
  return k;
}

size_t SuiteReport::failed() const { return cases.size() - passed(); }

bool Report::all_passed() const {
  for (const auto& s : suites)
    if (s.failed()) return false;
  return true;
}

std::string fnv1a_hex(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SuiteRecorder::SuiteRecorder(std::string name, std::string anchor) {
  r_.name = std::move(name);
  r_.anchor = std::move(anchor);
}

void SuiteRecorder::record(const std::string& case_name, const std::string& inputs, const std::string& expected_from,
                           bool pass, const std::string& witness) {
  r_.cases.push_back({case_name, fnv1a_hex(inputs), expected_from, pass, pass ? "" : witness});
}

nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["config"] = config_json(r.config);
  size_t passed = 0, failed = 0;
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& s : r.suites) {
    nlohmann::ordered_json js;
    js["suite"] = s.name;
    js["anchor"] = s.anchor;
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const auto& c : s.cases) {
      nlohmann::ordered_json jc;
      jc["case"] = c.name;
      jc["inputs_digest"] = c.inputs_digest;
      jc["expected_from"] = c.expected_from;
      jc["outcome"] = c.pass ? "pass" : "fail";
      if (!c.pass) jc["witness"] = c.witness;
      cases.push_back(jc);
    }
    js["cases"] = cases;
    js["passed"] = s.passed();
    js["failed"] = s.failed();
    if (r.config.timing) js["wall_ms"] = s.wall_ms;
    passed += s.passed();
    failed += s.failed();
    suites.push_back(js);
  }
  j["suites"] = suites;
  j["passed"] = passed;
  j["failed"] = failed;
  j["status"] = failed ? "fail" : "pass";
  return j;
}

std::string report_text(const Report& r) { return report_json(r).dump(2) + "\n"; }

nlohmann::ordered_json error_json(const std::string& kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

}  // namespace plocal
