#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "plocal/config.hpp"

namespace plocal {

constexpr int kReportSchemaVersion = 1;

struct CaseResult {
  std::string name;
  std::string inputs_digest;  // FNV-1a 64 of the case inputs, hex
  std::string expected_from;  // where the expected value comes from
  bool pass = false;
  std::string witness;  // empty on pass
};

struct SuiteReport {
  std::string name;
  std::string anchor;
  std::vector<CaseResult> cases;
  double wall_ms = 0;
  size_t passed() const;
  size_t failed() const;
};

struct Report {
  SuiteConfig config;
  std::vector<SuiteReport> suites;  // sorted by name
  bool all_passed() const;
};

std::string fnv1a_hex(const std::string& s);

// Accumulates cases for one suite.
class SuiteRecorder {
 public:
  SuiteRecorder(std::string name, std::string anchor);
  void record(const std::string& case_name, const std::string& inputs, const std::string& expected_from, bool pass,
              const std::string& witness = "");
  SuiteReport finish() { return std::move(r_); }

 private:
  SuiteReport r_;
};

// Stable field order; wall time only when config.timing is set.
nlohmann::ordered_json report_json(const Report& r);
std::string report_text(const Report& r);
nlohmann::ordered_json error_json(const std::string& kind, const std::string& message);

}  // namespace plocal
