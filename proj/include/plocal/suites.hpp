#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "plocal/config.hpp"
#include "plocal/report.hpp"

namespace plocal {

struct SuiteInfo {
  std::string name;
  std::string anchor;   // the statement the suite checks, by role
  std::string summary;
  std::function<SuiteReport(const SuiteConfig&)> run;
};

// sorted by name
const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo* find_suite(const std::string& name);

// Runs the selected suites (all when cfg.suites is empty), concurrently when
// OpenMP is available. TruncationError escapes; any other exception inside a
// suite becomes a failed case.
Report run_suites(const SuiteConfig& cfg);

// n = 1 zeta values at cfg.p, cfg.beta for every character of conductor 1 or p^beta
nlohmann::ordered_json zeta_table(const SuiteConfig& cfg);
// every refinement of the generic AG Satake parameter at (cfg.n, cfg.p)
nlohmann::ordered_json enumerate_refinements(const SuiteConfig& cfg);

}  // namespace plocal
