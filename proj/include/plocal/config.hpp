#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace plocal {

struct ConfigError : std::runtime_error {
  ConfigError(std::string kind, const std::string& what) : std::runtime_error(what), kind(std::move(kind)) {}
  std::string kind;
};

// Keys (file, env PLOCAL_<KEY>, flag --<key>):
//   n                 1..3                  default 1
//   p                 2, 3 or 5             default 3
//   beta              1..2                  default 1
//   shells            >= 1                  default 4
//   samples           >= 1                  default 200
//   seed              64-bit unsigned       default 20240611
//   family_precision  M,D                   default 8,4
//   suites            comma list, empty=all default empty
//   timing            0/1                   default 0 (wall time kept out of reports)
struct SuiteConfig {
  int n = 1;
  long p = 3;
  int beta = 1;
  int shells = 4;
  int samples = 200;
  uint64_t seed = 20240611;
  int family_m = 8;
  int family_d = 4;
  std::vector<std::string> suites;
  bool timing = false;
};

const std::vector<std::string>& config_keys();
// throws ConfigError ("unknown key", "invalid value", "invalid prime")
void apply_setting(SuiteConfig& c, const std::string& key, const std::string& value);
// flat "key = value" lines; '#' starts a comment
void load_config_file(SuiteConfig& c, const std::string& path);
void apply_env(SuiteConfig& c);
void validate(const SuiteConfig& c);
nlohmann::ordered_json config_json(const SuiteConfig& c);

}  // namespace plocal
