#include "plocal/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "plocal/suites.hpp"

namespace plocal {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

template <class T>
T parse_num(const std::string& key, const std::string& v) {
  T out{};
  auto s = trim(v);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ConfigError("invalid value", key + ": not an integer: '" + v + "'");
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{"n", "p", "beta", "shells", "samples", "seed", "family_precision", "suites", "timing"};
  return keys;
}

void apply_setting(SuiteConfig& c, const std::string& key, const std::string& value) {
  if (key == "n") {
    c.n = parse_num<int>(key, value);
  } else if (key == "p") {
    c.p = parse_num<long>(key, value);
  } else if (key == "beta") {
    c.beta = parse_num<int>(key, value);
  } else if (key == "shells") {
    c.shells = parse_num<int>(key, value);
  } else if (key == "samples") {
    c.samples = parse_num<int>(key, value);
  } else if (key == "seed") {
    c.seed = parse_num<uint64_t>(key, value);
  } else if (key == "family_precision") {
    auto parts = split(value, ',');
    if (parts.size() != 2) throw ConfigError("invalid value", "family_precision: expected M,D");
    c.family_m = parse_num<int>(key, parts[0]);
    c.family_d = parse_num<int>(key, parts[1]);
  } else if (key == "suites") {
    c.suites = split(value, ',');
  } else if (key == "timing") {
    std::string v = trim(value);
    if (v == "1" || v == "true") c.timing = true;
    else if (v == "0" || v == "false") c.timing = false;
    else throw ConfigError("invalid value", "timing: expected 0 or 1");
  } else {
    throw ConfigError("unknown key", "unknown config key '" + key + "'");
  }
}

void load_config_file(SuiteConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("io", "cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("invalid value", path + ":" + std::to_string(lineno) + ": expected key = value");
    apply_setting(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void apply_env(SuiteConfig& c) {
  for (const auto& key : config_keys()) {
    std::string name = "PLOCAL_" + key;
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::toupper(ch); });
    if (const char* v = std::getenv(name.c_str())) apply_setting(c, key, v);
  }
}

void validate(const SuiteConfig& c) {
  if (c.n < 1 || c.n > 3) throw ConfigError("invalid value", "n must be in 1..3");
  if (c.p != 2 && c.p != 3 && c.p != 5) throw ConfigError("invalid prime", "p must be 2, 3 or 5, got " + std::to_string(c.p));
  if (c.beta < 1 || c.beta > 2) throw ConfigError("invalid value", "beta must be 1 or 2");
  if (c.shells < 1) throw ConfigError("invalid value", "shells must be positive");
  if (c.samples < 1) throw ConfigError("invalid value", "samples must be positive");
  if (c.family_m < 1 || c.family_d < 1 || c.family_m > 30 || c.family_d > 12)
    throw ConfigError("invalid value", "family_precision out of range");
  for (const auto& s : c.suites)
    if (!find_suite(s)) throw ConfigError("unknown suite", "unknown suite '" + s + "'");
}

nlohmann::ordered_json config_json(const SuiteConfig& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["p"] = c.p;
  j["beta"] = c.beta;
  j["shells"] = c.shells;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["family_precision"] = {c.family_m, c.family_d};
  std::vector<std::string> s = c.suites;
  std::sort(s.begin(), s.end());
  j["suites"] = s;
  j["timing"] = c.timing;
  return j;
}

}  // namespace plocal
