#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "plocal/config.hpp"
#include "plocal/report.hpp"
#include "plocal/shalikazeta.hpp"
#include "plocal/suites.hpp"

using namespace plocal;

namespace {

// exit codes
constexpr int kOk = 0, kFailed = 1, kError = 2;

struct Options {
  std::string config_path;
  std::string out_path;
  std::map<std::string, std::string> flags;  // config key -> raw value
};

void add_config_flags(CLI::App* app, Options& o) {
  app->add_option("--config", o.config_path, "flat key = value config file");
  app->add_option("--out", o.out_path, "write the JSON output here instead of stdout");
  for (const auto& key : config_keys()) {
    std::string flag = "--" + key;
    for (auto& ch : flag)
      if (ch == '_') ch = '-';
    app->add_option_function<std::string>(flag, [&o, key](const std::string& v) { o.flags[key] = v; },
                                          "config key " + key);
  }
}

// defaults < file < environment < flags
SuiteConfig resolve(const Options& o) {
  SuiteConfig c;
  if (!o.config_path.empty()) load_config_file(c, o.config_path);
  apply_env(c);
  for (const auto& [k, v] : o.flags) apply_setting(c, k, v);
  validate(c);
  return c;
}

void emit(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out_path, std::ios::binary);
  if (!out) throw ConfigError("io", "cannot write " + o.out_path);
  out << text;
}

int fail(const Options& o, const std::string& kind, const std::string& msg) {
  std::string text = error_json(kind, msg).dump(2) + "\n";
  std::cerr << "error: " << kind << ": " << msg << "\n";
  try {
    emit(o, text);
  } catch (const std::exception&) {
    std::cout << text;
  }
  return kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic local theory verification suites"};
  app.require_subcommand(1);
  Options run_o, list_o, zeta_o, enum_o;
  auto* run = app.add_subcommand("run", "run verification suites and write a report");
  add_config_flags(run, run_o);
  auto* list = app.add_subcommand("list", "list the suite catalog");
  list->add_option("--out", list_o.out_path, "write the JSON output here instead of stdout");
  auto* zeta = app.add_subcommand("zeta", "n = 1 zeta integrals, closed form and oracle");
  add_config_flags(zeta, zeta_o);
  auto* enumerate = app.add_subcommand("enumerate", "list the refinements of a generic Satake parameter");
  add_config_flags(enumerate, enum_o);
  CLI11_PARSE(app, argc, argv);

  Options* o = run->parsed() ? &run_o : list->parsed() ? &list_o : zeta->parsed() ? &zeta_o : &enum_o;
  try {
    if (list->parsed()) {
      nlohmann::ordered_json j;
      j["schema_version"] = kReportSchemaVersion;
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& s : suite_catalog())
        arr.push_back({{"suite", s.name}, {"anchor", s.anchor}, {"summary", s.summary}});
      j["suites"] = arr;
      emit(*o, j.dump(2) + "\n");
      return kOk;
    }
    SuiteConfig cfg = resolve(*o);
    if (run->parsed()) {
      Report r = run_suites(cfg);
      emit(*o, report_text(r));
      return r.all_passed() ? kOk : kFailed;
    }
    if (zeta->parsed()) {
      auto j = zeta_table(cfg);
      emit(*o, j.dump(2) + "\n");
      for (const auto& row : j["rows"])
        if (!row["agree"].get<bool>()) return kFailed;
      return kOk;
    }
    emit(*o, enumerate_refinements(cfg).dump(2) + "\n");
    return kOk;
  } catch (const ConfigError& e) {
    return fail(*o, e.kind, e.what());
  } catch (const TruncationError& e) {
    return fail(*o, "truncation", e.what());
  } catch (const std::exception& e) {
    return fail(*o, "internal", e.what());
  }
}
