// Command-line front end over the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "rpade/rpade.h"

namespace {

constexpr int kInvalidConfig = 3;

struct ConfigDeleter {
  void operator()(rpade_config* c) const { rpade_config_free(c); }
};
struct ReportDeleter {
  void operator()(rpade_report* r) const { rpade_report_free(r); }
};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ",";
    out += s;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riccati-Pade eigenvalues of the bounded oscillator"};
  app.set_config("--config", "", "Key-value configuration file; flags override it");
  app.set_version_flag("--version", rpade_version());

  std::map<std::string, std::string> values;
  std::vector<std::string> d_values;
  std::map<std::string, bool> flags{
      {"exact", false}, {"scan-negative", false}, {"r2e", false}, {"stop-when-stable", false}};

  const std::vector<std::pair<std::string, std::string>> valued = {
      {"model", "Potential: bounded, inverted or harmonic"},
      {"a", "Oscillator strength (decimal or p/q)"},
      {"R", "Wall position (decimal or p/q)"},
      {"parity", "even or odd"},
      {"l", "Angular momentum (selects the central-field problem)"},
      {"state", "State index n"},
      {"Dmin", "Smallest Hankel dimension"},
      {"Dmax", "Largest Hankel dimension"},
      {"digits", "Reported significant digits"},
      {"precision-bits", "Initial working precision in bits"},
      {"seed", "Starting energy, overriding the oracle seed"},
      {"oracle-basis", "weighted, sine or none"},
      {"oracle-size", "Oracle basis size"},
      {"format", "table, csv or json"},
  };
  for (const auto& [name, help] : valued) app.add_option("--" + name, values[name], help);
  app.add_option("--d", d_values, "Hankel displacement (repeatable or comma separated)")->delimiter(',');
  app.add_flag("--exact", flags["exact"], "Isolate the first root with exact arithmetic");
  app.add_flag("--scan-negative", flags["scan-negative"], "Accept negative (spurious) roots");
  app.add_flag("--r2e", flags["r2e"], "Report R^2 E instead of E");
  app.add_flag("--stop-when-stable", flags["stop-when-stable"], "Stop once all digits are stable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidConfig;
  }

  std::unique_ptr<rpade_config, ConfigDeleter> config(rpade_config_new());
  auto set = [&](const std::string& key, const std::string& value) {
    if (rpade_config_set(config.get(), key.c_str(), value.c_str()) != RPADE_OK) {
      std::cerr << "error: " << rpade_last_error() << "\n";
      return false;
    }
    return true;
  };
  for (const auto& [name, help] : valued) {
    if (app.count("--" + name) > 0 && !set(name, values[name])) return kInvalidConfig;
  }
  if (!d_values.empty() && !set("d", join(d_values))) return kInvalidConfig;
  for (const auto& [name, on] : flags) {
    if (app.count("--" + name) > 0 && !set(name, on ? "true" : "false")) return kInvalidConfig;
  }

  rpade_report* raw = nullptr;
  const rpade_status status = rpade_run(config.get(), &raw);
  std::unique_ptr<rpade_report, ReportDeleter> report(raw);
  if (!report) {
    std::cerr << "error: " << rpade_last_error() << "\n";
    return status == RPADE_INVALID_CONFIG || status == RPADE_INVALID_ARGUMENT ? kInvalidConfig : 1;
  }
  std::fputs(rpade_report_emit(report.get(), rpade_config_format(config.get())), stdout);
  if (status != RPADE_OK) std::cerr << "error: " << rpade_last_error() << "\n";
  return rpade_report_exit_code(report.get());
}
