#include <doctest.h>

#include <sstream>

#include "json.hpp"
#include "rpade/errors.hpp"
#include "rpade/run.hpp"

using namespace rpade;

namespace {

RunConfig config(std::initializer_list<std::pair<const char*, const char*>> options) {
  RunConfig c;
  for (const auto& [k, v] : options) set_option(c, k, v);
  return c;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("run") {
  TEST_CASE("option parsing") {
    const auto c = config({{"R", "0.1"}, {"d", "[0, 1]"}, {"parity", "odd"}, {"state", "3"}, {"r2e", "true"}});
    CHECK(c.R == "0.1");
    CHECK(c.d_values == std::vector<unsigned>{0, 1});
    CHECK(c.parity == 1);
    CHECK(c.report_r2e);
    CHECK_NOTHROW(validate(c));

    RunConfig bad;
    CHECK_THROWS_AS(set_option(bad, "colour", "red"), InvalidConfig);
    CHECK_THROWS_AS(set_option(bad, "Dmin", "-1"), InvalidConfig);
    CHECK_THROWS_AS(set_option(bad, "parity", "sideways"), InvalidConfig);
    CHECK_THROWS_AS(set_option(bad, "exact", "maybe"), InvalidConfig);
    CHECK_THROWS_AS(set_option(bad, "format", "xml"), InvalidConfig);
    CHECK(option_names().size() >= 19);
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(validate(config({{"R", "0"}})), InvalidConfig);
    CHECK_THROWS_AS(validate(config({{"a", "-1"}})), InvalidConfig);
    CHECK_THROWS_AS(validate(config({{"Dmin", "1"}})), InvalidConfig);
    CHECK_THROWS_AS(validate(config({{"Dmin", "5"}, {"Dmax", "4"}})), InvalidConfig);
    CHECK_THROWS_AS(validate(config({{"d", "1,1"}})), InvalidConfig);
    CHECK_THROWS_AS(validate(config({{"digits", "0"}})), InvalidConfig);
    CHECK_THROWS_AS(validate(config({{"precision-bits", "32"}})), InvalidConfig);
    CHECK_THROWS_AS(validate(config({{"state", "1"}})), InvalidConfig);
    CHECK_THROWS_AS(validate(config({{"oracle-size", "3"}})), InvalidConfig);
    CHECK_THROWS_AS(validate(config({{"model", "inverted"}})), InvalidConfig);
    CHECK_THROWS_AS(validate(config({{"seed", "-0.02"}})), InvalidConfig);
    CHECK_THROWS_AS(validate(config({{"exact", "true"}, {"a", "2"}})), InvalidConfig);
    CHECK_NOTHROW(validate(config({{"exact", "true"}, {"a", "9/4"}})));
    CHECK_THROWS_AS(run(config({{"R", "abc"}})), InvalidConfig);
  }

  TEST_CASE("table rows leave missing dimensions blank") {
    const auto small = run(config({{"R", "0.1"}, {"d", "0,1"}, {"Dmin", "3"}, {"Dmax", "5"}, {"r2e", "true"}}));
    const std::string table = emit_table(small);
    CHECK(has_line(table, "D | d=0 | d=1"));
    CHECK(has_line(table, "3 |  | 2.3697606944397752864"));
    CHECK(small.exit_code == 0);

    const auto excited = run(config({{"R", "1"}, {"state", "2"}, {"d", "0,1"}, {"Dmin", "4"}, {"Dmax", "5"}}));
    CHECK(has_line(emit_table(excited), "4 | 24.086798714692429504 | 24.361407377724659906"));
  }

  TEST_CASE("csv output") {
    const auto report = run(config({{"R", "1"}, {"Dmin", "2"}, {"Dmax", "4"}}));
    const std::string csv = emit_csv(report);
    std::istringstream in(csv);
    std::string header, row;
    std::getline(in, header);
    CHECK(header == "D,root,residual,stable_digits");
    std::getline(in, row);
    CHECK(row.rfind("2,2.7879621782249229085,", 0) == 0);
    std::vector<std::string> roots;
    for (std::string line; std::getline(in, line);) {
      const auto a = line.find(','), b = line.find(',', a + 1);
      roots.push_back(line.substr(a + 1, b - a - 1));
    }
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == report.sequences[0].find(3)->root.to_fixed(20));
    CHECK(roots[1] == report.sequences[0].find(4)->root.to_fixed(20));

    const auto multi = run(config({{"R", "1"}, {"d", "0,1"}, {"Dmin", "3"}, {"Dmax", "3"}}));
    CHECK(emit_csv(multi).rfind("d,D,root,residual,stable_digits\n", 0) == 0);
  }

  TEST_CASE("json output parses") {
    const auto report = run(config({{"R", "1"}, {"Dmin", "2"}, {"Dmax", "8"}}));
    const auto j = nlohmann::json::parse(emit_json(report));
    CHECK(j["exit_code"] == 0);
    CHECK(j["sequences"][0]["entries"].size() == 7);
    CHECK(j["sequences"][0]["entries"][6]["root"] == "2.8848849919939971927");
    CHECK(j["sequences"][0]["stable_from_D"] == 7);
    CHECK(j["sequences"][0]["classification"] == "physical");
  }

  TEST_CASE("runs are deterministic") {
    const auto c = config({{"R", "1"}, {"d", "0,1"}, {"Dmin", "3"}, {"Dmax", "6"}, {"format", "json"}});
    CHECK(emit(run(c), OutputFormat::json) == emit(run(c), OutputFormat::json));
  }

  TEST_CASE("reported energies are rescaled") {
    const auto scaled = run(config({{"a", "4"}, {"R", "0.5"}, {"Dmin", "6"}, {"Dmax", "9"}}));
    CHECK(scaled.reported(scaled.sequences[0].last().root).to_fixed(20) == "11.539539967975988771");

    const auto r2e = run(config({{"R", "0.1"}, {"Dmin", "8"}, {"Dmax", "9"}, {"r2e", "true"}}));
    CHECK(r2e.reported(r2e.sequences[0].last().root).to_fixed(20) == "2.4674515390348030267");
  }

  TEST_CASE("a run without roots fails with exit code 2") {
    const auto report = run(config({{"R", "1"}, {"Dmin", "2"}, {"Dmax", "2"}, {"seed", "4"}}));
    CHECK(report.exit_code == 2);
    CHECK(report.sequences[0].failure);
  }
}
