#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "polyfield/coxeter.hpp"
#include "polyfield/report.hpp"

using namespace polyfield;
using nlohmann::ordered_json;

namespace {

BasicSystem sys(const char* shorthand) {
  return build_basic_system(parse_shorthand(shorthand));
}

}  // namespace

TEST_CASE("analyze report shape and frozen values") {
  ordered_json j = run_analyze(sys("[4,3,4,3]"), 3);
  CHECK(j["schema"] == "polyfield/1");
  CHECK(j["prime"] == 3);
  CHECK(j["order"] == 103680);
  CHECK(j["cgroup"]["is_cgroup"] == true);
  CHECK(j["polytope"]["facet"] == "{4,3,4}_(3,0,0)");
  CHECK(j["capacity_notices"].empty());
  CHECK(report_passes(j));
}

TEST_CASE("analyze surfaces C-group failure witnesses") {
  ordered_json j = run_analyze(sys("[inf,3,inf]"), 11);
  CHECK(j["cgroup"]["is_cgroup"] == false);
  std::string w = j["cgroup"]["witness"];
  CHECK(w.find("12") != std::string::npos);
  CHECK(w.find("6") != std::string::npos);
  CHECK(!j.contains("polytope"));
}

TEST_CASE("analyze of a spherical group") {
  ordered_json j = run_analyze(sys("[3,3]"), 5);
  CHECK(j["order"] == 24);
  bool spherical = false;
  for (const auto& t : j["classification"]["tags"])
    if (t == "Spherical(A3)") spherical = true;
  CHECK(spherical);
  CHECK(j["polytope"]["f_vector"] == ordered_json::array({4, 6, 4}));
}

TEST_CASE("reports are byte-identical across runs") {
  ordered_json a = run_analyze(sys("[3,3,4,3]"), 3);
  ordered_json b = run_analyze(sys("[3,3,4,3]"), 3);
  CHECK(a.dump() == b.dump());
}

TEST_CASE("capacity problems become notices, not wrong answers") {
  RunConfig cfg;
  cfg.max_enum = 10;
  ordered_json j = run_analyze(sys("[4,3,4,3]"), 3, cfg);
  CHECK(!j["capacity_notices"].empty());
  CHECK(!report_passes(j));
}

TEST_CASE("suite registry") {
  auto names = suite_names();
  CHECK(names.size() == 6);
  bool has_lemmas = false;
  for (const auto& n : names) has_lemmas = has_lemmas || n == "lemmas";
  CHECK(has_lemmas);
  CHECK_THROWS(run_suite("no-such-suite"));
}

TEST_CASE("euclidean suite passes and is deterministic") {
  ordered_json a = run_suite("euclidean");
  CHECK(report_passes(a));
  CHECK(a["schema"] == "polyfield/1");
  ordered_json b = run_suite("euclidean");
  CHECK(a.dump() == b.dump());
  // each claim carries an id, description and verdict
  for (const auto& c : a["claims"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("description"));
    CHECK(c.contains("pass"));
  }
}

TEST_CASE("lemmas suite passes") {
  CHECK(report_passes(run_suite("lemmas")));
}
