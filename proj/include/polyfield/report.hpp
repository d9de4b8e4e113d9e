#ifndef POLYFIELD_REPORT_HPP
#define POLYFIELD_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyfield/cgroup.hpp"

namespace polyfield {

struct RunConfig {
  std::uint64_t max_enum = kDefaultEnumCap;
  std::string cache_dir;
};

/// Analyze one diagram mod p: build, classify, C-group test, polytope
/// summary and intersection profile (when applicable). Deterministic for a
/// fixed (diagram, p, config); capacity problems are recorded as notices.
nlohmann::ordered_json run_analyze(const BasicSystem& s, std::uint32_t p,
                                   const RunConfig& cfg = {});

/// Named suites: three-infinity, loctor5, loctor6, covers, euclidean,
/// lemmas. Each returns the aggregate claim report.
nlohmann::ordered_json run_suite(const std::string& name,
                                 const RunConfig& cfg = {});

std::vector<std::string> suite_names();

/// True iff every claim in the report passes.
bool report_passes(const nlohmann::ordered_json& report);

}  // namespace polyfield

#endif
