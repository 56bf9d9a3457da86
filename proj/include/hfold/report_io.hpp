#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hfold/verify.hpp"

namespace hfold::report {

using Json = nlohmann::ordered_json;

// Literal helpers shared by the config parser and the command line:
// "7" or "3..6" for ranges, "1,4,7..9" for value lists.
std::pair<Int, Int> parse_range(std::string_view text);
std::vector<Int> parse_int_list(std::string_view text);

// The config echo embedded in report bodies. Deliberately excludes the
// worker count and anything else that must not influence report content.
Json config_json(const verify::GridConfig& cfg);

Json record_json(const verify::InstanceRecord& rec);

// Everything that must be byte-identical across reruns and worker counts.
Json report_body_json(const verify::VerifyReport& rep);

// The full persisted report: {"body": ..., "run": {wall_ms, workers}}.
Json report_file_json(const verify::VerifyReport& rep);

// Flat per-instance table: r,k,A,H,claim,regime,formula,enumerated,verdict
// with A and H quoted as space-separated values.
std::string render_csv(const std::vector<verify::InstanceRecord>& recs);

// Flat "key = value" campaign config text. '#' starts a comment. Keys:
//   k, elements, r, t            ranges ("lo..hi" or single value)
//   h_window                     full | main | zero-main | explicit range
//   regimes                      comma-separated regime names
//   direct                       true | false
//   claims                       comma-separated claim names
//   require_zero, dedupe         true | false
//   max_instances, workers, sample, seed   integers
// Unknown keys or malformed values throw ConfigError.
void apply_config_entry(verify::GridConfig& cfg, std::string_view key,
                        std::string_view value);
// Entries are applied on top of `base`, so callers can preload defaults
// (e.g. a worker count from the environment).
verify::GridConfig parse_grid_config(std::istream& in,
                                     verify::GridConfig base = {});

} // namespace hfold::report
