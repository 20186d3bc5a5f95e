// Case specifications and the task runner behind the command line tool.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hessgkm {

struct CaseSpec {
  std::string type = "A";
  int rank = 2;
  /// 1-based simple root indices.
  std::vector<int> theta;
  /// One of full, simple, minimal; empty when ideal_roots is used.
  std::string ideal = "full";
  std::vector<std::vector<std::int64_t>> ideal_roots;
  std::optional<std::vector<int>> xi;
  std::string mode = "both";
  std::vector<std::string> tasks{"betti"};
  std::uint64_t seed = 12345;
  std::string cache_dir;
  bool no_cache = false;
  bool verbose = false;
  std::string out_dir = ".";
};

const std::vector<std::string>& known_tasks();

/// Parses a keyword or a JSON list of coefficient vectors into the spec.
void set_ideal(CaseSpec& spec, const std::string& text);
/// "all" or a comma-separated list of 1-based indices.
std::vector<int> parse_index_list(const std::string& text, int rank, const std::string& field);

nlohmann::json to_json(const CaseSpec& spec);
/// Throws InvalidSpec naming the offending field.
CaseSpec spec_from_json(const nlohmann::json& j);

struct RunResult {
  int exit_code = 0;
  nlohmann::json report;
  nlohmann::json timings;
  std::string csv;
};

/// Runs every requested task. Throws InvalidSpec on input errors; fills
/// exit_code with 0 (pass or skipped) or 2 (some check failed).
RunResult run(const CaseSpec& spec, std::ostream& log);

/// run() plus report.json, timings.json and betti.csv in spec.out_dir.
int run_and_write(const CaseSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace hessgkm
