#pragma once

// Check registry, suite execution and report emission.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "invofix/report.hpp"

namespace invofix {

enum class Family { m_number, tables, bracket, lemma, fomega, even, odd };

std::string_view to_string(Family f);

struct SuiteConfig {
  int n_lo = 5;
  int n_hi = 5;
  std::optional<int> m;  // overrides the default m values of the n-indexed checks
  unsigned p_max = 12;
  int q_max = 15;
  bool strict_paper = false;
  int jobs = 1;
  bool timings = false;
  std::vector<Family> families;
};

// Throws UsageError on an invalid configuration.
void validate(const SuiteConfig& config);

struct Check {
  Family family;
  std::string id;
  Params params;
  std::function<CheckReport()> run;
};

// Immutable list of checks for the configuration, in registry order.
std::vector<Check> build_registry(const SuiteConfig& config);

struct SuiteReport {
  std::vector<CheckReport> checks;  // sorted by (id, params)
  std::size_t count(Status s) const;
};

// Runs every check on up to `jobs` threads and merges deterministically.
// m-independence of the even-n final numbers is derived after the run.
SuiteReport run_checks(const std::vector<Check>& checks, int jobs);
SuiteReport run_suite(const SuiteConfig& config);

// 0, or 2 on any fail (and on paper_mismatch with strict_paper).
int exit_code(const SuiteReport& report, bool strict_paper);

// Schema "invofix/1"; elapsed_ms is written only when timings is set.
std::string to_json(const SuiteReport& report, bool timings = false);
// One table per check id.
std::string to_markdown(const SuiteReport& report, bool timings = false);
std::string summary_line(const SuiteReport& report);

// Parses "N" or "A..B".
std::pair<int, int> parse_range(const std::string& text);

// Even-n final numbers use M(n-4)+9, +10 and +16; odd n uses n+4, n+6, n+8.
std::vector<int> default_m_values(int n);

}  // namespace invofix
