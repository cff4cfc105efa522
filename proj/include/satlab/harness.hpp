// harness.hpp -- seeded experiment runner, property checks, CSV/JSON emission.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "satlab/bounds.hpp"
#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

struct ExperimentConfig {
  std::string pattern;
  std::vector<long long> ns;
  std::vector<double> ps;
  std::vector<std::string> methods;  // layered | kt | star | greedy | heuristic
  int trials = 1;
  uint64_t base_seed = 0;
  std::string policy = "rand";
  int restarts = 10;
  int threads = 0;  // 0 = hardware concurrency
  std::map<std::string, double> tolerances;  // per bound name; "default" fallback
  std::string csv_path, summary_path;

  static ExperimentConfig from_json_text(const std::string& text);
  std::string to_json_text() const;
};

struct TrialRecord {
  int cell = 0;
  std::string pattern, method, policy;
  long long n = 0;
  double p = 0;
  int trial = 0;
  uint64_t seed = 0;
  long long m = -1;  // -1 when skipped
  double m_over_n = 0;
  std::string verdict;  // pass | not_free | not_saturated | skipped
  std::string skip_reason;
  double wall_ms = 0;
  std::string params_json;  // method parameter snapshot, compact JSON
};

struct CellSummary {
  int cell = 0;
  std::string method;
  long long n = 0;
  double p = 0;
  int completed = 0, skipped = 0, failed = 0;
  double mean = 0, stddev = 0, min = 0, max = 0;  // of m/n over completed trials
};

struct BoundCheck {
  int cell = 0;
  std::string bound;
  std::string kind;  // lower | upper
  double reference = 0;  // per-n target after finite-n terms
  double tolerance = 0;
  double measured = 0;  // mean for upper checks, min for lower checks
  bool pass = true;
};

struct ExperimentOutput {
  std::vector<TrialRecord> records;  // cell-major, then trial order
  std::vector<CellSummary> cells;
  std::vector<BoundCheck> checks;
  bool all_pass = true;
};

// deterministic given the config: every trial is seeded by a stable hash of
// (base_seed, n, p, method, trial), so adding cells or trials never reshuffles
// existing ones, and thread count never changes any record
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

// joins measured m/n per cell against the applicable report entries; upper
// checks compare the cell mean, lower checks the cell minimum, both per n
std::vector<BoundCheck> compare_bounds(const ExperimentConfig& cfg, const Pattern& f,
                                       const std::vector<TrialRecord>& records,
                                       const std::vector<CellSummary>& cells);

std::string records_csv(const std::vector<TrialRecord>& records);
std::string summary_json_text(const ExperimentConfig& cfg, const ExperimentOutput& out);

struct RandomPropsReport {
  long long n = 0;
  double p = 0, eps = 0;
  int clique_size = 0;
  int trials = 0;
  int subset_size = 0;
  int cross_failures = 0, within_failures = 0, clique_failures = 0;
  int failed_trials = 0;
  double failure_rate = 0;
};

// samples disjoint ceil(log^2 n)-sized subsets per trial: cross and within
// edge counts must sit inside (1 +- eps) of their means, and a fresh subset
// must contain K_{clique_size}
RandomPropsReport check_random_properties(long long n, double p, int trials, double eps,
                                          int clique_size, uint64_t seed);

struct AlphaConcentrationReport {
  long long n = 0;
  double p = 0;
  int k = 0;
  bool skipped = false;  // n above the exact-search limit
  double target = 0;     // 2 log_{1/(1-p)} n
  std::vector<int> values;
  std::vector<bool> exact;
  double max_abs_deviation = 0;
  bool all_exact = true;
};

AlphaConcentrationReport check_alpha_concentration(long long n, double p, int k, int seeds,
                                                   uint64_t base_seed, long long n_limit = 150);

std::string random_props_json(const RandomPropsReport& rep);
std::string alpha_report_json(const AlphaConcentrationReport& rep);

}  // namespace satlab
