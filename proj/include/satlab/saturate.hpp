// saturate.hpp -- saturation checking, greedy completion, exact minimum search.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satlab/detect.hpp"
#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"
#include "satlab/rng.hpp"

namespace satlab {

enum class VerifyStatus { skipped, pass, not_free, not_saturated };

struct VerifyReport {
  VerifyStatus status = VerifyStatus::skipped;
  std::vector<int> offending_copy;        // pattern embedding, when not_free
  std::optional<Edge> non_creating_edge;  // when not_saturated
};

const char* verify_status_name(VerifyStatus s);

// h must be a subset of E(g); passes iff h is f-free and every edge of
// E(g) \ h creates a copy of f
VerifyReport verify_saturated(const Graph& g, const std::vector<Edge>& h, const Pattern& f);

enum class Policy { lexicographic, random_permutation, min_degree_first };
Policy parse_policy(const std::string& name);  // lex | rand | mindeg
const char* policy_name(Policy p);

struct SaturationResult {
  std::vector<Edge> edges;  // sorted lexicographically
  long long m = 0;
  std::string method;
  VerifyReport verify;  // skipped unless the caller ran verification
};

// single pass over the candidate edges in policy order; each edge is added
// unless it would create a copy of f.  Degrees only grow, so a rejected edge
// stays rejected and one pass yields a saturated subgraph.
// pre: h0 ⊆ E(g) and h0 is f-free.
SaturationResult greedy_complete(const Graph& g, const std::vector<Edge>& h0,
                                 const Pattern& f, Policy policy, const RngSpec& rng);

// best of `restarts` completions from the empty subgraph: independent random
// permutations, except the second restart which runs the min-degree order
SaturationResult heuristic_min_sat(const Graph& g, const Pattern& f, int restarts,
                                   const RngSpec& rng);

struct ExactOptions {
  uint64_t node_budget = 0;        // 0 = unlimited
  int exhaustive_edge_limit = 26;  // hosts above this need an explicit budget
};

enum class ExactStatus { optimal, budget_exhausted };

struct ExactResult {
  ExactStatus status = ExactStatus::optimal;
  long long m = 0;
  std::vector<Edge> witness;  // lexicographically least optimal edge set when
                              // the search completed
  uint64_t nodes = 0;
};

// exact minimum saturated subgraph via branch and bound over edge
// include/exclude decisions.  Throws if no f-free spanning subgraph exists
// (f edgeless and small enough to embed).
ExactResult exact_min_sat(const Graph& g, const Pattern& f, const ExactOptions& opts = {});

}  // namespace satlab
