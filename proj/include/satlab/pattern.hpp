// pattern.hpp -- forbidden-pattern mini-language and structural analysis.
//
// Grammar:  complete:r | kst:s,t | star:t | starforest:t1,...,tk |
//           cycle:k | path:k | g6:<graph6> | edges:u-v,u-v,...
// path:k and cycle:k count vertices; numeric parameters must be >= 1
// (cycle needs k >= 3).
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  size_t pos;
};

struct ComponentBipartition {
  Bitset small_side;  // |small| <= |large|; for tied components, the resolved choice
  Bitset large_side;
  bool tied = false;  // both sides equal size, orientation free
};

struct BipartiteInfo {
  std::vector<ComponentBipartition> comps;  // aligned with Pattern::components
  int a = 0;      // max small-side size over components (orientation independent)
  int delta = 0;  // min degree among small-side vertices of components attaining a
  int q = 0;      // number of components attaining a
};

struct Pattern {
  Graph graph;
  std::string source;                 // original pattern text
  std::vector<Bitset> components;
  bool has_isolated = false;
  std::optional<BipartiteInfo> bip;   // resolved at p = 1/2; absent if non-bipartite
                                      // or isolated vertices break the hypothesis
  Bitset max_independent;             // one maximum independent set S
  int indep_size = 0;
  std::optional<int> kt_b, kt_d;      // |V|-|S|-1 and min_{x not in S} |N(x) ∩ S|;
                                      // absent for edgeless patterns
  std::optional<int> r, w;            // min over edges of max-degree, resp. of
                                      // max-degree + common-neighbor count
  std::optional<std::pair<int, int>> kst;          // set iff the pattern is K_{s,t}, s <= t
  std::optional<std::vector<int>> star_degrees;    // set iff a disjoint union of stars
                                                   // K_{1,t_i}, t_i >= 1, sorted descending
};

struct PatternOptions {
  int mis_vertex_limit = 24;  // exact independent-set search refuses above this
};

Pattern parse_pattern(const std::string& text, const PatternOptions& opts = {});

// analysis of an already-built graph (what parse_pattern runs internally)
Pattern analyze_pattern(Graph g, std::string source, const PatternOptions& opts = {});

// Bipartition with orientation ties resolved to minimize the random-host upper
// bound constant (delta-1)/p^(a-1) - (delta-2a+1)/2 at this p, enumerating all
// 2^(#tied components attaining a) assignments.  Throws if the pattern is not
// bipartite (message names an odd cycle) or has isolated vertices.
BipartiteInfo analyze_bipartition(const Pattern& f, double p);

// exact max independent set via branch and bound (degree-descending branching,
// greedy-clique-cover bound); used for S, kt_b, kt_d
Bitset max_independent_set(const Graph& g, int vertex_limit = 24);

}  // namespace satlab
