// detect.hpp -- subgraph-copy search (not necessarily induced).
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

enum class SearchStatus { found, not_found, aborted };

struct DetectOptions {
  uint64_t node_budget = UINT64_MAX;  // search nodes before giving up
  bool force_generic = false;         // disable the structural fast paths
};

struct DetectResult {
  SearchStatus status = SearchStatus::not_found;
  std::vector<int> embedding;  // pattern vertex -> host vertex, when found
  uint64_t nodes = 0;
};

// is there a copy of f in host?
DetectResult find_copy(const Graph& host, const Pattern& f, const DetectOptions& opts = {});

// is there a copy of f in host+e that uses e?  (e must not be in host)
DetectResult find_copy_with_edge(const Graph& host, const Pattern& f, Edge e,
                                 const DetectOptions& opts = {});

// convenience wrappers; they run with an unlimited budget
bool contains_copy(const Graph& host, const Pattern& f);

/// pre: e in E(g) \ E(h); true iff h+e contains a copy of f using e
bool creates_copy(const Graph& g, const Graph& h, const Pattern& f, Edge e);

}  // namespace satlab
