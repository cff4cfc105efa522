// graph.hpp -- simple undirected graphs on {0..n-1} backed by adjacency bit rows.
//
// Published Graph values are treated as immutable: algorithms that grow a
// subgraph (greedy completion, the exact solver) mutate private copies only.
#pragma once

#include <utility>
#include <vector>

#include "satlab/bitset.hpp"
#include "satlab/rng.hpp"

namespace satlab {

struct Edge {
  int u = 0, v = 0;  // normalized u < v
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// vertex subset of a host graph's range
using VertexSet = Bitset;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  // G(n,p): one Bernoulli draw per pair (u,v), u < v, in row-major order
  static Graph random(int n, double p, const RngSpec& rng);
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  long long m() const { return m_; }
  bool has_edge(int u, int v) const { return rows_[u].test(v); }
  int degree(int v) const { return degrees_[v]; }
  const Bitset& row(int v) const { return rows_[v]; }

  // returns false if the edge was already present; loops are invalid
  bool add_edge(int u, int v);
  // returns false if the edge was absent; used by backtracking solvers
  bool remove_edge(int u, int v);

  std::vector<Edge> edges() const;  // sorted lexicographically
  VertexSet vertices() const { return Bitset::full(n_); }

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<Bitset> rows_;
  std::vector<int> degrees_;
};

// N_G(Z): vertices adjacent to every member of z (row intersection; members of
// z never qualify because no vertex is self-adjacent).  Empty z -> all vertices.
VertexSet common_neighborhood(const Graph& g, const VertexSet& z);

// number of edges with one endpoint in s and the other in t, each edge once
long long edges_between(const Graph& g, const VertexSet& s, const VertexSet& t);

}  // namespace satlab
