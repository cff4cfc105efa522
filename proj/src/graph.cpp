#include "satlab/graph.hpp"

#include <stdexcept>

namespace satlab {

Graph::Graph(int n) : n_(n), rows_(n, Bitset(n)), degrees_(n, 0) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    g.rows_[u] = Bitset::full(n);
    g.rows_[u].reset(u);
    g.degrees_[u] = n - 1;
  }
  g.m_ = (long long)n * (n - 1) / 2;
  return g;
}

Graph Graph::random(int n, double p, const RngSpec& rng) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("graph: p outside [0,1]");
  Graph g(n);
  auto eng = make_engine(rng);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bernoulli(eng, p)) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("graph: vertex index out of range");
    g.add_edge(e.u, e.v);
  }
  return g;
}

bool Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("graph: loop rejected");
  if (rows_[u].test(v)) return false;
  rows_[u].set(v);
  rows_[v].set(u);
  ++degrees_[u];
  ++degrees_[v];
  ++m_;
  return true;
}

bool Graph::remove_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("graph: loop rejected");
  if (!rows_[u].test(v)) return false;
  rows_[u].reset(v);
  rows_[v].reset(u);
  --degrees_[u];
  --degrees_[v];
  --m_;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_t(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].next(u); v != -1; v = rows_[u].next(v))
      out.push_back({u, v});
  return out;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& z) {
  VertexSet acc = Bitset::full(g.n());
  z.for_each([&](int v) { acc &= g.row(v); });
  return acc;
}

long long edges_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  // ordered count minus the double-counted part (both endpoints in s ∩ t)
  long long ordered = 0;
  s.for_each([&](int u) { ordered += intersection_count(g.row(u), t); });
  Bitset both = s & t;
  long long inner = 0;
  both.for_each([&](int u) { inner += intersection_count(g.row(u), both); });
  return ordered - inner / 2;
}

}  // namespace satlab
