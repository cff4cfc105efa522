#include "satlab/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "satlab/graph_io.hpp"

namespace satlab {

namespace {

long long parse_int(const std::string& s, size_t& pos) {
  size_t start = pos;
  long long val = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    val = val * 10 + (s[pos] - '0');
    if (val > 1000000) throw ParseError("pattern: number too large", start);
    ++pos;
  }
  if (pos == start) throw ParseError("pattern: expected a number", pos);
  return val;
}

std::vector<int> parse_int_list(const std::string& s, size_t& pos, char sep) {
  std::vector<int> vals;
  vals.push_back(int(parse_int(s, pos)));
  while (pos < s.size() && s[pos] == sep) {
    ++pos;
    vals.push_back(int(parse_int(s, pos)));
  }
  return vals;
}

Graph build_star_forest(const std::vector<int>& ts) {
  int n = 0;
  for (int t : ts) n += t + 1;
  Graph g(n);
  int base = 0;
  for (int t : ts) {
    for (int leaf = 1; leaf <= t; ++leaf) g.add_edge(base, base + leaf);
    base += t + 1;
  }
  return g;
}

Graph build_from_spec(const std::string& s, size_t& pos, const std::string& name) {
  if (name == "complete") {
    int r = int(parse_int(s, pos));
    if (r < 1) throw ParseError("pattern: complete needs r >= 1", pos);
    return Graph::complete(r);
  }
  if (name == "kst") {
    auto v = parse_int_list(s, pos, ',');
    if (v.size() != 2) throw ParseError("pattern: kst takes exactly s,t", pos);
    int a = v[0], b = v[1];
    if (a < 1 || b < 1) throw ParseError("pattern: kst needs s,t >= 1", pos);
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
  }
  if (name == "star") {
    int t = int(parse_int(s, pos));
    if (t < 1) throw ParseError("pattern: star needs t >= 1", pos);
    return build_star_forest({t});
  }
  if (name == "starforest") {
    auto v = parse_int_list(s, pos, ',');
    for (int t : v)
      if (t < 1) throw ParseError("pattern: starforest needs every t >= 1", pos);
    return build_star_forest(v);
  }
  if (name == "cycle") {
    int k = int(parse_int(s, pos));
    if (k < 3) throw ParseError("pattern: cycle needs k >= 3", pos);
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
  }
  if (name == "path") {
    int k = int(parse_int(s, pos));
    if (k < 1) throw ParseError("pattern: path needs k >= 1", pos);
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
  }
  if (name == "g6") {
    std::string rest = s.substr(pos);
    pos = s.size();
    try {
      return read_graph6(rest);
    } catch (const std::exception& ex) {
      throw ParseError(std::string("pattern: ") + ex.what(), pos);
    }
  }
  if (name == "edges") {
    std::vector<Edge> edges;
    int n = 0;
    while (true) {
      int u = int(parse_int(s, pos));
      if (pos >= s.size() || s[pos] != '-')
        throw ParseError("pattern: expected '-' in edge", pos);
      ++pos;
      int v = int(parse_int(s, pos));
      if (u == v) throw ParseError("pattern: loop rejected", pos);
      edges.push_back(make_edge(u, v));
      n = std::max({n, u + 1, v + 1});
      if (pos < s.size() && s[pos] == ',') { ++pos; continue; }
      break;
    }
    return Graph::from_edges(n, edges);
  }
  throw ParseError("pattern: unknown form \"" + name + "\"", 0);
}

// BFS 2-coloring of one component; returns {side0, side1} or throws naming an
// odd cycle
std::pair<Bitset, Bitset> two_color(const Graph& g, const Bitset& comp) {
  std::vector<int> color(g.n(), -1), parent(g.n(), -1);
  Bitset sides[2] = {Bitset(g.n()), Bitset(g.n())};
  int root = comp.first();
  color[root] = 0;
  sides[0].set(root);
  std::queue<int> bfs;
  bfs.push(root);
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (int v = g.row(u).first(); v != -1; v = g.row(u).next(v)) {
      if (color[v] == -1) {
        color[v] = 1 - color[u];
        parent[v] = u;
        sides[color[v]].set(v);
        bfs.push(v);
      } else if (color[v] == color[u]) {
        // walk both endpoints to the root; the union is an odd closed walk
        std::string cyc;
        for (int x = u; x != -1; x = parent[x]) cyc += std::to_string(x) + " ";
        cyc += "| ";
        for (int x = v; x != -1; x = parent[x]) cyc += std::to_string(x) + " ";
        throw std::invalid_argument(
            "pattern is not bipartite: odd cycle through vertices " + cyc);
      }
    }
  }
  return {sides[0], sides[1]};
}

int min_degree_in(const Graph& g, const Bitset& side) {
  int d = g.n();
  side.for_each([&](int v) { d = std::min(d, g.degree(v)); });
  return d;
}

double theorem_bound(int a, int delta, double p) {
  return (delta - 1) / std::pow(p, a - 1) - (delta - 2 * a + 1) / 2.0;
}

struct MisSolver {
  const Graph& g;
  Bitset best;

  explicit MisSolver(const Graph& graph) : g(graph), best(graph.n()) {}

  void run() {
    Bitset cand = Bitset::full(g.n());
    Bitset chosen(g.n());
    rec(cand, chosen);
  }

  void rec(Bitset cand, const Bitset& chosen) {
    if (chosen.count() + cand.count() <= best.count()) return;
    int v = -1, best_deg = -1;
    cand.for_each([&](int u) {
      int d = intersection_count(g.row(u), cand);
      if (d > best_deg) { best_deg = d; v = u; }
    });
    if (v == -1) {
      best = chosen;
      return;
    }
    Bitset with = chosen;
    with.set(v);
    Bitset cand_in = cand;
    cand_in -= g.row(v);
    cand_in.reset(v);
    rec(cand_in, with);
    cand.reset(v);
    rec(cand, chosen);
  }
};

}  // namespace

Bitset max_independent_set(const Graph& g, int vertex_limit) {
  if (g.n() > vertex_limit)
    throw std::invalid_argument("pattern: independent-set size limit exceeded (" +
                                std::to_string(g.n()) + " > " +
                                std::to_string(vertex_limit) + " vertices)");
  MisSolver solver(g);
  solver.run();
  return solver.best;
}

BipartiteInfo analyze_bipartition(const Pattern& f, double p) {
  const Graph& g = f.graph;
  if (f.has_isolated)
    throw std::invalid_argument(
        "bipartition analysis requires a pattern without isolated vertices");
  BipartiteInfo info;
  for (const auto& comp : f.components) {
    auto [s0, s1] = two_color(g, comp);
    ComponentBipartition cb;
    cb.tied = s0.count() == s1.count();
    if (s0.count() <= s1.count()) {
      cb.small_side = s0;
      cb.large_side = s1;
    } else {
      cb.small_side = s1;
      cb.large_side = s0;
    }
    info.comps.push_back(std::move(cb));
  }
  info.a = 0;
  for (const auto& cb : info.comps) info.a = std::max(info.a, cb.small_side.count());

  // components attaining a, and which of them have a free orientation
  std::vector<int> attaining, swappable;
  for (size_t i = 0; i < info.comps.size(); ++i)
    if (info.comps[i].small_side.count() == info.a) {
      attaining.push_back(int(i));
      if (info.comps[i].tied) swappable.push_back(int(i));
    }
  info.q = int(attaining.size());

  double best_val = 0.0;
  int best_delta = -1;
  unsigned best_mask = 0;
  for (unsigned mask = 0; mask < (1u << swappable.size()); ++mask) {
    int delta = g.n();
    for (size_t j = 0; j < attaining.size(); ++j) {
      const auto& cb = info.comps[attaining[j]];
      const Bitset* side = &cb.small_side;
      for (size_t k = 0; k < swappable.size(); ++k)
        if (swappable[k] == attaining[j] && ((mask >> k) & 1)) side = &cb.large_side;
      delta = std::min(delta, min_degree_in(g, *side));
    }
    double val = theorem_bound(info.a, delta, p);
    if (best_delta == -1 || val < best_val) {
      best_val = val;
      best_delta = delta;
      best_mask = mask;
    }
  }
  for (size_t k = 0; k < swappable.size(); ++k)
    if ((best_mask >> k) & 1)
      std::swap(info.comps[swappable[k]].small_side, info.comps[swappable[k]].large_side);
  info.delta = best_delta;
  return info;
}

Pattern analyze_pattern(Graph g, std::string source, const PatternOptions& opts) {
  Pattern f;
  f.graph = std::move(g);
  f.source = std::move(source);
  const Graph& fg = f.graph;
  const int n = fg.n();
  if (n == 0) throw std::invalid_argument("pattern: empty graph");

  // connected components
  Bitset seen(n);
  for (int v = 0; v < n; ++v) {
    if (seen.test(v)) continue;
    Bitset comp(n);
    std::queue<int> bfs;
    bfs.push(v);
    comp.set(v);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      fg.row(u).for_each([&](int w) {
        if (!comp.test(w)) { comp.set(w); bfs.push(w); }
      });
    }
    seen |= comp;
    if (comp.count() == 1) f.has_isolated = true;
    f.components.push_back(std::move(comp));
  }

  if (!f.has_isolated) {
    try {
      f.bip = analyze_bipartition(f, 0.5);
    } catch (const std::invalid_argument&) {
      f.bip = std::nullopt;  // non-bipartite
    }
  }

  f.max_independent = max_independent_set(fg, opts.mis_vertex_limit);
  f.indep_size = f.max_independent.count();
  if (fg.m() > 0) {
    f.kt_b = n - f.indep_size - 1;
    int d = n;
    for (int x = 0; x < n; ++x)
      if (!f.max_independent.test(x))
        d = std::min(d, intersection_count(fg.row(x), f.max_independent));
    f.kt_d = d;

    int r = n, w = 2 * n;
    for (const auto& e : fg.edges()) {
      int md = std::max(fg.degree(e.u), fg.degree(e.v));
      r = std::min(r, md);
      w = std::min(w, md + intersection_count(fg.row(e.u), fg.row(e.v)));
    }
    f.r = r;
    f.w = w;
  }

  // structural classification driving the detection fast paths
  if (f.components.size() == 1 && f.bip && fg.m() > 0) {
    const auto& cb = f.bip->comps[0];
    long long s = cb.small_side.count(), t = cb.large_side.count();
    if (fg.m() == s * t) f.kst = std::make_pair(int(s), int(t));
  }
  bool forest_of_stars = !f.has_isolated;
  std::vector<int> ts;
  for (const auto& comp : f.components) {
    int nc = comp.count();
    long long mc = edges_between(fg, comp, comp);
    int internal = 0;
    comp.for_each([&](int u) { if (fg.degree(u) >= 2) ++internal; });
    if (nc < 2 || mc != nc - 1 || internal > 1) { forest_of_stars = false; break; }
    ts.push_back(nc - 1);
  }
  if (forest_of_stars && !ts.empty()) {
    std::sort(ts.rbegin(), ts.rend());
    f.star_degrees = std::move(ts);
  }
  return f;
}

Pattern parse_pattern(const std::string& text, const PatternOptions& opts) {
  size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("pattern: expected \"form:args\"", 0);
  std::string name = text.substr(0, colon);
  size_t pos = colon + 1;
  Graph g = build_from_spec(text, pos, name);
  if (pos != text.size()) throw ParseError("pattern: trailing input", pos);
  return analyze_pattern(std::move(g), text, opts);
}

}  // namespace satlab
