#include "satlab/detect.hpp"

#include <algorithm>
#include <stdexcept>

namespace satlab {

namespace {

// ---- generic backtracking search -------------------------------------------
//
// Pattern vertices are assigned in a greatest-constraint-first order; each
// candidate must be adjacent (in the host) to every previously assigned
// pattern neighbor, have enough host degree, and be unused.  A trailing block
// of isolated pattern vertices is satisfied by counting spare host vertices.

struct Searcher {
  const Graph& host;
  const Graph& pat;
  uint64_t budget;
  std::optional<Edge> virt;  // host edge assumed present (anchored search)

  uint64_t nodes = 0;
  bool aborted = false;
  std::vector<int> order;
  std::vector<std::vector<int>> earlier;  // earlier-ordered pattern neighbors
  std::vector<int> map;
  Bitset used;
  std::vector<Bitset> scratch;
  int isolated_from = 0;

  Searcher(const Graph& h, const Graph& p, uint64_t b, std::optional<Edge> v)
      : host(h), pat(p), budget(b), virt(v), map(p.n(), -1), used(h.n()),
        scratch(p.n(), Bitset(h.n())) {}

  int eff_degree(int hv) const {
    int d = host.degree(hv);
    if (virt && (hv == virt->u || hv == virt->v)) ++d;
    return d;
  }

  // seed = pattern vertices already assigned (anchor), in assignment order
  void build_order(const std::vector<int>& seed) {
    const int pn = pat.n();
    std::vector<bool> placed(pn, false);
    order = seed;
    for (int x : seed) placed[x] = true;
    while (int(order.size()) < pn) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int x = 0; x < pn; ++x) {
        if (placed[x]) continue;
        int links = 0;
        for (int y : order)
          if (pat.has_edge(x, y)) ++links;
        if (links > best_links || (links == best_links && pat.degree(x) > best_deg)) {
          best = x;
          best_links = links;
          best_deg = pat.degree(x);
        }
      }
      order.push_back(best);
      placed[best] = true;
    }
    earlier.assign(pn, {});
    for (int i = 0; i < pn; ++i)
      for (int j = 0; j < i; ++j)
        if (pat.has_edge(order[i], order[j])) earlier[i].push_back(order[j]);
    isolated_from = pn;
    while (isolated_from > int(seed.size()) &&
           pat.degree(order[isolated_from - 1]) == 0)
      --isolated_from;
  }

  bool dfs(int depth) {
    if (depth == isolated_from) {
      int spare = host.n() - used.count();
      int need = pat.n() - depth;
      if (spare < need) return false;
      // hand the isolated pattern vertices arbitrary unused hosts
      int hv = 0;
      for (int i = depth; i < pat.n(); ++i) {
        while (used.test(hv)) ++hv;
        map[order[i]] = hv;
        used.set(hv);
      }
      return true;
    }
    const int x = order[depth];
    const int need_deg = pat.degree(x);
    if (earlier[depth].empty()) {
      for (int v = 0; v < host.n(); ++v) {
        if (used.test(v) || eff_degree(v) < need_deg) continue;
        if (++nodes > budget) { aborted = true; return false; }
        map[x] = v;
        used.set(v);
        if (dfs(depth + 1)) return true;
        used.reset(v);
        map[x] = -1;
        if (aborted) return false;
      }
      return false;
    }
    Bitset& cand = scratch[depth];
    cand = host.row(map[earlier[depth][0]]);
    for (size_t i = 1; i < earlier[depth].size(); ++i)
      cand &= host.row(map[earlier[depth][i]]);
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
      if (used.test(v) || eff_degree(v) < need_deg) continue;
      if (++nodes > budget) { aborted = true; return false; }
      map[x] = v;
      used.set(v);
      if (dfs(depth + 1)) return true;
      used.reset(v);
      map[x] = -1;
      if (aborted) return false;
    }
    return false;
  }
};

DetectResult generic_find(const Graph& host, const Graph& pat, uint64_t budget) {
  DetectResult res;
  if (pat.n() > host.n()) return res;
  Searcher s(host, pat, budget, std::nullopt);
  s.build_order({});
  if (s.dfs(0)) {
    res.status = SearchStatus::found;
    res.embedding = s.map;
  } else if (s.aborted) {
    res.status = SearchStatus::aborted;
  }
  res.nodes = s.nodes;
  return res;
}

DetectResult generic_find_with_edge(const Graph& host, const Graph& pat, Edge e,
                                    uint64_t budget) {
  DetectResult res;
  if (pat.n() > host.n()) return res;
  uint64_t total = 0;
  for (const auto& pe : pat.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      const int hx = flip ? e.v : e.u, hy = flip ? e.u : e.v;
      Searcher s(host, pat, budget - std::min(budget, total), Edge{e.u, e.v});
      if (s.eff_degree(hx) < pat.degree(pe.u) || s.eff_degree(hy) < pat.degree(pe.v))
        continue;
      s.build_order({pe.u, pe.v});
      s.map[pe.u] = hx;
      s.map[pe.v] = hy;
      s.used.set(hx);
      s.used.set(hy);
      bool ok = s.dfs(2);
      total += s.nodes;
      if (ok) {
        res.status = SearchStatus::found;
        res.embedding = s.map;
        res.nodes = total;
        return res;
      }
      if (s.aborted) {
        res.status = SearchStatus::aborted;
        res.nodes = total;
        return res;
      }
    }
  }
  res.nodes = total;
  return res;
}

// ---- complete-pattern fast path ---------------------------------------------

struct CliqueFinder {
  const Graph& g;
  int target;
  uint64_t budget;
  uint64_t nodes = 0;
  bool aborted = false;
  std::vector<int> stack;

  CliqueFinder(const Graph& graph, int r, uint64_t b) : g(graph), target(r), budget(b) {}

  bool rec(const Bitset& cand, int from) {
    if (int(stack.size()) == target) return true;
    if (cand.count() < target - int(stack.size())) return false;
    for (int v = from == -1 ? cand.first() : cand.next(from); v != -1; v = cand.next(v)) {
      if (++nodes > budget) { aborted = true; return false; }
      stack.push_back(v);
      if (rec(cand & g.row(v), v)) return true;
      stack.pop_back();
      if (aborted) return false;
    }
    return false;
  }
};

DetectResult complete_find(const Graph& host, int r, uint64_t budget) {
  DetectResult res;
  CliqueFinder cf(host, r, budget);
  Bitset all(host.n());
  for (int v = 0; v < host.n(); ++v)
    if (host.degree(v) >= r - 1) all.set(v);
  if (cf.rec(all, -1)) {
    res.status = SearchStatus::found;
    res.embedding = cf.stack;
  } else if (cf.aborted) {
    res.status = SearchStatus::aborted;
  }
  res.nodes = cf.nodes;
  return res;
}

DetectResult complete_find_with_edge(const Graph& host, int r, Edge e, uint64_t budget) {
  DetectResult res;
  CliqueFinder cf(host, r - 2, budget);
  if (r == 2) {
    res.status = SearchStatus::found;
    res.embedding = {e.u, e.v};
    return res;
  }
  if (cf.rec(host.row(e.u) & host.row(e.v), -1)) {
    res.status = SearchStatus::found;
    res.embedding = {e.u, e.v};
    res.embedding.insert(res.embedding.end(), cf.stack.begin(), cf.stack.end());
  } else if (cf.aborted) {
    res.status = SearchStatus::aborted;
  }
  res.nodes = cf.nodes;
  return res;
}

// ---- complete-bipartite fast path -------------------------------------------
//
// A K_{s,t} copy (s <= t) exists iff some s-subset X has at least t common
// neighbors; the running intersection excludes members of X automatically
// since no vertex is self-adjacent.

struct KstFinder {
  const Graph& g;
  int s, t;
  uint64_t budget;
  uint64_t nodes = 0;
  bool aborted = false;
  std::vector<int> xs;
  Bitset ys;

  KstFinder(const Graph& graph, int s_, int t_, uint64_t b)
      : g(graph), s(s_), t(t_), budget(b), ys(graph.n()) {}

  bool rec(const std::vector<int>& cand, size_t from, const Bitset& inter, int depth) {
    if (depth == s) {
      if (inter.count() < t) return false;
      ys = inter;
      return true;
    }
    for (size_t i = from; i < cand.size(); ++i) {
      if (++nodes > budget) { aborted = true; return false; }
      Bitset next = depth == 0 ? g.row(cand[i]) : inter & g.row(cand[i]);
      if (next.count() < t) continue;
      xs.push_back(cand[i]);
      if (rec(cand, i + 1, next, depth + 1)) return true;
      xs.pop_back();
      if (aborted) return false;
    }
    return false;
  }
};

// pattern side vertex lists, small side first
std::pair<std::vector<int>, std::vector<int>> kst_sides(const Pattern& f) {
  const auto& cb = f.bip->comps[0];
  return {cb.small_side.to_vector(), cb.large_side.to_vector()};
}

DetectResult kst_find(const Graph& host, const Pattern& f, uint64_t budget) {
  auto [s, t] = *f.kst;
  DetectResult res;
  KstFinder kf(host, s, t, budget);
  std::vector<int> cand;
  for (int v = 0; v < host.n(); ++v)
    if (host.degree(v) >= t) cand.push_back(v);
  if (kf.rec(cand, 0, Bitset(host.n()), 0)) {
    res.status = SearchStatus::found;
    auto [small, large] = kst_sides(f);
    res.embedding.assign(f.graph.n(), -1);
    for (int i = 0; i < s; ++i) res.embedding[small[i]] = kf.xs[i];
    int y = kf.ys.first();
    for (int i = 0; i < t; ++i, y = kf.ys.next(y)) res.embedding[large[i]] = y;
  } else if (kf.aborted) {
    res.status = SearchStatus::aborted;
  }
  res.nodes = kf.nodes;
  return res;
}

// copy of K_{s,t} in host+e using e, with e.u on the s-side: X = {u} ∪ X' for
// some (s-1)-subset X' of N(v), and Y = {v} plus t-1 common neighbors of X
struct KstEdgeFinder {
  const Graph& g;
  int s, t, u, v;
  uint64_t budget;
  uint64_t& nodes;
  bool aborted = false;
  std::vector<int> xs;
  Bitset ys;

  KstEdgeFinder(const Graph& graph, int s_, int t_, int u_, int v_, uint64_t b,
                uint64_t& n)
      : g(graph), s(s_), t(t_), u(u_), v(v_), budget(b), nodes(n), ys(graph.n()) {}

  bool rec(const std::vector<int>& cand, size_t from, const Bitset& inter, int depth) {
    if (depth == s - 1) {
      if (inter.count() < t - 1) return false;
      ys = inter;
      ys.set(v);
      return true;
    }
    for (size_t i = from; i < cand.size(); ++i) {
      if (++nodes > budget) { aborted = true; return false; }
      Bitset next = inter & g.row(cand[i]);
      if (next.count() < t - 1) continue;
      xs.push_back(cand[i]);
      if (rec(cand, i + 1, next, depth + 1)) return true;
      xs.pop_back();
      if (aborted) return false;
    }
    return false;
  }

  bool run() {
    if (g.degree(u) + 1 < t) return false;
    xs.clear();
    std::vector<int> cand;
    for (int x = g.row(v).first(); x != -1; x = g.row(v).next(x))
      if (g.degree(x) >= t) cand.push_back(x);
    Bitset inter = g.row(u);
    inter.reset(v);  // v joins Y explicitly at the end
    return rec(cand, 0, inter, 0);
  }
};

DetectResult kst_find_with_edge(const Graph& host, const Pattern& f, Edge e,
                                uint64_t budget) {
  auto [s, t] = *f.kst;
  DetectResult res;
  auto [small, large] = kst_sides(f);
  for (int flip = 0; flip < 2; ++flip) {
    const int hu = flip ? e.v : e.u, hv = flip ? e.u : e.v;
    KstEdgeFinder kef(host, s, t, hu, hv, budget - std::min(budget, res.nodes),
                      res.nodes);
    if (kef.run()) {
      res.status = SearchStatus::found;
      res.embedding.assign(f.graph.n(), -1);
      res.embedding[small[0]] = hu;
      for (int i = 1; i < s; ++i) res.embedding[small[i]] = kef.xs[i - 1];
      res.embedding[large[0]] = hv;
      int y = kef.ys.first();
      for (int i = 1; i < t; ++i) {
        while (y == hv) y = kef.ys.next(y);
        res.embedding[large[i]] = y;
        y = kef.ys.next(y);
      }
      return res;
    }
    if (kef.aborted) {
      res.status = SearchStatus::aborted;
      return res;
    }
    if (s == t) break;  // the two orientations coincide
  }
  return res;
}

bool is_complete(const Graph& g) {
  return g.n() >= 2 && g.m() == (long long)g.n() * (g.n() - 1) / 2;
}

}  // namespace

DetectResult find_copy(const Graph& host, const Pattern& f, const DetectOptions& opts) {
  if (f.graph.n() > host.n()) return {};
  if (!opts.force_generic) {
    if (f.kst) return kst_find(host, f, opts.node_budget);
    if (is_complete(f.graph)) return complete_find(host, f.graph.n(), opts.node_budget);
  }
  return generic_find(host, f.graph, opts.node_budget);
}

DetectResult find_copy_with_edge(const Graph& host, const Pattern& f, Edge e,
                                 const DetectOptions& opts) {
  if (host.has_edge(e.u, e.v))
    throw std::invalid_argument("find_copy_with_edge: edge already present");
  if (f.graph.n() > host.n()) return {};
  if (!opts.force_generic) {
    if (f.kst) return kst_find_with_edge(host, f, e, opts.node_budget);
    if (is_complete(f.graph))
      return complete_find_with_edge(host, f.graph.n(), e, opts.node_budget);
  }
  return generic_find_with_edge(host, f.graph, e, opts.node_budget);
}

bool contains_copy(const Graph& host, const Pattern& f) {
  return find_copy(host, f).status == SearchStatus::found;
}

bool creates_copy(const Graph& g, const Graph& h, const Pattern& f, Edge e) {
  e = make_edge(e.u, e.v);
  if (!g.has_edge(e.u, e.v))
    throw std::invalid_argument("creates_copy: edge not in the host graph");
  if (h.has_edge(e.u, e.v))
    throw std::invalid_argument("creates_copy: edge already in the subgraph");
  return find_copy_with_edge(h, f, e).status == SearchStatus::found;
}

}  // namespace satlab
