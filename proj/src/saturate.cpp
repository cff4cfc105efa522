#include "satlab/saturate.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace satlab {

namespace {

// b > 0
long long ceil_div(long long a, long long b) { return a / b + (a % b > 0 ? 1 : 0); }

// greedy clique cover; sum of min(|Q|, k+1) bounds the k-independence number
// from above, since a k-independent set meets each clique in at most k+1 vertices
int clique_cover_indep_upper(const Graph& g, int k) {
  std::vector<Bitset> inter;
  std::vector<int> size;
  for (int v = 0; v < g.n(); ++v) {
    bool placed = false;
    for (size_t i = 0; i < inter.size() && !placed; ++i) {
      if (inter[i].test(v)) {
        inter[i] &= g.row(v);
        ++size[i];
        placed = true;
      }
    }
    if (!placed) {
      inter.push_back(g.row(v));
      size.push_back(1);
    }
  }
  int bound = 0;
  for (int s : size) bound += std::min(s, k + 1);
  return bound;
}

}  // namespace

const char* verify_status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::skipped: return "skipped";
    case VerifyStatus::pass: return "pass";
    case VerifyStatus::not_free: return "not_free";
    case VerifyStatus::not_saturated: return "not_saturated";
  }
  return "?";
}

Policy parse_policy(const std::string& name) {
  if (name == "lex") return Policy::lexicographic;
  if (name == "rand") return Policy::random_permutation;
  if (name == "mindeg") return Policy::min_degree_first;
  throw std::invalid_argument("unknown policy '" + name + "' (expected lex|rand|mindeg)");
}

const char* policy_name(Policy p) {
  switch (p) {
    case Policy::lexicographic: return "lex";
    case Policy::random_permutation: return "rand";
    case Policy::min_degree_first: return "mindeg";
  }
  return "?";
}

VerifyReport verify_saturated(const Graph& g, const std::vector<Edge>& h, const Pattern& f) {
  for (const Edge& e : h)
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("verify: subgraph edge not in host");
  Graph sub = Graph::from_edges(g.n(), h);
  VerifyReport rep;
  DetectResult free = find_copy(sub, f);
  if (free.status == SearchStatus::found) {
    rep.status = VerifyStatus::not_free;
    rep.offending_copy = free.embedding;
    return rep;
  }
  for (int u = 0; u < g.n(); ++u) {
    for (int v = g.row(u).next(u); v != -1; v = g.row(u).next(v)) {
      if (sub.has_edge(u, v)) continue;
      if (find_copy_with_edge(sub, f, Edge{u, v}).status != SearchStatus::found) {
        rep.status = VerifyStatus::not_saturated;
        rep.non_creating_edge = Edge{u, v};
        return rep;
      }
    }
  }
  rep.status = VerifyStatus::pass;
  return rep;
}

SaturationResult greedy_complete(const Graph& g, const std::vector<Edge>& h0,
                                 const Pattern& f, Policy policy, const RngSpec& rng) {
  for (const Edge& e : h0)
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("greedy: seed edge not in host");
  Graph h = Graph::from_edges(g.n(), h0);
  if (contains_copy(h, f))
    throw std::invalid_argument("greedy: seed subgraph already contains the pattern");

  std::vector<Edge> cand;
  cand.reserve(size_t(g.m() - h.m()));
  for (const Edge& e : g.edges())
    if (!h.has_edge(e.u, e.v)) cand.push_back(e);

  if (policy == Policy::random_permutation) {
    auto eng = make_engine(rng);
    shuffle_vec(cand, eng);
  } else if (policy == Policy::min_degree_first) {
    // keyed by seed degrees; the order is fixed before any edge is added
    auto key = [&](const Edge& e) {
      int du = h.degree(e.u), dv = h.degree(e.v);
      return std::tuple(std::min(du, dv), std::max(du, dv), e.u, e.v);
    };
    std::stable_sort(cand.begin(), cand.end(),
                     [&](const Edge& a, const Edge& b) { return key(a) < key(b); });
  }

  // degrees only grow, so one pass suffices: an edge that creates a copy now
  // still creates one against any larger subgraph
  for (const Edge& e : cand)
    if (find_copy_with_edge(h, f, e).status != SearchStatus::found) h.add_edge(e.u, e.v);

  SaturationResult out;
  out.edges = h.edges();
  out.m = h.m();
  out.method = "greedy";
  return out;
}

SaturationResult heuristic_min_sat(const Graph& g, const Pattern& f, int restarts,
                                   const RngSpec& rng) {
  if (restarts < 1) throw std::invalid_argument("heuristic: restarts must be >= 1");
  SaturationResult best;
  for (int i = 0; i < restarts; ++i) {
    // random completions skew dense (they mimic the pattern-free random
    // process), so from the second restart on, one slot goes to the
    // min-degree order, which recovers star- and cone-shaped optima
    Policy pol = (i == 1) ? Policy::min_degree_first : Policy::random_permutation;
    RngSpec trial{rng.seed, mix_seed(rng.stream, uint64_t(i))};
    SaturationResult cur = greedy_complete(g, {}, f, pol, trial);
    if (i == 0 || cur.m < best.m) best = std::move(cur);
  }
  best.method = "heuristic";
  return best;
}

namespace {

// Branch and bound over include/exclude decisions in lexicographic edge order,
// include branch first.  Equal-size edge sets are then reached in sorted-witness
// order, so the first leaf attaining the final optimum is the least witness;
// pruning at >= best_m is safe because a witness of that size is already held.
struct ExactSolver {
  const Graph& g;
  const Pattern& f;
  std::vector<Edge> order;
  Graph h, avail;
  uint64_t budget;
  uint64_t nodes = 0;
  bool exhausted = false;
  long long best_m;
  std::vector<Edge> best;
  int dreq = 0;  // min over pattern edges of the smaller endpoint degree, minus one
  int rr = 1;    // min over pattern edges of the larger endpoint degree

  struct Pend {
    Edge e;
    std::vector<Edge> witness;  // edges of a copy certifying e stays creatable
  };
  std::vector<Pend> pending;  // excluded edges not yet creating against h
  Bitset scratch_a, scratch_b;

  ExactSolver(const Graph& host, const Pattern& pat, uint64_t node_budget,
              long long seed_m, std::vector<Edge> seed_edges)
      : g(host),
        f(pat),
        order(host.edges()),
        h(host.n()),
        avail(host),
        budget(node_budget),
        best_m(seed_m),
        best(std::move(seed_edges)),
        scratch_a(host.n()),
        scratch_b(host.n()) {
    int dmin = INT_MAX, rmin = INT_MAX;
    for (const Edge& e : f.graph.edges()) {
      int du = f.graph.degree(e.u), dv = f.graph.degree(e.v);
      dmin = std::min(dmin, std::min(du, dv));
      rmin = std::min(rmin, std::max(du, dv));
    }
    if (rmin != INT_MAX) {
      dreq = dmin - 1;
      rr = rmin;
    }
  }

  std::vector<Edge> copy_edges(const std::vector<int>& emb) const {
    std::vector<Edge> out;
    for (const Edge& pe : f.graph.edges()) out.push_back(make_edge(emb[pe.u], emb[pe.v]));
    return out;
  }

  // admissible count of edges any completion must still add: every endpoint of
  // a pending edge needs degree dreq, and each pending edge needs an endpoint
  // of degree rr-1 (charged along a matching so the sums are disjoint)
  long long future_need() {
    if (pending.empty()) return 0;
    scratch_a.clear();
    scratch_b.clear();
    long long s1 = 0, s2 = 0;
    for (const Pend& p : pending) {
      for (int v : {p.e.u, p.e.v}) {
        if (!scratch_a.test(v)) {
          scratch_a.set(v);
          s1 += std::max(0, dreq - h.degree(v));
        }
      }
      if (!scratch_b.test(p.e.u) && !scratch_b.test(p.e.v)) {
        scratch_b.set(p.e.u);
        scratch_b.set(p.e.v);
        s2 += std::max(0, std::min((rr - 1) - h.degree(p.e.u), (rr - 1) - h.degree(p.e.v)));
      }
    }
    return std::max(ceil_div(s1, 2), ceil_div(s2, 2));
  }

  void rec(size_t i) {
    if (exhausted) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    if (h.m() + future_need() >= best_m) return;
    if (i == order.size()) {
      if (pending.empty()) {
        best_m = h.m();
        best = h.edges();
      }
      return;
    }
    Edge e = order[i];
    bool creating = find_copy_with_edge(h, f, e).status == SearchStatus::found;

    if (!creating) {
      h.add_edge(e.u, e.v);
      std::vector<Pend> prev = pending;
      std::vector<Pend> next;
      for (Pend& p : pending)
        if (find_copy_with_edge(h, f, p.e).status != SearchStatus::found)
          next.push_back(std::move(p));
      pending = std::move(next);
      rec(i + 1);
      pending = std::move(prev);
      h.remove_edge(e.u, e.v);
      if (exhausted) return;
    }

    avail.remove_edge(e.u, e.v);
    bool feasible = true;
    bool pushed = false;
    if (!creating) {
      DetectResult res = find_copy_with_edge(avail, f, e);
      if (res.status == SearchStatus::found) {
        pending.push_back({e, copy_edges(res.embedding)});
        pushed = true;
      } else {
        feasible = false;
      }
    }
    if (feasible) {
      size_t old_count = pending.size() - (pushed ? 1 : 0);
      for (size_t j = 0; feasible && j < old_count; ++j) {
        Pend& p = pending[j];
        if (std::find(p.witness.begin(), p.witness.end(), e) == p.witness.end()) continue;
        DetectResult res = find_copy_with_edge(avail, f, p.e);
        if (res.status == SearchStatus::found)
          p.witness = copy_edges(res.embedding);
        else
          feasible = false;
      }
    }
    if (feasible) rec(i + 1);
    if (pushed) pending.pop_back();
    avail.add_edge(e.u, e.v);
  }
};

}  // namespace

ExactResult exact_min_sat(const Graph& g, const Pattern& f, const ExactOptions& opts) {
  if (find_copy(Graph(g.n()), f).status == SearchStatus::found)
    throw std::invalid_argument(
        "exact: the pattern embeds in an edgeless host, so no pattern-free subgraph exists");
  uint64_t budget = opts.node_budget == 0 ? UINT64_MAX : opts.node_budget;
  if (opts.node_budget == 0 && g.m() > opts.exhaustive_edge_limit)
    throw std::invalid_argument("exact: host has more than " +
                                std::to_string(opts.exhaustive_edge_limit) +
                                " edges; set a node budget");

  SaturationResult seed = greedy_complete(g, {}, f, Policy::lexicographic, RngSpec{0, 0});
  ExactResult out;
  out.m = seed.m;
  out.witness = seed.edges;

  // counting bound: endpoints of missing edges need degree rr-1, and the
  // low-degree vertices form a (rr-2)-independent set
  if (f.r && *f.r >= 2) {
    int k = *f.r - 2;
    long long lb =
        ceil_div((long long)(*f.r - 1) * (g.n() - clique_cover_indep_upper(g, k)), 2);
    if (out.m <= lb) return out;  // the greedy witness is already least: it is
                                  // the first leaf of the include-first search
  }

  ExactSolver solver(g, f, budget, seed.m, seed.edges);
  solver.rec(0);
  out.m = solver.best_m;
  out.witness = std::move(solver.best);
  out.nodes = solver.nodes;
  out.status = solver.exhausted ? ExactStatus::budget_exhausted : ExactStatus::optimal;
  return out;
}

}  // namespace satlab
