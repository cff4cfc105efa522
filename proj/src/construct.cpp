#include "satlab/construct.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "satlab/detect.hpp"

namespace satlab {

namespace {

void finish(SaturationResult& res, const Graph& g, const Pattern& f, const char* method,
            const ConstructOptions& opts) {
  res.method = method;
  if (opts.verify) res.verify = verify_saturated(g, res.edges, f);
}

// induced subgraph on the vertices of `keep`, plus the map back to g
Graph induced(const Graph& g, const Bitset& keep, std::vector<int>& back) {
  back = keep.to_vector();
  std::vector<int> fwd(g.n(), -1);
  for (size_t i = 0; i < back.size(); ++i) fwd[back[i]] = int(i);
  Graph sub(int(back.size()));
  for (size_t i = 0; i < back.size(); ++i) {
    const Bitset& row = g.row(back[i]);
    for (int v = row.next(back[i]); v != -1; v = row.next(v))
      if (fwd[v] != -1) sub.add_edge(int(i), fwd[v]);
  }
  return sub;
}

}  // namespace

std::pair<SaturationResult, LayeredParams> layered_construction(
    const Graph& g, double p, const Pattern& f, const RngSpec& rng,
    const ConstructOptions& opts) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("layered: p must be in (0,1)");
  BipartiteInfo bip = analyze_bipartition(f, p);
  if (bip.a < 2)
    throw std::invalid_argument("layered: every component has a singleton side; use the star construction");
  const int n = g.n();
  const int a = bip.a, q = bip.q;
  const double b = 1.0 - std::pow(p, a - 1);

  int ell_formula = int(std::floor((2.0 / 3.0) * std::log(double(n)) / std::log(1.0 / b)));
  int core_cap = (n - (q - 1) * (a + 1)) / (a - 1);
  int ell_max = std::max(1, std::min(ell_formula, core_cap));

  LayeredParams par;
  par.a = a;
  par.delta = bip.delta;
  par.q = q;
  par.b_prob = b;

  bool built = false;
  for (int ell = ell_max; ell >= 1 && !built; --ell) {
    int sets = ell + q - 1;
    if ((long long)ell * (a - 1) + (long long)(q - 1) * (a + 1) > n) continue;
    std::vector<Bitset> v_sets, w_sets, m_sets;
    Bitset core(n);  // V ∪ V'
    int cursor = 0;
    for (int i = 0; i < sets; ++i) {
      int size = i < ell ? a - 1 : a + 1;
      Bitset vi(n);
      for (int k = 0; k < size; ++k) vi.set(cursor++);
      core |= vi;
      v_sets.push_back(std::move(vi));
    }
    Bitset m(n);
    bool ok = true;
    for (int i = 0; i < sets; ++i) {
      Bitset nb = common_neighborhood(g, v_sets[i]);
      Bitset wi = nb;
      wi -= core;
      wi -= m;
      m |= nb;
      if (wi.none()) {
        ok = false;
        break;
      }
      w_sets.push_back(std::move(wi));
      m_sets.push_back(m);
    }
    if (!ok) continue;
    built = true;
    par.ell = ell;
    par.v_sets = std::move(v_sets);
    par.w_sets = std::move(w_sets);
    par.m_sets = std::move(m_sets);
  }
  if (!built) throw std::invalid_argument("layered: host too small, some W_i came out empty");

  Bitset v_small(n);  // V alone, without V'
  for (int i = 0; i < par.ell; ++i) v_small |= par.v_sets[i];
  Bitset v_big(n);
  for (size_t i = par.ell; i < par.v_sets.size(); ++i) v_big |= par.v_sets[i];

  par.w_union = Bitset(n);
  for (int i = 0; i < par.ell; ++i) par.w_union |= par.w_sets[i];
  par.r_set = Bitset::full(n);
  par.r_set -= v_small;
  par.r_set -= par.w_union;
  par.v2_set = v_big & par.m_sets[par.ell - 1];
  for (const Bitset& w : par.w_sets) par.w_sizes.push_back(w.count());

  std::vector<Edge> h0;
  for (size_t i = 0; i < par.v_sets.size(); ++i)
    par.v_sets[i].for_each([&](int u) {
      par.w_sets[i].for_each([&](int w) { h0.push_back(make_edge(u, w)); });
    });
  par.h0_edges = (long long)h0.size();

  if (contains_copy(Graph::from_edges(n, h0), f))
    throw std::logic_error("layered: seed subgraph contains the pattern");

  SaturationResult res = greedy_complete(g, h0, f, opts.policy, rng);
  finish(res, g, f, "layered", opts);

  Graph hg = Graph::from_edges(n, res.edges);
  Bitset not_w = Bitset::full(n);
  not_w -= par.w_union;
  par.within_core = edges_between(hg, not_w, not_w);
  par.core_to_w = edges_between(hg, not_w, par.w_union);
  par.within_w = edges_between(hg, par.w_union, par.w_union);
  return {std::move(res), std::move(par)};
}

SaturationResult kt_construction(int n, const Pattern& f, const RngSpec& rng,
                                 const ConstructOptions& opts) {
  if (!f.kt_b) throw std::invalid_argument("kt: pattern has no edges");
  if (n < f.graph.n()) throw std::invalid_argument("kt: host smaller than the pattern");
  const int b = *f.kt_b;
  Graph host = Graph::complete(n);
  std::vector<Edge> h0;
  for (int u = 0; u < b; ++u)
    for (int v = u + 1; v < n; ++v) h0.push_back({u, v});
  if (contains_copy(Graph::from_edges(n, h0), f))
    throw std::logic_error("kt: seed subgraph contains the pattern");
  SaturationResult res = greedy_complete(host, h0, f, opts.policy, rng);
  finish(res, host, f, "kt", opts);
  return res;
}

std::pair<SaturationResult, StarParams> star_construction(
    const Graph& g, double p, const Pattern& f, const RngSpec& rng,
    const ConstructOptions& opts) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("star: p must be in (0,1)");
  if (!f.star_degrees) throw std::invalid_argument("star: pattern is not a disjoint union of stars");
  const int n = g.n();
  StarParams par;
  par.degrees = *f.star_degrees;
  const int tk = par.degrees.back();
  par.h = f.graph.n() - 1;
  par.regular_target = tk - 1;
  if (n < par.h) throw std::invalid_argument("star: host smaller than the K_h seed");

  par.s_set = Bitset(n);
  if (tk >= 2) {
    par.ell_target = int(std::floor(2.0 * std::log(double(n)) / std::log(1.0 / (1.0 - p))));
    int target = std::min(par.ell_target, n - par.h);
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[size_t(i)] = i;
    auto eng = make_engine(RngSpec{rng.seed, mix_seed(rng.stream, 1)});
    shuffle_vec(order, eng);
    std::vector<int> members;
    for (int v : order) {
      if (int(members.size()) >= target) break;
      if (!intersection_count(g.row(v), par.s_set)) {
        par.s_set.set(v);
        members.push_back(v);
      }
    }
    // (n - h - ell)(t_k - 1) must be even so a (t_k-1)-regular remainder exists
    if (((long long)(n - par.h - int(members.size())) * (tk - 1)) % 2 != 0) {
      if (!members.empty()) {
        par.s_set.reset(members.back());
        members.pop_back();
      } else if (n > par.h) {
        par.s_set.set(order[0]);
        members.push_back(order[0]);
      }
    }
    par.ell = int(members.size());
  }

  Bitset rest = Bitset::full(n);
  rest -= par.s_set;
  std::vector<int> back;
  Graph sub = induced(g, rest, back);
  Pattern clique = parse_pattern("complete:" + std::to_string(par.h));
  DetectResult found = find_copy(sub, clique);
  if (found.status != SearchStatus::found)
    throw std::invalid_argument("star: no clique of size " + std::to_string(par.h) +
                                " outside the independent set");
  par.clique_set = Bitset(n);
  for (int idx : found.embedding) par.clique_set.set(back[size_t(idx)]);

  std::vector<Edge> h0;
  par.clique_set.for_each([&](int u) {
    par.clique_set.for_each([&](int v) {
      if (u < v) h0.push_back({u, v});
    });
  });
  par.clique_edges = (long long)h0.size();

  Bitset u_set = rest;
  u_set -= par.clique_set;
  if (par.regular_target >= 1) {
    std::vector<Edge> cand;
    u_set.for_each([&](int u) {
      const Bitset& row = g.row(u);
      for (int v = row.next(u); v != -1; v = row.next(v))
        if (u_set.test(v)) cand.push_back({u, v});
    });
    auto eng = make_engine(RngSpec{rng.seed, mix_seed(rng.stream, 2)});
    shuffle_vec(cand, eng);
    std::vector<int> deg(size_t(n), 0);
    for (const Edge& e : cand) {
      if (deg[size_t(e.u)] < par.regular_target && deg[size_t(e.v)] < par.regular_target) {
        ++deg[size_t(e.u)];
        ++deg[size_t(e.v)];
        h0.push_back(e);
        ++par.regular_edges;
      }
    }
    // a skipped edge had a saturated endpoint, and degrees never decrease, so
    // no second pass over cand could add anything
    u_set.for_each([&](int u) {
      if (deg[size_t(u)] < par.regular_target) ++par.deficient;
    });
  }

  if (contains_copy(Graph::from_edges(n, h0), f))
    throw std::logic_error("star: seed subgraph contains the pattern");

  SaturationResult res =
      greedy_complete(g, h0, f, opts.policy, RngSpec{rng.seed, mix_seed(rng.stream, 3)});
  finish(res, g, f, "star", opts);
  return {std::move(res), std::move(par)};
}

}  // namespace satlab
