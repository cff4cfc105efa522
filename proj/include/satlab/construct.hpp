// construct.hpp -- explicit saturated-subgraph constructions.
#pragma once

#include <utility>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"
#include "satlab/rng.hpp"
#include "satlab/saturate.hpp"

namespace satlab {

struct ConstructOptions {
  Policy policy = Policy::random_permutation;  // completion order after the seed
  bool verify = true;
};

struct LayeredParams {
  int a = 0, delta = 0, q = 0, ell = 0;
  double b_prob = 0;               // 1 - p^(a-1)
  std::vector<Bitset> v_sets;      // ell sets of size a-1, then q-1 of size a+1
  std::vector<Bitset> w_sets;      // W_i = N(V_i) \ (V ∪ V' ∪ M_{i-1})
  std::vector<Bitset> m_sets;      // M_i = N(V_1) ∪ ... ∪ N(V_i)
  Bitset w_union;                  // W = W_1 ∪ ... ∪ W_ell
  Bitset r_set;                    // complement of V ∪ W (contains V')
  Bitset v2_set;                   // V'' = V' ∩ M_ell
  std::vector<int> w_sizes;
  long long h0_edges = 0;
  // final edge decomposition relative to W
  long long within_core = 0, core_to_w = 0, within_w = 0;
};

// Seed subgraph: vertex-disjoint complete bipartite chunks V_i x W_i.  The
// chunk sides are sized so that the q components of f whose smaller part
// attains a cannot all embed at once, hence the seed is f-free; greedy
// completion then saturates it.
// pre: f bipartite without isolated vertices, a >= 2, p in (0,1); n large
// enough that the V_i fit and every W_i is nonempty.
std::pair<SaturationResult, LayeredParams> layered_construction(
    const Graph& g, double p, const Pattern& f, const RngSpec& rng,
    const ConstructOptions& opts = {});

// Complete-host construction: keep every edge meeting B = {0..b-1} where
// b = |V(f)| - alpha(f) - 1, drop the rest, then greedy-complete.  Any copy of
// f would put alpha(f)+1 vertices outside B, an independent set too large.
// pre: f has at least one edge, n >= |V(f)|.
SaturationResult kt_construction(int n, const Pattern& f, const RngSpec& rng,
                                 const ConstructOptions& opts = {});

struct StarParams {
  std::vector<int> degrees;  // t_1 >= ... >= t_k
  int h = 0;                 // |V(f)| - 1
  int ell_target = 0;        // 2 log_{1/(1-p)} n before adjustment
  int ell = 0;               // |s_set| after the parity fix
  Bitset s_set;              // independent set left untouched
  Bitset clique_set;         // K_h vertices
  int regular_target = 0;    // t_k - 1
  int deficient = 0;         // vertices that ended under the degree target
  long long clique_edges = 0, regular_edges = 0;
};

// Star-forest construction: an independent set S of size ~2 log_{1/(1-p)} n,
// a K_h on the rest, and a greedy (t_k-1)-regular-as-possible subgraph on the
// remaining vertices; (n-h-ell)(t_k-1) is kept even.  For t_k = 1 the seed is
// the K_h alone.  Greedy completion repairs any deficiency.
// pre: f is a disjoint union of stars, p in (0,1), and G[V \ S] contains a K_h.
std::pair<SaturationResult, StarParams> star_construction(
    const Graph& g, double p, const Pattern& f, const RngSpec& rng,
    const ConstructOptions& opts = {});

}  // namespace satlab
