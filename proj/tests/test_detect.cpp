// test_detect.cpp -- copy detection against exhaustive injection enumeration.
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "satlab/detect.hpp"
#include "satlab/pattern.hpp"

using namespace satlab;

namespace {

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(0, n - 1);
  return g;
}

bool embedding_is_copy(const Graph& host, const Graph& f, const std::vector<int>& img) {
  if (img.size() != size_t(f.n())) return false;
  for (int x = 0; x < f.n(); ++x)
    for (int y = x + 1; y < f.n(); ++y)
      if (f.has_edge(x, y) && !host.has_edge(img[size_t(x)], img[size_t(y)])) return false;
  return true;
}

}  // namespace

TEST_CASE("containment basics") {
  Pattern k3 = parse_pattern("complete:3");
  CHECK(contains_copy(Graph::complete(4), k3));
  CHECK_FALSE(contains_copy(cycle_graph(5), k3));
  CHECK(contains_copy(cycle_graph(6), parse_pattern("path:4")));
  CHECK_FALSE(contains_copy(Graph::complete(3), parse_pattern("complete:4")));
}

TEST_CASE("found embeddings are genuine copies") {
  Pattern c4 = parse_pattern("cycle:4");
  Graph host = Graph::random(10, 0.5, RngSpec{2, 0});
  DetectResult res = find_copy(host, c4);
  if (res.status == SearchStatus::found) CHECK(embedding_is_copy(host, c4.graph, res.embedding));
}

TEST_CASE("containment matches enumeration on random pairs") {
  const char* patterns[] = {"complete:3", "star:3", "kst:2,2", "path:4", "cycle:5",
                            "edges:0-1,1-2,2-3,3-0,0-2"};
  int checked = 0;
  for (uint64_t s = 0; checked < 300; ++s) {
    Graph host = Graph::random(4 + int(s % 6), 0.25 + 0.1 * double(s % 5), RngSpec{s, 0});
    const Pattern f = parse_pattern(patterns[s % 6]);
    if (f.graph.n() > 5) continue;
    bool fast = contains_copy(host, f);
    bool slow = testoracle::contains_by_enumeration(host, f.graph);
    CAPTURE(s);
    CHECK(fast == slow);
    ++checked;
  }
}

TEST_CASE("anchored creation basics") {
  // a star's leaf-leaf pairs close triangles through the center
  Graph host = Graph::complete(5);
  Graph star(5);
  for (int leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
  Pattern k3 = parse_pattern("complete:3");
  CHECK(creates_copy(host, star, k3, make_edge(1, 2)));
  CHECK(creates_copy(host, star, k3, make_edge(3, 4)));
  Graph blank(5);
  CHECK_FALSE(creates_copy(host, blank, k3, make_edge(0, 1)));
}

TEST_CASE("anchored creation matches enumeration") {
  const char* patterns[] = {"kst:2,2", "complete:3", "path:4", "star:3"};
  for (uint64_t s = 0; s < 40; ++s) {
    Graph host = Graph::random(8, 0.6, RngSpec{s, 1});
    Graph h = Graph::random(8, 0.3, RngSpec{s, 2});
    // keep h inside host
    for (const auto& e : h.edges())
      if (!host.has_edge(e.u, e.v)) h.remove_edge(e.u, e.v);
    const Pattern f = parse_pattern(patterns[s % 4]);
    for (const auto& e : host.edges()) {
      if (h.has_edge(e.u, e.v)) continue;
      bool fast = creates_copy(host, h, f, e);
      bool slow = testoracle::creates_by_enumeration(h, f.graph, e);
      CAPTURE(s);
      CAPTURE(e.u);
      CAPTURE(e.v);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("creation agrees with the containment difference") {
  Pattern c4 = parse_pattern("cycle:4");
  for (uint64_t s = 0; s < 25; ++s) {
    Graph host = Graph::complete(7);
    Graph h = Graph::random(7, 0.35, RngSpec{s, 3});
    if (contains_copy(h, c4)) continue;
    for (const auto& e : host.edges()) {
      if (h.has_edge(e.u, e.v)) continue;
      Graph plus = h;
      plus.add_edge(e.u, e.v);
      CHECK(creates_copy(host, h, c4, e) == contains_copy(plus, c4));
    }
  }
}

TEST_CASE("specialized detectors agree with the generic search") {
  const char* patterns[] = {"kst:2,2", "kst:2,3", "kst:3,3", "star:2", "star:4"};
  DetectOptions generic;
  generic.force_generic = true;
  int runs = 0;
  for (uint64_t s = 0; runs < 500; ++s) {
    Graph host = Graph::random(6 + int(s % 7), 0.2 + 0.12 * double(s % 6), RngSpec{s, 4});
    const Pattern f = parse_pattern(patterns[s % 5]);
    DetectResult fast = find_copy(host, f);
    DetectResult slow = find_copy(host, f, generic);
    CAPTURE(s);
    REQUIRE(fast.status != SearchStatus::aborted);
    REQUIRE(slow.status != SearchStatus::aborted);
    CHECK(fast.status == slow.status);
    ++runs;
  }
}

TEST_CASE("containment is monotone under edge addition") {
  Pattern f = parse_pattern("kst:2,2");
  for (uint64_t s = 0; s < 20; ++s) {
    Graph g = Graph::random(9, 0.3, RngSpec{s, 5});
    if (!contains_copy(g, f)) continue;
    Graph bigger = g;
    for (int u = 0; u < 9; ++u)
      for (int v = u + 1; v < 9; ++v)
        if (!bigger.has_edge(u, v) && ((u + v + int(s)) % 3 == 0)) bigger.add_edge(u, v);
    CHECK(contains_copy(bigger, f));
  }
}

TEST_CASE("node budget aborts rather than answering") {
  Pattern f = parse_pattern("edges:0-1,1-2,2-3,3-4,4-0,0-2,1-3");
  Graph host = Graph::random(40, 0.45, RngSpec{17, 0});
  DetectOptions tiny;
  tiny.node_budget = 2;
  tiny.force_generic = true;
  DetectResult res = find_copy(host, f, tiny);
  CHECK(res.status == SearchStatus::aborted);
  CHECK(res.embedding.empty());
  DetectResult full = find_copy(host, f);
  CHECK(full.status != SearchStatus::aborted);
}
