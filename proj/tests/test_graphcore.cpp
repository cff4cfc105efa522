// test_graphcore.cpp -- bitsets, graph construction, generation, neighborhoods, I/O.
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "satlab/graph.hpp"
#include "satlab/graph_io.hpp"
#include "satlab/rng.hpp"

using namespace satlab;

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

}  // namespace

TEST_CASE("bitset basics") {
  Bitset b(130);
  CHECK(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.test(64));
  CHECK_FALSE(b.test(63));
  CHECK(b.first() == 0);
  CHECK(b.next(0) == 64);
  CHECK(b.next(64) == 129);
  CHECK(b.next(129) == -1);
  b.reset(64);
  CHECK(b.to_vector() == std::vector<int>{0, 129});

  Bitset full = Bitset::full(130);
  CHECK(full.count() == 130);
  CHECK((full - b).count() == 128);
  CHECK((full & b) == b);
  CHECK((b | full) == full);
  CHECK(b.is_subset_of(full));
  CHECK(intersection_count(full, b) == 2);
  CHECK(intersection_at_least(full, b, 2));
  CHECK_FALSE(intersection_at_least(full, b, 3));
}

TEST_CASE("complete graph edge counts") {
  CHECK(Graph::complete(1).m() == 0);
  CHECK(Graph::complete(4).m() == 6);
  CHECK(Graph::complete(7).m() == 21);
}

TEST_CASE("add and remove edges") {
  Graph g(4);
  CHECK(g.add_edge(2, 0));
  CHECK_FALSE(g.add_edge(0, 2));
  CHECK(g.has_edge(0, 2));
  CHECK(g.degree(0) == 1);
  CHECK(g.m() == 1);
  CHECK(g.remove_edge(0, 2));
  CHECK_FALSE(g.remove_edge(0, 2));
  CHECK(g.m() == 0);
  CHECK(g.degree(2) == 0);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
}

TEST_CASE("random generation endpoints") {
  Graph empty = Graph::random(5, 0.0, RngSpec{1, 0});
  CHECK(empty.m() == 0);
  Graph full = Graph::random(5, 1.0, RngSpec{1, 0});
  CHECK(full.m() == 10);
}

TEST_CASE("random generation is reproducible and seed sensitive") {
  Graph a = Graph::random(30, 0.5, RngSpec{42, 3});
  Graph b = Graph::random(30, 0.5, RngSpec{42, 3});
  Graph c = Graph::random(30, 0.5, RngSpec{42, 4});
  CHECK(a.edges() == b.edges());
  CHECK(a.edges() != c.edges());
}

TEST_CASE("random edge count concentrates") {
  // binomial(4950, 1/2): four standard deviations misses well under 1% of seeds
  const double mean = 4950.0 * 0.5;
  const double band = 4.0 * std::sqrt(4950.0 * 0.25);
  int inside = 0;
  for (uint64_t s = 0; s < 1000; ++s) {
    Graph g = Graph::random(100, 0.5, RngSpec{s, 0});
    if (std::abs(double(g.m()) - mean) <= band) ++inside;
  }
  CHECK(inside >= 990);
}

TEST_CASE("degree sum is twice the edge count") {
  Graph g = Graph::random(40, 0.3, RngSpec{7, 0});
  long long sum = 0;
  for (int v = 0; v < g.n(); ++v) sum += g.degree(v);
  CHECK(sum == 2 * g.m());
}

TEST_CASE("common neighborhood") {
  Graph k4 = Graph::complete(4);
  Bitset z(4);
  z.set(0);
  z.set(1);
  CHECK(common_neighborhood(k4, z).to_vector() == std::vector<int>{2, 3});

  Graph p3 = path_graph(3);
  Bitset ends(3);
  ends.set(0);
  ends.set(2);
  CHECK(common_neighborhood(p3, ends).to_vector() == std::vector<int>{1});

  Graph c5 = cycle_graph(5);
  Bitset adj(5);
  adj.set(0);
  adj.set(1);
  CHECK(common_neighborhood(c5, adj).none());

  Bitset one(5);
  one.set(2);
  CHECK(common_neighborhood(c5, one) == c5.row(2));
  CHECK(common_neighborhood(c5, Bitset(5)) == Bitset::full(5));
}

TEST_CASE("edges between vertex sets") {
  Graph k4 = Graph::complete(4);
  Bitset s(4), t(4);
  s.set(0);
  s.set(1);
  t.set(2);
  t.set(3);
  CHECK(edges_between(k4, s, t) == 4);
  Bitset u(4);
  u.set(0);
  u.set(1);
  u.set(2);
  CHECK(edges_between(k4, u, u) == 3);
}

TEST_CASE("edges between matches the naive recount") {
  Graph g = Graph::random(50, 0.5, RngSpec{11, 0});
  Bitset s(50), t(50);
  for (int i = 0; i < 20; ++i) s.set(i);
  for (int i = 20; i < 40; ++i) t.set(i);
  CHECK(edges_between(g, s, t) == testoracle::edges_between_naive(g, s, t));

  Bitset overlap = s;
  overlap.set(25);
  CHECK(edges_between(g, overlap, t) == testoracle::edges_between_naive(g, overlap, t));

  // within + within-complement + across partitions the edge set
  Bitset comp = Bitset::full(50) - s;
  CHECK(edges_between(g, s, s) + edges_between(g, comp, comp) + edges_between(g, s, comp) ==
        g.m());
}

TEST_CASE("graph6 known encodings") {
  CHECK(write_graph6(Graph::complete(4)) == "C~");
  CHECK(read_graph6("C~").m() == 6);
  Graph p3 = read_graph6("BW");
  CHECK(p3.n() == 3);
  CHECK(p3.m() == 2);
  CHECK_THROWS_AS(read_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(read_graph6("C~~"), std::invalid_argument);
  CHECK_THROWS_AS(read_graph6(std::string("C") + char(200)), std::invalid_argument);
}

TEST_CASE("graph6 round trip covers the long size form") {
  Graph g = Graph::random(70, 0.2, RngSpec{5, 0});
  Graph back = read_graph6(write_graph6(g));
  CHECK(back.n() == 70);
  CHECK(back.edges() == g.edges());
}

TEST_CASE("edge list parsing") {
  Graph p3 = read_edge_list("n 3\n0 1\n1 2\n");
  CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  std::vector<std::string> warnings;
  Graph dup = read_edge_list("n 3\n0 1\n1 0\n", &warnings);
  CHECK(dup.m() == 1);
  CHECK(warnings.size() == 1);

  CHECK_THROWS_AS(read_edge_list("3\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("n 3\n0 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("n 3\n1 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("n 3\n0 1\n2\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("n 3\n0 x\n"), std::invalid_argument);
}

TEST_CASE("both formats round trip a random graph") {
  Graph g = Graph::random(12, 0.5, RngSpec{99, 0});
  CHECK(read_graph_auto(write_graph6(g)).edges() == g.edges());
  CHECK(read_graph_auto(write_edge_list(g)).edges() == g.edges());
}

TEST_CASE("rng primitives are pinned") {
  // frozen outputs guard the documented generator contract
  CHECK(splitmix64(0) == 16294208416658607535ULL);
  CHECK(mix_seed(1, 2) != mix_seed(2, 1));
  auto eng = make_engine(RngSpec{0, 0});
  auto eng2 = make_engine(RngSpec{0, 0});
  CHECK(eng() == eng2());

  auto coin = make_engine(RngSpec{3, 1});
  int heads = 0;
  for (int i = 0; i < 10000; ++i)
    if (bernoulli(coin, 0.25)) ++heads;
  CHECK(heads > 2200);
  CHECK(heads < 2800);

  auto dice = make_engine(RngSpec{3, 2});
  for (int i = 0; i < 100; ++i) CHECK(uniform_below(dice, 6) < 6);

  std::vector<int> v{0, 1, 2, 3, 4};
  auto s1 = make_engine(RngSpec{8, 0});
  auto s2 = make_engine(RngSpec{8, 0});
  std::vector<int> w = v;
  shuffle_vec(v, s1);
  shuffle_vec(w, s2);
  CHECK(v == w);
}
