// test_construct.cpp -- layered, complete-host, and star-forest constructions.
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "satlab/bounds.hpp"
#include "satlab/construct.hpp"
#include "satlab/detect.hpp"

using namespace satlab;

namespace {

Graph seed_subgraph(const Graph& g, const LayeredParams& par) {
  Graph h0(g.n());
  for (size_t i = 0; i < par.v_sets.size(); ++i)
    par.v_sets[i].for_each([&](int u) {
      par.w_sets[i].for_each([&](int v) {
        if (g.has_edge(u, v) && !h0.has_edge(u, v)) h0.add_edge(u, v);
      });
    });
  return h0;
}

}  // namespace

TEST_CASE("layered construction at small n") {
  Graph g = Graph::random(40, 0.5, RngSpec{21, 0});
  Pattern f = parse_pattern("kst:2,2");
  auto [res, par] = layered_construction(g, 0.5, f, RngSpec{21, 1});

  CHECK(res.method == "layered");
  CHECK(res.verify.status == VerifyStatus::pass);
  CHECK(par.a == 2);
  CHECK(par.delta == 2);
  CHECK(par.q == 1);
  CHECK(par.ell >= 1);

  Graph h0 = seed_subgraph(g, par);
  CHECK(h0.m() == par.h0_edges);
  CHECK_FALSE(contains_copy(h0, f));
  CHECK(res.m >= par.h0_edges);
  CHECK(par.within_core + par.core_to_w + par.within_w == res.m);
}

TEST_CASE("layered sets partition the host") {
  Graph g = Graph::random(60, 0.4, RngSpec{5, 0});
  Pattern f = parse_pattern("kst:2,3");
  auto [res, par] = layered_construction(g, 0.4, f, RngSpec{5, 1});

  // chunks are pairwise vertex-disjoint
  Bitset seen(g.n());
  for (size_t i = 0; i < par.v_sets.size(); ++i) {
    CHECK_FALSE(par.v_sets[i].intersects(seen));
    seen |= par.v_sets[i];
    CHECK_FALSE(par.w_sets[i].intersects(seen));
    seen |= par.w_sets[i];
  }

  // the small chunk cores, W, and the rest cover every vertex exactly once
  Bitset v_small(g.n());
  for (int i = 0; i < par.ell; ++i) v_small |= par.v_sets[size_t(i)];
  CHECK_FALSE(v_small.intersects(par.w_union));
  CHECK_FALSE(v_small.intersects(par.r_set));
  CHECK_FALSE(par.w_union.intersects(par.r_set));
  CHECK((v_small | par.w_union | par.r_set) == Bitset::full(g.n()));
  CHECK(par.v2_set.is_subset_of(par.r_set));
}

TEST_CASE("layered handles several pattern components") {
  Graph g = Graph::random(48, 0.5, RngSpec{9, 0});
  Pattern f = parse_pattern("edges:0-2,0-3,1-2,1-3,4-6,4-7,5-6,5-7");
  REQUIRE(f.bip.has_value());
  REQUIRE(f.bip->q == 2);
  auto [res, par] = layered_construction(g, 0.5, f, RngSpec{9, 1});
  CHECK(par.q == 2);
  REQUIRE(par.v_sets.size() == size_t(par.ell + 1));
  CHECK(par.v_sets.front().count() == par.a - 1);
  CHECK(par.v_sets.back().count() == par.a + 1);
  CHECK(res.verify.status == VerifyStatus::pass);
  CHECK_FALSE(contains_copy(seed_subgraph(g, par), f));
}

TEST_CASE("layered chunk sizes track the geometric profile") {
  Graph g = Graph::random(2000, 0.5, RngSpec{7, 0});
  Pattern f = parse_pattern("kst:2,2");
  ConstructOptions opts;
  opts.verify = false;  // the size profile is fixed before completion
  auto [res, par] = layered_construction(g, 0.5, f, RngSpec{7, 1}, opts);
  const double band = 5.0 * std::sqrt(2000.0);
  for (int i = 1; i <= 5 && i <= par.ell; ++i) {
    double expected = std::pow(par.b_prob, i - 1) * (1.0 - par.b_prob) * 2000.0;
    CAPTURE(i);
    CHECK(std::abs(double(par.w_sizes[size_t(i - 1)]) - expected) <= band);
  }
}

TEST_CASE("layered rejects unusable inputs") {
  Pattern star = parse_pattern("star:3");
  Graph g = Graph::random(30, 0.5, RngSpec{1, 0});
  CHECK_THROWS_AS(layered_construction(g, 0.5, star, RngSpec{1, 1}), std::invalid_argument);
  Pattern odd = parse_pattern("cycle:5");
  CHECK_THROWS_AS(layered_construction(g, 0.5, odd, RngSpec{1, 1}), std::invalid_argument);
  Pattern f = parse_pattern("kst:2,2");
  CHECK_THROWS_AS(layered_construction(g, 0.0, f, RngSpec{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(layered_construction(g, 1.0, f, RngSpec{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(layered_construction(Graph(5), 0.5, f, RngSpec{1, 1}),
                  std::invalid_argument);
}

TEST_CASE("complete-host construction stays under its formula") {
  for (const char* text : {"complete:3", "star:3", "kst:2,2"}) {
    Pattern f = parse_pattern(text);
    for (int n = 6; n <= 40; n += 2) {
      SaturationResult res = kt_construction(n, f, RngSpec{uint64_t(n), 0});
      CAPTURE(text);
      CAPTURE(n);
      REQUIRE(res.verify.status == VerifyStatus::pass);
      Rational bound = kt_general_upper(n, f);
      CHECK(Rational(res.m) <= bound);
    }
  }
}

TEST_CASE("complete-host construction meets the triangle optimum") {
  // b = 1 keeps one spanning star, which is already triangle-saturated
  Pattern k3 = parse_pattern("complete:3");
  SaturationResult res = kt_construction(12, k3, RngSpec{3, 0});
  CHECK(res.m == ehm_value(12, 3));
  CHECK(res.method == "kt");
  CHECK_THROWS_AS(kt_construction(2, k3, RngSpec{0, 0}), std::invalid_argument);
}

TEST_CASE("star construction on a random host") {
  Graph g = Graph::random(60, 0.5, RngSpec{14, 0});
  Pattern f = parse_pattern("star:2");
  auto [res, par] = star_construction(g, 0.5, f, RngSpec{14, 1});

  CHECK(res.method == "star");
  CHECK(res.verify.status == VerifyStatus::pass);
  CHECK(par.h == 2);
  CHECK(par.regular_target == 1);
  CHECK(par.clique_set.count() == 2);
  CHECK_FALSE(par.s_set.intersects(par.clique_set));
  CHECK((60 - par.h - par.ell) * (par.degrees.back() - 1) % 2 == 0);

  bool independent = true;
  par.s_set.for_each([&](int v) {
    if (intersection_count(g.row(v), par.s_set)) independent = false;
  });
  CHECK(independent);
}

TEST_CASE("star construction with a unit star collapses to the clique seed") {
  Graph g = Graph::random(60, 0.5, RngSpec{25, 0});
  Pattern f = parse_pattern("edges:0-1,0-2,3-4");
  REQUIRE(f.star_degrees.has_value());
  REQUIRE(f.star_degrees->back() == 1);
  auto [res, par] = star_construction(g, 0.5, f, RngSpec{25, 1});
  CHECK(par.h == 4);
  CHECK(par.ell == 0);
  CHECK(res.m == 6);
  CHECK(res.verify.status == VerifyStatus::pass);
}

TEST_CASE("star construction rejects unusable inputs") {
  Graph g = Graph::random(30, 0.5, RngSpec{2, 0});
  CHECK_THROWS_AS(star_construction(g, 0.5, parse_pattern("complete:3"), RngSpec{2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(star_construction(Graph(2), 0.5, parse_pattern("star:3"), RngSpec{2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(star_construction(Graph(10), 0.5, parse_pattern("star:2"), RngSpec{2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(star_construction(g, 1.0, parse_pattern("star:2"), RngSpec{2, 1}),
                  std::invalid_argument);
}

TEST_CASE("construction edge sets always come from the host") {
  Graph g = Graph::random(50, 0.45, RngSpec{31, 0});
  Pattern f = parse_pattern("kst:2,2");
  auto [res, par] = layered_construction(g, 0.45, f, RngSpec{31, 1});
  for (const Edge& e : res.edges) CHECK(g.has_edge(e.u, e.v));
}
