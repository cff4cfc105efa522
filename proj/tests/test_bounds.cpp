// test_bounds.cpp -- closed-form values, the k-independence solver, bound reports.
#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "satlab/bounds.hpp"

using namespace satlab;

namespace {

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(0, n - 1);
  return g;
}

const BoundEntry* entry_named(const BoundReport& rep, const std::string& name) {
  for (const auto& e : rep.entries)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(pow_rational(Rational(1, 2), 3) == Rational(1, 8));
  CHECK(pow_rational(Rational(3), 0) == Rational(1));
  CHECK(rational_str(Rational(5, 2)) == "5/2");
  CHECK(rational_str(Rational(4, 2)) == "2");
  CHECK(rational_double(Rational(1, 4)) == 0.25);
}

TEST_CASE("probability parsing") {
  CHECK(parse_probability("0.35") == Rational(7, 20));
  CHECK(parse_probability("7/20") == Rational(7, 20));
  CHECK(parse_probability("0.5") == Rational(1, 2));
  CHECK_THROWS_AS(parse_probability("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_probability("1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_probability("1.0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_probability("5/4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_probability("-1/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_probability("7/20abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_probability("0.5x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_probability(""), std::invalid_argument);
}

TEST_CASE("complete-host exact formulas") {
  CHECK(ehm_value(4, 3) == 3);
  CHECK(ehm_value(10, 4) == 17);
  CHECK(ehm_value(5, 5) == 9);
  CHECK(ehm_value(7, 2) == 0);
  CHECK_THROWS_AS(ehm_value(2, 3), std::invalid_argument);

  CHECK(kt_star_value(4, 3) == 3);   // clique-plus-clique branch
  CHECK(kt_star_value(5, 2) == 2);   // ceiling branch
  CHECK(kt_star_value(8, 3) == 7);
  CHECK(kt_star_value(3, 2) == 1);
  CHECK_THROWS_AS(kt_star_value(3, 3), std::invalid_argument);
}

TEST_CASE("general complete-host upper bound") {
  Pattern k3 = parse_pattern("complete:3");
  CHECK(kt_general_upper(6, k3) == Rational(5));

  // stars give b = 0, so the bound is (t-1)/2 n, at least the exact value
  for (int t : {2, 3}) {
    Pattern star = parse_pattern("star:" + std::to_string(t));
    for (int n = 6; n <= 30; ++n)
      CHECK(kt_general_upper(n, star) >= Rational(kt_star_value(n, t)));
  }

  // the linear part doubles exactly when n does
  Pattern k22 = parse_pattern("kst:2,2");
  REQUIRE(k22.kt_b.has_value());
  Rational slope(2 * *k22.kt_b + *k22.kt_d - 1, 2);
  CHECK(kt_general_upper(40, k22) - kt_general_upper(20, k22) == slope * 20);

  CHECK_THROWS_AS(kt_general_upper(3, parse_pattern("kst:2,2")), std::invalid_argument);
  CHECK_THROWS_AS(kt_general_upper(6, analyze_pattern(Graph(3), "edgeless")),
                  std::invalid_argument);
}

TEST_CASE("random-host upper constants") {
  CHECK(random_upper_constant(Rational(1, 2), parse_pattern("kst:2,2")) == Rational(5, 2));
  CHECK(random_upper_constant(Rational(1, 2), parse_pattern("kst:2,5")) == Rational(7));
  CHECK(random_upper_constant(Rational(1, 2), parse_pattern("star:4")) == Rational(3, 2));
  CHECK(random_upper_value(2000, Rational(1, 2), parse_pattern("kst:2,2")) == Rational(5000));
  CHECK_THROWS_AS(random_upper_constant(Rational(1, 2), parse_pattern("complete:3")),
                  std::invalid_argument);
}

TEST_CASE("random-host lower constants for complete bipartite patterns") {
  CHECK(kst_lower_constant(Rational(1, 2), 2, 2) == Rational(3, 2));
  CHECK(kst_lower_constant(Rational(1, 2), 2, 5) == Rational(3));
  CHECK(kst_lower_constant(Rational(1, 10), 2, 5) == Rational(8));
  CHECK(kst_lower_value(1000, Rational(1, 2), 2, 2) == Rational(1500));
  CHECK(kst_lower_remark_constant(Rational(1, 10), 2, 5) == Rational(17, 2));
  // the remark sharpens the density term by (s-1)/2 but drops the degree floor
  CHECK(kst_lower_remark_constant(Rational(1, 2), 2, 5) == Rational(5, 2));
  CHECK(kst_lower_remark_constant(Rational(1, 10), 2, 5) ==
        kst_lower_constant(Rational(1, 10), 2, 5) + Rational(1, 2));
  CHECK_THROWS_AS(kst_lower_constant(Rational(1, 2), 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(kst_lower_constant(Rational(1, 2), 3, 2), std::invalid_argument);
}

TEST_CASE("k-independence solver") {
  CHECK(alpha_k(Graph::complete(6), 0).value == 1);
  CHECK(alpha_k(cycle_graph(5), 0).value == 2);
  CHECK(alpha_k(Graph::complete(4), 1).value == 2);
  CHECK(alpha_k(Graph(7), 0).value == 7);

  for (uint64_t s = 0; s < 12; ++s) {
    Graph g = Graph::random(11, 0.4, RngSpec{s, 0});
    for (int k = 0; k <= 2; ++k) {
      AlphaResult res = alpha_k(g, k);
      CAPTURE(s);
      CAPTURE(k);
      CHECK(res.exact);
      CHECK(res.value == testoracle::alpha_k_by_enumeration(g, k));
      // the witness itself is k-independent
      int worst = 0;
      res.witness.for_each([&](int v) {
        worst = std::max(worst, intersection_count(g.row(v), res.witness));
      });
      CHECK(worst <= k);
    }
    // monotone in k, and everything fits once k reaches the maximum degree
    CHECK(alpha_k(g, 1).value >= alpha_k(g, 0).value);
    int maxdeg = 0;
    for (int v = 0; v < g.n(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
    CHECK(alpha_k(g, maxdeg).value == g.n());
  }

  CHECK_THROWS_AS(alpha_k(Graph(3), -1), std::invalid_argument);

  AlphaResult truncated = alpha_k(Graph::random(40, 0.5, RngSpec{3, 0}), 0, 5);
  CHECK_FALSE(truncated.exact);
  CHECK(truncated.value >= 1);
}

TEST_CASE("independence-based lower bound on explicit hosts") {
  Pattern k3 = parse_pattern("complete:3");
  IndependenceLower a = anyg_lower(Graph::complete(6), k3);
  CHECK(a.conclusive);
  CHECK(a.value == Rational(5, 2));
  CHECK(a.alpha == 1);

  IndependenceLower b = anyg_lower(cycle_graph(6), k3);
  CHECK(b.conclusive);
  CHECK(b.value == Rational(3, 2));
  CHECK(b.alpha == 3);

  CHECK_THROWS_AS(anyg_lower(Graph::complete(6), parse_pattern("path:2")),
                  std::invalid_argument);

  IndependenceLower open = anyg_lower(Graph::random(40, 0.5, RngSpec{2, 0}), k3, 5);
  CHECK_FALSE(open.conclusive);
}

TEST_CASE("weight and concentration lower values") {
  CHECK(weight_lower_constant(parse_pattern("complete:3")) == Rational(1));
  CHECK(weight_lower_constant(parse_pattern("star:4")) == Rational(3, 2));
  CHECK(weight_lower_constant(parse_pattern("complete:4")) == Rational(2));
  CHECK_THROWS_AS(weight_lower_constant(analyze_pattern(Graph(2), "edgeless")),
                  std::invalid_argument);

  for (const char* text : {"complete:3", "complete:4", "kst:2,3", "cycle:6", "star:3"}) {
    Pattern f = parse_pattern(text);
    CHECK(weight_lower_constant(f) >= Rational(*f.r - 1, 2));
  }

  CHECK(concentration_lower_value(1024, 0.5, parse_pattern("star:3")) ==
        doctest::Approx(1004.0));
  CHECK(concentration_lower_value(500, 0.5, parse_pattern("path:2")) == 0.0);

  CHECK(alpha_concentration_target(500, 0.5) == doctest::Approx(17.9315685693));
  CHECK(alpha_concentration_target(100, 0.5) == doctest::Approx(13.2877123795));
  CHECK(alpha_concentration_target(1000, 1.0 - 1.0 / std::exp(1.0)) ==
        doctest::Approx(2.0 * std::log(1000.0)));
}

TEST_CASE("bound report composition") {
  BoundReport clique = bound_report(parse_pattern("complete:4"), 10, Rational(1, 2));
  const BoundEntry* exact = entry_named(clique, "clique-exact");
  REQUIRE(exact != nullptr);
  CHECK(*exact->value == Rational(17));
  CHECK(exact->kind == BoundEntry::Kind::exact);
  CHECK(entry_named(clique, "random-upper") == nullptr);
  CHECK(entry_named(clique, "kt-general-upper") != nullptr);

  BoundReport star = bound_report(parse_pattern("star:3"), 8, Rational(1, 2));
  const BoundEntry* sexact = entry_named(star, "star-exact");
  REQUIRE(sexact != nullptr);
  CHECK(*sexact->value == Rational(7));
  CHECK(entry_named(star, "random-upper") != nullptr);
  CHECK(entry_named(star, "kst-lower") == nullptr);

  BoundReport kst = bound_report(parse_pattern("kst:2,3"), 2000, Rational(1, 2));
  CHECK(entry_named(kst, "clique-exact") == nullptr);
  CHECK(entry_named(kst, "kst-lower") != nullptr);
  CHECK(entry_named(kst, "independence-lower") != nullptr);
  CHECK(entry_named(kst, "weight-lower") != nullptr);
  CHECK(entry_named(kst, "kst-lower-remark") == nullptr);

  BoundOptions remark;
  remark.include_remark = true;
  BoundReport with = bound_report(parse_pattern("kst:2,3"), 2000, Rational(1, 2), remark);
  CHECK(entry_named(with, "kst-lower-remark") != nullptr);

  std::string text = bound_report_text(kst);
  CHECK(text.find("kst-lower") != std::string::npos);
  CHECK(text.find("random-upper") != std::string::npos);
}

TEST_CASE("lower entries never exceed upper entries on a shared host class") {
  for (int s = 2; s <= 3; ++s)
    for (int t = s; t <= 6; ++t)
      for (int np = 1; np <= 9; ++np) {
        Rational p(np, 10);
        Pattern f = parse_pattern("kst:" + std::to_string(s) + "," + std::to_string(t));
        CAPTURE(s);
        CAPTURE(t);
        CAPTURE(np);
        CHECK(kst_lower_constant(p, s, t) <= random_upper_constant(p, f));
      }
}
