// bounds.hpp -- closed-form saturation bounds and the k-independence solver.
#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

using Rational = boost::rational<long long>;

Rational pow_rational(const Rational& base, int exp);  // exp >= 0
double rational_double(const Rational& r);
std::string rational_str(const Rational& r);

// exact "0.35" or "7/20" forms; must lie strictly between 0 and 1
Rational parse_probability(const std::string& text);

// exact minimum size of a K_r-saturated subgraph of K_n: (r-2)n - C(r-1,2)
long long ehm_value(long long n, int r);  // pre: n >= r >= 2

// exact minimum size of a K_{1,t}-saturated subgraph of K_n: C(t,2)+C(n-t,2)
// while n <= 3t/2, afterwards ceil((t-1)n/2 - t^2/8)
long long kt_star_value(long long n, int t);  // pre: t >= 1, n >= t+1

// complete-host upper bound (2b+d-1)/2 n - b(b+d)/2 from the construction
// keeping all edges that meet a fixed (|V(f)|-alpha(f)-1)-set
Rational kt_general_upper(long long n, const Pattern& f);  // pre: edges, n >= |V(f)|

// random-host upper constants; a = 1 degenerates to the star-forest value
// (delta-1)/2, which the same expression yields
Rational random_upper_constant(const Rational& p, const Pattern& f);
Rational random_upper_value(long long n, const Rational& p, const Pattern& f);

// random-host lower constants for K_{s,t}, t >= s >= 2
Rational kst_lower_constant(const Rational& p, int s, int t);
Rational kst_lower_value(long long n, const Rational& p, int s, int t);
// sharper additive variant, stated without a full proof; opt-in
Rational kst_lower_remark_constant(const Rational& p, int s, int t);

struct AlphaResult {
  int value = 0;  // exact alpha_k, or best found when the budget ran out
  bool exact = true;
  uint64_t nodes = 0;
  Bitset witness;
};

// largest S with max degree of G[S] at most k; branch and bound with a greedy
// clique-cover bound (a k-independent set meets a clique in at most k+1 vertices)
AlphaResult alpha_k(const Graph& g, int k, uint64_t node_budget = 0);  // 0 = unlimited

struct IndependenceLower {
  bool conclusive = false;
  Rational value;  // (r-1)(n - alpha_{r-2}(g)) / 2 when conclusive
  int alpha = 0;
};

// graph-dependent lower bound; a truncated alpha search only bounds alpha from
// below, which would weaken the wrong side, so the result is then inconclusive
IndependenceLower anyg_lower(const Graph& g, const Pattern& f, uint64_t alpha_budget = 0);

// (w-1)/2, the per-n constant of the weight lower bound
Rational weight_lower_constant(const Pattern& f);  // pre: at least one edge

// (r-1)/2 n - (r-1) log_{1/(1-p)} n; 0 when r = 1
double concentration_lower_value(long long n, double p, const Pattern& f);

// 2 log_{1/(1-p)} n, the center of the independence-number concentration;
// k is accepted for symmetry with the empirical check but does not move the center
double alpha_concentration_target(long long n, double p, int k = 0);

struct BoundEntry {
  std::string name;
  enum class Kind { exact, lower, upper } kind = Kind::exact;
  enum class Host { complete, gnp } host = Host::complete;
  std::optional<Rational> constant;  // leading per-n coefficient
  std::optional<Rational> value;     // exact value at n, when rational
  double value_approx = 0;
  bool asymptotic = false;  // o(1) terms dropped; finite-n use needs tolerances
  std::string note;
};

const char* kind_name(BoundEntry::Kind k);
const char* host_name(BoundEntry::Host h);

struct BoundReport {
  long long n = 0;
  Rational p;
  std::vector<BoundEntry> entries;
};

struct BoundOptions {
  bool include_remark = false;
};

// every bound whose hypotheses the pattern satisfies at this (n, p)
BoundReport bound_report(const Pattern& f, long long n, const Rational& p,
                         const BoundOptions& opts = {});

std::string bound_report_text(const BoundReport& rep);

}  // namespace satlab
