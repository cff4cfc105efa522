#include "satlab/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace satlab {

namespace {

long long ceil_div(long long a, long long b) { return a / b + (a % b > 0 ? 1 : 0); }  // b > 0

long long choose2(long long x) { return x * (x - 1) / 2; }

bool is_complete(const Graph& g) { return g.m() == choose2(g.n()); }

}  // namespace

Rational pow_rational(const Rational& base, int exp) {
  if (exp < 0) throw std::invalid_argument("pow_rational: negative exponent");
  Rational out(1);
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

double rational_double(const Rational& r) {
  return double(r.numerator()) / double(r.denominator());
}

std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_probability(const std::string& text) {
  auto fail = [&]() -> void { throw std::invalid_argument("bad probability '" + text + "'"); };
  auto digits = [&](const std::string& s) {
    if (s.empty()) fail();
    for (char c : s)
      if (!std::isdigit((unsigned char)c)) fail();
    return std::stoll(s);
  };
  Rational p;
  size_t slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      long long num = digits(text.substr(0, slash));
      long long den = digits(text.substr(slash + 1));
      if (den <= 0) fail();
      p = Rational(num, den);
    } else {
      size_t dot = text.find('.');
      std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
      std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
      if (frac.size() > 12) frac = frac.substr(0, 12);  // enough for exactness in tests
      if (whole.empty() && frac.empty()) fail();
      for (char c : whole + frac)
        if (!std::isdigit((unsigned char)c)) fail();
      long long den = 1;
      for (size_t i = 0; i < frac.size(); ++i) den *= 10;
      long long num = (whole.empty() ? 0 : std::stoll(whole)) * den +
                      (frac.empty() ? 0 : std::stoll(frac));
      p = Rational(num, den);
    }
  } catch (const std::invalid_argument&) {
    fail();
  } catch (const std::out_of_range&) {
    fail();
  }
  if (p <= Rational(0) || p >= Rational(1))
    throw std::invalid_argument("probability must be strictly between 0 and 1");
  return p;
}

long long ehm_value(long long n, int r) {
  if (r < 2 || n < r) throw std::invalid_argument("ehm_value: need n >= r >= 2");
  return (long long)(r - 2) * n - choose2(r - 1);
}

long long kt_star_value(long long n, int t) {
  if (t < 1 || n < t + 1) throw std::invalid_argument("kt_star_value: need n >= t+1 >= 2");
  if (2 * n <= 3 * (long long)t) return choose2(t) + choose2(n - t);
  // ceil((t-1)n/2 - t^2/8) over a common denominator of 8
  return ceil_div(4 * (long long)(t - 1) * n - (long long)t * t, 8);
}

Rational kt_general_upper(long long n, const Pattern& f) {
  if (!f.kt_b) throw std::invalid_argument("kt_general_upper: pattern has no edges");
  if (n < f.graph.n()) throw std::invalid_argument("kt_general_upper: n below |V(f)|");
  long long b = *f.kt_b, d = *f.kt_d;
  return Rational((2 * b + d - 1) * n - b * (b + d), 2);
}

Rational random_upper_constant(const Rational& p, const Pattern& f) {
  BipartiteInfo bip = analyze_bipartition(f, rational_double(p));
  int a = bip.a, delta = bip.delta;
  return Rational(delta - 1) / pow_rational(p, a - 1) - Rational(delta - 2 * a + 1, 2);
}

Rational random_upper_value(long long n, const Rational& p, const Pattern& f) {
  return random_upper_constant(p, f) * Rational(n);
}

Rational kst_lower_constant(const Rational& p, int s, int t) {
  if (s < 2 || t < s) throw std::invalid_argument("kst_lower: need t >= s >= 2");
  Rational first(2 * s + t - 3, 2);
  Rational second = Rational(t - s) / (Rational(4) * pow_rational(p, s - 1)) + Rational(s - 1, 2);
  return std::max(first, second);
}

Rational kst_lower_value(long long n, const Rational& p, int s, int t) {
  return kst_lower_constant(p, s, t) * Rational(n);
}

Rational kst_lower_remark_constant(const Rational& p, int s, int t) {
  if (s < 2 || t < s) throw std::invalid_argument("kst_lower: need t >= s >= 2");
  return Rational(t - s) / (Rational(4) * pow_rational(p, s - 1)) + Rational(s - 1);
}

namespace {

// sum over a greedy clique cover of min(|Q|, k+1)
int cover_bound(const Graph& g, const Bitset& cand, int k) {
  std::vector<Bitset> inter;
  std::vector<int> size;
  cand.for_each([&](int v) {
    for (size_t i = 0; i < inter.size(); ++i) {
      if (inter[i].test(v)) {
        inter[i] &= g.row(v);
        ++size[i];
        return;
      }
    }
    inter.push_back(g.row(v));
    size.push_back(1);
  });
  int bound = 0;
  for (int s : size) bound += std::min(s, k + 1);
  return bound;
}

struct AlphaSolver {
  const Graph& g;
  int k;
  uint64_t budget;
  uint64_t nodes = 0;
  bool aborted = false;
  Bitset best;
  Bitset chosen;
  std::vector<int> intdeg;  // |N(v) ∩ chosen|

  AlphaSolver(const Graph& graph, int kk, uint64_t b)
      : g(graph), k(kk), budget(b), best(graph.n()), chosen(graph.n()), intdeg(graph.n(), 0) {}

  bool compatible(int u) const {
    if (intdeg[u] > k) return false;
    Bitset hit = g.row(u) & chosen;
    bool ok = true;
    hit.for_each([&](int w) {
      if (intdeg[w] >= k) ok = false;
    });
    return ok;
  }

  void rec(const Bitset& cand) {
    if (aborted) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    int have = chosen.count();
    if (have > best.count()) best = chosen;
    if (cand.none()) return;
    if (have + cover_bound(g, cand, k) <= best.count()) return;

    int pick = -1, pick_deg = -1;
    cand.for_each([&](int v) {
      int d = intersection_count(g.row(v), cand);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    });

    // include
    chosen.set(pick);
    g.row(pick).for_each([&](int w) { ++intdeg[w]; });
    Bitset next(g.n());
    if (k == 0) {
      next = cand;
      next -= g.row(pick);
      next.reset(pick);
    } else {
      cand.for_each([&](int v) {
        if (v != pick && compatible(v)) next.set(v);
      });
    }
    rec(next);
    g.row(pick).for_each([&](int w) { --intdeg[w]; });
    chosen.reset(pick);
    if (aborted) return;

    // exclude
    Bitset rest = cand;
    rest.reset(pick);
    rec(rest);
  }
};

}  // namespace

AlphaResult alpha_k(const Graph& g, int k, uint64_t node_budget) {
  if (k < 0) throw std::invalid_argument("alpha_k: k must be nonnegative");
  AlphaSolver s(g, k, node_budget == 0 ? UINT64_MAX : node_budget);
  s.rec(Bitset::full(g.n()));
  AlphaResult out;
  out.value = s.best.count();
  out.exact = !s.aborted;
  out.nodes = s.nodes;
  out.witness = s.best;
  return out;
}

IndependenceLower anyg_lower(const Graph& g, const Pattern& f, uint64_t alpha_budget) {
  if (!f.r) throw std::invalid_argument("anyg_lower: pattern has no edges");
  if (*f.r < 2) throw std::invalid_argument("anyg_lower: needs r(f) >= 2");
  AlphaResult a = alpha_k(g, *f.r - 2, alpha_budget);
  IndependenceLower out;
  out.alpha = a.value;
  if (!a.exact) return out;  // a lower estimate of alpha would inflate the bound
  out.conclusive = true;
  out.value = Rational((long long)(*f.r - 1) * (g.n() - a.value), 2);
  return out;
}

Rational weight_lower_constant(const Pattern& f) {
  if (!f.w) throw std::invalid_argument("weight_lower_constant: pattern has no edges");
  return Rational(*f.w - 1, 2);
}

double concentration_lower_value(long long n, double p, const Pattern& f) {
  if (!f.r) throw std::invalid_argument("concentration_lower_value: pattern has no edges");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("concentration_lower_value: p outside (0,1)");
  int r = *f.r;
  if (r == 1) return 0.0;
  return (r - 1) / 2.0 * double(n) - (r - 1) * std::log(double(n)) / std::log(1.0 / (1.0 - p));
}

double alpha_concentration_target(long long n, double p, int) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("alpha_concentration_target: p outside (0,1)");
  return 2.0 * std::log(double(n)) / std::log(1.0 / (1.0 - p));
}

const char* kind_name(BoundEntry::Kind k) {
  switch (k) {
    case BoundEntry::Kind::exact: return "exact";
    case BoundEntry::Kind::lower: return "lower";
    case BoundEntry::Kind::upper: return "upper";
  }
  return "?";
}

const char* host_name(BoundEntry::Host h) {
  switch (h) {
    case BoundEntry::Host::complete: return "complete";
    case BoundEntry::Host::gnp: return "gnp";
  }
  return "?";
}

BoundReport bound_report(const Pattern& f, long long n, const Rational& p,
                         const BoundOptions& opts) {
  BoundReport rep;
  rep.n = n;
  rep.p = p;
  auto push = [&](BoundEntry e) { rep.entries.push_back(std::move(e)); };

  int nv = f.graph.n();
  if (nv >= 2 && is_complete(f.graph) && n >= nv) {
    BoundEntry e;
    e.name = "clique-exact";
    e.kind = BoundEntry::Kind::exact;
    e.host = BoundEntry::Host::complete;
    e.constant = Rational(nv - 2);
    e.value = Rational(ehm_value(n, nv));
    e.value_approx = rational_double(*e.value);
    e.note = "Erdos-Hajnal-Moon value for complete patterns";
    push(std::move(e));
  }
  if (f.star_degrees && f.star_degrees->size() == 1) {
    int t = f.star_degrees->front();
    if (n >= t + 1) {
      BoundEntry e;
      e.name = "star-exact";
      e.kind = BoundEntry::Kind::exact;
      e.host = BoundEntry::Host::complete;
      e.constant = Rational(t - 1, 2);
      e.value = Rational(kt_star_value(n, t));
      e.value_approx = rational_double(*e.value);
      e.note = "Kaszonyi-Tuza value for stars";
      push(std::move(e));
    }
  }
  if (f.kt_b && n >= nv) {
    BoundEntry e;
    e.name = "kt-general-upper";
    e.kind = BoundEntry::Kind::upper;
    e.host = BoundEntry::Host::complete;
    e.constant = Rational(2 * *f.kt_b + *f.kt_d - 1, 2);
    e.value = kt_general_upper(n, f);
    e.value_approx = rational_double(*e.value);
    e.note = "complete-host construction keeping edges that meet a fixed " +
             std::to_string(*f.kt_b) + "-set";
    push(std::move(e));
  }
  bool have_bip = false;
  try {
    analyze_bipartition(f, rational_double(p));
    have_bip = true;
  } catch (const std::invalid_argument&) {
  }
  if (have_bip) {
    BipartiteInfo bip = analyze_bipartition(f, rational_double(p));
    BoundEntry e;
    e.name = "random-upper";
    e.kind = BoundEntry::Kind::upper;
    e.host = BoundEntry::Host::gnp;
    e.constant = random_upper_constant(p, f);
    e.value = *e.constant * Rational(n);
    e.value_approx = rational_double(*e.value);
    e.asymptotic = true;
    e.note = bip.a == 1 ? "star-forest value (delta-1)/2 per vertex"
                        : "layered-construction constant at a=" + std::to_string(bip.a);
    push(std::move(e));
  }
  if (f.kst && f.kst->first >= 2) {
    auto [s, t] = *f.kst;
    BoundEntry e;
    e.name = "kst-lower";
    e.kind = BoundEntry::Kind::lower;
    e.host = BoundEntry::Host::gnp;
    e.constant = kst_lower_constant(p, s, t);
    e.value = *e.constant * Rational(n);
    e.value_approx = rational_double(*e.value);
    e.asymptotic = true;
    e.note = "max of the degree and expansion branches";
    push(std::move(e));
    if (opts.include_remark) {
      BoundEntry r;
      r.name = "kst-lower-remark";
      r.kind = BoundEntry::Kind::lower;
      r.host = BoundEntry::Host::gnp;
      r.constant = kst_lower_remark_constant(p, s, t);
      r.value = *r.constant * Rational(n);
      r.value_approx = rational_double(*r.value);
      r.asymptotic = true;
      r.note = "sharper additive form, stated without full proof; opt-in";
      push(std::move(r));
    }
  }
  if (f.r && *f.r >= 1) {
    BoundEntry e;
    e.name = "independence-lower";
    e.kind = BoundEntry::Kind::lower;
    e.host = BoundEntry::Host::gnp;
    e.constant = Rational(*f.r - 1, 2);
    e.value_approx = concentration_lower_value(n, rational_double(p), f);
    e.asymptotic = true;
    e.note = "(r-1)/2 n minus (r-1) log_{1/(1-p)} n from independence concentration";
    push(std::move(e));
  }
  if (f.w) {
    BoundEntry e;
    e.name = "weight-lower";
    e.kind = BoundEntry::Kind::lower;
    e.host = BoundEntry::Host::gnp;
    e.constant = weight_lower_constant(f);
    e.value_approx = rational_double(*e.constant) * double(n);
    e.asymptotic = true;
    e.note = "additive O(log n) slack not quantified";
    push(std::move(e));
  }
  return rep;
}

std::string bound_report_text(const BoundReport& rep) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"name", "kind", "host", "constant", "value", "approx", "asymptotic", "note"});
  for (const BoundEntry& e : rep.entries) {
    std::ostringstream approx;
    approx.precision(6);
    approx << std::fixed << e.value_approx;
    rows.push_back({e.name, kind_name(e.kind), host_name(e.host),
                    e.constant ? rational_str(*e.constant) : "-",
                    e.value ? rational_str(*e.value) : "-", approx.str(),
                    e.asymptotic ? "yes" : "no", e.note});
  }
  std::vector<size_t> width(rows[0].size(), 0);
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace satlab
