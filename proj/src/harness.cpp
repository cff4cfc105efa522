#include "satlab/harness.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "satlab/construct.hpp"
#include "satlab/detect.hpp"
#include "satlab/rng.hpp"
#include "satlab/saturate.hpp"

namespace satlab {

namespace {

using nlohmann::json;

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// stable per-trial seed: depends on the trial's identity, never on cell order
uint64_t trial_seed(uint64_t base, long long n, double p, const std::string& method,
                    int trial) {
  uint64_t pb = 0;
  std::memcpy(&pb, &p, sizeof pb);
  uint64_t x = mix_seed(base, uint64_t(n));
  x = mix_seed(x, pb);
  x = mix_seed(x, fnv1a(method));
  return mix_seed(x, uint64_t(trial));
}

const std::set<std::string>& known_methods() {
  static const std::set<std::string> m{"layered", "kt", "star", "greedy", "heuristic"};
  return m;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string fixed_str(double v, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << v;
  return os.str();
}

std::string plain_str(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("config: ") + ex.what());
  }
  ExperimentConfig cfg;
  try {
    cfg.pattern = j.at("pattern").get<std::string>();
    cfg.ns = j.at("ns").get<std::vector<long long>>();
    cfg.ps = j.at("ps").get<std::vector<double>>();
    cfg.methods = j.at("methods").get<std::vector<std::string>>();
    cfg.trials = j.value("trials", 1);
    cfg.base_seed = j.value("base_seed", uint64_t(0));
    cfg.policy = j.value("policy", std::string("rand"));
    cfg.restarts = j.value("restarts", 10);
    cfg.threads = j.value("threads", 0);
    cfg.csv_path = j.value("csv_path", std::string());
    cfg.summary_path = j.value("summary_path", std::string());
    if (j.contains("tolerances"))
      cfg.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("config: ") + ex.what());
  }
  if (cfg.ns.empty()) throw std::invalid_argument("config: ns must be nonempty");
  for (long long n : cfg.ns)
    if (n < 1) throw std::invalid_argument("config: n must be >= 1");
  if (cfg.ps.empty()) throw std::invalid_argument("config: ps must be nonempty");
  for (double p : cfg.ps)
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("config: p must be in (0,1)");
  if (cfg.methods.empty()) throw std::invalid_argument("config: methods must be nonempty");
  for (const std::string& m : cfg.methods)
    if (!known_methods().count(m)) throw std::invalid_argument("config: unknown method '" + m + "'");
  if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (cfg.restarts < 1) throw std::invalid_argument("config: restarts must be >= 1");
  if (cfg.threads < 0) throw std::invalid_argument("config: threads must be >= 0");
  parse_policy(cfg.policy);
  return cfg;
}

std::string ExperimentConfig::to_json_text() const {
  json j;
  j["pattern"] = pattern;
  j["ns"] = ns;
  j["ps"] = ps;
  j["methods"] = methods;
  j["trials"] = trials;
  j["base_seed"] = base_seed;
  j["policy"] = policy;
  j["restarts"] = restarts;
  j["threads"] = threads;
  j["tolerances"] = tolerances;
  j["csv_path"] = csv_path;
  j["summary_path"] = summary_path;
  return j.dump(2);
}

namespace {

std::string layered_params_json(const LayeredParams& par) {
  json j;
  j["a"] = par.a;
  j["delta"] = par.delta;
  j["q"] = par.q;
  j["ell"] = par.ell;
  j["b_prob"] = par.b_prob;
  j["w_sizes"] = par.w_sizes;
  j["h0_edges"] = par.h0_edges;
  j["within_core"] = par.within_core;
  j["core_to_w"] = par.core_to_w;
  j["within_w"] = par.within_w;
  return j.dump();
}

std::string star_params_json(const StarParams& par) {
  json j;
  j["degrees"] = par.degrees;
  j["h"] = par.h;
  j["ell_target"] = par.ell_target;
  j["ell"] = par.ell;
  j["regular_target"] = par.regular_target;
  j["deficient"] = par.deficient;
  j["clique_edges"] = par.clique_edges;
  j["regular_edges"] = par.regular_edges;
  return j.dump();
}

TrialRecord run_trial(const ExperimentConfig& cfg, const Pattern& f, Policy pol, int cell,
                      long long n, double p, const std::string& method, int trial) {
  TrialRecord rec;
  rec.cell = cell;
  rec.pattern = cfg.pattern;
  rec.method = method;
  rec.policy = cfg.policy;
  rec.n = n;
  rec.p = p;
  rec.trial = trial;
  rec.seed = trial_seed(cfg.base_seed, n, p, method, trial);
  auto t0 = std::chrono::steady_clock::now();
  try {
    SaturationResult res;
    if (method == "kt") {
      res = kt_construction(int(n), f, RngSpec{rec.seed, 1}, ConstructOptions{pol, true});
      json j;
      j["b"] = f.kt_b ? *f.kt_b : -1;
      j["d"] = f.kt_d ? *f.kt_d : -1;
      rec.params_json = j.dump();
    } else {
      Graph g = Graph::random(int(n), p, RngSpec{rec.seed, 0});
      if (method == "layered") {
        auto [r, par] = layered_construction(g, p, f, RngSpec{rec.seed, 1},
                                             ConstructOptions{pol, true});
        res = std::move(r);
        rec.params_json = layered_params_json(par);
      } else if (method == "star") {
        auto [r, par] =
            star_construction(g, p, f, RngSpec{rec.seed, 1}, ConstructOptions{pol, true});
        res = std::move(r);
        rec.params_json = star_params_json(par);
      } else if (method == "greedy") {
        res = greedy_complete(g, {}, f, pol, RngSpec{rec.seed, 1});
        res.verify = verify_saturated(g, res.edges, f);
        rec.params_json = "{}";
      } else {
        res = heuristic_min_sat(g, f, cfg.restarts, RngSpec{rec.seed, 1});
        res.verify = verify_saturated(g, res.edges, f);
        json j;
        j["restarts"] = cfg.restarts;
        rec.params_json = j.dump();
      }
    }
    rec.m = res.m;
    rec.m_over_n = double(res.m) / double(n);
    rec.verdict = verify_status_name(res.verify.status);
  } catch (const std::invalid_argument& ex) {
    rec.m = -1;
    rec.verdict = "skipped";
    rec.skip_reason = ex.what();
  }
  rec.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
  Pattern f = parse_pattern(cfg.pattern);
  Policy pol = parse_policy(cfg.policy);

  struct Task {
    int cell;
    long long n;
    double p;
    const std::string* method;
    int trial;
  };
  std::vector<Task> tasks;
  int cell = 0;
  for (long long n : cfg.ns)
    for (double p : cfg.ps)
      for (const std::string& method : cfg.methods) {
        for (int t = 0; t < cfg.trials; ++t) tasks.push_back({cell, n, p, &method, t});
        ++cell;
      }

  ExperimentOutput out;
  out.records.resize(tasks.size());
  unsigned hw = std::thread::hardware_concurrency();
  size_t nthreads = cfg.threads > 0 ? size_t(cfg.threads) : (hw ? hw : 1);
  nthreads = std::min(nthreads, tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      const Task& t = tasks[i];
      out.records[i] = run_trial(cfg, f, pol, t.cell, t.n, t.p, *t.method, t.trial);
    }
  };
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  int total_failed = 0;
  for (int c = 0; c < cell; ++c) {
    CellSummary s;
    s.cell = c;
    bool first = true;
    double sum = 0, sumsq = 0;
    for (const TrialRecord& r : out.records) {
      if (r.cell != c) continue;
      s.method = r.method;
      s.n = r.n;
      s.p = r.p;
      if (r.verdict == "skipped") {
        ++s.skipped;
        continue;
      }
      if (r.verdict != "pass") {
        ++s.failed;
        ++total_failed;
        continue;
      }
      ++s.completed;
      double v = r.m_over_n;
      sum += v;
      sumsq += v * v;
      s.min = first ? v : std::min(s.min, v);
      s.max = first ? v : std::max(s.max, v);
      first = false;
    }
    if (s.completed > 0) {
      s.mean = sum / s.completed;
      if (s.completed > 1) {
        double var = (sumsq - sum * sum / s.completed) / (s.completed - 1);
        s.stddev = var > 0 ? std::sqrt(var) : 0;
      }
    }
    out.cells.push_back(std::move(s));
  }

  out.checks = compare_bounds(cfg, f, out.records, out.cells);
  out.all_pass = total_failed == 0;
  for (const BoundCheck& c : out.checks)
    if (!c.pass) out.all_pass = false;
  return out;
}

std::vector<BoundCheck> compare_bounds(const ExperimentConfig& cfg, const Pattern& f,
                                       const std::vector<TrialRecord>&,
                                       const std::vector<CellSummary>& cells) {
  std::vector<BoundCheck> checks;
  auto tolerance_for = [&](const std::string& name) {
    auto it = cfg.tolerances.find(name);
    if (it != cfg.tolerances.end()) return it->second;
    it = cfg.tolerances.find("default");
    if (it != cfg.tolerances.end()) return it->second;
    return 0.2;
  };
  for (const CellSummary& cell : cells) {
    if (cell.completed == 0) continue;
    // config p values are short decimals; 10^6 exactifies them
    Rational pr(std::llround(cell.p * 1e6), 1000000);
    BoundReport rep = bound_report(f, cell.n, pr);
    bool gnp_method = cell.method != "kt";
    for (const BoundEntry& e : rep.entries) {
      bool gnp_entry = e.host == BoundEntry::Host::gnp;
      if (gnp_entry != gnp_method) continue;
      double ref = e.value_approx / double(cell.n);
      double tol = tolerance_for(e.name);
      BoundCheck chk;
      chk.cell = cell.cell;
      chk.bound = e.name;
      chk.tolerance = tol;
      chk.reference = ref;
      if (e.kind == BoundEntry::Kind::upper) {
        // only the construction aimed at a bound is held to it
        bool targeted = (e.name == "random-upper" && (cell.method == "layered" ||
                                                      cell.method == "star")) ||
                        (e.name == "kt-general-upper" && cell.method == "kt");
        if (!targeted) continue;
        chk.kind = "upper";
        chk.measured = cell.mean;
        chk.pass = cell.mean <= ref + tol;
      } else {
        // exact values and lower bounds both floor any saturated subgraph
        chk.kind = "lower";
        chk.measured = cell.min;
        chk.pass = cell.min >= ref - tol;
      }
      checks.push_back(std::move(chk));
    }
  }
  return checks;
}

std::string records_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream os;
  os << "cell,pattern,n,p,method,policy,trial,seed,m,m_over_n,verdict,skip_reason,wall_ms,"
        "params\n";
  for (const TrialRecord& r : records) {
    os << r.cell << ',' << csv_escape(r.pattern) << ',' << r.n << ',' << plain_str(r.p) << ','
       << r.method << ',' << r.policy << ',' << r.trial << ',' << r.seed << ',' << r.m << ','
       << fixed_str(r.m_over_n, 6) << ',' << r.verdict << ',' << csv_escape(r.skip_reason)
       << ',' << fixed_str(r.wall_ms, 3) << ',' << csv_escape(r.params_json) << '\n';
  }
  return os.str();
}

std::string summary_json_text(const ExperimentConfig& cfg, const ExperimentOutput& out) {
  json j;
  j["config"] = json::parse(cfg.to_json_text());
  j["cells"] = json::array();
  for (const CellSummary& c : out.cells) {
    json jc;
    jc["cell"] = c.cell;
    jc["method"] = c.method;
    jc["n"] = c.n;
    jc["p"] = c.p;
    jc["completed"] = c.completed;
    jc["skipped"] = c.skipped;
    jc["failed"] = c.failed;
    jc["mean_m_over_n"] = c.mean;
    jc["stddev_m_over_n"] = c.stddev;
    jc["min_m_over_n"] = c.min;
    jc["max_m_over_n"] = c.max;
    j["cells"].push_back(std::move(jc));
  }
  j["checks"] = json::array();
  for (const BoundCheck& c : out.checks) {
    json jc;
    jc["cell"] = c.cell;
    jc["bound"] = c.bound;
    jc["kind"] = c.kind;
    jc["reference_per_n"] = c.reference;
    jc["tolerance"] = c.tolerance;
    jc["measured_per_n"] = c.measured;
    jc["pass"] = c.pass;
    j["checks"].push_back(std::move(jc));
  }
  j["all_pass"] = out.all_pass;
  return j.dump(2);
}

RandomPropsReport check_random_properties(long long n, double p, int trials, double eps,
                                          int clique_size, uint64_t seed) {
  if (n < 3) throw std::invalid_argument("check_random_properties: n too small");
  if (trials < 1) throw std::invalid_argument("check_random_properties: trials must be >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("check_random_properties: p outside [0,1]");
  if (clique_size < 1 || clique_size > 5)
    throw std::invalid_argument("check_random_properties: clique size must be in 1..5");
  if (!(eps > 0.0)) throw std::invalid_argument("check_random_properties: eps must be positive");

  RandomPropsReport rep;
  rep.n = n;
  rep.p = p;
  rep.eps = eps;
  rep.clique_size = clique_size;
  rep.trials = trials;
  double lg = std::log(double(n));
  int s = int(std::ceil(lg * lg));
  s = std::max(1, std::min<int>(s, int(n / 3)));
  rep.subset_size = s;

  Pattern clique = parse_pattern("complete:" + std::to_string(clique_size));
  auto in_band = [&](long long count, double mean) {
    if (mean == 0.0) return count == 0;
    return std::abs(double(count) - mean) <= eps * mean;
  };

  for (int t = 0; t < trials; ++t) {
    uint64_t st = mix_seed(seed, uint64_t(t));
    Graph g = Graph::random(int(n), p, RngSpec{st, 0});
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < int(n); ++i) order[size_t(i)] = i;
    auto eng = make_engine(RngSpec{st, 1});
    shuffle_vec(order, eng);
    Bitset x{int(n)}, y{int(n)}, z{int(n)};
    for (int i = 0; i < s; ++i) x.set(order[size_t(i)]);
    for (int i = s; i < 2 * s; ++i) y.set(order[size_t(i)]);
    for (int i = 2 * s; i < 3 * s; ++i) z.set(order[size_t(i)]);

    bool bad = false;
    if (!in_band(edges_between(g, x, y), p * double(s) * double(s))) {
      ++rep.cross_failures;
      bad = true;
    }
    if (!in_band(edges_between(g, x, x), p * double(s) * double(s - 1) / 2.0)) {
      ++rep.within_failures;
      bad = true;
    }
    std::vector<int> back;
    std::vector<int> fwd(size_t(n), -1);
    back = z.to_vector();
    for (size_t i = 0; i < back.size(); ++i) fwd[size_t(back[i])] = int(i);
    Graph sub(int(back.size()));
    for (size_t i = 0; i < back.size(); ++i) {
      const Bitset& row = g.row(back[i]);
      for (int v = row.next(back[i]); v != -1; v = row.next(v))
        if (fwd[size_t(v)] != -1) sub.add_edge(int(i), fwd[size_t(v)]);
    }
    if (find_copy(sub, clique).status != SearchStatus::found) {
      ++rep.clique_failures;
      bad = true;
    }
    if (bad) ++rep.failed_trials;
  }
  rep.failure_rate = double(rep.failed_trials) / double(trials);
  return rep;
}

AlphaConcentrationReport check_alpha_concentration(long long n, double p, int k, int seeds,
                                                   uint64_t base_seed, long long n_limit) {
  if (seeds < 1) throw std::invalid_argument("check_alpha_concentration: seeds must be >= 1");
  AlphaConcentrationReport rep;
  rep.n = n;
  rep.p = p;
  rep.k = k;
  if (n > n_limit) {
    rep.skipped = true;
    return rep;
  }
  rep.target = alpha_concentration_target(n, p, k);
  for (int s = 0; s < seeds; ++s) {
    Graph g = Graph::random(int(n), p, RngSpec{mix_seed(base_seed, uint64_t(s)), 0});
    AlphaResult a = alpha_k(g, k);
    rep.values.push_back(a.value);
    rep.exact.push_back(a.exact);
    if (!a.exact) rep.all_exact = false;
    rep.max_abs_deviation = std::max(rep.max_abs_deviation, std::abs(a.value - rep.target));
  }
  return rep;
}

std::string random_props_json(const RandomPropsReport& rep) {
  json j;
  j["n"] = rep.n;
  j["p"] = rep.p;
  j["eps"] = rep.eps;
  j["clique_size"] = rep.clique_size;
  j["trials"] = rep.trials;
  j["subset_size"] = rep.subset_size;
  j["cross_failures"] = rep.cross_failures;
  j["within_failures"] = rep.within_failures;
  j["clique_failures"] = rep.clique_failures;
  j["failed_trials"] = rep.failed_trials;
  j["failure_rate"] = rep.failure_rate;
  return j.dump(2);
}

std::string alpha_report_json(const AlphaConcentrationReport& rep) {
  json j;
  j["n"] = rep.n;
  j["p"] = rep.p;
  j["k"] = rep.k;
  j["skipped"] = rep.skipped;
  j["target"] = rep.target;
  j["values"] = rep.values;
  std::vector<int> ex;
  for (bool b : rep.exact) ex.push_back(b ? 1 : 0);
  j["exact"] = ex;
  j["max_abs_deviation"] = rep.max_abs_deviation;
  j["all_exact"] = rep.all_exact;
  return j.dump(2);
}

}  // namespace satlab
