// satlab_main.cpp -- command line front end.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "satlab/bounds.hpp"
#include "satlab/construct.hpp"
#include "satlab/detect.hpp"
#include "satlab/graph.hpp"
#include "satlab/graph_io.hpp"
#include "satlab/harness.hpp"
#include "satlab/pattern.hpp"
#include "satlab/rng.hpp"
#include "satlab/saturate.hpp"

namespace {

using nlohmann::json;
using namespace satlab;

std::string slurp(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string read_file(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return slurp(in);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// complete:N | gnp:N,P,SEED | path | -
Graph load_graph(const std::string& spec) {
  if (spec.rfind("complete:", 0) == 0) return Graph::complete(std::stoi(spec.substr(9)));
  if (spec.rfind("gnp:", 0) == 0) {
    std::string rest = spec.substr(4);
    std::istringstream in(rest);
    std::string n_s, p_s, seed_s;
    if (!std::getline(in, n_s, ',') || !std::getline(in, p_s, ',') ||
        !std::getline(in, seed_s, ','))
      throw std::runtime_error("gnp spec needs gnp:N,P,SEED");
    return Graph::random(std::stoi(n_s), std::stod(p_s), RngSpec{std::stoull(seed_s), 0});
  }
  return read_graph_auto(read_file(spec));
}

json edges_json(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back(json::array({e.u, e.v}));
  return arr;
}

json bound_report_json(const BoundReport& rep) {
  json j;
  j["n"] = rep.n;
  j["p"] = rational_str(rep.p);
  j["entries"] = json::array();
  for (const BoundEntry& e : rep.entries) {
    json je;
    je["name"] = e.name;
    je["kind"] = kind_name(e.kind);
    je["host"] = host_name(e.host);
    if (e.constant) je["constant"] = rational_str(*e.constant);
    if (e.value) je["value"] = rational_str(*e.value);
    je["value_approx"] = e.value_approx;
    je["asymptotic"] = e.asymptotic;
    je["note"] = e.note;
    j["entries"].push_back(std::move(je));
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"graph saturation laboratory"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a host graph");
  std::string gen_spec, gen_out = "-", gen_format = "g6";
  gen->add_option("--graph", gen_spec, "complete:N | gnp:N,P,SEED | path | -")->required();
  gen->add_option("-o,--output", gen_out, "output path, - for stdout");
  gen->add_option("--format", gen_format, "g6 | edges")->check(CLI::IsMember({"g6", "edges"}));

  // exact
  auto* exact = app.add_subcommand("exact", "exact minimum saturated subgraph");
  std::string ex_graph, ex_pattern;
  uint64_t ex_budget = 0;
  exact->add_option("--graph", ex_graph)->required();
  exact->add_option("--pattern", ex_pattern)->required();
  exact->add_option("--budget", ex_budget, "search node budget, 0 = unlimited");

  // complete
  auto* completec = app.add_subcommand("complete", "greedy completion to a saturated subgraph");
  std::string co_graph, co_pattern, co_policy = "lex";
  uint64_t co_seed = 0;
  completec->add_option("--graph", co_graph)->required();
  completec->add_option("--pattern", co_pattern)->required();
  completec->add_option("--policy", co_policy)->check(CLI::IsMember({"lex", "rand", "mindeg"}));
  completec->add_option("--seed", co_seed);

  // construct
  auto* cons = app.add_subcommand("construct", "run a named construction");
  std::string cn_method, cn_pattern, cn_policy = "rand";
  long long cn_n = 0;
  double cn_p = 0.5;
  uint64_t cn_seed = 0;
  bool cn_params = false, cn_witness = false, cn_no_verify = false;
  cons->add_option("--method", cn_method)->required()->check(
      CLI::IsMember({"layered", "kt", "star"}));
  cons->add_option("--pattern", cn_pattern)->required();
  cons->add_option("--n", cn_n)->required();
  cons->add_option("--p", cn_p);
  cons->add_option("--seed", cn_seed);
  cons->add_option("--policy", cn_policy)->check(CLI::IsMember({"lex", "rand", "mindeg"}));
  cons->add_flag("--emit-params", cn_params, "include the parameter record");
  cons->add_flag("--emit-witness", cn_witness, "include the edge list");
  cons->add_flag("--no-verify", cn_no_verify, "skip the saturation check");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate applicable bounds");
  std::string bd_pattern, bd_p = "1/2";
  long long bd_n = 0;
  bool bd_remark = false;
  bounds->add_option("--pattern", bd_pattern)->required();
  bounds->add_option("--n", bd_n)->required();
  bounds->add_option("--p", bd_p, "probability, decimal or a/b");
  bounds->add_flag("--remark", bd_remark, "include the opt-in sharper lower entry");

  // experiment
  auto* exp = app.add_subcommand("experiment", "run a seeded experiment sweep");
  std::string xp_config, xp_csv, xp_summary;
  exp->add_option("--config", xp_config, "JSON config path, - for stdin")->required();
  exp->add_option("--csv", xp_csv, "override csv output path");
  exp->add_option("--summary", xp_summary, "override summary output path");

  // check-random
  auto* ckr = app.add_subcommand("check-random", "edge-count and clique spot checks on G(n,p)");
  long long cr_n = 2000;
  double cr_p = 0.5, cr_eps = 0.2;
  int cr_trials = 100, cr_clique = 4;
  uint64_t cr_seed = 0;
  ckr->add_option("--n", cr_n);
  ckr->add_option("--p", cr_p);
  ckr->add_option("--trials", cr_trials);
  ckr->add_option("--eps", cr_eps);
  ckr->add_option("--clique-size", cr_clique);
  ckr->add_option("--seed", cr_seed);

  // check-alpha
  auto* cka = app.add_subcommand("check-alpha", "exact independence number vs its concentration center");
  long long ca_n = 120, ca_limit = 150;
  double ca_p = 0.5;
  int ca_k = 0, ca_seeds = 5;
  uint64_t ca_seed = 0;
  cka->add_option("--n", ca_n);
  cka->add_option("--p", ca_p);
  cka->add_option("--k", ca_k);
  cka->add_option("--seeds", ca_seeds);
  cka->add_option("--seed", ca_seed);
  cka->add_option("--limit", ca_limit, "largest n the exact search accepts");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    Graph g = load_graph(gen_spec);
    write_output(gen_out, gen_format == "g6" ? write_graph6(g) + "\n" : write_edge_list(g));
    return 0;
  }

  if (exact->parsed()) {
    Graph g = load_graph(ex_graph);
    Pattern f = parse_pattern(ex_pattern);
    ExactOptions opts;
    opts.node_budget = ex_budget;
    ExactResult res = exact_min_sat(g, f, opts);
    json j;
    j["m"] = res.m;
    j["method"] = "exact";
    j["status"] = res.status == ExactStatus::optimal ? "optimal" : "budget_exhausted";
    j["nodes"] = res.nodes;
    j["verified"] = verify_status_name(verify_saturated(g, res.witness, f).status);
    j["witness"] = edges_json(res.witness);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (completec->parsed()) {
    Graph g = load_graph(co_graph);
    Pattern f = parse_pattern(co_pattern);
    SaturationResult res = greedy_complete(g, {}, f, parse_policy(co_policy), RngSpec{co_seed, 0});
    json j;
    j["m"] = res.m;
    j["method"] = res.method;
    j["policy"] = co_policy;
    j["seed"] = co_seed;
    j["verified"] = verify_status_name(verify_saturated(g, res.edges, f).status);
    j["witness"] = edges_json(res.edges);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (cons->parsed()) {
    Pattern f = parse_pattern(cn_pattern);
    ConstructOptions opts{parse_policy(cn_policy), !cn_no_verify};
    json j;
    j["method"] = cn_method;
    j["n"] = cn_n;
    j["p"] = cn_p;
    j["seed"] = cn_seed;
    SaturationResult res;
    if (cn_method == "kt") {
      res = kt_construction(int(cn_n), f, RngSpec{cn_seed, 1}, opts);
      if (cn_params) {
        json par;
        par["b"] = f.kt_b ? *f.kt_b : -1;
        par["d"] = f.kt_d ? *f.kt_d : -1;
        j["params"] = std::move(par);
      }
    } else {
      Graph g = Graph::random(int(cn_n), cn_p, RngSpec{cn_seed, 0});
      if (cn_method == "layered") {
        auto [r, par] = layered_construction(g, cn_p, f, RngSpec{cn_seed, 1}, opts);
        res = std::move(r);
        if (cn_params) {
          json jp;
          jp["a"] = par.a;
          jp["delta"] = par.delta;
          jp["q"] = par.q;
          jp["ell"] = par.ell;
          jp["b_prob"] = par.b_prob;
          jp["w_sizes"] = par.w_sizes;
          jp["h0_edges"] = par.h0_edges;
          jp["decomposition"] = {{"within_core", par.within_core},
                                 {"core_to_w", par.core_to_w},
                                 {"within_w", par.within_w}};
          j["params"] = std::move(jp);
        }
      } else {
        auto [r, par] = star_construction(g, cn_p, f, RngSpec{cn_seed, 1}, opts);
        res = std::move(r);
        if (cn_params) {
          json jp;
          jp["degrees"] = par.degrees;
          jp["h"] = par.h;
          jp["ell_target"] = par.ell_target;
          jp["ell"] = par.ell;
          jp["regular_target"] = par.regular_target;
          jp["deficient"] = par.deficient;
          jp["clique_edges"] = par.clique_edges;
          jp["regular_edges"] = par.regular_edges;
          j["params"] = std::move(jp);
        }
      }
    }
    j["m"] = res.m;
    j["verified"] = verify_status_name(res.verify.status);
    if (cn_witness) j["witness"] = edges_json(res.edges);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (bounds->parsed()) {
    Pattern f = parse_pattern(bd_pattern);
    BoundOptions opts;
    opts.include_remark = bd_remark;
    BoundReport rep = bound_report(f, bd_n, parse_probability(bd_p), opts);
    std::cout << bound_report_json(rep).dump(2) << "\n\n" << bound_report_text(rep);
    return 0;
  }

  if (exp->parsed()) {
    ExperimentConfig cfg = ExperimentConfig::from_json_text(read_file(xp_config));
    if (!xp_csv.empty()) cfg.csv_path = xp_csv;
    if (!xp_summary.empty()) cfg.summary_path = xp_summary;
    ExperimentOutput out = run_experiment(cfg);
    if (!cfg.csv_path.empty()) write_output(cfg.csv_path, records_csv(out.records));
    std::string summary = summary_json_text(cfg, out);
    if (!cfg.summary_path.empty())
      write_output(cfg.summary_path, summary + "\n");
    else
      std::cout << summary << "\n";
    if (!out.all_pass) {
      std::cerr << "bound checks failed\n";
      return 1;
    }
    return 0;
  }

  if (ckr->parsed()) {
    RandomPropsReport rep =
        check_random_properties(cr_n, cr_p, cr_trials, cr_eps, cr_clique, cr_seed);
    std::cout << random_props_json(rep) << "\n";
    return 0;
  }

  if (cka->parsed()) {
    AlphaConcentrationReport rep =
        check_alpha_concentration(ca_n, ca_p, ca_k, ca_seeds, ca_seed, ca_limit);
    std::cout << alpha_report_json(rep) << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
