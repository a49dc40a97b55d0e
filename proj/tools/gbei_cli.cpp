// Command-line workbench: invariants, regularity, decomposition checks and
// verification scans for the clique-product edge ideals J_{K_m,G}.
//
// Exit codes: 0 = success, 1 = usage/capacity problem, 2 = a verified
// statement failed (which indicates an implementation bug, not mathematics).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gbei/harness.hpp"
#include "gbei/ideals.hpp"
#include "gbei/report.hpp"

using namespace gbei;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct CommonOpts {
  std::string graph_file;
  std::string graph6;
  int m = 2;
  std::int64_t field_prime = 32003;
  std::string strategy = "auto";
  std::string output = "json";
};

void add_graph_opts(CLI::App* cmd, CommonOpts& o) {
  auto* f = cmd->add_option("--graph", o.graph_file,
                            "edge-list file: first line n, then one 'u v' pair per line "
                            "('-' reads stdin)");
  auto* s = cmd->add_option("--graph6", o.graph6, "graph6 string");
  f->excludes(s);
}

void add_ring_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--m", o.m, "row clique size m (>= 2)")->check(CLI::Range(2, 16));
  cmd->add_option("--field-prime", o.field_prime,
                  "coefficient field characteristic (0 = rationals)");
}

Graph load_graph(const CommonOpts& o) {
  if (!o.graph6.empty()) return parse_graph6(o.graph6);
  if (o.graph_file.empty())
    throw CLI::ValidationError("input", "one of --graph or --graph6 is required");
  std::string text;
  if (o.graph_file == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(o.graph_file);
    if (!in) throw CLI::ValidationError("--graph", "cannot open " + o.graph_file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_edge_list(text);
}

RegStrategy parse_strategy(const std::string& s) {
  if (s == "auto") return RegStrategy::kAuto;
  if (s == "hochster") return RegStrategy::kHochster;
  if (s == "koszul") return RegStrategy::kKoszul;
  if (s == "closed-form") return RegStrategy::kClosedForm;
  throw CLI::ValidationError("--strategy", "unknown strategy " + s);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

long phi_of(int m, const Graph& g) { return phi_map(m, g); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for clique-product edge ideals J_{K_m,G}"};
  app.require_subcommand(1);

  CommonOpts o;
  int n_max = 4;
  long time_budget = 0;
  bool connected_only = false;
  unsigned seed = 1;
  int count = 20;
  int vertex = 0;

  auto* inv_cmd = app.add_subcommand("invariants", "eta, clique count, free vertices, phi");
  add_graph_opts(inv_cmd, o);
  add_ring_opts(inv_cmd, o);

  auto* bound_cmd = app.add_subcommand("bound", "regularity upper bounds for (m, G)");
  add_graph_opts(bound_cmd, o);
  add_ring_opts(bound_cmd, o);

  auto* cut_cmd = app.add_subcommand("cutsets", "all cutsets of G");
  add_graph_opts(cut_cmd, o);
  cut_cmd->add_option("--output", o.output, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* primes_cmd =
      app.add_subcommand("primes-check", "verify J = intersection of the minimal primes P_T");
  add_graph_opts(primes_cmd, o);
  add_ring_opts(primes_cmd, o);

  auto* vd_cmd = app.add_subcommand("vertex-decomp-check",
                                    "verify the intersection and sum identities at a vertex");
  add_graph_opts(vd_cmd, o);
  add_ring_opts(vd_cmd, o);
  vd_cmd->add_option("--vertex", vertex, "internal vertex (default: every internal vertex)");

  auto* reg_cmd = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of S/J_{K_m,G}");
  add_graph_opts(reg_cmd, o);
  add_ring_opts(reg_cmd, o);
  reg_cmd->add_option("--strategy", o.strategy, "auto|hochster|koszul|closed-form")
      ->check(CLI::IsMember({"auto", "hochster", "koszul", "closed-form"}));

  auto* cert_cmd =
      app.add_subcommand("certificate", "recursion-tree certificate for reg <= phi(m, G)");
  add_graph_opts(cert_cmd, o);
  add_ring_opts(cert_cmd, o);

  auto* rc_cmd = app.add_subcommand("rcompat-check",
                                    "check the compatibility conditions of phi on all graphs");
  add_ring_opts(rc_cmd, o);
  rc_cmd->add_option("--n-max", n_max, "largest vertex count")->check(CLI::Range(1, 8));
  rc_cmd->add_flag("--connected-only", connected_only, "restrict to connected graphs");

  auto* scan_cmd =
      app.add_subcommand("scan", "bounds + oracle regularity over all small graphs");
  add_ring_opts(scan_cmd, o);
  scan_cmd->add_option("--n-max", n_max, "largest vertex count")->check(CLI::Range(1, 8));
  scan_cmd->add_option("--strategy", o.strategy, "auto|hochster|koszul|closed-form")
      ->check(CLI::IsMember({"auto", "hochster", "koszul", "closed-form"}));
  scan_cmd->add_option("--time-budget-secs", time_budget, "skip oracle runs past this budget");
  scan_cmd->add_flag("--connected-only", connected_only, "restrict to connected graphs");
  scan_cmd->add_option("--output", o.output, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* paper_cmd = app.add_subcommand(
      "paper-examples", "reproduce the worked examples (figures, smallest tight instance)");
  paper_cmd->add_option("--time-budget-secs", time_budget,
                        "budget for the 18-variable stretch computation (0 = default 1800)");
  paper_cmd->add_option("--field-prime", o.field_prime,
                        "coefficient field characteristic (0 = rationals)");

  auto* bm_cmd = app.add_subcommand("bm-scan",
                                    "random tightness scan over the block-graph class B_m");
  add_ring_opts(bm_cmd, o);
  bm_cmd->add_option("--seed", seed, "random seed");
  bm_cmd->add_option("--count", count, "number of random instances")->check(CLI::Range(1, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (inv_cmd->parsed()) {
      emit(to_json(bounds(load_graph(o), o.m)));
      return 0;
    }
    if (bound_cmd->parsed()) {
      auto inv = bounds(load_graph(o), o.m);
      emit(json{{"m", inv.m},
                {"phi", inv.phi},
                {"pairwise_bound", inv.sk_bound},
                {"clique_bound", inv.clique_bound},
                {"eta", inv.eta},
                {"c", inv.c}});
      return 0;
    }
    if (cut_cmd->parsed()) {
      auto cs = cutsets(load_graph(o));
      if (o.output == "csv") {
        for (const auto& t : cs) {
          std::string line;
          for (int v : t) line += (line.empty() ? "" : " ") + std::to_string(v);
          std::cout << line << "\n";
        }
      } else {
        json arr = json::array();
        for (const auto& t : cs) arr.push_back(t);
        emit(json{{"count", cs.size()}, {"cutsets", arr}});
      }
      return 0;
    }
    if (primes_cmd->parsed()) {
      Graph g = load_graph(o);
      DecompositionReport rep;
      if (o.field_prime == 0) {
        RationalField f;
        rep = verify_prime_decomposition(f, o.m, g, 0);
      } else {
        PrimeField f(o.field_prime);
        rep = verify_prime_decomposition(f, o.m, g, o.field_prime);
      }
      emit(to_json(rep));
      return rep.verdict ? 0 : kExitViolation;
    }
    if (vd_cmd->parsed()) {
      Graph g = load_graph(o);
      std::vector<int> verts;
      if (vertex > 0)
        verts.push_back(vertex);
      else
        verts = free_vertices(g).internal;
      if (verts.empty())
        throw std::invalid_argument("graph has no internal vertex to decompose at");
      json arr = json::array();
      bool all_ok = true;
      PrimeField f(o.field_prime == 0 ? 32003 : o.field_prime);
      for (int v : verts) {
        auto rep = verify_vertex_decomposition(f, o.m, g, v, f.characteristic());
        json j = to_json(rep);
        j["v"] = v;
        arr.push_back(j);
        all_ok = all_ok && rep.verdict;
      }
      emit(json{{"checks", arr}, {"ok", all_ok}});
      return all_ok ? 0 : kExitViolation;
    }
    if (reg_cmd->parsed()) {
      auto res = regularity(o.m, load_graph(o), parse_strategy(o.strategy), o.field_prime);
      emit(to_json(res));
      return 0;
    }
    if (cert_cmd->parsed()) {
      Graph g = load_graph(o);
      auto cert = bound_certificate(g, o.m, phi_of);
      json j = to_json(*cert);
      j["phi"] = phi_of(o.m, g);
      emit(j);
      return cert->value <= phi_of(o.m, g) ? 0 : kExitViolation;
    }
    if (rc_cmd->parsed()) {
      std::vector<Graph> family;
      for (int n = 1; n <= n_max; ++n)
        for (const Graph& g : enumerate_graphs(n, connected_only)) family.push_back(g);
      auto rep = check_r_compatible(phi_of, o.m, family);
      emit(to_json(rep));
      return rep.ok() ? 0 : kExitViolation;
    }
    if (scan_cmd->parsed()) {
      ScanConfig cfg;
      cfg.n_max = n_max;
      cfg.m_list = {o.m};
      cfg.field_prime = o.field_prime;
      cfg.strategy = parse_strategy(o.strategy);
      cfg.time_budget_seconds = time_budget;
      cfg.connected_only = connected_only;
      cfg.output = o.output;
      auto [records, summary] = verify_bound_scan(cfg);
      if (o.output == "csv") {
        std::cout << scan_records_csv(records);
      } else {
        json arr = json::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        emit(json{{"records", arr}, {"summary", to_json(summary)}});
      }
      return summary.ok() ? 0 : kExitViolation;
    }
    if (paper_cmd->parsed()) {
      auto rep = reproduce_paper_examples(time_budget > 0 ? time_budget : 1800,
                                          o.field_prime == 0 ? 32003 : o.field_prime);
      emit(to_json(rep));
      return rep.ok ? 0 : kExitViolation;
    }
    if (bm_cmd->parsed()) {
      auto recs = tightness_scan_Bm(o.m, count, seed);
      json arr = json::array();
      bool all_ok = true;
      for (const auto& r : recs) {
        arr.push_back(to_json(r));
        all_ok = all_ok && r.ok;
      }
      emit(json{{"records", arr}, {"ok", all_ok}});
      return all_ok ? 0 : kExitViolation;
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "graph parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
