#pragma once

// JSON views of the result types, for the CLI and golden-file tests.

#include <nlohmann/json.hpp>

#include "gbei/harness.hpp"
#include "gbei/ideals.hpp"
#include "gbei/invariants.hpp"
#include "gbei/rcompat.hpp"
#include "gbei/regularity.hpp"

namespace gbei {

using json = nlohmann::json;

inline json to_json(const InvariantReport& r) {
  json w = json::array();
  for (auto [u, v] : r.witness_eta) w.push_back(json::array({u, v}));
  return json{{"m", r.m},       {"n", r.n},
              {"e", r.e},       {"c", r.c},
              {"eta", r.eta},   {"iv", r.iv},
              {"phi", r.phi},   {"sk_bound", r.sk_bound},
              {"clique_bound", r.clique_bound}, {"witness_eta", w}};
}

inline json to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [ij, b] : t.entries)
    if (b != 0) entries.push_back(json::array({ij.first, ij.second, b}));
  json out{{"entries", entries}, {"reg", t.regularity()}};
  if (t.partial) out["computed_through_degree"] = t.computed_through_degree;
  return out;
}

inline json to_json(const RegularityResult& r) {
  return json{{"reg", r.reg},
              {"strategy", r.strategy},
              {"field", r.field},
              {"order", r.order},
              {"initial_squarefree", r.initial_squarefree},
              {"elapsed_ms", r.elapsed_ms},
              {"notes", r.notes},
              {"betti", to_json(r.betti)}};
}

inline json to_json(const BoundCertificate& c) {
  json out{{"graph", c.graph.edge_list_string()}, {"value", c.value}};
  if (c.leaf) {
    out["kind"] = "leaf";
    out["component_sizes"] = c.leaf_component_sizes;
  } else {
    out["kind"] = "branch";
    out["v"] = c.branch_vertex;
    out["children"] = json{{"G_v", to_json(*c.child_gv)},
                           {"G_minus_v", to_json(*c.child_minus)},
                           {"G_v_minus_v", to_json(*c.child_gv_minus)}};
  }
  return out;
}

inline json to_json(const CompatibilityReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures)
    fails.push_back(json{{"graph6", f.graph6}, {"condition", f.condition},
                         {"details", f.details}});
  return json{{"m", r.m}, {"graphs_checked", r.graphs_checked}, {"failures", fails}};
}

inline json to_json(const DecompositionReport& r) {
  return json{{"m", r.m},           {"graph", r.graph6},   {"identity", r.identity},
              {"verdict", r.verdict}, {"gb_sizes", r.gb_sizes}, {"notes", r.notes},
              {"elapsed_ms", r.elapsed_ms}};
}

inline json to_json(const ScanRecord& r) {
  json out{{"graph", r.graph6},   {"m", r.m},           {"eta", r.eta},
           {"c", r.c},            {"e", r.e},           {"iv", r.iv},
           {"phi", r.phi},        {"sk_bound", r.sk_bound},
           {"clique_bound", r.clique_bound}, {"tight", r.tight},
           {"violation", r.violation}};
  if (r.reg) {
    out["reg"] = *r.reg;
    out["reg_strategy"] = r.reg_strategy;
  }
  if (r.certificate_value) out["certificate_value"] = *r.certificate_value;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

inline json to_json(const ScanSummary& s) {
  return json{{"instances", s.instances}, {"oracle_runs", s.oracle_runs},
              {"tight", s.tight_count},   {"violations", s.violations},
              {"skipped", s.skipped}};
}

inline json to_json(const PaperExampleReport& r) {
  json fig1{{"eta", r.fig1_eta},   {"c", r.fig1_c},           {"phi", r.fig1_phi},
            {"bm_max", r.fig1_bm_max}, {"sandwich_lower", r.fig1_lower},
            {"tight", r.fig1_tight}};
  json fig2{{"eta", r.fig2_eta},   {"c", r.fig2_c}, {"phi", r.fig2_phi},
            {"bm_max", r.fig2_bm_max}, {"stretch_skipped", r.fig2_skipped}};
  if (r.fig2_reg) fig2["reg"] = *r.fig2_reg;
  json b2{{"expected", r.b2_expected}};
  if (r.b2_reg) b2["reg"] = *r.b2_reg;
  return json{{"figure1", fig1}, {"figure2", fig2}, {"smallest_b2", b2}, {"ok", r.ok}};
}

inline json to_json(const BmScanRecord& r) {
  json out{{"graph", r.graph6}, {"n", r.n},         {"c", r.c},
           {"eta", r.eta},      {"phi", r.phi},     {"sandwich_lower", r.lower},
           {"sandwich_tight", r.sandwich_tight},    {"ok", r.ok}};
  if (r.oracle_reg) out["oracle_reg"] = *r.oracle_reg;
  return out;
}

inline std::string scan_records_csv(const std::vector<ScanRecord>& records) {
  std::string out =
      "graph,m,eta,c,e,iv,phi,sk_bound,clique_bound,reg,reg_strategy,tight,violation\n";
  for (const auto& r : records) {
    out += r.graph6 + "," + std::to_string(r.m) + "," + std::to_string(r.eta) + "," +
           std::to_string(r.c) + "," + std::to_string(r.e) + "," + std::to_string(r.iv) + "," +
           std::to_string(r.phi) + "," + std::to_string(r.sk_bound) + "," +
           std::to_string(r.clique_bound) + "," + (r.reg ? std::to_string(*r.reg) : "") + "," +
           r.reg_strategy + "," + (r.tight ? "1" : "0") + "," + (r.violation ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace gbei
