#include <catch2/catch_amalgamated.hpp>

#include "gbei/harness.hpp"
#include "gbei/report.hpp"

using namespace gbei;

TEST_CASE("bound scan over small connected graphs") {
  ScanConfig cfg;
  cfg.n_max = 4;
  cfg.m_list = {2};
  auto [records, summary] = verify_bound_scan(cfg);
  CHECK(summary.ok());
  CHECK(summary.instances == 10);  // connected graphs on 1..4 vertices
  CHECK(summary.oracle_runs == 10);
  CHECK(summary.tight_count >= 1);
  for (const auto& rec : records) {
    REQUIRE(rec.reg.has_value());
    CHECK(*rec.reg <= rec.phi);
    CHECK(rec.eta <= rec.c);
  }
}

TEST_CASE("scan respects the oracle variable cap") {
  ScanConfig cfg;
  cfg.n_max = 4;
  cfg.m_list = {3};
  cfg.oracle_var_cap = 9;
  auto [records, summary] = verify_bound_scan(cfg);
  CHECK(summary.ok());
  for (const auto& rec : records) {
    // 3 * 4 = 12 > 9: the four-vertex graphs carry no oracle value
    Graph g = parse_graph6(rec.graph6);
    CHECK(rec.reg.has_value() == (3 * g.n() <= 9));
  }
}

TEST_CASE("sandwich lower bound on the figures") {
  CHECK(bm_sandwich_lower(3, figure1_graph()) == 6);
  CHECK(bm_sandwich_lower(2, two_triangles_glued()) == 2);
}

TEST_CASE("two glued triangles are the smallest tight instance at m = 2") {
  Graph g = two_triangles_glued();
  auto cls = classify(g);
  CHECK(cls.is_block_graph);
  CHECK(cls.bm_max >= 2);
  auto inv = bounds(g, 2);
  CHECK(inv.c == 2);
  CHECK(inv.eta == 2);
  CHECK(inv.phi == 2);
  CHECK(regularity(2, g).reg == 2);
}

TEST_CASE("random tightness scan") {
  auto recs = tightness_scan_Bm(2, 10, 7);
  REQUIRE(recs.size() == 10);
  for (const auto& r : recs) {
    INFO(r.graph6);
    CHECK(r.ok);
    CHECK(r.sandwich_tight);
    if (r.oracle_reg) CHECK(*r.oracle_reg == r.phi);
  }
}

TEST_CASE("json and csv serialization") {
  ScanConfig cfg;
  cfg.n_max = 3;
  cfg.m_list = {2};
  auto [records, summary] = verify_bound_scan(cfg);
  nlohmann::json j = nlohmann::json::array();
  for (const auto& rec : records) j.push_back(to_json(rec));
  CHECK(j.size() == records.size());
  CHECK(j[0].contains("graph"));
  CHECK(j[0].contains("phi"));
  auto csv = scan_records_csv(records);
  CHECK(csv.rfind("graph,m,eta", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(records.size()) + 1);

  auto ji = to_json(bounds(figure2_graph(), 3));
  CHECK(ji["eta"] == 2);
  CHECK(ji["phi"] == 4);

  auto jr = to_json(regularity(2, path_graph(3)));
  CHECK(jr["reg"] == 2);
  CHECK(jr["strategy"] == "hochster");

  auto jc = to_json(*bound_certificate(path_graph(3), 2, [](int m, const Graph& g) {
    return phi_map(m, g);
  }));
  CHECK(jc["kind"] == "branch");
  CHECK(jc["value"] == 2);
}
