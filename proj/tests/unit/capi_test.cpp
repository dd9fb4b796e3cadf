#include <gtest/gtest.h>

#include <json.hpp>

#include <string>

#include "planex/planex.h"

namespace {

using nlohmann::json;

json run(const json& request, planex_status expected = PLANEX_OK) {
  char* response = nullptr;
  const planex_status status = planex_run_json(request.dump().c_str(), &response);
  EXPECT_EQ(status, expected) << planex_last_error();
  if (status != PLANEX_OK) return nullptr;
  json out = json::parse(response);
  planex_string_free(response);
  return out;
}

}  // namespace

TEST(CApi, GraphLifecycle) {
  planex_graph* g = nullptr;
  ASSERT_EQ(planex_graph_parse("icosahedron", &g), PLANEX_OK);
  size_t n = 0, m = 0, orbits = 0;
  EXPECT_EQ(planex_graph_vertex_count(g, &n), PLANEX_OK);
  EXPECT_EQ(planex_graph_edge_count(g, &m), PLANEX_OK);
  EXPECT_EQ(planex_edge_orbit_count(g, &orbits), PLANEX_OK);
  EXPECT_EQ(n, 12u);
  EXPECT_EQ(m, 30u);
  EXPECT_EQ(orbits, 1u);
  int member = -1;
  EXPECT_EQ(planex_gcl_member(g, "3", &member), PLANEX_OK);
  EXPECT_EQ(member, 1);
  EXPECT_EQ(planex_gcl_member(g, "12/5", &member), PLANEX_OK);
  EXPECT_EQ(member, 0);

  char* g6 = nullptr;
  ASSERT_EQ(planex_graph_to_graph6(g, &g6), PLANEX_OK);
  planex_graph* back = nullptr;
  ASSERT_EQ(planex_graph_parse((std::string("g6:") + g6).c_str(), &back), PLANEX_OK);
  planex_string_free(g6);

  planex_graph* minus = nullptr;
  ASSERT_EQ(planex_graph_parse("icosahedron-", &minus), PLANEX_OK);
  uint64_t copies = 0;
  EXPECT_EQ(planex_count_copies(back, minus, &copies), PLANEX_OK);
  EXPECT_EQ(copies, 30u);
  planex_graph_free(minus);
  planex_graph_free(back);
  planex_graph_free(g);
}

TEST(CApi, FromEdgesAndCounts) {
  const uint32_t edges[] = {0, 1, 1, 2, 2, 3, 3, 0};
  planex_graph* c4 = nullptr;
  ASSERT_EQ(planex_graph_from_edges(4, edges, 4, &c4), PLANEX_OK);
  uint64_t count = 0;
  EXPECT_EQ(planex_count_cycles(c4, 4, &count), PLANEX_OK);
  EXPECT_EQ(count, 1u);
  EXPECT_EQ(planex_count_paths(c4, 4, &count), PLANEX_OK);
  EXPECT_EQ(count, 4u);
  char* text = nullptr;
  ASSERT_EQ(planex_graph_to_json(c4, &text), PLANEX_OK);
  EXPECT_EQ(json::parse(text).at("n"), 4);
  planex_string_free(text);
  planex_graph_free(c4);
}

TEST(CApi, ErrorsAreReported) {
  planex_graph* g = nullptr;
  EXPECT_EQ(planex_graph_parse("nonsense!", &g), PLANEX_PARSE_ERROR);
  EXPECT_NE(std::string(planex_last_error()), "");
  EXPECT_EQ(g, nullptr);
  const uint32_t loop[] = {0, 0};
  EXPECT_EQ(planex_graph_from_edges(2, loop, 1, &g), PLANEX_INVALID_ARGUMENT);
  EXPECT_EQ(planex_graph_parse(nullptr, &g), PLANEX_INVALID_ARGUMENT);
  ASSERT_EQ(planex_graph_parse("K3", &g), PLANEX_OK);
  EXPECT_STREQ(planex_last_error(), "");
  planex_graph_free(g);
  EXPECT_STREQ(planex_status_name(PLANEX_UNSUPPORTED), "unsupported");
}

TEST(CApi, MassEvaluation) {
  planex_graph* k3 = nullptr;
  ASSERT_EQ(planex_graph_parse("K3", &k3), PLANEX_OK);
  planex_mass* mu = nullptr;
  ASSERT_EQ(planex_mass_uniform(k3, &mu), PLANEX_OK);
  double value = 0;
  EXPECT_EQ(planex_eval_optp(mu, 3, &value), PLANEX_OK);
  EXPECT_NEAR(value, 8.0 / 27, 1e-15);
  EXPECT_EQ(planex_eval_optb(mu, k3, 1, &value), PLANEX_OK);
  EXPECT_NEAR(value, 1.0 / 27, 1e-15);
  EXPECT_EQ(planex_eval_optp(mu, 1, &value), PLANEX_INVALID_ARGUMENT);

  char* text = nullptr;
  ASSERT_EQ(planex_mass_to_json(mu, &text), PLANEX_OK);
  planex_mass* back = nullptr;
  EXPECT_EQ(planex_mass_from_json(text, &back), PLANEX_OK);
  planex_string_free(text);
  planex_mass_free(back);
  planex_mass_free(mu);
  planex_graph_free(k3);

  EXPECT_EQ(planex_mass_from_json(R"({"ground": 3, "weights": [[0, 1, 0.5]]})", &mu), PLANEX_INVALID_ARGUMENT);
}

TEST(CApi, RunCount) {
  const json r = run({{"command", "count"}, {"graph", "K2,7"}, {"pattern", "C4"}});
  EXPECT_EQ(r.at("count"), 21);
  EXPECT_EQ(r.at("cycle_dfs"), 21);
  EXPECT_TRUE(r.at("pass").get<bool>());

  const json t = run({{"command", "count"}, {"target", "P7"}, {"n", 12}});
  EXPECT_EQ(t.at("count"), 594);
  EXPECT_TRUE(t.at("agree").get<bool>());
  EXPECT_FALSE(t.at("over_budget").get<bool>());

  const json mass = {{"ground", 3}, {"weights", {{0, 1, "1/3"}, {0, 2, "1/3"}, {1, 2, "1/3"}}}};
  const json m = run({{"command", "count"}, {"target", "C6"}, {"n", 30}, {"mass", mass}});
  EXPECT_EQ(m.at("vertices"), 33);
  EXPECT_TRUE(m.at("over_budget").get<bool>());
  EXPECT_EQ(m.at("count"), 1000);
}

TEST(CApi, RunCertify) {
  const json r = run({{"command", "certify"}, {"objective", "optb"}, {"pattern", "C4"}, {"k", 2}});
  EXPECT_EQ(r.at("value").at("fraction"), "1/65536");
  EXPECT_TRUE(r.at("checks").at("closed_form").get<bool>());
  EXPECT_TRUE(r.at("regularity").at("exact_zero").get<bool>());
  EXPECT_TRUE(r.at("pass").get<bool>());

  const json e = run({{"command", "certify"}, {"edgetrans", "C4"}, {"k", 1}});
  EXPECT_EQ(e.at("edgetrans").at("formula").at("fraction"), "1/16");
  EXPECT_TRUE(e.at("pass").get<bool>());
}

TEST(CApi, RunOptimizeIsDeterministic) {
  const json req = {{"command", "optimize"}, {"objective", "optb"}, {"pattern", "K3"}, {"k", 1},
                    {"restarts", 4},         {"seed", 3}};
  char* a = nullptr;
  char* b = nullptr;
  ASSERT_EQ(planex_run_json(req.dump().c_str(), &a), PLANEX_OK);
  ASSERT_EQ(planex_run_json(req.dump().c_str(), &b), PLANEX_OK);
  EXPECT_STREQ(a, b);
  const json r = json::parse(a);
  EXPECT_NEAR(r.at("result").at("value").get<double>(), 1.0 / 27, 1e-10);
  EXPECT_TRUE(r.at("pass").get<bool>());
  planex_string_free(a);
  planex_string_free(b);
}

TEST(CApi, RunVerifyAndTable) {
  const json v = run({{"command", "verify"}, {"suite", "2color"}, {"m_max", 10}});
  EXPECT_EQ(v.at("counterexamples"), 0);
  EXPECT_TRUE(v.at("pass").get<bool>());

  const json t = run({{"command", "table"}, {"targets", {"C6"}}, {"n", {12, 21}}});
  EXPECT_EQ(t.at("rows").size(), 2u);
  EXPECT_TRUE(t.at("pass").get<bool>());

  char* text = nullptr;
  ASSERT_EQ(planex_render_text(t.dump().c_str(), &text), PLANEX_OK);
  EXPECT_NE(std::string(text).find("(n/3)^3"), std::string::npos);
  planex_string_free(text);
}

TEST(CApi, RunOracle) {
  const json r = run({{"command", "oracle"}, {"kind", "extremal"}, {"n", 4}, {"pattern", "K3"}});
  EXPECT_EQ(r.at("max_count"), 4);
}

TEST(CApi, BadRequests) {
  run({{"command", "frobnicate"}}, PLANEX_INVALID_ARGUMENT);
  run({{"command", "table"}, {"targets", {"P6"}}, {"n", {12}}}, PLANEX_UNSUPPORTED);
  char* out = nullptr;
  EXPECT_EQ(planex_run_json("{not json", &out), PLANEX_PARSE_ERROR);
}
