#include <gtest/gtest.h>

#include <cstring>
#include <string>
#include <vector>

#include "kwaycut/kwaycut.h"

namespace {

kwc_graph* parse(const std::string& text) {
  kwc_graph* g = nullptr;
  EXPECT_EQ(kwc_graph_parse(text.data(), text.size(), &g), KWC_OK) << kwc_last_error();
  return g;
}

}  // namespace

TEST(CApi, BuildSolveAndFree) {
  kwc_graph* g = nullptr;
  ASSERT_EQ(kwc_graph_create(5, &g), KWC_OK);
  for (uint32_t v = 0; v < 5; ++v) {
    uint32_t id = 99;
    ASSERT_EQ(kwc_graph_add_edge(g, v, (v + 1) % 5, &id), KWC_OK);
    EXPECT_EQ(id, v);
  }
  EXPECT_EQ(kwc_graph_vertex_count(g), 5u);
  EXPECT_EQ(kwc_graph_edge_count(g), 5u);
  EXPECT_EQ(kwc_graph_is_connected(g), 1);

  kwc_options o;
  kwc_options_init(&o);
  o.k = 3;
  o.s = 5;
  for (kwc_solver s : {KWC_SOLVER_ORACLE, KWC_SOLVER_FPT, KWC_SOLVER_DP}) {
    o.solver = s;
    kwc_result* r = nullptr;
    ASSERT_EQ(kwc_solve(g, nullptr, &o, &r), KWC_OK) << kwc_last_error();
    EXPECT_EQ(kwc_result_outcome(r), KWC_FOUND);
    EXPECT_EQ(kwc_result_size(r), 3u);
    EXPECT_EQ(kwc_result_bound(r), 5);
    EXPECT_TRUE(kwc_result_verified(r));
    int ok = 0;
    ASSERT_EQ(kwc_verify_cut(g, kwc_result_edges(r), kwc_result_size(r), 3, 5, &ok), KWC_OK);
    EXPECT_EQ(ok, 1);
    kwc_result_free(r);
  }
  kwc_graph_free(g);
}

TEST(CApi, ErrorsAreReported) {
  kwc_graph* g = nullptr;
  const std::string bad = "p edge 2 1\ne 1 1\n";
  EXPECT_EQ(kwc_graph_parse(bad.data(), bad.size(), &g), KWC_ERR_INPUT);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::strlen(kwc_last_error()), 0u);

  g = parse("p edge 3 2\ne 1 2\ne 2 3\n");
  uint32_t id = 0;
  EXPECT_EQ(kwc_graph_add_edge(g, 0, 7, &id), KWC_ERR_INPUT);
  kwc_options o;
  kwc_options_init(&o);
  o.solver = KWC_SOLVER_PLANAR;
  kwc_result* r = nullptr;
  EXPECT_EQ(kwc_solve(g, nullptr, &o, &r), KWC_ERR_INPUT);
  EXPECT_EQ(r, nullptr);
  long long v = 0;
  o.solver = KWC_SOLVER_FPT;
  ASSERT_EQ(kwc_solve(g, nullptr, &o, &r), KWC_OK);
  EXPECT_EQ(kwc_result_stat(r, "no-such-counter", &v), KWC_ERR_INPUT);
  EXPECT_EQ(kwc_result_stat(r, "layerings", &v), KWC_OK);
  kwc_result_free(r);
  kwc_graph_free(g);
}

TEST(CApi, PigeonholeOutcome) {
  kwc_graph* g = parse("p edge 3 2\ne 1 2\ne 2 3\n");
  kwc_options o;
  kwc_options_init(&o);
  o.k = 4;
  o.s = 2;
  kwc_result* r = nullptr;
  ASSERT_EQ(kwc_solve(g, nullptr, &o, &r), KWC_OK);
  EXPECT_EQ(kwc_result_outcome(r), KWC_PIGEONHOLE);
  EXPECT_EQ(kwc_result_edges(r) == nullptr || kwc_result_size(r) == 0, true);
  kwc_result_free(r);
  kwc_graph_free(g);
}

TEST(CApi, GeneratedGridPlanar) {
  kwc_graph* g = nullptr;
  kwc_embedding* e = nullptr;
  const long long params[] = {3, 3};
  ASSERT_EQ(kwc_generate("grid", params, 2, 1, &g, &e), KWC_OK);
  ASSERT_NE(e, nullptr);
  char* text = nullptr;
  ASSERT_EQ(kwc_embedding_serialize(e, &text), KWC_OK);
  kwc_embedding* again = nullptr;
  EXPECT_EQ(kwc_embedding_parse(g, text, std::strlen(text), &again), KWC_OK);
  kwc_string_free(text);

  kwc_options o;
  kwc_options_init(&o);
  o.solver = KWC_SOLVER_PLANAR;
  o.k = 2;
  kwc_result* r = nullptr;
  ASSERT_EQ(kwc_solve(g, again, &o, &r), KWC_OK) << kwc_last_error();
  EXPECT_EQ(kwc_result_size(r), 2u);
  EXPECT_EQ(kwc_result_bound(r), 5);
  long long width = -1;
  ASSERT_EQ(kwc_result_stat(r, "max_class_width", &width), KWC_OK);
  EXPECT_GE(width, 0);
  kwc_result_free(r);
  kwc_embedding_free(again);
  kwc_embedding_free(e);
  kwc_graph_free(g);
}

TEST(CApi, SerializeRoundTrip) {
  const std::string text = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 2\n";
  kwc_graph* g = parse(text);
  char* out = nullptr;
  ASSERT_EQ(kwc_graph_serialize(g, &out), KWC_OK);
  kwc_graph* back = parse(out);
  EXPECT_EQ(kwc_graph_edge_count(back), 4u);
  kwc_string_free(out);
  char* td = nullptr;
  ASSERT_EQ(kwc_decompose(g, &td), KWC_OK);
  EXPECT_EQ(std::string(td).rfind("s td", 0), 0u);
  kwc_string_free(td);
  kwc_graph_free(back);
  kwc_graph_free(g);
}

TEST(CApi, PowercutTableAndPairs) {
  kwc_graph* g = parse("p edge 3 2\ne 1 2\ne 2 3\n");
  kwc_options o;
  kwc_options_init(&o);
  o.s = 2;
  const uint32_t terms[] = {0, 2};
  kwc_table* t = nullptr;
  ASSERT_EQ(kwc_powercut(g, terms, 2, &o, &t), KWC_OK) << kwc_last_error();
  bool saw_both = false;
  for (size_t i = 0; i < kwc_table_entry_count(t); ++i) {
    int j = 0, feasible = 0;
    const uint8_t* labels = nullptr;
    const uint32_t* edges = nullptr;
    size_t n = 0;
    ASSERT_EQ(kwc_table_entry(t, i, &j, &labels, &feasible, &edges, &n), KWC_OK);
    if (j == 3 && labels[0] == 0 && labels[1] == 1) {
      EXPECT_EQ(feasible, 1);
      EXPECT_EQ(n, 2u);
      saw_both = true;
    }
  }
  EXPECT_TRUE(saw_both);
  kwc_table_free(t);

  const uint32_t pairs[] = {0, 2};
  o.s = 1;
  kwc_result* r = nullptr;
  ASSERT_EQ(kwc_pair_cut(g, pairs, 1, &o, &r), KWC_OK);
  EXPECT_EQ(kwc_result_size(r), 1u);
  kwc_result_free(r);
  kwc_graph_free(g);
}
