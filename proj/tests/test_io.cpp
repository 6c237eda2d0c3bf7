#include <gtest/gtest.h>

#include <random>
#include <set>

#include "kwaycut/error.hpp"
#include "kwaycut/io.hpp"
#include "kwaycut/planar.hpp"
#include "support/oracles.hpp"

using namespace kwaycut;

TEST(ParseGraph, Path) {
  const MultiGraph g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.original_endpoints(0), (std::pair<VertexId, VertexId>{0, 1}));
  EXPECT_EQ(g.original_endpoints(1), (std::pair<VertexId, VertexId>{1, 2}));
}

TEST(ParseGraph, DuplicateLinesAreParallelEdges) {
  const MultiGraph g = parse_graph("c two copies\np edge 2 2\ne 1 2\ne 1 2\n");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree(0), 2u);
}

TEST(ParseGraph, Errors) {
  EXPECT_THROW(parse_graph("p edge 2 1\ne 1 1\n"), InputError);
  EXPECT_THROW(parse_graph("p edge 2 1\ne 1 3\n"), InputError);
  EXPECT_THROW(parse_graph("e 1 2\n"), InputError);
  EXPECT_THROW(parse_graph("p edge x 1\n"), InputError);
  EXPECT_THROW(parse_graph("p edge 2 2\ne 1 2\n"), InputError);
}

TEST(ParseGraph, RoundTripKeepsEdgeOrder) {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 30; ++round) {
    const auto el = testkit::random_connected(rng, 2 + round % 9, round % 7, true);
    const MultiGraph g = testkit::to_graph(el);
    const MultiGraph back = parse_graph(format_graph(g));
    ASSERT_EQ(back.edge_capacity(), g.edge_capacity());
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) EXPECT_EQ(back.original_endpoints(e), g.original_endpoints(e));
    EXPECT_EQ(back.stamp(), g.stamp());
  }
}

TEST(Embedding, RoundTrip) {
  const auto inst = generate("grid", std::vector<long long>{3, 2}, 1);
  const auto text = format_embedding(*inst.embedding);
  const auto back = parse_embedding(inst.graph, text);
  EXPECT_EQ(back.order, inst.embedding->order);
  EXPECT_THROW(parse_embedding(inst.graph, "r 1 0 0\n"), InputError);
}

TEST(Generate, GridShape) {
  const auto inst = generate("grid", std::vector<long long>{3, 3}, 1);
  EXPECT_EQ(inst.graph.vertex_count(), 9u);
  EXPECT_EQ(inst.graph.edge_count(), 12u);
  ASSERT_TRUE(inst.embedding);
  EXPECT_EQ(faces_from_rotation(inst.graph, *inst.embedding).faces.size(), 5u);
}

TEST(Generate, Cycle) {
  const auto inst = generate("cycle", std::vector<long long>{5}, 1);
  EXPECT_EQ(inst.graph.vertex_count(), 5u);
  EXPECT_EQ(inst.graph.edge_count(), 5u);
  for (VertexId v = 0; v < 5; ++v) EXPECT_EQ(inst.graph.degree(v), 2u);
  EXPECT_EQ(faces_from_rotation(inst.graph, *inst.embedding).faces.size(), 2u);
}

TEST(Generate, Errors) {
  EXPECT_THROW(generate("random-connected", std::vector<long long>{10, 5}, 1), InputError);
  EXPECT_THROW(generate("cycle", std::vector<long long>{2}, 1), InputError);
  EXPECT_THROW(generate("nonsense", std::vector<long long>{}, 1), InputError);
}

TEST(Generate, ReproducibleUnderSeed) {
  for (const auto& kind : generator_kinds()) {
    std::vector<long long> params{12, 4};
    if (kind == "random-connected") params = {12, 20, 1};
    if (kind == "two-blobs-bridged") params = {12, 3};
    const auto a = generate(kind, params, 77);
    const auto b = generate(kind, params, 77);
    EXPECT_EQ(format_graph(a.graph), format_graph(b.graph)) << kind;
    EXPECT_EQ(a.embedding.has_value(), b.embedding.has_value());
    if (a.embedding) EXPECT_EQ(format_embedding(*a.embedding), format_embedding(*b.embedding));
    EXPECT_TRUE(is_connected(a.graph)) << kind;
  }
}

TEST(Generate, EmbeddingsAreValid) {
  for (const auto& kind : {"grid", "cylinder", "cycle", "wheel", "grid-subgraph"}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto inst = generate(kind, std::vector<long long>{6, 5}, seed);
      ASSERT_TRUE(inst.embedding) << kind;
      EXPECT_NO_THROW(faces_from_rotation(inst.graph, *inst.embedding)) << kind;
    }
  }
}

TEST(Generate, TreePlusEdgesKeepsOutsideBridges) {
  const auto inst = generate("tree-plus-edges", std::vector<long long>{2000, 1}, 9);
  ASSERT_EQ(inst.graph.edge_count(), 2000u);
  // Edge v-1 joins vertex v to its parent; edge 1999 is the extra one.
  std::vector<VertexId> parent(2000, 0);
  for (EdgeId e = 0; e < 1999; ++e) {
    auto [a, b] = inst.graph.original_endpoints(e);
    EXPECT_EQ(a, e + 1);
    parent[a] = b;
  }
  auto [u, v] = inst.graph.original_endpoints(1999);
  std::set<int> on_cycle;
  std::vector<VertexId> up_u{u}, up_v{v};
  while (up_u.back() != 0) up_u.push_back(parent[up_u.back()]);
  while (up_v.back() != 0) up_v.push_back(parent[up_v.back()]);
  while (up_u.size() > 1 && up_v.size() > 1 && up_u[up_u.size() - 2] == up_v[up_v.size() - 2]) {
    up_u.pop_back();
    up_v.pop_back();
  }
  for (auto* chain : {&up_u, &up_v})
    for (std::size_t i = 0; i + 1 < chain->size(); ++i) on_cycle.insert(static_cast<int>((*chain)[i]) - 1);
  std::vector<int> expected;
  for (int e = 0; e < 1999; ++e)
    if (!on_cycle.count(e)) expected.push_back(e);
  EXPECT_EQ(testkit::bridges(testkit::from_graph(inst.graph)), expected);
}
