#include <gtest/gtest.h>

#include <random>

#include "kwaycut/error.hpp"
#include "kwaycut/powercut.hpp"
#include "support/oracles.hpp"

using namespace kwaycut;

namespace {

MultiGraph from_edges(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  MultiGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

MultiGraph path(std::size_t n) {
  MultiGraph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

MultiGraph cycle(std::size_t n) {
  MultiGraph g(n);
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, static_cast<VertexId>((v + 1) % n));
  return g;
}

MultiGraph complete(std::size_t n) {
  MultiGraph g(n);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

TerminalPartition key(int j, std::vector<std::uint8_t> labels) { return TerminalPartition{j, std::move(labels)}; }

std::vector<int> as_ints(const std::vector<VertexId>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Partitions, RestrictedGrowthStrings) {
  EXPECT_EQ(all_partitions(3, 3).size(), 5u);
  EXPECT_EQ(all_partitions(3, 2).size(), 4u);
  EXPECT_EQ(all_partitions(0, 4).size(), 1u);
  const std::uint32_t raw[] = {7, 7, 2, 9, 2};
  EXPECT_EQ(canonical_labels(raw), (std::vector<std::uint8_t>{0, 0, 1, 2, 1}));
}

TEST(ExhaustivePowercut, PathWithEndTerminals) {
  const VertexId t[] = {0, 2};
  const PowercutTable table = exhaustive_powercut(path(3), t, 2);
  EXPECT_EQ(table.at(key(1, {0, 0})), Cut{});
  EXPECT_EQ(table.at(key(2, {0, 1})), Cut{0});
  EXPECT_FALSE(table.at(key(2, {0, 0})));
  EXPECT_EQ(table.at(key(3, {0, 1})), (Cut{0, 1}));
  EXPECT_EQ(table.at(2, {{0}, {2}}), Cut{0});
}

TEST(ExhaustivePowercut, IdentityRow) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto g = testkit::to_graph(testkit::random_connected(rng, 6, 4, true));
    const PowercutTable table = exhaustive_powercut(g, {}, 1 + i % 3);
    EXPECT_EQ(table.at(key(1, {})), Cut{});
  }
}

TEST(ExhaustivePowercut, CycleTwoWay) {
  const PowercutTable table = exhaustive_powercut(cycle(4), {}, 2);
  EXPECT_EQ(table.at(key(2, {})), (Cut{0, 1}));
}

TEST(ExhaustivePowercut, RejectsDisconnected) {
  MultiGraph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(exhaustive_powercut(g, {}, 1), InputError);
}

TEST(ExhaustivePowercut, CeilingGuard) {
  EXPECT_THROW(exhaustive_powercut(complete(8), {}, 4, 100), InputError);
}

TEST(KwayFromTable, Examples) {
  EXPECT_EQ(kway_from_table(exhaustive_powercut(path(3), {}, 2), 3), (Cut{0, 1}));
  EXPECT_EQ(kway_from_table(exhaustive_powercut(cycle(5), {}, 5), 3)->size(), 3u);
  EXPECT_EQ(kway_from_table(exhaustive_powercut(complete(4), {}, 3), 2)->size(), 3u);
  EXPECT_THROW(kway_from_table(exhaustive_powercut(path(3), {}, 2), 4), InputError);
}

TEST(PairCut, Examples) {
  const std::pair<VertexId, VertexId> ends[] = {{0, 3}};
  EXPECT_EQ(pair_cut(path(4), ends, 1)->size(), 1u);
  const std::pair<VertexId, VertexId> crossing[] = {{0, 2}, {1, 3}};
  EXPECT_EQ(pair_cut(path(4), crossing, 1), Cut{1});
  const MultiGraph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  const std::pair<VertexId, VertexId> leaves[] = {{1, 2}};
  EXPECT_EQ(pair_cut(star, leaves, 1)->size(), 1u);
  const std::pair<VertexId, VertexId> same[] = {{1, 1}};
  EXPECT_THROW(pair_cut(star, same, 1), InputError);
}

TEST(PairCut, MatchesEnumeration) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 100; ++round) {
    const auto el = testkit::random_connected(rng, 7, 4, true);
    const MultiGraph g = testkit::to_graph(el);
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::pair<VertexId, VertexId>> vpairs;
    for (int i = 0; i < 1 + round % 2; ++i) {
      const int a = static_cast<int>(rng() % 7);
      const int b = (a + 1 + static_cast<int>(rng() % 6)) % 7;
      pairs.emplace_back(a, b);
      vpairs.emplace_back(a, b);
    }
    const int s = 1 + round % 3;
    const auto got = pair_cut(g, vpairs, s);
    const auto want = testkit::brute_pair_cut(el, pairs, s);
    ASSERT_EQ(got.has_value(), want.has_value());
    if (got) EXPECT_EQ(static_cast<int>(got->size()), *want);
  }
}

TEST(VerifyCut, Examples) {
  const EdgeId both[] = {0, 1}, one[] = {0}, two[] = {0, 5};
  EXPECT_TRUE(verify_cut(path(3), both, 3, 2));
  EXPECT_FALSE(verify_cut(path(3), one, 3, 2));
  EXPECT_FALSE(verify_cut(complete(4), two, 2, 3));
  EXPECT_FALSE(verify_cut(path(3), both, 3, 1));
  const EdgeId dup[] = {0, 0};
  EXPECT_FALSE(verify_cut(path(3), dup, 1, 2));
}

TEST(ExhaustivePowercut, MatchesEnumerationAndInvariants) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 150; ++round) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto el = testkit::random_connected(rng, n, static_cast<int>(rng() % 5), true);
    const MultiGraph g = testkit::to_graph(el);
    const int s = 1 + static_cast<int>(rng() % 3);
    const std::size_t want_terms = std::min<std::size_t>(rng() % 4, static_cast<std::size_t>(n));
    std::vector<VertexId> terms(static_cast<std::size_t>(n));
    std::iota(terms.begin(), terms.end(), 0);
    std::shuffle(terms.begin(), terms.end(), rng);
    terms.resize(want_terms);
    const PowercutTable table = exhaustive_powercut(g, terms, s);
    const auto want = testkit::brute_table(el, as_ints(terms), s);
    for (const auto& [k, cut] : table.entries()) {
      const std::vector<int> labels(k.labels.begin(), k.labels.end());
      auto it = want.find({k.j, labels});
      ASSERT_EQ(cut.has_value(), it != want.end()) << "round " << round << " j=" << k.j;
      if (!cut) continue;
      EXPECT_EQ(static_cast<int>(cut->size()), it->second);
      // Stored key is the induced one.
      const auto ip = induced_partition(g, *cut, terms);
      EXPECT_EQ(static_cast<int>(ip.components), k.j);
      EXPECT_EQ(table.blocks(k), ip.blocks);
      // Putting any single edge back changes the key.
      for (std::size_t drop = 0; drop < cut->size(); ++drop) {
        Cut smaller = *cut;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        const auto sp = induced_partition(g, smaller, terms);
        EXPECT_TRUE(static_cast<int>(sp.components) != k.j || sp.blocks != ip.blocks);
      }
    }
    // Every achievable key is present.
    for (const auto& [k, size] : want) {
      const TerminalPartition tk{k.first, std::vector<std::uint8_t>(k.second.begin(), k.second.end())};
      ASSERT_TRUE(table.entries().count(tk));
    }
  }
}

TEST(ExhaustivePowercut, TieBreakIsLexicographic) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 60; ++round) {
    const auto el = testkit::random_connected(rng, 6, 3, false);
    const MultiGraph g = testkit::to_graph(el);
    const PowercutTable table = exhaustive_powercut(g, {}, 2);
    for (const auto& [k, cut] : table.entries()) {
      if (!cut) continue;
      // No lexicographically smaller cut of the same size realizes k.
      testkit::for_each_subset(el.edges.size(), static_cast<int>(cut->size()),
                               [&](const std::vector<char>& mask, int size) {
                                 if (size != static_cast<int>(cut->size())) return;
                                 Cut other;
                                 for (EdgeId e = 0; e < mask.size(); ++e)
                                   if (mask[e]) other.push_back(e);
                                 if (!(other < *cut)) return;
                                 EXPECT_NE(static_cast<int>(components(g, other).count), k.j);
                               });
    }
  }
}

// Replacing the part of a table cut inside a connected subgraph H by the
// entry of H's own table for the same induced key keeps the key and does not
// grow the cut.
TEST(ExhaustivePowercut, RestrictionSubstitution) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int round = 0; round < 120; ++round) {
    const auto el = testkit::random_connected(rng, 7, 4, true);
    const MultiGraph g = testkit::to_graph(el);
    const int s = 1 + round % 3;
    // H: the edges inside a BFS ball around vertex 0 of four vertices.
    std::vector<char> in_h(7, 0);
    std::vector<VertexId> order{0};
    in_h[0] = 1;
    for (std::size_t i = 0; i < order.size() && order.size() < 4; ++i)
      g.for_each_incident(order[i], [&](EdgeId, VertexId w) {
        if (!in_h[w] && order.size() < 4) {
          in_h[w] = 1;
          order.push_back(w);
        }
      });
    std::vector<EdgeId> h_edges;
    for (EdgeId e : g.edges()) {
      auto [u, v] = g.endpoints(e);
      if (in_h[u] && in_h[v]) h_edges.push_back(e);
    }
    const Subgraph h = extract(g, h_edges);
    if (!is_connected(h.graph)) continue;
    // Boundary terminals of H.
    std::vector<VertexId> th;
    for (VertexId lv = 0; lv < h.vertex_origin.size(); ++lv) {
      const VertexId pv = h.vertex_origin[lv];
      bool boundary = false;
      g.for_each_incident(pv, [&](EdgeId, VertexId w) { boundary = boundary || !in_h[w]; });
      if (boundary) th.push_back(lv);
    }
    const PowercutTable gt = exhaustive_powercut(g, {}, s);
    const PowercutTable ht = exhaustive_powercut(h.graph, th, s);
    for (const auto& [k, cut] : gt.entries()) {
      if (!cut) continue;
      Cut outside, inside_local;
      for (EdgeId e : *cut) {
        auto it = std::lower_bound(h.edge_origin.begin(), h.edge_origin.end(), e);
        if (it != h.edge_origin.end() && *it == e)
          inside_local.push_back(static_cast<EdgeId>(it - h.edge_origin.begin()));
        else
          outside.push_back(e);
      }
      const auto hp = induced_partition(h.graph, inside_local, th);
      const auto& replacement = ht.at(static_cast<int>(hp.components), hp.blocks);
      ASSERT_TRUE(replacement);
      Cut merged = outside;
      for (EdgeId e : h.to_parent(*replacement)) merged.push_back(e);
      std::sort(merged.begin(), merged.end());
      EXPECT_LE(merged.size(), cut->size());
      EXPECT_EQ(static_cast<int>(components(g, merged).count), k.j);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}
