#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kwaycut/graph.hpp"
#include "kwaycut/powercut.hpp"

namespace kwaycut {

struct TreeDecomposition {
  std::vector<std::vector<VertexId>> bags;  // sorted vertex ids
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  // Largest bag size minus one; -1 for an empty decomposition.
  long width() const;
};

enum class EliminationHeuristic { MinFill, MinDegree };

// Decomposition from a greedy elimination ordering over the live vertices.
// Always valid; the width is whatever the heuristic finds.
TreeDecomposition heuristic_tree_decomposition(const MultiGraph& g,
                                               EliminationHeuristic heuristic = EliminationHeuristic::MinFill);

struct DecompositionCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Tree shape, vertex coverage, edge coverage and subtree connectivity; the
// reason names the first offending node, vertex or edge.
DecompositionCheck validate_decomposition(const MultiGraph& g, const TreeDecomposition& td);

// Text form: optional "s td <bags> <width+1> <vertices>", then "b <id> <v...>"
// and "t <id1> <id2>" lines; ids and vertices are 1-based, "c" starts a comment.
TreeDecomposition parse_decomposition(std::string_view text);
std::string format_decomposition(const TreeDecomposition& td, std::size_t vertex_count);

struct DpTables {
  std::size_t root = 0;
  std::vector<std::size_t> parent;  // parent[root] == root
  // Indexed by the child node of a tree edge: the powercut of the subgraph
  // processed below that edge, over the bag intersection with the parent.
  // The entry for the root node is empty.
  std::vector<PowercutTable> edge_tables;
  // exact[j]: best cut of the whole graph leaving exactly j components,
  // j = 0..s+1 (index 0 unused).
  std::vector<std::optional<Cut>> exact;
};

// Throws InputError if the decomposition is invalid. Without edge_tables only
// `exact` is filled.
DpTables dp_powercut(const MultiGraph& g, const TreeDecomposition& td, int s, std::size_t root = 0,
                     bool edge_tables = true);

// Minimum cut of at most s edges leaving at least k components.
std::optional<Cut> dp_kway_cut(const MultiGraph& g, int k, int s, const TreeDecomposition& td);

}  // namespace kwaycut
