#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kwaycut/graph.hpp"
#include "kwaycut/planar.hpp"

namespace kwaycut {

struct ProblemInstance {
  MultiGraph graph;
  std::optional<RotationSystem> embedding;
  std::vector<VertexId> terminals;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::optional<int> k, s;
};

// "p edge <n> <m>" then m lines "e <u> <v>" with 1-based vertices; edge ids
// follow file order from 0. Lines starting with "c" are comments.
MultiGraph parse_graph(std::string_view text);
// Inverse of parse_graph for graphs without identifications.
std::string format_graph(const MultiGraph& g);

// One line per vertex, "r <v> <e1> <e2> ...", clockwise; v is 1-based and
// the edge ids are 0-based. An entry may be written "<e>:<end>" to name the
// end explicitly. Vertices without a line must be isolated.
RotationSystem parse_embedding(const MultiGraph& g, std::string_view text);
std::string format_embedding(const RotationSystem& rot);

std::vector<std::string> generator_kinds();

// Deterministic for a fixed seed. Kinds and parameters:
//   grid w h | cylinder w h | cycle n | wheel n | complete n
//   random-connected n m [multi] | tree-plus-edges n extra [window]
//   two-blobs-bridged size [chords] | grid-subgraph w h [keep_percent]
// Grid-like kinds, cycle and wheel come with an embedding.
ProblemInstance generate(std::string_view kind, std::span<const long long> params, std::uint64_t seed);

std::string read_file(const std::string& path);

}  // namespace kwaycut
