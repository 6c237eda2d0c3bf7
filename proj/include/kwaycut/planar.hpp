#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kwaycut/graph.hpp"
#include "kwaycut/powercut.hpp"

namespace kwaycut {

// End 0 sits at original_endpoints(edge).first, end 1 at .second.
struct EdgeEnd {
  EdgeId edge = 0;
  std::uint8_t end = 0;

  std::uint32_t dart() const { return 2 * edge + end; }
  bool operator==(const EdgeEnd&) const = default;
};

// Clockwise order of edge ends around every vertex of a graph without
// identifications.
struct RotationSystem {
  std::vector<std::vector<EdgeEnd>> order;
};

// Sorts the ends at each vertex by the angle of the opposite endpoint.
RotationSystem rotation_from_coordinates(const MultiGraph& g, std::span<const double> x, std::span<const double> y);

// Throws InputError unless every edge end appears exactly once, at its own vertex.
void check_rotation(const MultiGraph& g, const RotationSystem& rot);

struct FaceStructure {
  std::vector<std::uint32_t> face_of_dart;      // indexed by EdgeEnd::dart()
  std::vector<std::vector<std::uint32_t>> faces;  // darts in traversal order
};

// Face tracing on a connected graph. Throws InputError("not a valid planar
// embedding") when n - m + f != 2.
FaceStructure faces_from_rotation(const MultiGraph& g, const RotationSystem& rot);

struct EdgeLevelPartition {
  std::vector<std::uint32_t> level;            // by edge id (dead ids 0)
  std::vector<std::vector<EdgeId>> classes;    // classes[i]: level mod q == i
};

// Breadth-first levels in the dual from the face of dart 0; an edge takes
// the larger depth of its two faces.
EdgeLevelPartition klein_partition(const MultiGraph& g, const RotationSystem& rot, std::size_t q);

struct GreedyBound {
  std::size_t bound = 0;
  Cut witness;
};

// k-1 rounds of cutting every edge at a minimum-degree non-isolated vertex
// (smallest id on ties). None when the graph runs out of edges first.
std::optional<GreedyBound> greedy_upper_bound(const MultiGraph& g, int k);

bool is_simple(const MultiGraph& g);

struct PlanarReport {
  std::optional<Cut> cut;
  int s = 0;
  bool pigeonhole = false;
  std::vector<long> class_widths;  // heuristic width of each contracted graph
};

// Default s: 5(k-1) for simple graphs, the greedy bound otherwise.
PlanarReport planar_kway_cut(const MultiGraph& g, const RotationSystem& rot, int k, std::optional<int> s = std::nullopt);

}  // namespace kwaycut
