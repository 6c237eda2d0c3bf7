#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kwaycut/graph.hpp"

namespace kwaycut {

// s edge-disjoint maximal spanning forests peeled greedily, plus the edges
// left over. Endpoints of a leftover edge are joined by at least s+1
// edge-disjoint paths.
struct ForestStack {
  std::vector<std::vector<EdgeId>> forests;
  std::vector<EdgeId> outside;
};

ForestStack spanning_forests(const MultiGraph& g, int s);

// Contracts every edge outside the forest stack. Cuts of at most s edges
// are preserved with their edge ids and component structure.
MultiGraph sparsify(const MultiGraph& g, int s);
void sparsify_in_place(MultiGraph& g, int s);

// Minimum X-Y edge cut if its size is at most s, computed with at most s+1
// unit-capacity augmenting paths. The returned edges are the boundary of
// the vertex set reachable from X in the final residual graph, sorted by id.
// Throws InputError if X and Y share a vertex class or either is empty.
std::optional<std::vector<EdgeId>> bounded_mincut(const MultiGraph& g, std::span<const VertexId> x,
                                                  std::span<const VertexId> y, int s);

// Same cut together with the residual-reachable side (canonical vertices).
struct BoundedCut {
  std::vector<EdgeId> edges;
  std::vector<VertexId> source_side;
};
std::optional<BoundedCut> bounded_mincut_with_side(const MultiGraph& g, std::span<const VertexId> x,
                                                   std::span<const VertexId> y, int s);

}  // namespace kwaycut
