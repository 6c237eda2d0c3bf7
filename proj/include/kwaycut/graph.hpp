#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kwaycut {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

// Unweighted multigraph whose edges keep their identity under vertex
// identification. Vertices are dense ids 0..vertex_capacity()-1; after
// identifications a vertex is live iff it is the canonical representative
// of its class. An edge whose endpoints merge becomes a retired loop.
class MultiGraph {
 public:
  struct Incidence {
    EdgeId edge;
    VertexId other;  // canonical representative of the opposite end
  };

  MultiGraph() = default;
  explicit MultiGraph(std::size_t vertex_count);

  VertexId add_vertex();
  // Throws InputError on a loop or unknown vertex. Endpoints may be any
  // (not necessarily canonical) vertex ids.
  EdgeId add_edge(VertexId u, VertexId v);

  std::size_t vertex_capacity() const { return parent_.size(); }
  std::size_t edge_capacity() const { return ends_.size(); }
  std::size_t vertex_count() const { return live_vertices_; }
  std::size_t edge_count() const { return live_edges_; }

  bool has_vertex(VertexId v) const { return v < parent_.size(); }
  bool is_canonical(VertexId v) const { return v < parent_.size() && parent_[v] == v; }
  bool has_edge(EdgeId e) const { return e < ends_.size(); }
  bool is_live(EdgeId e) const { return e < ends_.size() && live_[e] != 0; }

  // Canonical representative. No path compression, so the const surface
  // is safe to share between threads.
  VertexId find(VertexId v) const;

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  std::pair<VertexId, VertexId> original_endpoints(EdgeId e) const { return ends_[e]; }

  // Degree with multiplicity, live edges only.
  std::size_t degree(VertexId v) const { return degree_[find(v)]; }

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;
  std::vector<Incidence> incident(VertexId v) const;

  template <class Fn>
  void for_each_incident(VertexId v, Fn&& fn) const {
    const VertexId r = find(v);
    for (EdgeId e : incidence_[r]) {
      if (!live_[e]) continue;
      const VertexId a = find(ends_[e].first);
      fn(e, a == r ? find(ends_[e].second) : a);
    }
  }

  // In-place quotient operations. Both accept non-canonical ids.
  void identify(VertexId a, VertexId b);
  void contract(EdgeId e);

  std::span<const EdgeId> retired_loops() const { return retired_; }

  // Content hash of the live structure; used to tag tables.
  std::uint64_t stamp() const;

 private:
  void check_vertex(VertexId v) const;
  void compact_incidence(VertexId r);

  std::vector<std::pair<VertexId, VertexId>> ends_;
  std::vector<std::uint8_t> live_;
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> rank_size_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::size_t> degree_;
  std::vector<EdgeId> retired_;
  std::size_t live_vertices_ = 0;
  std::size_t live_edges_ = 0;
};

struct ComponentLabeling {
  std::vector<std::uint32_t> label;  // indexed by vertex id; non-canonical ids carry their class label
  std::size_t count = 0;
};

// Components of G with `removed` treated as absent. Throws InputError if an
// id in `removed` is not a live edge.
ComponentLabeling components(const MultiGraph& g, std::span<const EdgeId> removed = {});

bool is_connected(const MultiGraph& g);

MultiGraph identify(MultiGraph g, std::span<const std::pair<VertexId, VertexId>> pairs);
MultiGraph contract(MultiGraph g, std::span<const EdgeId> edges);

struct InducedPartition {
  std::size_t components = 0;                  // j
  std::vector<std::vector<VertexId>> blocks;   // nonempty blocks, canonical order
  std::size_t empty_blocks = 0;                // j minus terminal-occupied components
};

InducedPartition induced_partition(const MultiGraph& g, std::span<const EdgeId> cut,
                                   std::span<const VertexId> terminals);

// A connected piece of a parent graph rebuilt with dense local ids. Local
// edge ids follow ascending parent edge id, so lexicographic tie-breaks on
// cuts agree between the two id spaces.
struct Subgraph {
  MultiGraph graph;
  std::vector<VertexId> vertex_origin;  // local -> parent canonical vertex
  std::vector<EdgeId> edge_origin;      // local -> parent edge id
  std::vector<std::pair<VertexId, VertexId>> by_parent;  // sorted (parent, local)

  // kNoVertex if the parent vertex is not part of the subgraph.
  VertexId local_vertex(VertexId parent_canonical) const;
  std::vector<EdgeId> to_parent(std::span<const EdgeId> local) const;
};

// Builds the subgraph spanned by `edges` (live edges of g). Vertices listed
// in `extra_vertices` are included even if isolated.
Subgraph extract(const MultiGraph& g, std::span<const EdgeId> edges,
                 std::span<const VertexId> extra_vertices = {});

// Whole live graph, compacted.
Subgraph compact(const MultiGraph& g);

}  // namespace kwaycut
