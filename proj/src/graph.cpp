#include "kwaycut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kwaycut/error.hpp"

namespace kwaycut {

MultiGraph::MultiGraph(std::size_t vertex_count) {
  parent_.resize(vertex_count);
  std::iota(parent_.begin(), parent_.end(), VertexId{0});
  rank_size_.assign(vertex_count, 1);
  incidence_.resize(vertex_count);
  degree_.assign(vertex_count, 0);
  live_vertices_ = vertex_count;
}

VertexId MultiGraph::add_vertex() {
  const auto v = static_cast<VertexId>(parent_.size());
  parent_.push_back(v);
  rank_size_.push_back(1);
  incidence_.emplace_back();
  degree_.push_back(0);
  ++live_vertices_;
  return v;
}

void MultiGraph::check_vertex(VertexId v) const {
  if (v >= parent_.size()) throw InputError("unknown vertex " + std::to_string(v));
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  const VertexId ru = find(u);
  const VertexId rv = find(v);
  if (ru == rv) throw InputError("self-loop on vertex " + std::to_string(u));
  const auto e = static_cast<EdgeId>(ends_.size());
  ends_.emplace_back(u, v);
  live_.push_back(1);
  incidence_[ru].push_back(e);
  incidence_[rv].push_back(e);
  ++degree_[ru];
  ++degree_[rv];
  ++live_edges_;
  return e;
}

VertexId MultiGraph::find(VertexId v) const {
  while (parent_[v] != v) v = parent_[v];
  return v;
}

std::pair<VertexId, VertexId> MultiGraph::endpoints(EdgeId e) const {
  return {find(ends_[e].first), find(ends_[e].second)};
}

std::vector<VertexId> MultiGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_vertices_);
  for (VertexId v = 0; v < parent_.size(); ++v)
    if (parent_[v] == v) out.push_back(v);
  return out;
}

std::vector<EdgeId> MultiGraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(live_edges_);
  for (EdgeId e = 0; e < ends_.size(); ++e)
    if (live_[e]) out.push_back(e);
  return out;
}

std::vector<MultiGraph::Incidence> MultiGraph::incident(VertexId v) const {
  std::vector<Incidence> out;
  for_each_incident(v, [&](EdgeId e, VertexId w) { out.push_back({e, w}); });
  std::sort(out.begin(), out.end(), [](const Incidence& a, const Incidence& b) { return a.edge < b.edge; });
  return out;
}

void MultiGraph::compact_incidence(VertexId r) {
  auto& list = incidence_[r];
  std::erase_if(list, [&](EdgeId e) { return !live_[e]; });
}

void MultiGraph::identify(VertexId a, VertexId b) {
  check_vertex(a);
  check_vertex(b);
  VertexId ra = find(a);
  VertexId rb = find(b);
  if (ra == rb) return;
  if (rank_size_[ra] < rank_size_[rb] ||
      (rank_size_[ra] == rank_size_[rb] && incidence_[ra].size() < incidence_[rb].size()))
    std::swap(ra, rb);
  // rb is absorbed into ra; edges between them turn into loops.
  std::size_t loops = 0;
  for (EdgeId e : incidence_[rb]) {
    if (!live_[e]) continue;
    const VertexId x = find(ends_[e].first);
    const VertexId y = find(ends_[e].second);
    if ((x == ra && y == rb) || (x == rb && y == ra)) {
      live_[e] = 0;
      retired_.push_back(e);
      ++loops;
    }
  }
  parent_[rb] = ra;
  rank_size_[ra] += rank_size_[rb];
  degree_[ra] = degree_[ra] + degree_[rb] - 2 * loops;
  degree_[rb] = 0;
  live_edges_ -= loops;
  --live_vertices_;
  auto& dst = incidence_[ra];
  for (EdgeId e : incidence_[rb])
    if (live_[e]) dst.push_back(e);
  std::vector<EdgeId>().swap(incidence_[rb]);
  if (dst.size() > 2 * degree_[ra] + 8) compact_incidence(ra);
}

void MultiGraph::contract(EdgeId e) {
  if (!has_edge(e)) throw InputError("unknown edge " + std::to_string(e));
  if (!live_[e]) throw InputError("edge " + std::to_string(e) + " is not live");
  identify(ends_[e].first, ends_[e].second);
}

std::uint64_t MultiGraph::stamp() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  mix(live_vertices_);
  for (EdgeId e = 0; e < ends_.size(); ++e) {
    if (!live_[e]) continue;
    auto [u, v] = endpoints(e);
    mix(e);
    mix(std::min(u, v));
    mix(std::max(u, v));
  }
  return h;
}

ComponentLabeling components(const MultiGraph& g, std::span<const EdgeId> removed) {
  std::vector<std::uint8_t> gone(g.edge_capacity(), 0);
  for (EdgeId e : removed) {
    if (!g.is_live(e)) throw InputError("cut references unknown or dead edge " + std::to_string(e));
    gone[e] = 1;
  }
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  ComponentLabeling out;
  out.label.assign(g.vertex_capacity(), kUnset);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < g.vertex_capacity(); ++v) {
    if (!g.is_canonical(v) || out.label[v] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.count++);
    out.label[v] = id;
    stack.push_back(v);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      g.for_each_incident(x, [&](EdgeId e, VertexId w) {
        if (gone[e] || out.label[w] != kUnset) return;
        out.label[w] = id;
        stack.push_back(w);
      });
    }
  }
  for (VertexId v = 0; v < g.vertex_capacity(); ++v)
    if (!g.is_canonical(v)) out.label[v] = out.label[g.find(v)];
  return out;
}

bool is_connected(const MultiGraph& g) { return components(g).count <= 1; }

MultiGraph identify(MultiGraph g, std::span<const std::pair<VertexId, VertexId>> pairs) {
  for (auto [a, b] : pairs) g.identify(a, b);
  return g;
}

MultiGraph contract(MultiGraph g, std::span<const EdgeId> edges) {
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) throw InputError("unknown edge " + std::to_string(e));
  }
  // An edge in the set may already have become a loop through earlier
  // contractions of the same set; that is fine.
  for (EdgeId e : edges) {
    auto [u, v] = g.original_endpoints(e);
    if (!g.is_live(e) && g.find(u) != g.find(v))
      throw InputError("edge " + std::to_string(e) + " is not live");
    g.identify(u, v);
  }
  return g;
}

InducedPartition induced_partition(const MultiGraph& g, std::span<const EdgeId> cut,
                                   std::span<const VertexId> terminals) {
  const ComponentLabeling cl = components(g, cut);
  InducedPartition out;
  out.components = cl.count;
  std::vector<std::int64_t> block_of(cl.count, -1);
  for (VertexId t : terminals) {
    if (!g.has_vertex(t)) throw InputError("unknown terminal " + std::to_string(t));
    const auto c = cl.label[t];
    if (block_of[c] < 0) {
      block_of[c] = static_cast<std::int64_t>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.blocks[block_of[c]].push_back(g.find(t));
  }
  for (auto& b : out.blocks) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  out.empty_blocks = cl.count - out.blocks.size();
  return out;
}

VertexId Subgraph::local_vertex(VertexId parent_canonical) const {
  auto it = std::lower_bound(by_parent.begin(), by_parent.end(),
                             std::pair<VertexId, VertexId>{parent_canonical, 0});
  if (it == by_parent.end() || it->first != parent_canonical) return kNoVertex;
  return it->second;
}

std::vector<EdgeId> Subgraph::to_parent(std::span<const EdgeId> local) const {
  std::vector<EdgeId> out;
  out.reserve(local.size());
  for (EdgeId e : local) out.push_back(edge_origin[e]);
  std::sort(out.begin(), out.end());
  return out;
}

Subgraph extract(const MultiGraph& g, std::span<const EdgeId> edges,
                 std::span<const VertexId> extra_vertices) {
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<VertexId> verts;
  verts.reserve(2 * sorted.size() + extra_vertices.size());
  for (EdgeId e : sorted) {
    if (!g.is_live(e)) throw InputError("extract: edge " + std::to_string(e) + " is not live");
    auto [u, v] = g.endpoints(e);
    verts.push_back(u);
    verts.push_back(v);
  }
  for (VertexId v : extra_vertices) verts.push_back(g.find(v));
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  Subgraph sub;
  sub.graph = MultiGraph(verts.size());
  sub.vertex_origin = verts;
  sub.by_parent.reserve(verts.size());
  for (VertexId i = 0; i < verts.size(); ++i) sub.by_parent.emplace_back(verts[i], i);
  sub.edge_origin = sorted;
  for (EdgeId e : sorted) {
    auto [u, v] = g.endpoints(e);
    sub.graph.add_edge(sub.local_vertex(u), sub.local_vertex(v));
  }
  return sub;
}

Subgraph compact(const MultiGraph& g) {
  const auto e = g.edges();
  const auto v = g.vertices();
  return extract(g, e, v);
}

}  // namespace kwaycut
