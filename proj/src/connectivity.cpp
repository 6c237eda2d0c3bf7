#include "kwaycut/connectivity.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kwaycut/error.hpp"

namespace kwaycut {
namespace {

struct DisjointSets {
  std::vector<VertexId> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), VertexId{0}); }
  VertexId find(VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

ForestStack spanning_forests(const MultiGraph& g, int s) {
  if (s < 1) throw InputError("spanning_forests: s must be >= 1");
  ForestStack out;
  std::vector<EdgeId> remaining = g.edges();
  for (int i = 0; i < s; ++i) {
    DisjointSets ds(g.vertex_capacity());
    std::vector<EdgeId> forest;
    std::vector<EdgeId> rest;
    for (EdgeId e : remaining) {
      auto [u, v] = g.endpoints(e);
      (ds.unite(u, v) ? forest : rest).push_back(e);
    }
    out.forests.push_back(std::move(forest));
    remaining = std::move(rest);
  }
  out.outside = std::move(remaining);
  return out;
}

void sparsify_in_place(MultiGraph& g, int s) {
  const ForestStack fs = spanning_forests(g, s);
  for (EdgeId e : fs.outside) {
    auto [u, v] = g.original_endpoints(e);
    g.identify(u, v);
  }
}

MultiGraph sparsify(const MultiGraph& g, int s) {
  MultiGraph out = g;
  sparsify_in_place(out, s);
  return out;
}

std::optional<BoundedCut> bounded_mincut_with_side(const MultiGraph& g, std::span<const VertexId> x,
                                                   std::span<const VertexId> y, int s) {
  if (x.empty() || y.empty()) throw InputError("bounded_mincut: empty vertex set");
  if (s < 0) throw InputError("bounded_mincut: negative bound");
  const std::size_t cap = g.vertex_capacity();
  // 0 = ordinary, 1 = source class, 2 = sink class.
  std::vector<std::uint8_t> role(cap, 0);
  std::vector<VertexId> sources;
  for (VertexId v : x) {
    if (!g.has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
    const VertexId r = g.find(v);
    if (role[r] == 0) sources.push_back(r);
    role[r] = 1;
  }
  for (VertexId v : y) {
    if (!g.has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
    const VertexId r = g.find(v);
    if (role[r] == 1) throw InputError("sets already identified");
    role[r] = 2;
  }

  // flow[e] = +1: one unit along original first->second, -1 the reverse.
  std::vector<std::int8_t> flow(g.edge_capacity(), 0);
  auto direction = [&](EdgeId e, VertexId from) {
    return g.find(g.original_endpoints(e).first) == from ? 1 : -1;
  };

  std::vector<std::uint32_t> seen(cap, 0);
  std::vector<EdgeId> via(cap, 0);
  std::vector<VertexId> from(cap, kNoVertex);
  std::uint32_t epoch = 0;
  std::vector<VertexId> queue;

  // Breadth-first search in the residual graph from the whole source class.
  // Returns a sink vertex reached, or kNoVertex.
  auto search = [&]() -> VertexId {
    ++epoch;
    queue.clear();
    for (VertexId r : sources) {
      seen[r] = epoch;
      from[r] = kNoVertex;
      queue.push_back(r);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId a = queue[head];
      VertexId hit = kNoVertex;
      g.for_each_incident(a, [&](EdgeId e, VertexId b) {
        if (hit != kNoVertex || seen[b] == epoch) return;
        if (role[a] == 1 && role[b] == 1) return;  // inside the identified source
        if (direction(e, a) * flow[e] > 0) return;  // saturated in this direction
        seen[b] = epoch;
        via[b] = e;
        from[b] = a;
        if (role[b] == 2) {
          hit = b;
          return;
        }
        queue.push_back(b);
      });
      if (hit != kNoVertex) return hit;
    }
    return kNoVertex;
  };

  int value = 0;
  while (true) {
    const VertexId t = search();
    if (t == kNoVertex) break;
    for (VertexId b = t; from[b] != kNoVertex; b = from[b]) {
      const EdgeId e = via[b];
      flow[e] = static_cast<std::int8_t>(flow[e] + direction(e, from[b]));
    }
    if (++value > s) return std::nullopt;
  }

  BoundedCut out;
  for (VertexId a : queue) {
    out.source_side.push_back(a);
    g.for_each_incident(a, [&](EdgeId e, VertexId b) {
      if (seen[b] != epoch) out.edges.push_back(e);
    });
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  std::sort(out.source_side.begin(), out.source_side.end());
  if (static_cast<int>(out.edges.size()) != value)
    throw InternalError("bounded_mincut: cut size differs from flow value");
  return out;
}

std::optional<std::vector<EdgeId>> bounded_mincut(const MultiGraph& g, std::span<const VertexId> x,
                                                  std::span<const VertexId> y, int s) {
  auto r = bounded_mincut_with_side(g, x, y, s);
  if (!r) return std::nullopt;
  return std::move(r->edges);
}

}  // namespace kwaycut
