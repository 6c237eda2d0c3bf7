// Kernel and layer construction around a start vertex, pruning of layers to
// their big components, and the local powercuts of the collapsed blocks.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "kwaycut/connectivity.hpp"
#include "kwaycut/error.hpp"
#include "kwaycut/fpt.hpp"

namespace kwaycut {
namespace {

// Union-find over global vertex ids that only touches vertices registered
// in the current layer. Each root keeps its member list.
class LayerSets {
 public:
  explicit LayerSets(std::size_t cap) : parent_(cap, kNoVertex), members_(cap) {}

  bool contains(VertexId v) const { return parent_[v] != kNoVertex; }

  void add(VertexId v) {
    if (contains(v)) return;
    parent_[v] = v;
    members_[v] = {v};
    registered_.push_back(v);
  }

  VertexId find(VertexId v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  VertexId unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (members_[a].size() < members_[b].size()) std::swap(a, b);
    parent_[b] = a;
    members_[a].insert(members_[a].end(), members_[b].begin(), members_[b].end());
    std::vector<VertexId>().swap(members_[b]);
    return a;
  }

  const std::vector<VertexId>& members(VertexId root) const { return members_[root]; }
  const std::vector<VertexId>& registered() const { return registered_; }

  std::vector<VertexId> roots() const {
    std::vector<VertexId> out;
    for (VertexId v : registered_)
      if (parent_[v] == v) out.push_back(v);
    return out;
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::vector<VertexId>> members_;
  std::vector<VertexId> registered_;
};

VertexId min_member(const std::vector<VertexId>& m) { return *std::min_element(m.begin(), m.end()); }

}  // namespace

std::size_t Layering::vertices_upto(std::size_t i) const {
  std::size_t count = 0;
  for (VertexId v = 0; v < depth.size(); ++v) {
    if (apex && v == *apex) continue;
    if (depth[v] >= 0 && static_cast<std::size_t>(depth[v]) <= i) ++count;
  }
  return count;
}

std::variant<Layering, GraphExhausted> build_layering(const MultiGraph& g, std::span<const VertexId> /*terminals*/,
                                                      const ConstantsProfile& profile,
                                                      std::optional<VertexId> apex) {
  Layering lay;
  const VertexId r = apex ? g.find(*apex) : kNoVertex;
  if (apex) lay.apex = r;
  const std::size_t target = g.vertex_count() - (apex ? 1 : 0);

  if (apex) {
    for (const auto& inc : g.incident(r)) {
      if (lay.v0 == kNoVertex || inc.other < lay.v0) lay.v0 = inc.other;
    }
    if (lay.v0 == kNoVertex) return GraphExhausted{};
  } else {
    const auto verts = g.vertices();
    if (verts.empty()) return GraphExhausted{};
    lay.v0 = verts.front();
  }

  lay.depth.assign(g.vertex_capacity(), -1);
  std::vector<int> edge_layer(g.edge_capacity(), -1);
  if (apex) lay.depth[r] = 0;

  // Kernel: breadth-first from v0 in G - r until h vertices are spanned; all
  // edges at v0 are always taken.
  std::size_t covered = 0;
  {
    std::vector<VertexId> queue{lay.v0};
    lay.depth[lay.v0] = 0;
    lay.kernel_vertices.push_back(lay.v0);
    covered = 1;
    bool full = covered >= profile.h;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      if (full && x != lay.v0) break;
      for (const auto& inc : g.incident(x)) {
        if (inc.other == r) continue;
        if (edge_layer[inc.edge] < 0) {
          edge_layer[inc.edge] = 0;
          lay.kernel.push_back(inc.edge);
        }
        if (lay.depth[inc.other] < 0) {
          lay.depth[inc.other] = 0;
          lay.kernel_vertices.push_back(inc.other);
          queue.push_back(inc.other);
          if (++covered >= profile.h) full = true;
        }
        if (full && x != lay.v0) break;
      }
    }
    if (apex) {
      for (const auto& inc : g.incident(r)) {
        if (lay.depth[inc.other] == 0 && edge_layer[inc.edge] < 0) {
          edge_layer[inc.edge] = 0;
          lay.kernel.push_back(inc.edge);
        }
      }
    }
    std::sort(lay.kernel.begin(), lay.kernel.end());
    std::sort(lay.kernel_vertices.begin(), lay.kernel_vertices.end());
  }

  std::vector<VertexId> frontier = lay.kernel_vertices;
  for (std::uint64_t i = 1; i <= profile.p; ++i) {
    const int li = static_cast<int>(i);
    LayerSets sets(g.vertex_capacity());
    Layer layer;

    // Seed with every unused edge at the vertices of the previous shells.
    for (VertexId x : frontier) {
      for (const auto& inc : g.incident(x)) {
        if (inc.other == r || edge_layer[inc.edge] >= 0) continue;
        edge_layer[inc.edge] = li;
        layer.edges.push_back(inc.edge);
        sets.add(x);
        sets.add(inc.other);
        sets.unite(x, inc.other);
      }
    }

    // Grow components below q vertices along their smallest leaving edge.
    auto order = sets.roots();
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return min_member(sets.members(a)) < min_member(sets.members(b)); });
    for (VertexId root : order) {
      if (sets.find(root) != root) continue;
      while (sets.members(root).size() < profile.q) {
        EdgeId best = static_cast<EdgeId>(-1);
        VertexId best_from = kNoVertex, best_to = kNoVertex;
        for (VertexId x : sets.members(root)) {
          g.for_each_incident(x, [&](EdgeId e, VertexId w) {
            if (w == r || edge_layer[e] >= 0 || e >= best) return;
            if (sets.contains(w) && sets.find(w) == root) return;
            best = e;
            best_from = x;
            best_to = w;
          });
        }
        if (best_from == kNoVertex) break;
        edge_layer[best] = li;
        layer.edges.push_back(best);
        sets.add(best_to);
        root = sets.unite(best_from, best_to);
      }
    }

    std::vector<VertexId> fresh;
    for (VertexId v : sets.registered()) {
      if (lay.depth[v] < 0) {
        lay.depth[v] = li;
        fresh.push_back(v);
      }
    }
    covered += fresh.size();

    if (apex) {
      sets.add(r);
      for (const auto& inc : g.incident(r)) {
        if (edge_layer[inc.edge] >= 0 || lay.depth[inc.other] != li) continue;
        edge_layer[inc.edge] = li;
        layer.edges.push_back(inc.edge);
        sets.unite(r, inc.other);
      }
    }

    std::sort(layer.edges.begin(), layer.edges.end());
    for (VertexId root : sets.roots()) {
      LayerComponent comp;
      comp.vertices = sets.members(root);
      std::sort(comp.vertices.begin(), comp.vertices.end());
      comp.has_apex = apex && sets.find(r) == root;
      comp.big = comp.has_apex || comp.vertices.size() >= profile.q;
      layer.components.push_back(std::move(comp));
    }
    std::sort(layer.components.begin(), layer.components.end(),
              [](const LayerComponent& a, const LayerComponent& b) { return a.vertices.front() < b.vertices.front(); });
    std::map<VertexId, std::size_t> comp_of;
    for (std::size_t c = 0; c < layer.components.size(); ++c)
      comp_of[sets.find(layer.components[c].vertices.front())] = c;
    for (EdgeId e : layer.edges) layer.components[comp_of.at(sets.find(g.endpoints(e).first))].edges.push_back(e);
    for (auto& comp : layer.components) std::sort(comp.edges.begin(), comp.edges.end());

    const bool empty = layer.edges.empty();
    lay.layers.push_back(std::move(layer));
    frontier = std::move(fresh);
    // Later layers would repeat this empty one; callers treat missing
    // layers as copies of the last.
    if (empty) break;
  }

  if (covered >= target) return GraphExhausted{};
  return lay;
}

PrunedLayer prune_layer(const MultiGraph& g, const Layering& layering, std::size_t i,
                        const ConstantsProfile& profile) {
  if (i < 1) throw InputError("prune_layer: layer index starts at 1");
  if (layering.layers.empty()) throw InternalError("prune_layer: layering has no layers");
  const std::size_t idx = std::min(i, layering.layers.size()) - 1;
  const Layer& layer = layering.layers[idx];
  const int depth_limit = static_cast<int>(idx + 1);

  PrunedLayer out;
  for (const auto& comp : layer.components) {
    if (!comp.big) continue;
    if (!comp.has_apex && comp.vertices.size() < profile.q)
      throw InternalError("prune_layer: big component below q vertices");
    out.components.push_back(comp);
    out.vertices.insert(out.vertices.end(), comp.vertices.begin(), comp.vertices.end());
  }
  if (layering.apex && std::find(out.vertices.begin(), out.vertices.end(), *layering.apex) == out.vertices.end()) {
    // The apex always belongs to the separator, even with no new neighbors.
    LayerComponent lone;
    lone.vertices = {*layering.apex};
    lone.big = true;
    lone.has_apex = true;
    out.components.push_back(lone);
    out.vertices.push_back(*layering.apex);
    std::sort(out.components.begin(), out.components.end(),
              [](const LayerComponent& a, const LayerComponent& b) { return a.vertices.front() < b.vertices.front(); });
  }
  std::sort(out.vertices.begin(), out.vertices.end());

  // The pruned vertices must separate the kernel from everything outside
  // H_0..H_i.
  std::vector<std::uint8_t> blocked(g.vertex_capacity(), 0), seen(g.vertex_capacity(), 0);
  for (VertexId v : out.vertices) blocked[v] = 1;
  std::vector<VertexId> stack;
  for (VertexId v : layering.kernel_vertices) {
    if (!blocked[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    const int dx = layering.depth[x];
    if (dx < 0 || dx > depth_limit)
      throw InternalError("prune_layer: pruned layer " + std::to_string(i) + " does not separate the kernel");
    g.for_each_incident(x, [&](EdgeId, VertexId w) {
      if (blocked[w] || seen[w]) return;
      seen[w] = 1;
      stack.push_back(w);
    });
  }
  return out;
}

ConsecutiveCheck consecutive_connectivity_check(const MultiGraph& g, const PrunedLayer& pruned,
                                                const ConstantsProfile& profile, std::optional<VertexId> /*apex*/) {
  ConsecutiveCheck out;
  for (std::size_t c = 0; c + 1 < pruned.components.size(); ++c) {
    const LayerComponent* src = &pruned.components[c];
    const LayerComponent* dst = &pruned.components[c + 1];
    // The apex component goes on the sink side; the other side then has
    // at least q vertices of its own.
    if (src->has_apex) std::swap(src, dst);
    auto cut = bounded_mincut_with_side(g, src->vertices, dst->vertices, profile.s);
    if (!cut) continue;
    Separation sep = separation_from_side(g, cut->source_side);
    if (sep.good(profile)) {
      out.separation = std::move(sep);
      return out;
    }
    out.blocked = true;
  }
  return out;
}

PowercutTable collapse_and_local_powercut(const MultiGraph& g, std::span<const VertexId> terminals,
                                          const Layering& layering, const PrunedLayer& pruned, std::size_t i,
                                          int s, std::uint64_t ceiling) {
  std::vector<EdgeId> block = layering.kernel;
  const std::size_t upto = std::min(i, layering.layers.size());
  for (std::size_t l = 0; l < upto; ++l)
    block.insert(block.end(), layering.layers[l].edges.begin(), layering.layers[l].edges.end());
  const VertexId extra[] = {layering.v0};
  Subgraph sub = extract(g, block, extra);

  VertexId hub = kNoVertex;
  for (VertexId v : pruned.vertices) {
    const VertexId lv = sub.local_vertex(v);
    if (lv == kNoVertex) continue;
    if (hub == kNoVertex)
      hub = lv;
    else
      sub.graph.identify(hub, lv);
  }

  std::vector<VertexId> local_terms{sub.graph.find(sub.local_vertex(layering.v0))};
  for (VertexId t : terminals) {
    const VertexId lv = sub.local_vertex(g.find(t));
    if (lv == kNoVertex) continue;
    const VertexId rep = sub.graph.find(lv);
    if (std::find(local_terms.begin(), local_terms.end(), rep) == local_terms.end()) local_terms.push_back(rep);
  }

  PowercutTable table = exhaustive_powercut(sub.graph, local_terms, s, ceiling);
  table.remap_edges(sub.edge_origin);
  std::vector<VertexId> names;
  for (VertexId lv : local_terms) names.push_back(sub.vertex_origin[lv]);
  table.rename_terminals(std::move(names));
  return table;
}

std::vector<EdgeId> contractible_kernel_edges(std::span<const PowercutTable> tables, std::span<const EdgeId> kernel) {
  std::vector<EdgeId> used;
  for (const auto& t : tables) {
    auto d = t.distinct_edges();
    used.insert(used.end(), d.begin(), d.end());
  }
  std::sort(used.begin(), used.end());
  std::vector<EdgeId> out;
  for (EdgeId e : kernel)
    if (!std::binary_search(used.begin(), used.end(), e)) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kwaycut
