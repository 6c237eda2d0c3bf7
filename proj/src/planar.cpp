#include "kwaycut/planar.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kwaycut/error.hpp"
#include "kwaycut/treewidth.hpp"

namespace kwaycut {
namespace {

void require_plain(const MultiGraph& g) {
  if (g.vertex_count() != g.vertex_capacity()) throw InputError("embedding needs a graph without identified vertices");
}

}  // namespace

RotationSystem rotation_from_coordinates(const MultiGraph& g, std::span<const double> x, std::span<const double> y) {
  require_plain(g);
  if (x.size() != g.vertex_capacity() || y.size() != g.vertex_capacity())
    throw InputError("one coordinate pair per vertex required");
  RotationSystem rot;
  rot.order.resize(g.vertex_capacity());
  std::vector<std::vector<std::pair<double, EdgeEnd>>> around(g.vertex_capacity());
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.original_endpoints(e);
    around[u].push_back({std::atan2(y[v] - y[u], x[v] - x[u]), EdgeEnd{e, 0}});
    around[v].push_back({std::atan2(y[u] - y[v], x[u] - x[v]), EdgeEnd{e, 1}});
  }
  for (VertexId v = 0; v < around.size(); ++v) {
    auto& a = around[v];
    // Clockwise: decreasing angle, edge id breaking ties.
    std::sort(a.begin(), a.end(), [](const auto& l, const auto& r) {
      if (l.first != r.first) return l.first > r.first;
      return l.second.edge < r.second.edge;
    });
    for (const auto& [angle, end] : a) rot.order[v].push_back(end);
  }
  return rot;
}

void check_rotation(const MultiGraph& g, const RotationSystem& rot) {
  require_plain(g);
  if (rot.order.size() != g.vertex_capacity()) throw InputError("rotation system must list every vertex");
  std::vector<std::uint8_t> seen(2 * g.edge_capacity(), 0);
  for (VertexId v = 0; v < rot.order.size(); ++v) {
    for (const EdgeEnd& end : rot.order[v]) {
      if (!g.is_live(end.edge) || end.end > 1)
        throw InputError("rotation at vertex " + std::to_string(v) + " names an unknown edge end");
      auto [a, b] = g.original_endpoints(end.edge);
      if ((end.end == 0 ? a : b) != v)
        throw InputError("edge " + std::to_string(end.edge) + " is not incident to vertex " + std::to_string(v));
      if (seen[end.dart()]++) throw InputError("edge end of " + std::to_string(end.edge) + " listed twice");
    }
  }
  for (EdgeId e : g.edges())
    if (!seen[2 * e] || !seen[2 * e + 1]) throw InputError("rotation omits an end of edge " + std::to_string(e));
}

FaceStructure faces_from_rotation(const MultiGraph& g, const RotationSystem& rot) {
  check_rotation(g, rot);
  if (!is_connected(g)) throw InputError("face tracing needs a connected graph");
  const std::size_t darts = 2 * g.edge_capacity();
  std::vector<std::uint32_t> pos(darts, 0);
  for (const auto& list : rot.order)
    for (std::uint32_t i = 0; i < list.size(); ++i) pos[list[i].dart()] = i;

  FaceStructure fs;
  constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
  fs.face_of_dart.assign(darts, kNone);
  for (EdgeId e : g.edges()) {
    for (std::uint32_t start : {2 * e, 2 * e + 1}) {
      if (fs.face_of_dart[start] != kNone) continue;
      const auto id = static_cast<std::uint32_t>(fs.faces.size());
      fs.faces.emplace_back();
      std::uint32_t d = start;
      while (fs.face_of_dart[d] == kNone) {
        fs.face_of_dart[d] = id;
        fs.faces.back().push_back(d);
        // Leave along d, arrive at the far end, then turn to the next end there.
        const std::uint32_t twin = d ^ 1u;
        const EdgeId edge = twin / 2;
        auto [a, b] = g.original_endpoints(edge);
        const VertexId at = (twin & 1u) ? b : a;
        const auto& list = rot.order[at];
        d = list[(pos[twin] + 1) % list.size()].dart();
      }
    }
  }
  const long long f = g.edge_count() == 0 ? 1 : static_cast<long long>(fs.faces.size());
  const long long euler = static_cast<long long>(g.vertex_count()) - static_cast<long long>(g.edge_count()) + f;
  if (euler != 2) throw InputError("not a valid planar embedding");
  return fs;
}

EdgeLevelPartition klein_partition(const MultiGraph& g, const RotationSystem& rot, std::size_t q) {
  if (q < 1) throw InputError("partition parameter q must be at least 1");
  const FaceStructure fs = faces_from_rotation(g, rot);
  EdgeLevelPartition out;
  out.level.assign(g.edge_capacity(), 0);
  out.classes.resize(q);
  const std::size_t f = fs.faces.size();
  if (f == 0) return out;

  std::vector<std::vector<std::uint32_t>> dual(f);
  for (EdgeId e : g.edges()) {
    const auto a = fs.face_of_dart[2 * e], b = fs.face_of_dart[2 * e + 1];
    dual[a].push_back(b);
    if (a != b) dual[b].push_back(a);
  }
  std::vector<std::uint32_t> depth(f, static_cast<std::uint32_t>(-1));
  const EdgeId first = g.edges().front();
  std::vector<std::uint32_t> queue{fs.face_of_dart[2 * first]};
  depth[queue[0]] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    for (auto y : dual[x]) {
      if (depth[y] != static_cast<std::uint32_t>(-1)) continue;
      depth[y] = depth[x] + 1;
      queue.push_back(y);
    }
  }
  for (EdgeId e : g.edges()) {
    out.level[e] = std::max(depth[fs.face_of_dart[2 * e]], depth[fs.face_of_dart[2 * e + 1]]);
    out.classes[out.level[e] % q].push_back(e);
  }
  return out;
}

std::optional<GreedyBound> greedy_upper_bound(const MultiGraph& g, int k) {
  if (k < 1) throw InputError("k must be at least 1");
  GreedyBound out;
  std::vector<std::uint8_t> cut(g.edge_capacity(), 0);
  std::vector<std::size_t> deg(g.vertex_capacity(), 0);
  for (VertexId v : g.vertices()) deg[v] = g.degree(v);
  const auto verts = g.vertices();
  for (int round = 1; round < k; ++round) {
    VertexId pick = kNoVertex;
    for (VertexId v : verts)
      if (deg[v] > 0 && (pick == kNoVertex || deg[v] < deg[pick])) pick = v;
    if (pick == kNoVertex) return std::nullopt;
    g.for_each_incident(pick, [&](EdgeId e, VertexId w) {
      if (cut[e]) return;
      cut[e] = 1;
      out.witness.push_back(e);
      --deg[w];
    });
    deg[pick] = 0;
  }
  std::sort(out.witness.begin(), out.witness.end());
  out.bound = out.witness.size();
  return out;
}

bool is_simple(const MultiGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.endpoints(e);
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

PlanarReport planar_kway_cut(const MultiGraph& g, const RotationSystem& rot, int k, std::optional<int> s) {
  if (k < 1) throw InputError("k must be at least 1");
  faces_from_rotation(g, rot);
  PlanarReport rep;
  if (s) {
    if (*s < 0) throw InputError("size bound must be non-negative");
    rep.s = *s;
  } else if (is_simple(g)) {
    rep.s = 5 * (k - 1);
  } else {
    auto greedy = greedy_upper_bound(g, k);
    if (!greedy) return rep;
    rep.s = static_cast<int>(greedy->bound);
  }
  if (k == 1) {
    rep.cut = Cut{};
    return rep;
  }
  if (k > rep.s + 1) {
    rep.pigeonhole = true;
    return rep;
  }

  const auto parts = klein_partition(g, rot, static_cast<std::size_t>(rep.s) + 1);
  for (const auto& cls : parts.classes) {
    const MultiGraph quotient = contract(g, cls);
    const Subgraph sub = compact(quotient);
    const TreeDecomposition td = heuristic_tree_decomposition(sub.graph);
    rep.class_widths.push_back(td.width());
    auto local = dp_kway_cut(sub.graph, k, rep.s, td);
    if (!local) continue;
    Cut cut = sub.to_parent(*local);
    if (!rep.cut || cut_less(cut, *rep.cut)) rep.cut = std::move(cut);
  }
  return rep;
}

}  // namespace kwaycut
