#include "kwaycut/treewidth.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "kwaycut/error.hpp"

namespace kwaycut {
namespace {

// Dynamic-programming state: partition of the current bag by component
// (restricted growth string over the sorted bag) and the number of
// components that no longer touch the bag, capped.
using StateKey = std::pair<std::vector<std::uint8_t>, int>;
using StateMap = std::map<StateKey, Cut>;

void relabel(std::vector<std::uint8_t>& labels) {
  std::uint8_t map[256];
  std::fill(std::begin(map), std::end(map), 0xff);
  std::uint8_t next = 0;
  for (auto& l : labels) {
    if (map[l] == 0xff) map[l] = next++;
    l = map[l];
  }
}

void offer(StateMap& states, StateKey key, Cut cut) {
  auto [it, inserted] = states.try_emplace(std::move(key), cut);
  if (!inserted && cut_less(cut, it->second)) it->second = std::move(cut);
}

std::size_t position(const std::vector<VertexId>& bag, VertexId v) {
  return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Drops every bag vertex outside `keep`; blocks left without a member close.
StateMap forget_to(const std::vector<VertexId>& bag, const StateMap& states, const std::vector<VertexId>& keep,
                   int cap) {
  std::vector<std::size_t> kept;
  for (VertexId v : keep) kept.push_back(position(bag, v));
  StateMap out;
  for (const auto& [key, cut] : states) {
    const auto& labels = key.first;
    std::vector<std::uint8_t> seen(bag.size() + 1, 0);
    std::vector<std::uint8_t> next;
    next.reserve(kept.size());
    for (std::size_t p : kept) {
      seen[labels[p]] = 1;
      next.push_back(labels[p]);
    }
    const std::uint8_t blocks = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    int closed = key.second;
    for (std::uint8_t b = 0; b < blocks; ++b)
      if (!seen[b]) ++closed;
    relabel(next);
    offer(out, {std::move(next), std::min(closed, cap)}, cut);
  }
  return out;
}

// Adds the vertices of `wider` missing from `bag` as singleton blocks.
StateMap extend_to(const std::vector<VertexId>& bag, const StateMap& states, const std::vector<VertexId>& wider) {
  StateMap out;
  for (const auto& [key, cut] : states) {
    std::uint8_t fresh = key.first.empty() ? 0 : *std::max_element(key.first.begin(), key.first.end()) + 1;
    std::vector<std::uint8_t> next(wider.size());
    std::size_t j = 0;
    for (std::size_t i = 0; i < wider.size(); ++i) {
      if (j < bag.size() && bag[j] == wider[i])
        next[i] = key.first[j++];
      else
        next[i] = fresh++;
    }
    relabel(next);
    offer(out, {std::move(next), key.second}, cut);
  }
  return out;
}

StateMap join(const StateMap& a, const StateMap& b, std::size_t bag_size, int s, int cap) {
  StateMap out;
  std::vector<std::size_t> parent(bag_size);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      if (static_cast<long long>(ca.size() + cb.size()) > s) continue;
      std::iota(parent.begin(), parent.end(), std::size_t{0});
      for (const auto* labels : {&ka.first, &kb.first}) {
        std::vector<std::size_t> first(bag_size + 1, bag_size);
        for (std::size_t i = 0; i < bag_size; ++i) {
          const auto l = (*labels)[i];
          if (first[l] == bag_size)
            first[l] = i;
          else
            parent[root(i)] = root(first[l]);
        }
      }
      std::vector<std::uint8_t> labels(bag_size);
      for (std::size_t i = 0; i < bag_size; ++i) labels[i] = static_cast<std::uint8_t>(root(i));
      relabel(labels);
      Cut cut;
      cut.reserve(ca.size() + cb.size());
      std::merge(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(cut));
      offer(out, {std::move(labels), std::min(ka.second + kb.second, cap)}, std::move(cut));
    }
  }
  return out;
}

StateMap introduce_edge(const StateMap& states, std::size_t pu, std::size_t pv, EdgeId e, int s) {
  StateMap out;
  for (const auto& [key, cut] : states) {
    auto labels = key.first;
    const auto from = labels[pv];
    const auto to = labels[pu];
    if (from != to) {
      for (auto& l : labels)
        if (l == from) l = to;
      relabel(labels);
    }
    offer(out, {std::move(labels), key.second}, cut);
    if (static_cast<long long>(cut.size()) < s) {
      Cut with = cut;
      with.insert(std::upper_bound(with.begin(), with.end(), e), e);
      offer(out, key, std::move(with));
    }
  }
  return out;
}

std::vector<VertexId> intersect(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

long TreeDecomposition::width() const {
  long w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<long>(b.size()) - 1);
  return w;
}

TreeDecomposition heuristic_tree_decomposition(const MultiGraph& g, EliminationHeuristic heuristic) {
  const auto verts = g.vertices();
  const std::size_t n = verts.size();
  std::vector<std::uint32_t> local(g.vertex_capacity(), 0);
  for (std::uint32_t i = 0; i < n; ++i) local[verts[i]] = i;
  std::vector<std::set<std::uint32_t>> adj(n);
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.endpoints(e);
    adj[local[u]].insert(local[v]);
    adj[local[v]].insert(local[u]);
  }

  auto fill_of = [&](std::uint32_t v) -> std::size_t {
    if (heuristic == EliminationHeuristic::MinDegree) return 0;
    std::size_t missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
      for (auto b = std::next(a); b != adj[v].end(); ++b)
        if (!adj[*a].count(*b)) ++missing;
    return missing;
  };

  using Rank = std::tuple<std::size_t, std::size_t, std::uint32_t>;  // fill, degree, id
  std::vector<Rank> rank(n);
  std::set<Rank> queue;
  for (std::uint32_t v = 0; v < n; ++v) {
    rank[v] = {fill_of(v), adj[v].size(), v};
    queue.insert(rank[v]);
  }

  std::vector<std::uint32_t> order;
  std::vector<std::size_t> position_of(n, 0);
  std::vector<std::vector<std::uint32_t>> bag_local(n);
  while (!queue.empty()) {
    const std::uint32_t v = std::get<2>(*queue.begin());
    queue.erase(queue.begin());
    position_of[v] = order.size();
    order.push_back(v);
    std::vector<std::uint32_t> nb(adj[v].begin(), adj[v].end());
    bag_local[v] = nb;
    bag_local[v].push_back(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      adj[nb[i]].erase(v);
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    }
    adj[v].clear();
    // Fill counts change only within distance two of v.
    std::set<std::uint32_t> dirty(nb.begin(), nb.end());
    for (std::uint32_t x : nb) dirty.insert(adj[x].begin(), adj[x].end());
    for (std::uint32_t x : dirty) {
      if (!queue.erase(rank[x])) continue;
      rank[x] = {fill_of(x), adj[x].size(), x};
      queue.insert(rank[x]);
    }
  }

  TreeDecomposition td;
  td.bags.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t v = order[i];
    for (std::uint32_t x : bag_local[v]) td.bags[i].push_back(verts[x]);
    std::sort(td.bags[i].begin(), td.bags[i].end());
    std::size_t parent = n;
    for (std::uint32_t x : bag_local[v])
      if (x != v) parent = std::min(parent, position_of[x]);
    if (parent == n && i + 1 < n) parent = i + 1;
    if (parent < n) td.edges.emplace_back(i, parent);
  }
  return td;
}

DecompositionCheck validate_decomposition(const MultiGraph& g, const TreeDecomposition& td) {
  DecompositionCheck out;
  const std::size_t nodes = td.bags.size();
  if (nodes == 0) {
    out.ok = g.vertex_count() == 0;
    if (!out.ok) out.reason = "decomposition has no bags";
    return out;
  }
  if (td.edges.size() != nodes - 1) {
    out.reason = "tree has " + std::to_string(td.edges.size()) + " edges for " + std::to_string(nodes) + " nodes";
    return out;
  }
  std::vector<std::size_t> dsu(nodes);
  std::iota(dsu.begin(), dsu.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
    return x;
  };
  for (auto [a, b] : td.edges) {
    if (a >= nodes || b >= nodes) {
      out.reason = "tree edge names an unknown node";
      return out;
    }
    const auto ra = root(a), rb = root(b);
    if (ra == rb) {
      out.reason = "tree edges form a cycle at node " + std::to_string(a);
      return out;
    }
    dsu[ra] = rb;
  }

  std::vector<std::vector<std::size_t>> nodes_of(g.vertex_capacity());
  for (std::size_t i = 0; i < nodes; ++i) {
    const auto& bag = td.bags[i];
    if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      out.reason = "bag " + std::to_string(i) + " is not a sorted set";
      return out;
    }
    for (VertexId v : bag) {
      if (!g.is_canonical(v)) {
        out.reason = "bag " + std::to_string(i) + " contains unknown vertex " + std::to_string(v);
        return out;
      }
      nodes_of[v].push_back(i);
    }
  }
  for (VertexId v : g.vertices()) {
    if (nodes_of[v].empty()) {
      out.reason = "vertex " + std::to_string(v) + " is in no bag";
      return out;
    }
  }
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.endpoints(e);
    const bool covered = std::any_of(nodes_of[u].begin(), nodes_of[u].end(), [&](std::size_t i) {
      return std::binary_search(td.bags[i].begin(), td.bags[i].end(), v);
    });
    if (!covered) {
      out.reason = "edge " + std::to_string(e) + " (" + std::to_string(u) + "," + std::to_string(v) +
                   ") is not covered by any bag";
      return out;
    }
  }
  // The nodes holding a vertex induce a forest; it is a tree iff it has
  // one edge fewer than nodes.
  std::vector<std::size_t> links(g.vertex_capacity(), 0);
  for (auto [a, b] : td.edges)
    for (VertexId v : intersect(td.bags[a], td.bags[b])) ++links[v];
  for (VertexId v : g.vertices()) {
    if (links[v] + 1 != nodes_of[v].size()) {
      out.reason = "vertex " + std::to_string(v) + " appears in disconnected parts of the tree";
      return out;
    }
  }
  out.ok = true;
  return out;
}

TreeDecomposition parse_decomposition(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::map<std::size_t, std::vector<VertexId>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::size_t> declared;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) { throw InputError("decomposition line " + std::to_string(line_no) + ": " + msg); };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "s") {
      std::string td;
      std::size_t count = 0, w = 0, nv = 0;
      if (!(ls >> td >> count >> w >> nv) || td != "td") fail("malformed header");
      declared = count;
    } else if (tag == "b") {
      long long id = 0;
      if (!(ls >> id) || id < 1) fail("bad bag id");
      std::vector<VertexId> bag;
      long long v = 0;
      while (ls >> v) {
        if (v < 1) fail("vertex ids are 1-based");
        bag.push_back(static_cast<VertexId>(v - 1));
      }
      if (!ls.eof()) fail("bad vertex id");
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      if (!bags.emplace(static_cast<std::size_t>(id), std::move(bag)).second) fail("duplicate bag id");
    } else {
      long long a = 0, b = 0;
      std::istringstream es(tag == "t" ? line.substr(line.find('t') + 1) : line);
      if (!(es >> a >> b) || a < 1 || b < 1) fail("unrecognized line");
      edges.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
    }
  }
  TreeDecomposition td;
  std::size_t expect = 1;
  for (auto& [id, bag] : bags) {
    if (id != expect++) throw InputError("decomposition bag ids must be 1..N without gaps");
    td.bags.push_back(std::move(bag));
  }
  if (declared && *declared != td.bags.size()) throw InputError("decomposition header bag count does not match");
  for (auto [a, b] : edges)
    if (a >= td.bags.size() || b >= td.bags.size()) throw InputError("decomposition tree edge names an unknown bag");
  td.edges = std::move(edges);
  return td;
}

std::string format_decomposition(const TreeDecomposition& td, std::size_t vertex_count) {
  std::ostringstream os;
  os << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << vertex_count << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    os << "b " << i + 1;
    for (VertexId v : td.bags[i]) os << ' ' << v + 1;
    os << '\n';
  }
  for (auto [a, b] : td.edges) os << a + 1 << ' ' << b + 1 << '\n';
  return os.str();
}

DpTables dp_powercut(const MultiGraph& g, const TreeDecomposition& td, int s, std::size_t root, bool edge_tables) {
  if (s < 0) throw InputError("size bound must be non-negative");
  const DecompositionCheck check = validate_decomposition(g, td);
  if (!check) throw InputError("invalid tree decomposition: " + check.reason);
  const std::size_t nodes = td.bags.size();
  DpTables out;
  out.exact.assign(static_cast<std::size_t>(s) + 2, std::nullopt);
  if (nodes == 0) return out;
  if (root >= nodes) throw InputError("decomposition root out of range");
  for (const auto& bag : td.bags)
    if (bag.size() > 200) throw InputError("decomposition bag too large for the dynamic program");
  const int cap = s + 2;

  std::vector<std::vector<std::size_t>> tree(nodes);
  for (auto [a, b] : td.edges) {
    tree[a].push_back(b);
    tree[b].push_back(a);
  }
  out.root = root;
  out.parent.assign(nodes, root);
  std::vector<std::size_t> order{root};  // preorder
  std::vector<std::uint8_t> seen(nodes, 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t x = order[i];
    for (std::size_t y : tree[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      out.parent[y] = x;
      order.push_back(y);
    }
  }
  // Reversed BFS order visits children before parents.
  std::vector<std::size_t> post(order.rbegin(), order.rend());
  std::vector<std::size_t> post_index(nodes);
  for (std::size_t i = 0; i < nodes; ++i) post_index[post[i]] = i;

  // Each edge is introduced once, at the earliest processed bag covering it.
  std::vector<std::vector<std::size_t>> nodes_of(g.vertex_capacity());
  for (std::size_t i = 0; i < nodes; ++i)
    for (VertexId v : td.bags[i]) nodes_of[v].push_back(i);
  std::vector<std::vector<EdgeId>> edges_at(nodes);
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.endpoints(e);
    std::size_t best = nodes;
    for (std::size_t i : nodes_of[u])
      if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v) &&
          (best == nodes || post_index[i] < post_index[best]))
        best = i;
    edges_at[best].push_back(e);
  }

  if (edge_tables) out.edge_tables.resize(nodes);
  std::vector<StateMap> lifted(nodes);  // child states re-expressed over the parent bag
  std::vector<std::vector<std::size_t>> children(nodes);
  for (std::size_t x : order)
    if (x != root) children[out.parent[x]].push_back(x);

  for (std::size_t x : post) {
    const auto& bag = td.bags[x];
    StateMap states;
    states.emplace(StateKey{[&] {
                              std::vector<std::uint8_t> l(bag.size());
                              std::iota(l.begin(), l.end(), std::uint8_t{0});
                              return l;
                            }(),
                            0},
                   Cut{});
    for (std::size_t c : children[x]) {
      states = join(states, lifted[c], bag.size(), s, cap);
      StateMap().swap(lifted[c]);
    }
    for (EdgeId e : edges_at[x]) {
      auto [u, v] = g.endpoints(e);
      states = introduce_edge(states, position(bag, u), position(bag, v), e, s);
    }

    if (x == root) {
      for (const auto& [key, cut] : forget_to(bag, states, {}, cap)) {
        if (key.second >= 1 && key.second <= s + 1) {
          auto& slot = out.exact[static_cast<std::size_t>(key.second)];
          if (!slot || cut_less(cut, *slot)) slot = cut;
        }
      }
      break;
    }
    const auto& pbag = td.bags[out.parent[x]];
    const auto sep = intersect(bag, pbag);
    StateMap down = forget_to(bag, states, sep, cap);
    if (edge_tables) {
      PowercutTable table(sep, s);
      for (const auto& [key, cut] : down) {
        const std::size_t blocks = key.first.empty() ? 0 : *std::max_element(key.first.begin(), key.first.end()) + 1;
        const std::size_t j = static_cast<std::size_t>(key.second) + blocks;
        if (j < 1 || j > static_cast<std::size_t>(s) + 1) continue;
        auto& slot = table.at(TerminalPartition{static_cast<int>(j), key.first});
        if (!slot || cut_less(cut, *slot)) slot = cut;
      }
      out.edge_tables[x] = std::move(table);
    }
    lifted[x] = extend_to(sep, down, pbag);
  }
  return out;
}

std::optional<Cut> dp_kway_cut(const MultiGraph& g, int k, int s, const TreeDecomposition& td) {
  if (k < 1) throw InputError("k must be at least 1");
  if (k > s + 1) return std::nullopt;
  const DpTables t = dp_powercut(g, td, s, 0, false);
  std::optional<Cut> best;
  for (std::size_t j = static_cast<std::size_t>(k); j < t.exact.size(); ++j)
    if (t.exact[j] && (!best || cut_less(*t.exact[j], *best))) best = t.exact[j];
  return best;
}

}  // namespace kwaycut
