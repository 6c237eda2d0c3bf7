#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: plain edge lists, brute-force enumeration, textbook
// algorithms.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "kwaycut/graph.hpp"

namespace testkit {

struct EdgeList {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline kwaycut::MultiGraph to_graph(const EdgeList& el) {
  kwaycut::MultiGraph g(static_cast<std::size_t>(el.n));
  for (auto [u, v] : el.edges) g.add_edge(static_cast<kwaycut::VertexId>(u), static_cast<kwaycut::VertexId>(v));
  return g;
}

inline EdgeList from_graph(const kwaycut::MultiGraph& g) {
  EdgeList el;
  el.n = static_cast<int>(g.vertex_capacity());
  for (kwaycut::EdgeId e = 0; e < g.edge_capacity(); ++e) {
    auto [u, v] = g.original_endpoints(e);
    el.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return el;
}

class Dsu {
 public:
  explicit Dsu(int n) : p_(static_cast<std::size_t>(n)) { std::iota(p_.begin(), p_.end(), 0); }
  int find(int x) {
    while (p_[x] != x) x = p_[x] = p_[p_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p_[a] = b;
    return true;
  }

 private:
  std::vector<int> p_;
};

// Component id per vertex (0-based, by first occurrence) with `removed` edges
// deleted; removed is a bitmask over edge ids.
inline std::vector<int> component_ids(const EdgeList& el, const std::vector<char>& removed, int* count = nullptr) {
  Dsu d(el.n);
  for (std::size_t e = 0; e < el.edges.size(); ++e)
    if (!removed[e]) d.unite(el.edges[e].first, el.edges[e].second);
  std::vector<int> id(static_cast<std::size_t>(el.n), -1);
  std::map<int, int> seen;
  for (int v = 0; v < el.n; ++v) {
    auto [it, fresh] = seen.emplace(d.find(v), static_cast<int>(seen.size()));
    id[v] = it->second;
  }
  if (count) *count = static_cast<int>(seen.size());
  return id;
}

inline int count_components(const EdgeList& el) {
  int c = 0;
  component_ids(el, std::vector<char>(el.edges.size(), 0), &c);
  return c;
}

// Calls fn(removed-mask) for every edge subset of exactly `size` edges, in
// lexicographic order; stops early when fn returns true. Returns whether it
// stopped.
inline bool for_each_subset_of_size(std::size_t m, int size, const std::function<bool(const std::vector<char>&)>& fn) {
  if (size < 0 || static_cast<std::size_t>(size) > m) return false;
  std::vector<char> mask(m, 0);
  std::vector<std::size_t> idx(static_cast<std::size_t>(size));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::fill(mask.begin(), mask.end(), 0);
    for (auto i : idx) mask[i] = 1;
    if (fn(mask)) return true;
    int pos = size - 1;
    while (pos >= 0 && idx[pos] == m - static_cast<std::size_t>(size - pos)) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int q = pos + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
  }
}

// Calls fn(removed-mask, size) for every edge subset of size 0..s.
inline void for_each_subset(std::size_t m, int s, const std::function<void(const std::vector<char>&, int)>& fn) {
  for (int size = 0; size <= std::min<int>(s, static_cast<int>(m)); ++size)
    for_each_subset_of_size(m, size, [&](const std::vector<char>& mask) {
      fn(mask, size);
      return false;
    });
}

// Smallest number of edges (at most s) whose removal leaves at least k components.
inline std::optional<int> brute_kway(const EdgeList& el, int k, int s) {
  for (int size = 0; size <= std::min<int>(s, static_cast<int>(el.edges.size())); ++size) {
    const bool hit = for_each_subset_of_size(el.edges.size(), size, [&](const std::vector<char>& mask) {
      int c = 0;
      component_ids(el, mask, &c);
      return c >= k;
    });
    if (hit) return size;
  }
  return std::nullopt;
}

// Key: exactly j components, terminal i in the block labelled labels[i]
// (first-occurrence labels). Value: smallest cut size, at most s.
using TableSizes = std::map<std::pair<int, std::vector<int>>, int>;

inline TableSizes brute_table(const EdgeList& el, const std::vector<int>& terminals, int s) {
  TableSizes out;
  for_each_subset(el.edges.size(), s, [&](const std::vector<char>& mask, int size) {
    int c = 0;
    const auto id = component_ids(el, mask, &c);
    std::vector<int> labels;
    std::map<int, int> relabel;
    for (int t : terminals) {
      auto [it, fresh] = relabel.emplace(id[t], static_cast<int>(relabel.size()));
      labels.push_back(it->second);
    }
    auto key = std::make_pair(c, labels);
    auto it = out.find(key);
    if (it == out.end() || size < it->second) out[key] = size;
  });
  return out;
}

// Smallest cut (at most s) separating every listed pair.
inline std::optional<int> brute_pair_cut(const EdgeList& el, const std::vector<std::pair<int, int>>& pairs, int s) {
  for (int size = 0; size <= std::min<int>(s, static_cast<int>(el.edges.size())); ++size) {
    const bool hit = for_each_subset_of_size(el.edges.size(), size, [&](const std::vector<char>& mask) {
      const auto id = component_ids(el, mask);
      for (auto [a, b] : pairs)
        if (id[a] == id[b]) return false;
      return true;
    });
    if (hit) return size;
  }
  return std::nullopt;
}

// Bridges of a multigraph (parallel edges are never bridges), iterative DFS.
inline std::vector<int> bridges(const EdgeList& el) {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(el.n));
  for (std::size_t e = 0; e < el.edges.size(); ++e) {
    adj[el.edges[e].first].emplace_back(el.edges[e].second, static_cast<int>(e));
    adj[el.edges[e].second].emplace_back(el.edges[e].first, static_cast<int>(e));
  }
  std::vector<int> tin(static_cast<std::size_t>(el.n), -1), low(static_cast<std::size_t>(el.n), 0), out;
  int timer = 0;
  for (int root = 0; root < el.n; ++root) {
    if (tin[root] != -1) continue;
    // (vertex, edge used to enter, next adjacency index)
    std::vector<std::tuple<int, int, std::size_t>> stack{{root, -1, 0}};
    tin[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& [v, via, i] = stack.back();
      if (i < adj[v].size()) {
        auto [w, e] = adj[v][i++];
        if (e == via) continue;
        if (tin[w] == -1) {
          tin[w] = low[w] = timer++;
          stack.emplace_back(w, e, 0);
        } else {
          low[v] = std::min(low[v], tin[w]);
        }
      } else {
        const int child = v, edge = via;
        stack.pop_back();
        if (!stack.empty()) {
          const int parent = std::get<0>(stack.back());
          low[parent] = std::min(low[parent], low[child]);
          if (low[child] > tin[parent]) out.push_back(edge);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Maximum number of edge-disjoint s-t paths (unit capacities, undirected),
// Edmonds-Karp.
inline int max_flow(const EdgeList& el, int s, int t) {
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> g(static_cast<std::size_t>(el.n));
  for (auto [u, v] : el.edges) {
    g[u].push_back({v, 1, static_cast<int>(g[v].size())});
    g[v].push_back({u, 1, static_cast<int>(g[u].size()) - 1});
  }
  int flow = 0;
  while (true) {
    std::vector<std::pair<int, int>> prev(static_cast<std::size_t>(el.n), {-1, -1});
    std::queue<int> q;
    q.push(s);
    prev[s] = {s, -1};
    while (!q.empty() && prev[t].first == -1) {
      const int v = q.front();
      q.pop();
      for (int i = 0; i < static_cast<int>(g[v].size()); ++i) {
        const Arc& a = g[v][i];
        if (a.cap > 0 && prev[a.to].first == -1) {
          prev[a.to] = {v, i};
          q.push(a.to);
        }
      }
    }
    if (prev[t].first == -1) return flow;
    for (int v = t; v != s;) {
      auto [u, i] = prev[v];
      Arc& a = g[u][i];
      a.cap -= 1;
      g[v][a.rev].cap += 1;
      v = u;
    }
    ++flow;
  }
}

// All connected simple graphs with 1..max_n vertices and at most max_m
// edges, one per isomorphism class (canonical form by trying every
// permutation).
inline std::vector<EdgeList> connected_catalog(int max_n, int max_m) {
  std::vector<EdgeList> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<int>> slot_image(perms.size(), std::vector<int>(slots.size()));
    for (std::size_t p = 0; p < perms.size(); ++p)
      for (std::size_t i = 0; i < slots.size(); ++i) {
        int a = perms[p][slots[i].first], b = perms[p][slots[i].second];
        if (a > b) std::swap(a, b);
        slot_image[p][i] = static_cast<int>(std::find(slots.begin(), slots.end(), std::make_pair(a, b)) - slots.begin());
      }
    std::set<std::uint32_t> seen;
    const std::uint32_t total = 1u << slots.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      if (std::popcount(mask) > max_m) continue;
      std::uint32_t canon = mask;
      for (const auto& img : slot_image) {
        std::uint32_t image = 0;
        for (std::size_t i = 0; i < slots.size(); ++i)
          if (mask >> i & 1u) image |= 1u << img[i];
        canon = std::min(canon, image);
      }
      if (!seen.insert(canon).second) continue;
      EdgeList el;
      el.n = n;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (canon >> i & 1u) el.edges.push_back(slots[i]);
      if (count_components(el) == 1) out.push_back(std::move(el));
    }
  }
  return out;
}

// Random spanning tree plus extra random edges; parallel edges allowed when
// `multi` is set.
inline EdgeList random_connected(std::mt19937_64& rng, int n, int extra, bool multi) {
  EdgeList el;
  el.n = n;
  std::set<std::pair<int, int>> used;
  auto add = [&](int a, int b) {
    el.edges.emplace_back(a, b);
    used.insert(std::minmax(a, b));
  };
  for (int v = 1; v < n; ++v) add(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  const int max_simple = n * (n - 1) / 2;
  for (int i = 0; i < extra && n >= 2; ++i) {
    if (!multi && static_cast<int>(used.size()) >= max_simple) break;
    while (true) {
      int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
      int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
      if (a == b) continue;
      if (!multi && used.count(std::minmax(a, b))) continue;
      add(a, b);
      break;
    }
  }
  // Shuffle edge ids so the tree edges are not always first.
  std::shuffle(el.edges.begin(), el.edges.end(), rng);
  return el;
}

}  // namespace testkit
