#include "kwaycut/powercut.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "kwaycut/error.hpp"

namespace kwaycut {

bool cut_less(const Cut& a, const Cut& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::size_t TerminalPartition::block_count() const {
  if (labels.empty()) return 0;
  return static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end())) + 1;
}

std::vector<std::uint8_t> canonical_labels(std::span<const std::uint32_t> raw) {
  std::vector<std::uint8_t> out(raw.size());
  std::vector<std::pair<std::uint32_t, std::uint8_t>> seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == raw[i]; });
    if (it == seen.end()) {
      seen.emplace_back(raw[i], static_cast<std::uint8_t>(seen.size()));
      out[i] = seen.back().second;
    } else {
      out[i] = it->second;
    }
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> all_partitions(std::size_t terminals, std::size_t max_blocks) {
  std::vector<std::vector<std::uint8_t>> out;
  if (terminals == 0) {
    out.emplace_back();
    return out;
  }
  if (max_blocks == 0) return out;
  std::vector<std::uint8_t> cur(terminals, 0);
  // Depth-first over restricted growth strings.
  auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
    if (pos == terminals) {
      out.push_back(cur);
      return;
    }
    const std::size_t limit = std::min(used + 1, max_blocks);
    for (std::size_t b = 0; b < limit; ++b) {
      cur[pos] = static_cast<std::uint8_t>(b);
      self(self, pos + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 1, 1);
  return out;
}

PowercutTable::PowercutTable(std::vector<VertexId> terminals, int s, std::uint64_t graph_stamp)
    : terminals_(std::move(terminals)), s_(s), stamp_(graph_stamp) {
  if (s < 0) throw InputError("powercut: negative size bound");
  for (int j = 1; j <= s + 1; ++j)
    for (auto& labels : all_partitions(terminals_.size(), static_cast<std::size_t>(j)))
      entries_.emplace(TerminalPartition{j, std::move(labels)}, std::nullopt);
}

const std::optional<Cut>& PowercutTable::at(const TerminalPartition& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw InputError("powercut: key not present in table");
  return it->second;
}

std::optional<Cut>& PowercutTable::at(const TerminalPartition& key) {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw InputError("powercut: key not present in table");
  return it->second;
}

const std::optional<Cut>& PowercutTable::at(int j, const std::vector<std::vector<VertexId>>& blocks) const {
  std::vector<std::uint32_t> raw(terminals_.size(), std::numeric_limits<std::uint32_t>::max());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (VertexId v : blocks[b]) {
      auto it = std::find(terminals_.begin(), terminals_.end(), v);
      if (it == terminals_.end()) throw InputError("powercut: block names a non-terminal");
      raw[static_cast<std::size_t>(it - terminals_.begin())] = static_cast<std::uint32_t>(b);
    }
  }
  if (std::find(raw.begin(), raw.end(), std::numeric_limits<std::uint32_t>::max()) != raw.end())
    throw InputError("powercut: blocks do not cover the terminals");
  return at(TerminalPartition{j, canonical_labels(raw)});
}

std::vector<std::vector<VertexId>> PowercutTable::blocks(const TerminalPartition& key) const {
  std::vector<std::vector<VertexId>> out(key.block_count());
  for (std::size_t i = 0; i < key.labels.size(); ++i) out[key.labels[i]].push_back(terminals_[i]);
  for (auto& b : out) std::sort(b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> PowercutTable::distinct_edges() const {
  std::vector<EdgeId> out;
  for (const auto& [key, cut] : entries_)
    if (cut) out.insert(out.end(), cut->begin(), cut->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t PowercutTable::feasible_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second.has_value(); }));
}

void PowercutTable::remap_edges(std::span<const EdgeId> map) {
  for (auto& [key, cut] : entries_) {
    if (!cut) continue;
    for (EdgeId& e : *cut) e = map[e];
    std::sort(cut->begin(), cut->end());
  }
}

void PowercutTable::rename_terminals(std::vector<VertexId> names) {
  if (names.size() != terminals_.size()) throw InternalError("rename_terminals: size mismatch");
  terminals_ = std::move(names);
}

std::uint64_t enumeration_count(std::size_t edges, int s) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(m, r)
  for (int r = 0; r <= s; ++r) {
    if (r > 0) {
      if (static_cast<std::size_t>(r) > edges) break;
      const std::uint64_t num = edges - static_cast<std::size_t>(r) + 1;
      if (term > kMax / num) return kMax;
      term = term * num / static_cast<std::uint64_t>(r);
    }
    if (total > kMax - term) return kMax;
    total += term;
  }
  return total;
}

PowercutTable exhaustive_powercut(const MultiGraph& g, std::span<const VertexId> terminals, int s,
                                  std::uint64_t ceiling) {
  if (s < 0) throw InputError("powercut: negative size bound");
  std::vector<VertexId> canon;
  for (VertexId t : terminals) {
    if (!g.has_vertex(t)) throw InputError("unknown terminal " + std::to_string(t));
    const VertexId r = g.find(t);
    if (std::find(canon.begin(), canon.end(), r) != canon.end())
      throw InputError("powercut: duplicate terminal " + std::to_string(t));
    canon.push_back(r);
  }
  if (!is_connected(g)) throw InputError("powercut: graph is disconnected");

  const std::vector<EdgeId> edges = g.edges();
  if (enumeration_count(edges.size(), s) > ceiling)
    throw InputError("profile/instance mismatch: exhaustive search exceeds the configured ceiling");

  PowercutTable table(canon, s, g.stamp());

  const std::vector<VertexId> verts = g.vertices();
  std::vector<VertexId> local(g.vertex_capacity(), kNoVertex);
  for (VertexId i = 0; i < verts.size(); ++i) local[verts[i]] = i;
  std::vector<VertexId> eu(edges.size()), ev(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = g.endpoints(edges[i]);
    eu[i] = local[u];
    ev[i] = local[v];
  }
  std::vector<VertexId> tloc;
  for (VertexId t : canon) tloc.push_back(local[t]);

  const std::size_t n = verts.size();
  const std::size_t m = edges.size();
  std::vector<VertexId> parent(n);
  std::vector<std::uint8_t> removed(m, 0);
  std::vector<std::uint32_t> raw(tloc.size());
  auto root = [&](VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  std::size_t unfilled = table.entries().size();
  auto evaluate = [&](std::span<const std::size_t> chosen) {
    std::iota(parent.begin(), parent.end(), VertexId{0});
    std::size_t comps = n;
    for (std::size_t i = 0; i < m; ++i) {
      if (removed[i]) continue;
      const VertexId a = root(eu[i]);
      const VertexId b = root(ev[i]);
      if (a != b) {
        parent[b] = a;
        --comps;
      }
    }
    if (comps > static_cast<std::size_t>(s) + 1) return;
    for (std::size_t i = 0; i < tloc.size(); ++i) raw[i] = root(tloc[i]);
    TerminalPartition key{static_cast<int>(comps), canonical_labels(raw)};
    auto it = table.entries().find(key);
    if (it == table.entries().end() || it->second) return;
    Cut cut;
    for (std::size_t idx : chosen) cut.push_back(edges[idx]);
    it->second = std::move(cut);
    --unfilled;
  };

  std::vector<std::size_t> idx;
  for (int r = 0; r <= s && static_cast<std::size_t>(r) <= m && unfilled > 0; ++r) {
    idx.resize(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      for (std::size_t i : idx) removed[i] = 1;
      evaluate(idx);
      for (std::size_t i : idx) removed[i] = 0;
      if (unfilled == 0) break;
      // Next combination in lexicographic order.
      std::size_t pos = idx.size();
      while (pos > 0 && idx[pos - 1] == m - idx.size() + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t q = pos; q < idx.size(); ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  return table;
}

std::optional<Cut> kway_from_table(const PowercutTable& table, int k) {
  if (!table.terminals().empty()) throw InputError("kway_from_table: table must have no terminals");
  if (k < 1) throw InputError("kway_from_table: k must be >= 1");
  if (k > table.bound() + 1) throw InputError("infeasible by pigeonhole");
  return table.at(TerminalPartition{k, {}});
}

std::optional<Cut> pair_cut_from_table(const PowercutTable& table,
                                       std::span<const std::pair<VertexId, VertexId>> pairs) {
  const auto& terms = table.terminals();
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (auto [a, b] : pairs) {
    auto ia = std::find(terms.begin(), terms.end(), a);
    auto ib = std::find(terms.begin(), terms.end(), b);
    if (ia == terms.end() || ib == terms.end()) throw InputError("pair endpoint is not a terminal of the table");
    if (ia == ib) throw InputError("unseparable pair");
    pos.emplace_back(ia - terms.begin(), ib - terms.begin());
  }
  std::optional<Cut> best;
  for (const auto& [key, cut] : table.entries()) {
    if (!cut) continue;
    const bool splits_all =
        std::all_of(pos.begin(), pos.end(), [&](const auto& p) { return key.separates(p.first, p.second); });
    if (splits_all && (!best || cut_less(*cut, *best))) best = *cut;
  }
  return best;
}

std::optional<Cut> pair_cut(const MultiGraph& g, std::span<const std::pair<VertexId, VertexId>> pairs, int s,
                            std::uint64_t ceiling) {
  std::vector<VertexId> terms;
  std::vector<std::pair<VertexId, VertexId>> canon;
  for (auto [a, b] : pairs) {
    if (!g.has_vertex(a) || !g.has_vertex(b)) throw InputError("pair names an unknown vertex");
    const VertexId ra = g.find(a);
    const VertexId rb = g.find(b);
    if (ra == rb) throw InputError("unseparable pair");
    canon.emplace_back(ra, rb);
    for (VertexId r : {ra, rb})
      if (std::find(terms.begin(), terms.end(), r) == terms.end()) terms.push_back(r);
  }
  const PowercutTable table = exhaustive_powercut(g, terms, s, ceiling);
  return pair_cut_from_table(table, canon);
}

CutCheck verify_cut(const MultiGraph& g, std::span<const EdgeId> cut, int k, int s) {
  CutCheck out;
  if (static_cast<long long>(cut.size()) > s) {
    out.reason = "cut has " + std::to_string(cut.size()) + " edges, bound is " + std::to_string(s);
    return out;
  }
  std::vector<EdgeId> sorted(cut.begin(), cut.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    out.reason = "cut lists an edge twice";
    return out;
  }
  for (EdgeId e : sorted) {
    if (!g.is_live(e)) {
      out.reason = "edge " + std::to_string(e) + " is not a live edge";
      return out;
    }
  }
  out.components = components(g, sorted).count;
  if (static_cast<long long>(out.components) < k) {
    out.reason = "cut leaves " + std::to_string(out.components) + " components, need " + std::to_string(k);
    return out;
  }
  out.ok = true;
  return out;
}

PowercutTable expand_terminals(const PowercutTable& image_table, std::span<const VertexId> original,
                               std::span<const VertexId> image_of_original) {
  const auto& images = image_table.terminals();
  std::vector<std::size_t> image_index(original.size());
  for (std::size_t i = 0; i < original.size(); ++i) {
    auto it = std::find(images.begin(), images.end(), image_of_original[i]);
    if (it == images.end()) throw InternalError("expand_terminals: image is not a terminal of the table");
    image_index[i] = static_cast<std::size_t>(it - images.begin());
  }
  PowercutTable out(std::vector<VertexId>(original.begin(), original.end()), image_table.bound(),
                    image_table.graph_stamp());
  for (auto& [key, cut] : out.entries()) {
    // Label each image by the block of the original terminals mapping to it.
    std::vector<std::uint32_t> raw(images.size(), std::numeric_limits<std::uint32_t>::max());
    bool consistent = true;
    for (std::size_t i = 0; i < original.size() && consistent; ++i) {
      auto& slot = raw[image_index[i]];
      if (slot == std::numeric_limits<std::uint32_t>::max())
        slot = key.labels[i];
      else if (slot != key.labels[i])
        consistent = false;
    }
    if (!consistent) continue;
    TerminalPartition image_key{key.j, canonical_labels(raw)};
    auto it = image_table.entries().find(image_key);
    if (it != image_table.entries().end()) cut = it->second;
  }
  return out;
}

}  // namespace kwaycut
