#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kwaycut/graph.hpp"

namespace kwaycut {

// Sorted edge ids.
using Cut = std::vector<EdgeId>;

// Size first, then lexicographic on the sorted id sequence.
bool cut_less(const Cut& a, const Cut& b);

// Key of a powercut entry: j components, terminals grouped by a restricted
// growth string over the owning table's terminal list. Blocks not named by
// the labels are the j - block_count() empty ones.
struct TerminalPartition {
  int j = 1;
  std::vector<std::uint8_t> labels;

  std::size_t block_count() const;
  std::size_t empty_blocks() const { return static_cast<std::size_t>(j) - block_count(); }
  bool separates(std::size_t a, std::size_t b) const { return labels[a] != labels[b]; }

  auto operator<=>(const TerminalPartition&) const = default;
  bool operator==(const TerminalPartition&) const = default;
};

// Relabels arbitrary block labels into canonical first-occurrence order.
std::vector<std::uint8_t> canonical_labels(std::span<const std::uint32_t> raw);

// Every restricted growth string of the given length with at most max_blocks blocks.
std::vector<std::vector<std::uint8_t>> all_partitions(std::size_t terminals, std::size_t max_blocks);

class PowercutTable {
 public:
  using Entries = std::map<TerminalPartition, std::optional<Cut>>;

  PowercutTable() = default;
  // Creates every key (j <= s+1) with no cut stored.
  PowercutTable(std::vector<VertexId> terminals, int s, std::uint64_t graph_stamp = 0);

  const std::vector<VertexId>& terminals() const { return terminals_; }
  int bound() const { return s_; }
  std::uint64_t graph_stamp() const { return stamp_; }
  void set_graph_stamp(std::uint64_t st) { stamp_ = st; }

  const Entries& entries() const { return entries_; }
  Entries& entries() { return entries_; }

  const std::optional<Cut>& at(const TerminalPartition& key) const;
  std::optional<Cut>& at(const TerminalPartition& key);
  // Lookup by explicit vertex blocks (each a subset of the terminals).
  const std::optional<Cut>& at(int j, const std::vector<std::vector<VertexId>>& blocks) const;

  // Sorted blocks ordered by smallest vertex, as in InducedPartition.
  std::vector<std::vector<VertexId>> blocks(const TerminalPartition& key) const;
  std::vector<EdgeId> distinct_edges() const;
  std::size_t distinct_edge_count() const { return distinct_edges().size(); }
  std::size_t feasible_count() const;

  // Replaces every edge id e by map[e].
  void remap_edges(std::span<const EdgeId> map);
  // Renames terminals position by position (e.g. local ids to parent ids).
  void rename_terminals(std::vector<VertexId> names);

 private:
  std::vector<VertexId> terminals_;
  int s_ = 0;
  std::uint64_t stamp_ = 0;
  Entries entries_;
};

// (m choose <= s), saturating at UINT64_MAX.
std::uint64_t enumeration_count(std::size_t edges, int s);

inline constexpr std::uint64_t kDefaultExhaustiveCeiling = 4'000'000'000ULL;

// Minimum-cardinality, lexicographically first cut for every key, found by
// enumerating edge subsets by increasing size. Terminals must be distinct
// vertices; they are stored in canonical form in the given order.
// Throws InputError on a disconnected graph and when the enumeration count
// exceeds `ceiling` ("profile/instance mismatch").
PowercutTable exhaustive_powercut(const MultiGraph& g, std::span<const VertexId> terminals, int s,
                                  std::uint64_t ceiling = kDefaultExhaustiveCeiling);

// Table over T = {} -> cut with exactly k components. Throws InputError
// when k > s+1 (a cut of s edges leaves at most s+1 components).
std::optional<Cut> kway_from_table(const PowercutTable& table, int k);

// Smallest stored cut over the keys that split every pair.
std::optional<Cut> pair_cut_from_table(const PowercutTable& table,
                                       std::span<const std::pair<VertexId, VertexId>> pairs);

std::optional<Cut> pair_cut(const MultiGraph& g, std::span<const std::pair<VertexId, VertexId>> pairs, int s,
                            std::uint64_t ceiling = kDefaultExhaustiveCeiling);

struct CutCheck {
  bool ok = false;
  std::size_t components = 0;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// True iff |cut| <= s, every id is a distinct live edge, and removing the
// cut leaves at least k components.
CutCheck verify_cut(const MultiGraph& g, std::span<const EdgeId> cut, int k, int s);

// Re-expresses a table computed on quotient images of `original` terminals:
// keys that split two terminals with the same image become infeasible.
PowercutTable expand_terminals(const PowercutTable& image_table, std::span<const VertexId> original,
                               std::span<const VertexId> image_of_original);

}  // namespace kwaycut
