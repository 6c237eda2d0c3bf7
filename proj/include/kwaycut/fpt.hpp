#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kwaycut/graph.hpp"
#include "kwaycut/powercut.hpp"

namespace kwaycut {

enum class ProfileMode { Paper, Custom };

// Recursion constants: size bound s, terminal capacity t, powercut edge
// bound p, big-component threshold q = 2(p+1), high-degree threshold d and
// kernel size h. Arithmetic saturates at UINT64_MAX.
struct ConstantsProfile {
  int s = 1;
  std::uint64_t t = 2;
  std::uint64_t p = 8;
  std::uint64_t q = 18;
  std::uint64_t d = 18;
  std::uint64_t h = 258;
  ProfileMode mode = ProfileMode::Paper;

  std::string describe() const;
};

struct ProfileOverrides {
  std::optional<std::uint64_t> t, p, q, d, h;
  // Instance-specific bound on the distinct edges of a powercut; custom
  // profiles must have p >= this. Defaults to powercut_edge_bound(s, t).
  std::optional<std::uint64_t> p_bound;
};

// s times the number of keys with j >= 2 over `terminals` terminals: a hard
// upper bound on the distinct edges of any stored table.
std::uint64_t powercut_edge_bound(int s, std::uint64_t terminals);

// Paper mode: t = max(2s, |T0|), p = (s+1)^(t+1), q = 2(p+1), d = q+s-1,
// h = 2(p (s+1)^(t+2) + 1). Custom mode validates the overrides.
// Throws InputError when s < 1 or a custom value is unsound.
ConstantsProfile constants_from(int s, std::size_t t0_size, ProfileMode mode, const ProfileOverrides& overrides = {});

// Custom profile that replaces (s+1)^(t+1) by powercut_edge_bound. Sound for
// every instance, and small enough at s = 1 to reach the layering code on
// graphs with a few dozen vertices.
ConstantsProfile tight_constants(int s, std::size_t t0_size);

struct EngineStats {
  std::uint64_t sparsifications = 0;
  std::uint64_t exhaustive_solves = 0;
  std::uint64_t identifications = 0;
  std::uint64_t separations = 0;
  std::uint64_t layerings = 0;
  std::uint64_t graph_exhausted = 0;
  std::uint64_t kernel_contractions = 0;
  std::uint64_t fallbacks = 0;
  std::uint64_t blocked_layers = 0;
  std::uint64_t max_depth = 0;
};

using ContractionHook =
    std::function<void(const MultiGraph& before, const MultiGraph& after, std::span<const VertexId> terminals,
                        std::string_view step)>;

struct EngineOptions {
  // Solve exhaustively as soon as (m choose <= s) is at most this. Zero keeps
  // only the structural base case (layering covers the whole graph).
  std::uint64_t enum_budget = 10'000'000;
  // Hard limit for any exhaustive solve the engine is forced into.
  std::uint64_t ceiling = kDefaultExhaustiveCeiling;
  int jobs = 1;
  EngineStats* stats = nullptr;
  ContractionHook on_contract;
};

// Vertices with degree >= d, counted with multiplicity, ascending id.
std::vector<VertexId> find_high_degree(const MultiGraph& g, const ConstantsProfile& profile);

// Edge partition into two connected sides sharing the vertices `shared`.
struct Separation {
  std::vector<EdgeId> side_a;
  std::vector<EdgeId> side_b;
  std::vector<VertexId> shared;
  std::size_t a_vertices = 0;
  std::size_t b_vertices = 0;

  bool good(const ConstantsProfile& profile) const;
};

// Side A is the subgraph induced by `source_side`, side B every other edge.
Separation separation_from_side(const MultiGraph& g, std::span<const VertexId> source_side);

struct Identification {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
};

std::variant<Identification, Separation> handle_two_high_degree(const MultiGraph& g, std::span<const VertexId> terminals,
                                                                VertexId u, VertexId v,
                                                                const ConstantsProfile& profile);

struct LayerComponent {
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeId> edges;       // sorted
  bool big = false;
  bool has_apex = false;
};

struct Layer {
  std::vector<EdgeId> edges;  // sorted
  std::vector<LayerComponent> components;  // ordered by smallest vertex
};

// Kernel H_0 (with an apex: H_0 plus its apex edges) and layers H_1..H_p.
struct Layering {
  VertexId v0 = kNoVertex;
  std::optional<VertexId> apex;
  std::vector<EdgeId> kernel;
  std::vector<VertexId> kernel_vertices;  // excludes the apex
  std::vector<Layer> layers;
  // depth[v]: index of the first of H_0..H_p containing v, -1 if none.
  std::vector<int> depth;

  // |V(H_0 u ... u H_i)| excluding the apex.
  std::size_t vertices_upto(std::size_t i) const;
};

struct GraphExhausted {};

std::variant<Layering, GraphExhausted> build_layering(const MultiGraph& g, std::span<const VertexId> terminals,
                                                      const ConstantsProfile& profile,
                                                      std::optional<VertexId> apex = std::nullopt);

struct PrunedLayer {
  std::vector<LayerComponent> components;  // big components, ordered by smallest vertex
  std::vector<VertexId> vertices;          // their union (includes the apex when present)
};

// Big components of layer i (1-based). Verifies that they separate the
// kernel from everything outside H_0..H_i and that every non-apex component
// has at least q vertices; throws InternalError otherwise.
PrunedLayer prune_layer(const MultiGraph& g, const Layering& layering, std::size_t i,
                        const ConstantsProfile& profile);

struct ConsecutiveCheck {
  std::optional<Separation> separation;
  // A cut of at most s edges exists between consecutive components but the
  // resulting separation is not good; the layer cannot be collapsed.
  bool blocked = false;
};

ConsecutiveCheck consecutive_connectivity_check(const MultiGraph& g, const PrunedLayer& pruned,
                                                const ConstantsProfile& profile,
                                                std::optional<VertexId> apex = std::nullopt);

// Identifies the pruned layer into one vertex, takes the block spanned by
// H_0..H_i and computes its exhaustive powercut with terminals v0 plus the
// terminals inside the block. Cut edge ids are those of g.
PowercutTable collapse_and_local_powercut(const MultiGraph& g, std::span<const VertexId> terminals,
                                          const Layering& layering, const PrunedLayer& pruned, std::size_t i,
                                          int s, std::uint64_t ceiling = kDefaultExhaustiveCeiling);

// Kernel edges not used by any of the tables.
std::vector<EdgeId> contractible_kernel_edges(std::span<const PowercutTable> tables, std::span<const EdgeId> kernel);

// Recursively solves the side with fewer terminals and contracts its edges
// that no cut of the returned table uses. Returns the number of vertices removed.
std::size_t recurse_good_separation(MultiGraph& g, std::span<const VertexId> terminals, const Separation& sep,
                                    const ConstantsProfile& profile, const EngineOptions& options);

// Powercut of (g, terminals, s). Throws InputError on a disconnected graph,
// duplicate terminals or more than t terminals.
PowercutTable fpt_powercut(const MultiGraph& g, std::span<const VertexId> terminals, const ConstantsProfile& profile,
                           const EngineOptions& options = {});

enum class Outcome { Found, Infeasible, Pigeonhole };

struct KwayResult {
  Outcome outcome = Outcome::Infeasible;
  std::optional<Cut> cut;
};

// Minimum k-way cut of at most s edges of a connected graph via the FPT
// engine with terminals = {}. The cut is re-verified before it is returned.
KwayResult kway_cut(const MultiGraph& g, int k, const ConstantsProfile& profile, const EngineOptions& options = {});
KwayResult kway_cut(const MultiGraph& g, int k, int s, const EngineOptions& options = {});

}  // namespace kwaycut
