#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kwaycut/fpt.hpp"
#include "kwaycut/planar.hpp"
#include "kwaycut/treewidth.hpp"

namespace kwaycut {

enum class Solver { Oracle, Fpt, Dp, Planar };

std::string_view solver_name(Solver s);

struct ProfileChoice {
  enum class Kind { Paper, Tight, Custom } kind = Kind::Paper;
  ProfileOverrides overrides;  // Custom only
};

ConstantsProfile make_profile(const ProfileChoice& choice, int s, std::size_t terminals);

struct SolveOptions {
  Solver solver = Solver::Fpt;
  int k = 2;
  // Omitted: the greedy upper bound (5(k-1) for simple graphs on the planar solver).
  std::optional<int> s;
  ProfileChoice profile;
  std::uint64_t enum_budget = 10'000'000;
  int jobs = 1;
  std::optional<TreeDecomposition> decomposition;  // Dp on a connected graph only
  const RotationSystem* embedding = nullptr;       // required by Planar
};

struct SolveResult {
  Outcome outcome = Outcome::Infeasible;
  std::optional<Cut> cut;
  int s = 0;
  std::string solver;
  std::string profile;
  bool verified = false;
  std::uint64_t micros = 0;
  EngineStats stats;
  long max_class_width = -1;  // planar only
};

// Minimum k-way cut of at most s edges. Disconnected graphs are solved per
// component and combined by a knapsack over component counts. Every
// returned cut has been checked with verify_cut.
SolveResult solve_kway(const MultiGraph& g, const SolveOptions& options);

// Smallest cut of at most s edges separating every listed pair; Oracle and
// Fpt solvers only. s defaults to the cost of cutting all edges at one end
// of every pair.
SolveResult solve_pair_cut(const MultiGraph& g, std::span<const std::pair<VertexId, VertexId>> pairs,
                           const SolveOptions& options);

// For a connected graph: best cut leaving at least j components, for
// j = 1..min(s+1, k); index 0 unused.
std::vector<std::optional<Cut>> component_minima(const MultiGraph& g, int k, int s, const SolveOptions& options,
                                                 SolveResult& report);

// Combines per-component minima (each indexed like component_minima) into
// the cheapest choice with at least k components in total and at most s
// edges.
std::optional<Cut> combine_components(std::span<const std::vector<std::optional<Cut>>> minima, int k, int s);

}  // namespace kwaycut
