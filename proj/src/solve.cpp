#include "kwaycut/solve.hpp"

#include <algorithm>
#include <chrono>

#include "kwaycut/error.hpp"

namespace kwaycut {
namespace {

EngineOptions engine_options(const SolveOptions& o, EngineStats* stats) {
  EngineOptions e;
  e.enum_budget = o.enum_budget;
  e.jobs = o.jobs;
  e.stats = stats;
  return e;
}

Cut merge_cuts(const Cut& a, const Cut& b) {
  Cut out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Restriction of a rotation system to an extracted subgraph of a graph
// without identifications.
RotationSystem restrict_rotation(const RotationSystem& rot, const Subgraph& sub) {
  RotationSystem out;
  out.order.resize(sub.vertex_origin.size());
  for (VertexId lv = 0; lv < sub.vertex_origin.size(); ++lv) {
    for (const EdgeEnd& end : rot.order[sub.vertex_origin[lv]]) {
      auto it = std::lower_bound(sub.edge_origin.begin(), sub.edge_origin.end(), end.edge);
      out.order[lv].push_back(EdgeEnd{static_cast<EdgeId>(it - sub.edge_origin.begin()), end.end});
    }
  }
  return out;
}

std::optional<Cut> connected_kway(const MultiGraph& g, int k, int s, const SolveOptions& o, SolveResult& report) {
  switch (o.solver) {
    case Solver::Oracle:
      return kway_from_table(exhaustive_powercut(g, {}, s), k);
    case Solver::Fpt: {
      const ConstantsProfile profile = make_profile(o.profile, s, 0);
      report.profile = profile.describe();
      return kway_cut(g, k, profile, engine_options(o, &report.stats)).cut;
    }
    case Solver::Dp: {
      const TreeDecomposition td = o.decomposition ? *o.decomposition : heuristic_tree_decomposition(g);
      return dp_kway_cut(g, k, s, td);
    }
    case Solver::Planar: {
      if (!o.embedding) throw InputError("the planar solver needs an embedding");
      PlanarReport rep = planar_kway_cut(g, *o.embedding, k, s);
      for (long w : rep.class_widths) report.max_class_width = std::max(report.max_class_width, w);
      return rep.cut;
    }
  }
  throw InternalError("unknown solver");
}

std::uint64_t micros_since(std::chrono::steady_clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count());
}

}  // namespace

std::string_view solver_name(Solver s) {
  switch (s) {
    case Solver::Oracle: return "oracle";
    case Solver::Fpt: return "fpt";
    case Solver::Dp: return "dp";
    case Solver::Planar: return "planar";
  }
  return "unknown";
}

ConstantsProfile make_profile(const ProfileChoice& choice, int s, std::size_t terminals) {
  switch (choice.kind) {
    case ProfileChoice::Kind::Paper: return constants_from(s, terminals, ProfileMode::Paper);
    case ProfileChoice::Kind::Tight: return tight_constants(s, terminals);
    case ProfileChoice::Kind::Custom: return constants_from(s, terminals, ProfileMode::Custom, choice.overrides);
  }
  throw InternalError("unknown profile kind");
}

std::vector<std::optional<Cut>> component_minima(const MultiGraph& g, int k, int s, const SolveOptions& o,
                                                 SolveResult& report) {
  const int jmax = std::min(s + 1, k);
  std::vector<std::optional<Cut>> exact(static_cast<std::size_t>(jmax) + 1);
  if (jmax < 1) return exact;
  exact[1] = Cut{};
  if (jmax == 1) return exact;
  auto from_table = [&](const PowercutTable& t) {
    for (int j = 2; j <= jmax; ++j) exact[static_cast<std::size_t>(j)] = t.at(TerminalPartition{j, {}});
  };
  switch (o.solver) {
    case Solver::Oracle:
      from_table(exhaustive_powercut(g, {}, s));
      break;
    case Solver::Fpt: {
      const ConstantsProfile profile = make_profile(o.profile, s, 0);
      report.profile = profile.describe();
      from_table(fpt_powercut(g, {}, profile, engine_options(o, &report.stats)));
      break;
    }
    case Solver::Dp: {
      const DpTables t = dp_powercut(g, heuristic_tree_decomposition(g), s, 0, false);
      for (int j = 2; j <= jmax; ++j) exact[static_cast<std::size_t>(j)] = t.exact[static_cast<std::size_t>(j)];
      break;
    }
    case Solver::Planar:
      for (int j = 2; j <= jmax; ++j) exact[static_cast<std::size_t>(j)] = connected_kway(g, j, s, o, report);
      break;
  }
  // At least j components: the best over every j' >= j.
  for (int j = jmax - 1; j >= 1; --j) {
    auto& here = exact[static_cast<std::size_t>(j)];
    const auto& next = exact[static_cast<std::size_t>(j) + 1];
    if (next && (!here || cut_less(*next, *here))) here = next;
  }
  return exact;
}

std::optional<Cut> combine_components(std::span<const std::vector<std::optional<Cut>>> minima, int k, int s) {
  const auto cap = static_cast<std::size_t>(std::max(k, 0));
  std::vector<std::optional<Cut>> best(cap + 1);
  best[0] = Cut{};
  for (const auto& m : minima) {
    std::vector<std::optional<Cut>> next(cap + 1);
    for (std::size_t t = 0; t <= cap; ++t) {
      if (!best[t]) continue;
      for (std::size_t j = 1; j < m.size(); ++j) {
        if (!m[j]) continue;
        if (static_cast<long long>(best[t]->size() + m[j]->size()) > s) continue;
        Cut c = merge_cuts(*best[t], *m[j]);
        auto& slot = next[std::min(cap, t + j)];
        if (!slot || cut_less(c, *slot)) slot = std::move(c);
      }
    }
    best = std::move(next);
  }
  return best[cap];
}

SolveResult solve_kway(const MultiGraph& g, const SolveOptions& o) {
  if (o.k < 1) throw InputError("k must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  SolveResult res;
  res.solver = std::string(solver_name(o.solver));
  const int k = o.k;

  if (o.s) {
    if (*o.s < 0) throw InputError("size bound s must be non-negative");
    res.s = *o.s;
  } else if (o.solver == Solver::Planar && is_simple(g)) {
    res.s = 5 * (k - 1);
  } else if (auto greedy = greedy_upper_bound(g, k)) {
    res.s = static_cast<int>(greedy->bound);
  } else {
    // Even removing every edge leaves fewer than k components.
    res.s = static_cast<int>(g.edge_count());
    res.outcome = Outcome::Pigeonhole;
    res.micros = micros_since(start);
    return res;
  }
  const int s = res.s;

  const ComponentLabeling comps = components(g);
  const auto c = static_cast<long long>(comps.count);
  if (k <= c) {
    res.cut = Cut{};
  } else if (k > c + s) {
    res.outcome = Outcome::Pigeonhole;
  } else if (c == 1) {
    res.cut = connected_kway(g, k, s, o, res);
  } else {
    if (o.solver == Solver::Planar && !o.embedding) throw InputError("the planar solver needs an embedding");
    std::vector<std::vector<EdgeId>> edges_of(comps.count);
    std::vector<std::vector<VertexId>> verts_of(comps.count);
    for (VertexId v : g.vertices()) verts_of[comps.label[v]].push_back(v);
    for (EdgeId e : g.edges()) edges_of[comps.label[g.endpoints(e).first]].push_back(e);
    std::vector<std::vector<std::optional<Cut>>> minima;
    for (std::size_t i = 0; i < comps.count; ++i) {
      Subgraph sub = extract(g, edges_of[i], verts_of[i]);
      SolveOptions local = o;
      local.decomposition.reset();
      RotationSystem rot;
      if (o.solver == Solver::Planar) {
        rot = restrict_rotation(*o.embedding, sub);
        local.embedding = &rot;
      }
      auto m = component_minima(sub.graph, k, s, local, res);
      for (auto& cut : m)
        if (cut) cut = sub.to_parent(*cut);
      minima.push_back(std::move(m));
    }
    res.cut = combine_components(minima, k, s);
  }

  if (res.cut) {
    const CutCheck check = verify_cut(g, *res.cut, k, s);
    if (!check) throw InternalError(res.solver + " produced an invalid cut: " + check.reason);
    res.verified = true;
    res.outcome = Outcome::Found;
  } else if (res.outcome != Outcome::Pigeonhole) {
    res.outcome = Outcome::Infeasible;
  }
  res.micros = micros_since(start);
  return res;
}

SolveResult solve_pair_cut(const MultiGraph& g, std::span<const std::pair<VertexId, VertexId>> pairs,
                           const SolveOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult res;
  res.solver = std::string(solver_name(o.solver));
  if (pairs.empty()) throw InputError("paircut needs at least one pair");
  std::vector<VertexId> terms;
  std::vector<std::pair<VertexId, VertexId>> canon;
  std::size_t fallback = 0;
  for (auto [a, b] : pairs) {
    if (!g.has_vertex(a) || !g.has_vertex(b)) throw InputError("pair names an unknown vertex");
    const VertexId ra = g.find(a), rb = g.find(b);
    if (ra == rb) throw InputError("unseparable pair");
    canon.emplace_back(ra, rb);
    for (VertexId r : {ra, rb})
      if (std::find(terms.begin(), terms.end(), r) == terms.end()) terms.push_back(r);
    fallback += std::min(g.degree(ra), g.degree(rb));
  }
  // Cutting every edge at one end of each pair always works.
  res.s = o.s ? *o.s : static_cast<int>(std::min(fallback, g.edge_count()));
  if (res.s < 0) throw InputError("size bound s must be non-negative");

  switch (o.solver) {
    case Solver::Oracle:
      res.cut = pair_cut(g, canon, res.s);
      break;
    case Solver::Fpt: {
      if (res.s < 1) {
        res.cut = pair_cut(g, canon, res.s);
        break;
      }
      const ConstantsProfile profile = make_profile(o.profile, res.s, terms.size());
      res.profile = profile.describe();
      res.cut = pair_cut_from_table(fpt_powercut(g, terms, profile, engine_options(o, &res.stats)), canon);
      break;
    }
    default:
      throw InputError("paircut supports the oracle and fpt solvers");
  }

  if (res.cut) {
    const CutCheck size_check = verify_cut(g, *res.cut, 1, res.s);
    const ComponentLabeling labels = components(g, *res.cut);
    const bool split = std::all_of(canon.begin(), canon.end(),
                                   [&](const auto& p) { return labels.label[p.first] != labels.label[p.second]; });
    if (!size_check || !split) throw InternalError("pair cut failed verification");
    res.verified = true;
    res.outcome = Outcome::Found;
  } else {
    res.outcome = Outcome::Infeasible;
  }
  res.micros = micros_since(start);
  return res;
}

}  // namespace kwaycut
