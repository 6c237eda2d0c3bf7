#include "kwaycut/fpt.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <sstream>

#include "kwaycut/connectivity.hpp"
#include "kwaycut/error.hpp"

namespace kwaycut {
namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSat / b ? kSat : a * b;
}
std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e && r != kSat; ++i) r = sat_mul(r, base);
  return r;
}

// Stirling numbers of the second kind S(n, b) for b = 0..n, saturating.
std::vector<std::uint64_t> stirling_row(std::uint64_t n) {
  std::vector<std::uint64_t> row{1};
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 0);
    for (std::uint64_t b = 1; b <= i; ++b) {
      const std::uint64_t keep = b < row.size() ? sat_mul(b, row[b]) : 0;
      next[b] = sat_add(keep, row[b - 1]);
    }
    row = std::move(next);
  }
  return row;
}

thread_local std::uint64_t engine_depth = 0;

struct DepthGuard {
  DepthGuard() { ++engine_depth; }
  ~DepthGuard() { --engine_depth; }
};

void notify(const EngineOptions& options, const MultiGraph* before, const MultiGraph& after,
            std::span<const VertexId> terminals, std::string_view step) {
  if (options.on_contract && before) options.on_contract(*before, after, terminals, step);
}

std::vector<VertexId> side_vertices(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<VertexId> out;
  out.reserve(2 * edges.size());
  for (EdgeId e : edges) {
    auto [u, v] = g.endpoints(e);
    out.push_back(u);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t count_in(std::span<const VertexId> sorted, std::span<const VertexId> items) {
  std::size_t c = 0;
  for (VertexId v : items)
    if (std::binary_search(sorted.begin(), sorted.end(), v)) ++c;
  return c;
}

}  // namespace

std::string ConstantsProfile::describe() const {
  std::ostringstream os;
  os << (mode == ProfileMode::Paper ? "paper" : "custom") << " s=" << s << " t=" << t << " p=" << p << " q=" << q
     << " d=" << d << " h=" << h;
  return os.str();
}

std::uint64_t powercut_edge_bound(int s, std::uint64_t terminals) {
  if (s < 1) return 0;
  const auto row = stirling_row(terminals);
  std::uint64_t keys = 0;
  for (std::uint64_t j = 2; j <= static_cast<std::uint64_t>(s) + 1; ++j)
    for (std::uint64_t b = 0; b <= std::min<std::uint64_t>(j, terminals); ++b) keys = sat_add(keys, row[b]);
  return sat_mul(static_cast<std::uint64_t>(s), keys);
}

ConstantsProfile constants_from(int s, std::size_t t0_size, ProfileMode mode, const ProfileOverrides& ov) {
  if (s < 1) throw InputError("size bound s must be at least 1");
  const std::uint64_t su = static_cast<std::uint64_t>(s);
  const std::uint64_t t_min = std::max<std::uint64_t>(2 * su, t0_size);
  ConstantsProfile c;
  c.s = s;
  c.mode = mode;
  if (mode == ProfileMode::Paper) {
    c.t = t_min;
    c.p = sat_pow(su + 1, c.t + 1);
    c.q = sat_mul(2, sat_add(c.p, 1));
    c.d = sat_add(c.q, su - 1);
    c.h = sat_mul(2, sat_add(sat_mul(c.p, sat_pow(su + 1, c.t + 2)), 1));
    return c;
  }

  c.t = ov.t.value_or(t_min);
  if (c.t < t_min) throw InputError("custom profile: t must be at least max(2s, |T0|)");
  const std::uint64_t p_bound = ov.p_bound.value_or(powercut_edge_bound(s, c.t));
  c.p = ov.p.value_or(p_bound);
  if (c.p < p_bound) throw InputError("custom profile: p is below the powercut edge bound " + std::to_string(p_bound));
  c.q = ov.q.value_or(sat_mul(2, sat_add(c.p, 1)));
  if (c.q != sat_mul(2, sat_add(c.p, 1))) throw InputError("custom profile: q must equal 2(p+1)");
  c.d = ov.d.value_or(sat_add(c.q, su - 1));
  if (c.d < sat_add(c.q, su - 1)) throw InputError("custom profile: d must be at least q+s-1");
  c.h = ov.h.value_or(sat_mul(2, sat_add(sat_mul(c.p, powercut_edge_bound(s, c.t + 1)), 1)));
  if (c.h < c.d) throw InputError("custom profile: h must be at least d");
  return c;
}

ConstantsProfile tight_constants(int s, std::size_t t0_size) {
  return constants_from(s, t0_size, ProfileMode::Custom);
}

std::vector<VertexId> find_high_degree(const MultiGraph& g, const ConstantsProfile& profile) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices())
    if (g.degree(v) >= profile.d) out.push_back(v);
  return out;
}

bool Separation::good(const ConstantsProfile& profile) const {
  return shared.size() <= static_cast<std::size_t>(profile.s) && a_vertices >= profile.q && b_vertices >= profile.q;
}

Separation separation_from_side(const MultiGraph& g, std::span<const VertexId> source_side) {
  std::vector<std::uint8_t> in(g.vertex_capacity(), 0);
  for (VertexId v : source_side) in[g.find(v)] = 1;
  Separation sep;
  std::vector<VertexId> shared, b_verts;
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.endpoints(e);
    if (in[u] && in[v]) {
      sep.side_a.push_back(e);
      continue;
    }
    sep.side_b.push_back(e);
    for (VertexId x : {u, v}) {
      if (in[x])
        shared.push_back(x);
      else
        b_verts.push_back(x);
    }
  }
  std::sort(shared.begin(), shared.end());
  shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
  std::sort(b_verts.begin(), b_verts.end());
  b_verts.erase(std::unique(b_verts.begin(), b_verts.end()), b_verts.end());
  std::vector<VertexId> a(source_side.begin(), source_side.end());
  for (auto& v : a) v = g.find(v);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  sep.a_vertices = a.size();
  sep.b_vertices = b_verts.size() + shared.size();
  sep.shared = std::move(shared);
  return sep;
}

std::variant<Identification, Separation> handle_two_high_degree(const MultiGraph& g,
                                                                std::span<const VertexId> /*terminals*/, VertexId u,
                                                                VertexId v, const ConstantsProfile& profile) {
  const VertexId x[] = {u};
  const VertexId y[] = {v};
  auto cut = bounded_mincut_with_side(g, x, y, profile.s);
  if (!cut) return Identification{g.find(u), g.find(v)};
  return separation_from_side(g, cut->source_side);
}

std::size_t recurse_good_separation(MultiGraph& g, std::span<const VertexId> terminals, const Separation& sep,
                                    const ConstantsProfile& profile, const EngineOptions& options) {
  const auto va = side_vertices(g, sep.side_a);
  const auto vb = side_vertices(g, sep.side_b);
  std::vector<VertexId> canon;
  for (VertexId t : terminals) canon.push_back(g.find(t));
  const std::size_t ta = count_in(va, canon);
  const std::size_t tb = count_in(vb, canon);

  bool pick_a;
  if (ta != tb)
    pick_a = ta < tb;
  else if (va.size() != vb.size())
    pick_a = va.size() < vb.size();
  else
    pick_a = !va.empty() && (vb.empty() || va.front() < vb.front());
  const auto& side = pick_a ? sep.side_a : sep.side_b;
  const auto& verts = pick_a ? va : vb;
  if (side.empty()) return 0;

  std::vector<VertexId> side_terms = sep.shared;
  for (VertexId t : canon)
    if (std::binary_search(verts.begin(), verts.end(), t)) side_terms.push_back(t);
  std::sort(side_terms.begin(), side_terms.end());
  side_terms.erase(std::unique(side_terms.begin(), side_terms.end()), side_terms.end());
  if (side_terms.size() > profile.t)
    throw InternalError("separation side carries " + std::to_string(side_terms.size()) +
                        " terminals, capacity is " + std::to_string(profile.t));

  Subgraph sub = extract(g, side);
  std::vector<VertexId> local;
  for (VertexId t : side_terms) local.push_back(sub.local_vertex(t));
  const PowercutTable table = fpt_powercut(sub.graph, local, profile, options);
  const auto used = sub.to_parent(table.distinct_edges());

  const std::size_t before = g.vertex_count();
  for (EdgeId e : side) {
    if (std::binary_search(used.begin(), used.end(), e)) continue;
    auto [u, v] = g.original_endpoints(e);
    g.identify(u, v);
  }
  return before - g.vertex_count();
}

PowercutTable fpt_powercut(const MultiGraph& g, std::span<const VertexId> terminals, const ConstantsProfile& profile,
                           const EngineOptions& options) {
  const int s = profile.s;
  if (s < 1) throw InputError("size bound s must be at least 1");
  std::vector<VertexId> canon;
  for (VertexId t : terminals) {
    if (!g.has_vertex(t)) throw InputError("unknown terminal " + std::to_string(t));
    const VertexId r = g.find(t);
    if (std::find(canon.begin(), canon.end(), r) != canon.end())
      throw InputError("duplicate terminal " + std::to_string(t));
    canon.push_back(r);
  }
  if (canon.size() > profile.t)
    throw InputError("too many terminals: " + std::to_string(canon.size()) + " > t = " + std::to_string(profile.t));
  if (!is_connected(g)) throw InputError("powercut: graph is disconnected");

  DepthGuard guard;
  EngineStats* stats = options.stats;
  if (stats) stats->max_depth = std::max(stats->max_depth, engine_depth);

  MultiGraph work = g;
  std::optional<MultiGraph> before;
  auto snapshot = [&] {
    if (options.on_contract) before = work;
  };

  std::vector<VertexId> images, uniq;
  auto finish = [&] {
    if (stats) ++stats->exhaustive_solves;
    PowercutTable image_table = exhaustive_powercut(work, uniq, s, options.ceiling);
    PowercutTable out = expand_terminals(image_table, canon, images);
    out.set_graph_stamp(g.stamp());
    return out;
  };
  auto fallback = [&] {
    if (stats) ++stats->fallbacks;
    return finish();
  };

  while (true) {
    if (work.edge_count() >= 2 * static_cast<std::size_t>(s) * work.vertex_count()) {
      snapshot();
      sparsify_in_place(work, s);
      if (stats) ++stats->sparsifications;
      notify(options, before ? &*before : nullptr, work, canon, "sparsify");
    }

    images.clear();
    uniq.clear();
    for (VertexId t : canon) {
      const VertexId r = work.find(t);
      images.push_back(r);
      if (std::find(uniq.begin(), uniq.end(), r) == uniq.end()) uniq.push_back(r);
    }

    if (work.vertex_count() <= 1 || enumeration_count(work.edge_count(), s) <= options.enum_budget) return finish();

    const auto high = find_high_degree(work, profile);
    if (high.size() >= 2) {
      auto step = handle_two_high_degree(work, uniq, high[0], high[1], profile);
      snapshot();
      if (auto* id = std::get_if<Identification>(&step)) {
        work.identify(id->u, id->v);
        if (stats) ++stats->identifications;
        notify(options, before ? &*before : nullptr, work, canon, "identify");
        continue;
      }
      if (stats) ++stats->separations;
      const std::size_t removed = recurse_good_separation(work, uniq, std::get<Separation>(step), profile, options);
      notify(options, before ? &*before : nullptr, work, canon, "separation");
      if (removed == 0) return fallback();
      continue;
    }

    std::optional<VertexId> apex;
    if (high.size() == 1) apex = high[0];
    auto built = build_layering(work, uniq, profile, apex);
    if (std::holds_alternative<GraphExhausted>(built)) {
      if (stats) ++stats->graph_exhausted;
      return finish();
    }
    const Layering& lay = std::get<Layering>(built);
    if (stats) ++stats->layerings;

    // Layers past the stored ones repeat the last, so their checks and
    // tables do too.
    const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(profile.p, lay.layers.size()));
    std::vector<PrunedLayer> pruned;
    bool blocked = false;
    bool recursed = false;
    for (std::size_t i = 1; i <= count; ++i) {
      pruned.push_back(prune_layer(work, lay, i, profile));
      ConsecutiveCheck check = consecutive_connectivity_check(work, pruned.back(), profile, apex);
      if (check.separation) {
        snapshot();
        if (stats) ++stats->separations;
        const std::size_t removed = recurse_good_separation(work, uniq, *check.separation, profile, options);
        notify(options, before ? &*before : nullptr, work, canon, "separation");
        if (removed == 0) return fallback();
        recursed = true;
        break;
      }
      if (check.blocked) {
        if (stats) ++stats->blocked_layers;
        blocked = true;
      }
    }
    if (recursed) continue;
    if (blocked) return fallback();

    std::vector<PowercutTable> tables(count);
    if (options.jobs > 1 && count > 1) {
      std::vector<std::future<PowercutTable>> futures;
      for (std::size_t i = 1; i <= count; ++i) {
        futures.push_back(std::async(std::launch::async, [&, i] {
          return collapse_and_local_powercut(work, uniq, lay, pruned[i - 1], i, s, options.ceiling);
        }));
      }
      for (std::size_t i = 0; i < count; ++i) tables[i] = futures[i].get();
    } else {
      for (std::size_t i = 1; i <= count; ++i)
        tables[i - 1] = collapse_and_local_powercut(work, uniq, lay, pruned[i - 1], i, s, options.ceiling);
    }

    std::vector<EdgeId> kernel;
    for (EdgeId e : lay.kernel) {
      auto [u, v] = work.endpoints(e);
      if (!apex || (u != *apex && v != *apex)) kernel.push_back(e);
    }
    const auto f = contractible_kernel_edges(tables, kernel);
    if (f.empty()) return fallback();
    snapshot();
    const std::size_t n_before = work.vertex_count();
    for (EdgeId e : f) {
      auto [u, v] = work.original_endpoints(e);
      work.identify(u, v);
    }
    if (stats) ++stats->kernel_contractions;
    notify(options, before ? &*before : nullptr, work, canon, "kernel");
    if (work.vertex_count() == n_before) return fallback();
  }
}

KwayResult kway_cut(const MultiGraph& g, int k, const ConstantsProfile& profile, const EngineOptions& options) {
  if (k < 1) throw InputError("k must be at least 1");
  KwayResult res;
  if (k > profile.s + 1) {
    res.outcome = Outcome::Pigeonhole;
    return res;
  }
  if (!is_connected(g)) throw InputError("kway_cut: graph is disconnected");
  const PowercutTable table = fpt_powercut(g, {}, profile, options);
  res.cut = kway_from_table(table, k);
  if (!res.cut) {
    res.outcome = Outcome::Infeasible;
    return res;
  }
  const CutCheck check = verify_cut(g, *res.cut, k, profile.s);
  if (!check) throw InternalError("engine produced an invalid cut: " + check.reason);
  res.outcome = Outcome::Found;
  return res;
}

KwayResult kway_cut(const MultiGraph& g, int k, int s, const EngineOptions& options) {
  if (k < 1) throw InputError("k must be at least 1");
  if (k > s + 1) return KwayResult{Outcome::Pigeonhole, std::nullopt};
  return kway_cut(g, k, constants_from(s, 0, ProfileMode::Paper), options);
}

}  // namespace kwaycut
