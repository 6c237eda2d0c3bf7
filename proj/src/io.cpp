#include "kwaycut/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "kwaycut/error.hpp"

namespace kwaycut {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line_no, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw InputError("line " + std::to_string(line_no) + ": bad " + what + " '" + std::string(tok) + "'");
  return v;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    fn(toks, line_no);
  }
}

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

long long param(std::span<const long long> p, std::size_t i, std::optional<long long> fallback = std::nullopt) {
  if (i < p.size()) return p[i];
  if (fallback) return *fallback;
  throw InputError("generator needs at least " + std::to_string(i + 1) + " parameters");
}

std::size_t positive(long long v, const char* what, long long min = 1) {
  if (v < min) throw InputError(std::string("generator parameter ") + what + " must be at least " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

ProblemInstance with_coordinates(MultiGraph g, const std::vector<double>& x, const std::vector<double>& y) {
  ProblemInstance inst;
  inst.embedding = rotation_from_coordinates(g, x, y);
  inst.graph = std::move(g);
  return inst;
}

ProblemInstance grid(std::size_t w, std::size_t h) {
  MultiGraph g(w * h);
  std::vector<double> x(w * h), y(w * h);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      const auto v = static_cast<VertexId>(i * w + j);
      x[v] = static_cast<double>(j);
      y[v] = static_cast<double>(i);
      if (j + 1 < w) g.add_edge(v, v + 1);
      if (i + 1 < h) g.add_edge(v, static_cast<VertexId>(v + w));
    }
  }
  return with_coordinates(std::move(g), x, y);
}

ProblemInstance cylinder(std::size_t w, std::size_t h) {
  MultiGraph g(w * h);
  std::vector<double> x(w * h), y(w * h);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      const auto v = static_cast<VertexId>(i * w + j);
      const double a = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(w);
      x[v] = static_cast<double>(i + 1) * std::cos(a);
      y[v] = static_cast<double>(i + 1) * std::sin(a);
      g.add_edge(v, static_cast<VertexId>(i * w + (j + 1) % w));
      if (i + 1 < h) g.add_edge(v, static_cast<VertexId>(v + w));
    }
  }
  return with_coordinates(std::move(g), x, y);
}

ProblemInstance cycle(std::size_t n) {
  MultiGraph g(n);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    x[i] = std::cos(a);
    y[i] = std::sin(a);
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  }
  return with_coordinates(std::move(g), x, y);
}

ProblemInstance wheel(std::size_t rim) {
  MultiGraph g(rim + 1);
  std::vector<double> x(rim + 1, 0.0), y(rim + 1, 0.0);
  for (std::size_t i = 0; i < rim; ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(rim);
    x[i + 1] = std::cos(a);
    y[i + 1] = std::sin(a);
    g.add_edge(0, static_cast<VertexId>(i + 1));
    g.add_edge(static_cast<VertexId>(i + 1), static_cast<VertexId>((i + 1) % rim + 1));
  }
  return with_coordinates(std::move(g), x, y);
}

ProblemInstance complete(std::size_t n) {
  ProblemInstance inst;
  inst.graph = MultiGraph(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) inst.graph.add_edge(u, v);
  return inst;
}

ProblemInstance random_connected(std::size_t n, std::size_t m, bool multi, Rng& rng) {
  if (n == 0) throw InputError("random-connected needs at least one vertex");
  if (m + 1 < n) throw InputError("random-connected: m < n-1 cannot be connected");
  if (!multi && m > n * (n - 1) / 2) throw InputError("random-connected: too many edges for a simple graph");
  if (multi && n == 1 && m > 0) throw InputError("random-connected: a single vertex has no edges");
  ProblemInstance inst;
  inst.graph = MultiGraph(n);
  std::set<std::pair<VertexId, VertexId>> used;
  auto add = [&](VertexId a, VertexId b) {
    inst.graph.add_edge(a, b);
    used.emplace(std::min(a, b), std::max(a, b));
  };
  for (VertexId v = 1; v < n; ++v) add(v, static_cast<VertexId>(uniform(rng, 0, v - 1)));
  for (std::size_t i = n - 1; i < m; ++i) {
    while (true) {
      auto a = static_cast<VertexId>(uniform(rng, 0, n - 1));
      auto b = static_cast<VertexId>(uniform(rng, 0, n - 1));
      if (a == b) continue;
      if (!multi && used.count({std::min(a, b), std::max(a, b)})) continue;
      add(a, b);
      break;
    }
  }
  return inst;
}

// Random tree where vertex i hangs off one of the `window` previous
// vertices, plus `extra` simple edges that stay inside such windows. Only
// the tree edges under some extra edge lose their bridge status.
ProblemInstance tree_plus_edges(std::size_t n, std::size_t extra, std::size_t window, Rng& rng) {
  if (n < 2) throw InputError("tree-plus-edges needs at least two vertices");
  if (window < 1) throw InputError("tree-plus-edges window must be positive");
  ProblemInstance inst;
  inst.graph = MultiGraph(n);
  std::set<std::pair<VertexId, VertexId>> used;
  for (VertexId v = 1; v < n; ++v) {
    const std::size_t lo = v > window ? v - window : 0;
    const auto p = static_cast<VertexId>(uniform(rng, lo, v - 1));
    inst.graph.add_edge(v, p);
    used.emplace(p, v);
  }
  std::size_t added = 0, attempts = 0;
  while (added < extra) {
    if (++attempts > 100 * (extra + 10)) throw InputError("tree-plus-edges: cannot place that many extra edges");
    const auto v = static_cast<VertexId>(uniform(rng, 1, n - 1));
    const std::size_t lo = v > window ? v - window : 0;
    const auto u = static_cast<VertexId>(uniform(rng, lo, v - 1));
    if (!used.emplace(u, v).second) continue;
    inst.graph.add_edge(u, v);
    ++added;
  }
  return inst;
}

// Two cycles with random chords (each 2-edge-connected) joined by one bridge.
ProblemInstance two_blobs_bridged(std::size_t size, std::size_t chords, Rng& rng) {
  if (size < 3) throw InputError("two-blobs-bridged needs blobs of at least three vertices");
  ProblemInstance inst;
  inst.graph = MultiGraph(2 * size);
  for (std::size_t blob = 0; blob < 2; ++blob) {
    const auto base = static_cast<VertexId>(blob * size);
    for (std::size_t i = 0; i < size; ++i)
      inst.graph.add_edge(static_cast<VertexId>(base + i), static_cast<VertexId>(base + (i + 1) % size));
    for (std::size_t c = 0; c < chords; ++c) {
      const auto a = static_cast<VertexId>(base + uniform(rng, 0, size - 1));
      const auto b = static_cast<VertexId>(base + uniform(rng, 0, size - 1));
      if (a != b) inst.graph.add_edge(a, b);
    }
  }
  inst.graph.add_edge(static_cast<VertexId>(uniform(rng, 0, size - 1)),
                      static_cast<VertexId>(size + uniform(rng, 0, size - 1)));
  return inst;
}

// Random spanning tree of the w x h grid plus each remaining grid edge with
// the given probability; embedded by the grid coordinates.
ProblemInstance grid_subgraph(std::size_t w, std::size_t h, std::size_t keep_percent, Rng& rng) {
  const ProblemInstance full = grid(w, h);
  std::vector<EdgeId> order = full.graph.edges();
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<VertexId> dsu(w * h);
  std::iota(dsu.begin(), dsu.end(), VertexId{0});
  auto root = [&](VertexId x) {
    while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
    return x;
  };
  std::vector<std::uint8_t> keep(full.graph.edge_capacity(), 0);
  for (EdgeId e : order) {
    auto [u, v] = full.graph.original_endpoints(e);
    const auto a = root(u), b = root(v);
    if (a != b) {
      dsu[a] = b;
      keep[e] = 1;
    } else if (uniform(rng, 0, 99) < keep_percent) {
      keep[e] = 1;
    }
  }
  MultiGraph g(w * h);
  std::vector<double> x(w * h), y(w * h);
  for (std::size_t v = 0; v < w * h; ++v) {
    x[v] = static_cast<double>(v % w);
    y[v] = static_cast<double>(v / w);
  }
  for (EdgeId e = 0; e < full.graph.edge_capacity(); ++e) {
    if (!keep[e]) continue;
    auto [u, v] = full.graph.original_endpoints(e);
    g.add_edge(u, v);
  }
  return with_coordinates(std::move(g), x, y);
}

}  // namespace

MultiGraph parse_graph(std::string_view text) {
  std::optional<MultiGraph> g;
  std::size_t declared = 0, seen = 0;
  for_each_line(text, [&](const std::vector<std::string_view>& t, std::size_t ln) {
    if (t[0] == "p") {
      if (g) throw InputError("line " + std::to_string(ln) + ": second header");
      if (t.size() != 4 || t[1] != "edge") throw InputError("line " + std::to_string(ln) + ": malformed header");
      const long long n = to_int(t[2], ln, "vertex count");
      const long long m = to_int(t[3], ln, "edge count");
      if (n < 0 || m < 0) throw InputError("line " + std::to_string(ln) + ": negative count");
      g.emplace(static_cast<std::size_t>(n));
      declared = static_cast<std::size_t>(m);
    } else if (t[0] == "e") {
      if (!g) throw InputError("line " + std::to_string(ln) + ": edge before header");
      if (t.size() != 3) throw InputError("line " + std::to_string(ln) + ": malformed edge");
      const long long u = to_int(t[1], ln, "vertex");
      const long long v = to_int(t[2], ln, "vertex");
      const auto n = static_cast<long long>(g->vertex_capacity());
      if (u < 1 || v < 1 || u > n || v > n) throw InputError("line " + std::to_string(ln) + ": vertex out of range");
      if (u == v) throw InputError("line " + std::to_string(ln) + ": self-loop");
      g->add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
      ++seen;
    } else {
      throw InputError("line " + std::to_string(ln) + ": unknown record '" + std::string(t[0]) + "'");
    }
  });
  if (!g) throw InputError("missing header 'p edge <n> <m>'");
  if (seen != declared)
    throw InputError("header declares " + std::to_string(declared) + " edges, found " + std::to_string(seen));
  return std::move(*g);
}

std::string format_graph(const MultiGraph& g) {
  if (g.vertex_count() != g.vertex_capacity() || g.edge_count() != g.edge_capacity())
    throw InputError("format_graph needs a graph without contractions");
  std::ostringstream os;
  os << "p edge " << g.vertex_capacity() << ' ' << g.edge_capacity() << '\n';
  for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
    auto [u, v] = g.original_endpoints(e);
    os << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
  return os.str();
}

RotationSystem parse_embedding(const MultiGraph& g, std::string_view text) {
  RotationSystem rot;
  rot.order.resize(g.vertex_capacity());
  std::vector<std::uint8_t> given(g.vertex_capacity(), 0);
  for_each_line(text, [&](const std::vector<std::string_view>& t, std::size_t ln) {
    if (t[0] != "r") throw InputError("line " + std::to_string(ln) + ": expected 'r <v> <edges...>'");
    if (t.size() < 2) throw InputError("line " + std::to_string(ln) + ": missing vertex");
    const long long v = to_int(t[1], ln, "vertex");
    if (v < 1 || v > static_cast<long long>(g.vertex_capacity()))
      throw InputError("line " + std::to_string(ln) + ": vertex out of range");
    const auto vid = static_cast<VertexId>(v - 1);
    if (given[vid]++) throw InputError("line " + std::to_string(ln) + ": vertex listed twice");
    for (std::size_t i = 2; i < t.size(); ++i) {
      std::string_view tok = t[i];
      std::optional<long long> end;
      if (auto colon = tok.find(':'); colon != std::string_view::npos) {
        end = to_int(tok.substr(colon + 1), ln, "edge end");
        tok = tok.substr(0, colon);
      }
      const long long e = to_int(tok, ln, "edge id");
      if (e < 0 || !g.has_edge(static_cast<EdgeId>(e)))
        throw InputError("line " + std::to_string(ln) + ": unknown edge " + std::string(tok));
      const auto eid = static_cast<EdgeId>(e);
      auto [a, b] = g.original_endpoints(eid);
      std::uint8_t which = a == vid ? 0 : 1;
      if (end) {
        if (*end != 0 && *end != 1) throw InputError("line " + std::to_string(ln) + ": edge end must be 0 or 1");
        which = static_cast<std::uint8_t>(*end);
      } else if (a != vid && b != vid) {
        throw InputError("line " + std::to_string(ln) + ": edge " + std::to_string(e) + " is not incident");
      }
      rot.order[vid].push_back(EdgeEnd{eid, which});
    }
  });
  check_rotation(g, rot);
  return rot;
}

std::string format_embedding(const RotationSystem& rot) {
  std::ostringstream os;
  for (VertexId v = 0; v < rot.order.size(); ++v) {
    if (rot.order[v].empty()) continue;
    os << "r " << v + 1;
    for (const auto& end : rot.order[v]) os << ' ' << end.edge << ':' << static_cast<int>(end.end);
    os << '\n';
  }
  return os.str();
}

std::vector<std::string> generator_kinds() {
  return {"grid", "cylinder", "cycle", "wheel", "complete", "random-connected", "tree-plus-edges",
          "two-blobs-bridged", "grid-subgraph"};
}

ProblemInstance generate(std::string_view kind, std::span<const long long> p, std::uint64_t seed) {
  Rng rng(seed);
  if (kind == "grid") return grid(positive(param(p, 0), "w"), positive(param(p, 1), "h"));
  if (kind == "cylinder") return cylinder(positive(param(p, 0), "w", 3), positive(param(p, 1), "h"));
  if (kind == "cycle") return cycle(positive(param(p, 0), "n", 3));
  if (kind == "wheel") return wheel(positive(param(p, 0), "n", 3));
  if (kind == "complete") return complete(positive(param(p, 0), "n"));
  if (kind == "random-connected")
    return random_connected(positive(param(p, 0), "n"), positive(param(p, 1), "m", 0), param(p, 2, 0) != 0, rng);
  if (kind == "tree-plus-edges")
    return tree_plus_edges(positive(param(p, 0), "n", 2), positive(param(p, 1, 0), "extra", 0),
                           positive(param(p, 2, 8), "window"), rng);
  if (kind == "two-blobs-bridged") {
    const std::size_t size = positive(param(p, 0), "size", 3);
    return two_blobs_bridged(size, positive(param(p, 1, static_cast<long long>(size)), "chords", 0), rng);
  }
  if (kind == "grid-subgraph")
    return grid_subgraph(positive(param(p, 0), "w"), positive(param(p, 1), "h"),
                         std::min<std::size_t>(100, positive(param(p, 2, 50), "keep_percent", 0)), rng);
  throw InputError("unknown generator '" + std::string(kind) + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace kwaycut
