#include "kwaycut/kwaycut.h"

#include <cstring>
#include <exception>
#include <string>

#include "kwaycut/error.hpp"
#include "kwaycut/io.hpp"
#include "kwaycut/solve.hpp"

using namespace kwaycut;

struct kwc_graph {
  MultiGraph g;
};

struct kwc_embedding {
  RotationSystem rot;
};

struct kwc_result {
  SolveResult r;
  std::vector<std::uint32_t> edges;
};

struct kwc_table {
  PowercutTable table;
  std::vector<TerminalPartition> keys;
  std::vector<std::optional<Cut>> cuts;
};

namespace {

thread_local std::string last_error;

template <class Fn>
kwc_status guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return KWC_OK;
  } catch (const InternalError& e) {
    last_error = e.what();
    return KWC_ERR_INTERNAL;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return KWC_ERR_INPUT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return KWC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return KWC_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw InputError(std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

SolveOptions convert(const kwc_options* o) {
  SolveOptions so;
  if (!o) return so;
  switch (o->solver) {
    case KWC_SOLVER_ORACLE: so.solver = Solver::Oracle; break;
    case KWC_SOLVER_FPT: so.solver = Solver::Fpt; break;
    case KWC_SOLVER_DP: so.solver = Solver::Dp; break;
    case KWC_SOLVER_PLANAR: so.solver = Solver::Planar; break;
    default: throw InputError("unknown solver");
  }
  so.k = o->k;
  if (o->s >= 0) so.s = o->s;
  if (o->enum_budget >= 0) so.enum_budget = static_cast<std::uint64_t>(o->enum_budget);
  switch (o->profile) {
    case KWC_PROFILE_PAPER: so.profile.kind = ProfileChoice::Kind::Paper; break;
    case KWC_PROFILE_TIGHT: so.profile.kind = ProfileChoice::Kind::Tight; break;
    case KWC_PROFILE_CUSTOM: {
      so.profile.kind = ProfileChoice::Kind::Custom;
      auto& ov = so.profile.overrides;
      std::optional<std::uint64_t>* slots[] = {&ov.t, &ov.p, &ov.q, &ov.d, &ov.h};
      for (int i = 0; i < 5; ++i)
        if (o->custom[i]) *slots[i] = o->custom[i];
      break;
    }
    default: throw InputError("unknown profile mode");
  }
  so.jobs = o->jobs < 1 ? 1 : o->jobs;
  if (o->decomposition) so.decomposition = parse_decomposition(o->decomposition);
  return so;
}

kwc_result* wrap(SolveResult r) {
  auto* out = new kwc_result{std::move(r), {}};
  if (out->r.cut) out->edges.assign(out->r.cut->begin(), out->r.cut->end());
  return out;
}

}  // namespace

extern "C" {

void kwc_options_init(kwc_options* opts) {
  if (!opts) return;
  *opts = kwc_options{};
  opts->solver = KWC_SOLVER_FPT;
  opts->k = 2;
  opts->s = -1;
  opts->enum_budget = -1;
  opts->profile = KWC_PROFILE_PAPER;
  opts->jobs = 1;
}

const char* kwc_last_error(void) { return last_error.c_str(); }

kwc_status kwc_graph_create(size_t vertices, kwc_graph** out) {
  return guard([&] {
    need(out, "out");
    *out = new kwc_graph{MultiGraph(vertices)};
  });
}

kwc_status kwc_graph_add_edge(kwc_graph* g, uint32_t u, uint32_t v, uint32_t* edge_out) {
  return guard([&] {
    need(g, "graph");
    const EdgeId e = g->g.add_edge(u, v);
    if (edge_out) *edge_out = e;
  });
}

kwc_status kwc_graph_parse(const char* text, size_t len, kwc_graph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new kwc_graph{parse_graph(std::string_view(text, len))};
  });
}

kwc_status kwc_graph_serialize(const kwc_graph* g, char** text_out) {
  return guard([&] {
    need(g, "graph");
    need(text_out, "text_out");
    *text_out = dup_string(format_graph(g->g));
  });
}

size_t kwc_graph_vertex_count(const kwc_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t kwc_graph_edge_count(const kwc_graph* g) { return g ? g->g.edge_count() : 0; }
int kwc_graph_is_connected(const kwc_graph* g) { return g && is_connected(g->g) ? 1 : 0; }
void kwc_graph_free(kwc_graph* g) { delete g; }
void kwc_string_free(char* s) { delete[] s; }

kwc_status kwc_generate(const char* kind, const long long* params, size_t nparams, uint64_t seed,
                        kwc_graph** graph_out, kwc_embedding** embedding_out) {
  return guard([&] {
    need(kind, "kind");
    need(graph_out, "graph_out");
    if (nparams > 0) need(params, "params");
    ProblemInstance inst = generate(kind, std::span<const long long>(params, nparams), seed);
    if (embedding_out) {
      *embedding_out = inst.embedding ? new kwc_embedding{std::move(*inst.embedding)} : nullptr;
    }
    *graph_out = new kwc_graph{std::move(inst.graph)};
  });
}

kwc_status kwc_embedding_parse(const kwc_graph* g, const char* text, size_t len, kwc_embedding** out) {
  return guard([&] {
    need(g, "graph");
    need(text, "text");
    need(out, "out");
    *out = new kwc_embedding{parse_embedding(g->g, std::string_view(text, len))};
  });
}

kwc_status kwc_embedding_serialize(const kwc_embedding* e, char** text_out) {
  return guard([&] {
    need(e, "embedding");
    need(text_out, "text_out");
    *text_out = dup_string(format_embedding(e->rot));
  });
}

void kwc_embedding_free(kwc_embedding* e) { delete e; }

kwc_status kwc_decompose(const kwc_graph* g, char** text_out) {
  return guard([&] {
    need(g, "graph");
    need(text_out, "text_out");
    *text_out = dup_string(format_decomposition(heuristic_tree_decomposition(g->g), g->g.vertex_capacity()));
  });
}

kwc_status kwc_solve(const kwc_graph* g, const kwc_embedding* embedding, const kwc_options* opts, kwc_result** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    SolveOptions so = convert(opts);
    if (embedding) so.embedding = &embedding->rot;
    *out = wrap(solve_kway(g->g, so));
  });
}

kwc_status kwc_pair_cut(const kwc_graph* g, const uint32_t* pairs, size_t npairs, const kwc_options* opts,
                        kwc_result** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    if (npairs > 0) need(pairs, "pairs");
    std::vector<std::pair<VertexId, VertexId>> list;
    for (size_t i = 0; i < npairs; ++i) list.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = wrap(solve_pair_cut(g->g, list, convert(opts)));
  });
}

kwc_status kwc_verify_cut(const kwc_graph* g, const uint32_t* edges, size_t nedges, int k, int s, int* ok) {
  return guard([&] {
    need(g, "graph");
    need(ok, "ok");
    if (nedges > 0) need(edges, "edges");
    const CutCheck check = verify_cut(g->g, std::span<const EdgeId>(edges, nedges), k, s);
    *ok = check.ok ? 1 : 0;
    if (!check.ok) last_error = check.reason;
  });
}

kwc_outcome kwc_result_outcome(const kwc_result* r) {
  if (!r) return KWC_INFEASIBLE;
  switch (r->r.outcome) {
    case Outcome::Found: return KWC_FOUND;
    case Outcome::Pigeonhole: return KWC_PIGEONHOLE;
    case Outcome::Infeasible: break;
  }
  return KWC_INFEASIBLE;
}

int kwc_result_bound(const kwc_result* r) { return r ? r->r.s : 0; }
size_t kwc_result_size(const kwc_result* r) { return r ? r->edges.size() : 0; }
const uint32_t* kwc_result_edges(const kwc_result* r) { return r && !r->edges.empty() ? r->edges.data() : nullptr; }
uint64_t kwc_result_micros(const kwc_result* r) { return r ? r->r.micros : 0; }
int kwc_result_verified(const kwc_result* r) { return r && r->r.verified ? 1 : 0; }
const char* kwc_result_solver(const kwc_result* r) { return r ? r->r.solver.c_str() : ""; }
const char* kwc_result_profile(const kwc_result* r) { return r ? r->r.profile.c_str() : ""; }

kwc_status kwc_result_stat(const kwc_result* r, const char* name, long long* value) {
  return guard([&] {
    need(r, "result");
    need(name, "name");
    need(value, "value");
    const EngineStats& st = r->r.stats;
    const std::pair<const char*, std::uint64_t> table[] = {
        {"sparsifications", st.sparsifications},
        {"exhaustive_solves", st.exhaustive_solves},
        {"identifications", st.identifications},
        {"separations", st.separations},
        {"layerings", st.layerings},
        {"graph_exhausted", st.graph_exhausted},
        {"kernel_contractions", st.kernel_contractions},
        {"fallbacks", st.fallbacks},
        {"blocked_layers", st.blocked_layers},
        {"max_depth", st.max_depth},
    };
    for (const auto& [key, v] : table) {
      if (std::strcmp(key, name) == 0) {
        *value = static_cast<long long>(v);
        return;
      }
    }
    if (std::strcmp(name, "max_class_width") == 0) {
      *value = r->r.max_class_width;
      return;
    }
    throw InputError(std::string("unknown statistic '") + name + "'");
  });
}

void kwc_result_free(kwc_result* r) { delete r; }

kwc_status kwc_powercut(const kwc_graph* g, const uint32_t* terminals, size_t nterminals, const kwc_options* opts,
                        kwc_table** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    if (nterminals > 0) need(terminals, "terminals");
    const SolveOptions so = convert(opts);
    if (!so.s) throw InputError("a powercut needs an explicit size bound s");
    std::vector<VertexId> terms(terminals, terminals + nterminals);
    auto* t = new kwc_table;
    try {
      if (so.solver == Solver::Oracle) {
        t->table = exhaustive_powercut(g->g, terms, *so.s);
      } else if (so.solver == Solver::Fpt) {
        EngineOptions eo;
        eo.enum_budget = so.enum_budget;
        eo.jobs = so.jobs;
        t->table = fpt_powercut(g->g, terms, make_profile(so.profile, *so.s, terms.size()), eo);
      } else {
        throw InputError("powercut tables come from the oracle or fpt solvers");
      }
    } catch (...) {
      delete t;
      throw;
    }
    for (const auto& [key, cut] : t->table.entries()) {
      t->keys.push_back(key);
      t->cuts.push_back(cut);
    }
    *out = t;
  });
}

size_t kwc_table_entry_count(const kwc_table* t) { return t ? t->keys.size() : 0; }

kwc_status kwc_table_entry(const kwc_table* t, size_t index, int* j, const uint8_t** labels, int* feasible,
                           const uint32_t** edges, size_t* nedges) {
  return guard([&] {
    need(t, "table");
    if (index >= t->keys.size()) throw InputError("table index out of range");
    const auto& key = t->keys[index];
    const auto& cut = t->cuts[index];
    if (j) *j = key.j;
    if (labels) *labels = key.labels.empty() ? nullptr : key.labels.data();
    if (feasible) *feasible = cut ? 1 : 0;
    if (edges) *edges = cut && !cut->empty() ? cut->data() : nullptr;
    if (nedges) *nedges = cut ? cut->size() : 0;
  });
}

void kwc_table_free(kwc_table* t) { delete t; }

}  // extern "C"
