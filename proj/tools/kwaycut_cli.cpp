// Command-line front end. Talks to the solver library only through the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kwaycut/kwaycut.h"

using json = nlohmann::json;

namespace {

enum Exit { kFound = 0, kInputError = 1, kInternalError = 2, kInfeasible = 3, kPigeonhole = 4 };

struct Failure {
  kwc_status status;
  std::string message;
};

void check(kwc_status st) {
  if (st != KWC_OK) throw Failure{st, kwc_last_error()};
}

[[noreturn]] void input_error(const std::string& msg) { throw Failure{KWC_ERR_INPUT, msg}; }

struct GraphDeleter {
  void operator()(kwc_graph* g) const { kwc_graph_free(g); }
};
struct EmbeddingDeleter {
  void operator()(kwc_embedding* e) const { kwc_embedding_free(e); }
};
struct ResultDeleter {
  void operator()(kwc_result* r) const { kwc_result_free(r); }
};
struct TableDeleter {
  void operator()(kwc_table* t) const { kwc_table_free(t); }
};
using GraphPtr = std::unique_ptr<kwc_graph, GraphDeleter>;
using EmbeddingPtr = std::unique_ptr<kwc_embedding, EmbeddingDeleter>;
using ResultPtr = std::unique_ptr<kwc_result, ResultDeleter>;
using TablePtr = std::unique_ptr<kwc_table, TableDeleter>;

struct Args {
  std::string command;
  std::string graph_file;
  int k = 2;
  std::optional<int> s;
  std::string solver;
  std::uint64_t seed = 1;
  std::string terminals;
  std::string pairs;
  std::string embedding_file;
  std::string decomposition_file;
  std::string profile = "paper";
  std::optional<long long> enum_budget;
  int jobs = 1;
  std::string gen;
  std::string sizes;
  int reps = 1;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) input_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<long long> parse_list(const std::string& text, char sep, const char* what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      input_error(std::string("bad ") + what + " '" + item + "'");
    }
  }
  return out;
}

// "kind:p1,p2,..." -> kind and parameters.
std::pair<std::string, std::vector<long long>> parse_gen(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  std::vector<long long> params;
  if (colon != std::string::npos) params = parse_list(spec.substr(colon + 1), ',', "generator parameter");
  return {kind, params};
}

kwc_solver parse_solver(const std::string& name) {
  if (name == "oracle") return KWC_SOLVER_ORACLE;
  if (name == "fpt") return KWC_SOLVER_FPT;
  if (name == "dp") return KWC_SOLVER_DP;
  if (name == "planar") return KWC_SOLVER_PLANAR;
  input_error("unknown solver '" + name + "'");
}

const char* solver_label(kwc_solver s) {
  switch (s) {
    case KWC_SOLVER_ORACLE: return "oracle";
    case KWC_SOLVER_FPT: return "fpt";
    case KWC_SOLVER_DP: return "dp";
    case KWC_SOLVER_PLANAR: return "planar";
  }
  return "?";
}

struct Instance {
  GraphPtr graph;
  EmbeddingPtr embedding;
  std::string decomposition;
};

Instance load(const Args& a, const std::string& gen_override = {}, std::uint64_t seed_offset = 0) {
  Instance inst;
  const std::string gen = gen_override.empty() ? a.gen : gen_override;
  if (!gen.empty()) {
    if (!a.graph_file.empty()) input_error("give either a graph file or --gen, not both");
    auto [kind, params] = parse_gen(gen);
    kwc_graph* g = nullptr;
    kwc_embedding* e = nullptr;
    check(kwc_generate(kind.c_str(), params.data(), params.size(), a.seed + seed_offset, &g, &e));
    inst.graph.reset(g);
    inst.embedding.reset(e);
  } else {
    if (a.graph_file.empty()) input_error("no input graph: pass a file or --gen kind:params");
    const std::string text = slurp(a.graph_file);
    kwc_graph* g = nullptr;
    check(kwc_graph_parse(text.data(), text.size(), &g));
    inst.graph.reset(g);
  }
  if (!a.embedding_file.empty()) {
    const std::string text = slurp(a.embedding_file);
    kwc_embedding* e = nullptr;
    check(kwc_embedding_parse(inst.graph.get(), text.data(), text.size(), &e));
    inst.embedding.reset(e);
  }
  if (!a.decomposition_file.empty()) inst.decomposition = slurp(a.decomposition_file);
  return inst;
}

kwc_options make_options(const Args& a, kwc_solver solver, const Instance& inst) {
  kwc_options o;
  kwc_options_init(&o);
  o.solver = solver;
  o.k = a.k;
  o.s = a.s.value_or(-1);
  o.enum_budget = a.enum_budget.value_or(-1);
  o.jobs = a.jobs;
  if (a.profile == "paper") {
    o.profile = KWC_PROFILE_PAPER;
  } else if (a.profile == "tight") {
    o.profile = KWC_PROFILE_TIGHT;
  } else if (a.profile.rfind("custom", 0) == 0) {
    o.profile = KWC_PROFILE_CUSTOM;
    const auto colon = a.profile.find(':');
    if (colon != std::string::npos) {
      const auto vals = parse_list(a.profile.substr(colon + 1), ',', "profile value");
      if (vals.size() > 5) input_error("custom profile takes at most t,p,q,d,h");
      for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] < 0) input_error("profile values must be non-negative");
        o.custom[i] = static_cast<std::uint64_t>(vals[i]);
      }
    }
  } else {
    input_error("unknown profile '" + a.profile + "' (paper, tight or custom:t,p,q,d,h)");
  }
  if (!inst.decomposition.empty()) o.decomposition = inst.decomposition.c_str();
  return o;
}

json record(const char* command, kwc_result* r, int k) {
  json j;
  j["command"] = command;
  j["solver"] = kwc_result_solver(r);
  j["k"] = k;
  j["s"] = kwc_result_bound(r);
  switch (kwc_result_outcome(r)) {
    case KWC_FOUND: j["size"] = kwc_result_size(r); break;
    case KWC_INFEASIBLE: j["size"] = "infeasible(>s)"; break;
    case KWC_PIGEONHOLE: j["size"] = "pigeonhole"; break;
  }
  std::vector<std::uint32_t> edges;
  if (const auto* e = kwc_result_edges(r)) edges.assign(e, e + kwc_result_size(r));
  j["edges"] = edges;
  j["micros"] = kwc_result_micros(r);
  j["verified"] = kwc_result_verified(r) != 0;
  j["profile"] = kwc_result_profile(r);
  json stats = json::object();
  for (const char* name : {"sparsifications", "exhaustive_solves", "identifications", "separations", "layerings",
                           "graph_exhausted", "kernel_contractions", "fallbacks", "blocked_layers", "max_depth",
                           "max_class_width"}) {
    long long v = 0;
    if (kwc_result_stat(r, name, &v) == KWC_OK && v != 0 && !(v < 0)) stats[name] = v;
  }
  j["stats"] = stats;
  return j;
}

void summarize(kwc_result* r, int k) {
  std::cerr << kwc_result_solver(r) << ": k=" << k << " s=" << kwc_result_bound(r) << ' ';
  switch (kwc_result_outcome(r)) {
    case KWC_FOUND:
      std::cerr << "cut of size " << kwc_result_size(r) << (kwc_result_verified(r) ? " (verified)" : "");
      break;
    case KWC_INFEASIBLE: std::cerr << "no cut within the bound"; break;
    case KWC_PIGEONHOLE: std::cerr << "infeasible by pigeonhole"; break;
  }
  std::cerr << " in " << kwc_result_micros(r) << " us\n";
}

int exit_for(kwc_outcome o) {
  switch (o) {
    case KWC_FOUND: return kFound;
    case KWC_INFEASIBLE: return kInfeasible;
    case KWC_PIGEONHOLE: return kPigeonhole;
  }
  return kInternalError;
}

ResultPtr solve(const Instance& inst, const kwc_options& o) {
  kwc_result* r = nullptr;
  check(kwc_solve(inst.graph.get(), inst.embedding.get(), &o, &r));
  return ResultPtr(r);
}

int run_table(const Args& a, kwc_solver solver, const Instance& inst) {
  if (!a.s) input_error("--terminals needs --s");
  std::vector<std::uint32_t> terms;
  for (long long v : parse_list(a.terminals, ',', "terminal")) {
    if (v < 1) input_error("terminals are 1-based vertex ids");
    terms.push_back(static_cast<std::uint32_t>(v - 1));
  }
  const kwc_options o = make_options(a, solver, inst);
  kwc_table* t = nullptr;
  check(kwc_powercut(inst.graph.get(), terms.data(), terms.size(), &o, &t));
  TablePtr table(t);
  std::size_t feasible = 0;
  for (std::size_t i = 0; i < kwc_table_entry_count(t); ++i) {
    int j = 0, ok = 0;
    const std::uint8_t* labels = nullptr;
    const std::uint32_t* edges = nullptr;
    std::size_t nedges = 0;
    check(kwc_table_entry(t, i, &j, &labels, &ok, &edges, &nedges));
    json row;
    row["command"] = "powercut";
    row["solver"] = solver_label(solver);
    row["j"] = j;
    row["labels"] = labels ? std::vector<int>(labels, labels + terms.size()) : std::vector<int>{};
    if (ok) {
      row["size"] = nedges;
      row["edges"] = edges ? std::vector<std::uint32_t>(edges, edges + nedges) : std::vector<std::uint32_t>{};
      ++feasible;
    } else {
      row["size"] = "infeasible(>s)";
      row["edges"] = json::array();
    }
    std::cout << row.dump() << '\n';
  }
  std::cerr << solver_label(solver) << ": powercut with " << terms.size() << " terminals, "
            << kwc_table_entry_count(t) << " keys, " << feasible << " with a cut\n";
  return kFound;
}

int run_solve(const Args& a, const char* command, kwc_solver solver) {
  Instance inst = load(a);
  if (!a.terminals.empty()) return run_table(a, solver, inst);
  const kwc_options o = make_options(a, solver, inst);
  ResultPtr r = solve(inst, o);
  std::cout << record(command, r.get(), a.k).dump() << '\n';
  summarize(r.get(), a.k);
  return exit_for(kwc_result_outcome(r.get()));
}

int run_paircut(const Args& a) {
  if (a.pairs.empty()) input_error("paircut needs --pairs u-v[,u-v...]");
  Instance inst = load(a);
  std::vector<std::uint32_t> flat;
  std::stringstream ss(a.pairs);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto vals = parse_list(item, '-', "pair vertex");
    if (vals.size() != 2 || vals[0] < 1 || vals[1] < 1) input_error("pairs are written u-v with 1-based ids");
    flat.push_back(static_cast<std::uint32_t>(vals[0] - 1));
    flat.push_back(static_cast<std::uint32_t>(vals[1] - 1));
  }
  const kwc_options o = make_options(a, parse_solver(a.solver.empty() ? "oracle" : a.solver), inst);
  kwc_result* raw = nullptr;
  check(kwc_pair_cut(inst.graph.get(), flat.data(), flat.size() / 2, &o, &raw));
  ResultPtr r(raw);
  json j = record("paircut", r.get(), a.k);
  j.erase("k");
  std::cout << j.dump() << '\n';
  summarize(r.get(), a.k);
  return exit_for(kwc_result_outcome(r.get()));
}

int run_crosscheck(const Args& a) {
  Instance inst = load(a);
  std::vector<kwc_solver> solvers{KWC_SOLVER_ORACLE, KWC_SOLVER_FPT, KWC_SOLVER_DP};
  if (inst.embedding) solvers.push_back(KWC_SOLVER_PLANAR);
  std::optional<int> bound = a.s;
  std::vector<std::pair<kwc_outcome, std::size_t>> seen;
  for (kwc_solver s : solvers) {
    kwc_options o = make_options(a, s, inst);
    if (bound) o.s = *bound;
    ResultPtr r = solve(inst, o);
    // Every solver answers for the same bound.
    if (!bound) bound = kwc_result_bound(r.get());
    std::cout << record("crosscheck", r.get(), a.k).dump() << '\n';
    summarize(r.get(), a.k);
    seen.emplace_back(kwc_result_outcome(r.get()), kwc_result_size(r.get()));
  }
  bool agree = true;
  for (const auto& x : seen) agree = agree && x == seen.front();
  json summary{{"command", "crosscheck"}, {"agree", agree}, {"solvers", solvers.size()}};
  std::cout << summary.dump() << '\n';
  if (!agree) {
    std::cerr << "crosscheck: solvers disagree\n";
    return kInternalError;
  }
  std::cerr << "crosscheck: " << solvers.size() << " solvers agree\n";
  return kFound;
}

int run_bench(const Args& a) {
  if (a.gen.empty()) input_error("bench needs --gen kind:params");
  auto [kind, params] = parse_gen(a.gen);
  std::vector<long long> sizes = a.sizes.empty() ? std::vector<long long>{} : parse_list(a.sizes, ',', "size");
  if (sizes.empty()) sizes.push_back(params.empty() ? 0 : params[0]);
  if (params.empty()) params.push_back(0);
  const kwc_solver solver = parse_solver(a.solver.empty() ? "fpt" : a.solver);
  std::vector<double> xs, ys;
  for (long long n : sizes) {
    params[0] = n;
    std::string spec = kind + ":";
    for (std::size_t i = 0; i < params.size(); ++i) spec += (i ? "," : "") + std::to_string(params[i]);
    double best = 0;
    for (int rep = 0; rep < std::max(1, a.reps); ++rep) {
      Args local = a;
      Instance inst = load(local, spec, static_cast<std::uint64_t>(rep));
      const kwc_options o = make_options(a, solver, inst);
      ResultPtr r = solve(inst, o);
      json j = record("bench", r.get(), a.k);
      j["n"] = n;
      j["rep"] = rep;
      std::cout << j.dump() << '\n';
      const double us = static_cast<double>(kwc_result_micros(r.get()));
      best = rep == 0 ? us : std::min(best, us);
    }
    std::cerr << "bench: n=" << n << " best " << best << " us\n";
    xs.push_back(std::log(static_cast<double>(std::max(1LL, n))));
    ys.push_back(std::log(std::max(1.0, best)));
  }
  if (xs.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      num += (xs[i] - mx) * (ys[i] - my);
      den += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = den > 0 ? num / den : 0.0;
    std::cout << json{{"command", "bench"}, {"fitted_exponent", slope}}.dump() << '\n';
    std::cerr << "bench: fitted exponent " << slope << '\n';
  }
  return kFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bounded-size minimum k-way edge cuts"};
  app.require_subcommand(1, 1);
  Args a;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("graph", a.graph_file, "Graph file (p edge n m / e u v)");
    sub->add_option("--k", a.k, "Number of components")->check(CLI::PositiveNumber);
    sub->add_option("--s", a.s, "Size bound on the cut");
    sub->add_option("--solver", a.solver, "oracle, fpt, dp or planar");
    sub->add_option("--seed", a.seed, "Generator seed");
    sub->add_option("--terminals", a.terminals, "Comma-separated 1-based terminals; prints the powercut table");
    sub->add_option("--pairs", a.pairs, "Pairs to separate, u-v[,u-v...]");
    sub->add_option("--embedding", a.embedding_file, "Rotation system file (r v e1 e2 ...)");
    sub->add_option("--decomposition", a.decomposition_file, "Tree decomposition file for dp");
    sub->add_option("--profile", a.profile, "paper, tight or custom:t,p,q,d,h");
    sub->add_option("--enum-budget", a.enum_budget, "Solve exhaustively once (m choose <= s) is at most this");
    sub->add_option("--jobs", a.jobs, "Worker threads for the independent layer solves");
    sub->add_option("--gen", a.gen, "Generate the input, kind:params");
    sub->add_option("--sizes", a.sizes, "bench: values for the first generator parameter");
    sub->add_option("--reps", a.reps, "bench: repetitions per size");
  };
  const std::pair<const char*, const char*> commands[] = {
      {"oracle", "Exhaustive search over edge subsets"},
      {"fpt", "Recursive powercut engine"},
      {"dp", "Dynamic programming over a tree decomposition"},
      {"planar", "Planar pipeline (needs an embedding)"},
      {"paircut", "Smallest cut separating the given pairs"},
      {"bench", "Time a solver over generated sizes"},
      {"crosscheck", "Run every applicable solver and compare sizes"},
  };
  for (auto [name, help] : commands) {
    add_common(app.add_subcommand(name, help)->callback([&a, name] { a.command = name; }));
  }
  app.add_subcommand("generators", "List generator kinds")->callback([&a] { a.command = "generators"; });
  app.add_subcommand("decompose", "Print a heuristic tree decomposition")
      ->callback([&a] { a.command = "decompose"; })
      ->add_option("graph", a.graph_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const std::string& c = a.command;
    if (c == "generators") {
      std::cout << "grid cylinder cycle wheel complete random-connected tree-plus-edges two-blobs-bridged "
                   "grid-subgraph\n";
      return kFound;
    }
    if (c == "decompose") {
      Instance inst = load(a);
      char* text = nullptr;
      check(kwc_decompose(inst.graph.get(), &text));
      std::cout << text;
      kwc_string_free(text);
      return kFound;
    }
    if (c == "paircut") return run_paircut(a);
    if (c == "crosscheck") return run_crosscheck(a);
    if (c == "bench") return run_bench(a);
    if (!a.solver.empty() && a.solver != c) input_error("--solver conflicts with the command");
    return run_solve(a, c.c_str(), parse_solver(c));
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.status == KWC_ERR_INTERNAL ? kInternalError : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternalError;
  }
}
