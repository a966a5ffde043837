#include "cyclewidth/cyclewidth.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "bounds.hpp"
#include "decomposer.hpp"
#include "errors.hpp"
#include "formats.hpp"
#include "generators.hpp"
#include "harness.hpp"
#include "hitting.hpp"
#include "treewidth.hpp"

struct cw_graph {
  cyclewidth::Graph g;
};

namespace {

using namespace cyclewidth;

thread_local std::string last_error;

cw_status fail(cw_status s, const std::string& what) {
  last_error = what;
  return s;
}

/// Runs `body`, translating library exceptions to status codes.
template <class F>
cw_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return fail(CW_BUDGET_EXCEEDED, e.what());
  } catch (const ParseError& e) {
    return fail(CW_PARSE_ERROR, e.what());
  } catch (const InvalidArgument& e) {
    return fail(CW_INVALID_ARGUMENT, e.what());
  } catch (const PreconditionViolated& e) {
    std::string what = e.what();
    if (!e.evidence().empty()) {
      what += "; evidence:";
      for (int v : e.evidence()) what += " " + std::to_string(v);
    }
    return fail(CW_PRECONDITION_VIOLATED, what);
  } catch (const TheoremViolation& e) {
    return fail(CW_THEOREM_VIOLATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CW_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(CW_INTERNAL_ERROR, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

template <class T>
void put(T* out, T value) {
  if (out) *out = value;
}

Budget make_budget(uint64_t b) { return Budget(b == 0 ? kDefaultBudget : b); }

const Graph& graph_of(const cw_graph* g) {
  if (!g) throw InvalidArgument("null graph handle");
  return g->g;
}

const char* need(const char* s, const char* name) {
  if (!s) throw InvalidArgument(std::string("null ") + name);
  return s;
}

GraphFormat format_of(cw_format f) {
  switch (f) {
    case CW_FORMAT_GRAPH6:
      return GraphFormat::Graph6;
    case CW_FORMAT_PACE_GR:
      return GraphFormat::PaceGr;
  }
  throw InvalidArgument("unknown graph format");
}

cw_status new_graph(Graph g, cw_graph** out) {
  if (!out) throw InvalidArgument("null output handle");
  *out = new cw_graph{std::move(g)};
  return CW_OK;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

}  // namespace

extern "C" {

const char* cw_last_error(void) { return last_error.c_str(); }

const char* cw_status_name(cw_status status) {
  switch (status) {
    case CW_OK:
      return "ok";
    case CW_INVALID_ARGUMENT:
      return "invalid argument";
    case CW_PARSE_ERROR:
      return "parse error";
    case CW_BUDGET_EXCEEDED:
      return "budget exceeded";
    case CW_PRECONDITION_VIOLATED:
      return "precondition violated";
    case CW_THEOREM_VIOLATION:
      return "theorem violation";
    case CW_VERIFY_FAILED:
      return "verification failed";
    case CW_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

void cw_string_free(char* s) { std::free(s); }

cw_status cw_graph_from_edges(int n, const int* endpoints, size_t edge_count, cw_graph** out) {
  return guarded([&] {
    if (n < 0) throw InvalidArgument("vertex count must be >= 0");
    if (edge_count > 0 && !endpoints) throw InvalidArgument("null endpoint array");
    std::vector<Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    return new_graph(Graph::from_edges(static_cast<std::size_t>(n), edges), out);
  });
}

cw_status cw_graph_parse(cw_format format, const char* text, size_t len, cw_graph** out) {
  return guarded([&] {
    if (!text && len > 0) throw InvalidArgument("null text");
    return new_graph(parse_graph(format_of(format), std::string_view(text ? text : "", len)), out);
  });
}

cw_status cw_graph_serialize(const cw_graph* g, cw_format format, char** out) {
  return guarded([&] {
    put(out, serialize_graph(graph_of(g), format_of(format)));
    return CW_OK;
  });
}

cw_status cw_graph_generate(const char* family, uint64_t seed, cw_graph** out) {
  return guarded([&] {
    std::vector<std::string> args;
    std::istringstream in(need(family, "family"));
    for (std::string tok; in >> tok;) args.push_back(tok);
    return new_graph(generate(args, seed), out);
  });
}

void cw_graph_free(cw_graph* g) { delete g; }

int cw_graph_order(const cw_graph* g) { return g ? g->g.order() : 0; }

size_t cw_graph_size(const cw_graph* g) { return g ? g->g.size() : 0; }

size_t cw_graph_edges(const cw_graph* g, int* endpoints, size_t capacity) {
  if (!g) return 0;
  const auto edges = g->g.edges();
  for (size_t i = 0; i < edges.size() && i < capacity && endpoints; ++i) {
    endpoints[2 * i] = edges[i].first;
    endpoints[2 * i + 1] = edges[i].second;
  }
  return edges.size();
}

cw_status cw_treewidth(const cw_graph* g, uint64_t budget, int* width, int* exact, char** td) {
  return guarded([&] {
    Budget b = make_budget(budget);
    const Graph& graph = graph_of(g);
    auto r = exact_treewidth(graph, b);
    put(width, r.width);
    put(exact, r.exact ? 1 : 0);
    put(td, to_pace_td(r.td, graph.order()));
    return CW_OK;
  });
}

cw_status cw_pack(const cw_graph* g, int ell, uint64_t budget, int* size, char** cycles) {
  return guarded([&] {
    Budget b = make_budget(budget);
    auto p = max_long_cycle_packing(graph_of(g), ell, std::nullopt, b);
    put(size, p.size());
    put(cycles, format_cycles(p.cycles));
    return CW_OK;
  });
}

cw_status cw_hit(const cw_graph* g, int ell, uint64_t budget, int* size, char** ids) {
  return guarded([&] {
    Budget b = make_budget(budget);
    auto x = min_hitting_set_long_cycles(graph_of(g), ell, b);
    std::string s;
    for (Vertex v : x.vertices) s += (s.empty() ? "" : " ") + std::to_string(v);
    put(size, x.size());
    put(ids, s);
    return CW_OK;
  });
}

cw_status cw_minor(const cw_graph* g, const char* spec, uint64_t budget, int* found, char** cycles) {
  return guarded([&] {
    Budget b = make_budget(budget);
    auto m = has_disjoint_cycles_minor(graph_of(g), CycleFamilySpec::parse(need(spec, "spec")), b);
    put(found, m ? 1 : 0);
    if (m) {
      std::vector<Cycle> ordered(m->cycles.size());
      for (std::size_t i = 0; i < m->cycles.size(); ++i) ordered[static_cast<std::size_t>(m->assignment[i])] = m->cycles[i];
      put(cycles, format_cycles(ordered));
    } else {
      put(cycles, "");
    }
    return CW_OK;
  });
}

cw_status cw_decompose(const cw_graph* g, const char* spec, uint64_t budget, char** certificate) {
  return guarded([&] {
    Budget b = make_budget(budget);
    const Graph& graph = graph_of(g);
    auto o = decompose(graph, CycleFamilySpec::parse(need(spec, "spec")), b);
    put(certificate, format_outcome(o, graph.order()));
    return CW_OK;
  });
}

cw_status cw_verify_outcome(const cw_graph* g, const char* spec, const char* certificate) {
  return guarded([&] {
    auto r = verify_outcome(graph_of(g), CycleFamilySpec::parse(need(spec, "spec")),
                            parse_outcome(need(certificate, "certificate")));
    return r.ok ? CW_OK : fail(CW_VERIFY_FAILED, r.reason);
  });
}

cw_status cw_validate_td(const cw_graph* g, const char* td) {
  return guarded([&] {
    const Graph& graph = graph_of(g);
    auto parsed = parse_pace_td(need(td, "td"));
    if (parsed.n != graph.order()) {
      return fail(CW_VERIFY_FAILED, "td declares " + std::to_string(parsed.n) + " vertices, graph has " +
                                        std::to_string(graph.order()));
    }
    auto r = validate_td(graph, parsed.td);
    return r.ok ? CW_OK : fail(CW_VERIFY_FAILED, r.reason);
  });
}

cw_status cw_witness(const char* spec, uint64_t budget, int* ok, char** report) {
  return guarded([&] {
    Budget b = make_budget(budget);
    auto r = witness_lower_bound(CycleFamilySpec::parse(need(spec, "spec")), b);
    std::string s = "graph " + to_graph6(r.graph) + "\n";
    s += "h " + std::to_string(r.h) + "\n";
    s += std::string("minor ") + (r.minor_found ? "yes" : "no") + "\n";
    s += "treewidth " + std::to_string(r.treewidth) + (r.treewidth_exact ? " exact" : " upper-bound") + "\n";
    s += std::string("status ") + (r.ok() ? "ok" : "fail") + "\n";
    put(ok, r.ok() ? 1 : 0);
    put(report, s);
    return CW_OK;
  });
}

cw_status cw_sweep(const char* corpus, const int* ells, size_t ell_count, const char* spec, const char* out_path,
                   uint64_t budget, uint64_t seed, int* rows, int* budget_rows, int* violations, char** messages) {
  return guarded([&] {
    SweepConfig c;
    c.corpus = need(corpus, "corpus");
    if (ell_count > 0 && !ells) throw InvalidArgument("null ell array");
    c.ells.assign(ells, ells + ell_count);
    if (spec) c.spec = CycleFamilySpec::parse(spec);
    c.out_path = need(out_path, "output path");
    c.budget = budget == 0 ? kDefaultBudget : budget;
    c.seed = seed;
    auto s = run_duality_sweep(c);
    put(rows, s.rows);
    put(budget_rows, s.budget_rows);
    put(violations, s.violations);
    put(messages, join_lines(s.messages));
    return CW_OK;
  });
}

cw_status cw_verify_sweep(const char* csv_path, uint64_t budget, int* rows, int* violations, char** messages) {
  return guarded([&] {
    auto s = verify_sweep(need(csv_path, "csv path"), budget == 0 ? kDefaultBudget : budget);
    put(rows, s.rows);
    put(violations, s.violations);
    put(messages, join_lines(s.messages));
    return CW_OK;
  });
}

cw_status cw_girth_demo(const int* sizes, size_t size_count, const uint64_t* seeds, size_t seed_count, uint64_t budget,
                        char** csv) {
  return guarded([&] {
    if ((size_count > 0 && !sizes) || (seed_count > 0 && !seeds)) throw InvalidArgument("null array");
    put(csv, girth_demo(std::vector<int>(sizes, sizes + size_count),
                        std::vector<std::uint64_t>(seeds, seeds + seed_count), budget == 0 ? kDefaultBudget : budget));
    return CW_OK;
  });
}

cw_status cw_ep_bound(int64_t k, int64_t ell, int64_t* out) {
  return guarded([&] {
    put(out, static_cast<int64_t>(ep_bound(k, ell)));
    return CW_OK;
  });
}

cw_status cw_ep_bound_no_medium(int64_t k, int64_t* out) {
  return guarded([&] {
    put(out, static_cast<int64_t>(ep_bound_no_medium(k)));
    return CW_OK;
  });
}

cw_status cw_g_bound(int64_t h, int64_t k, int64_t* out) {
  return guarded([&] {
    put(out, static_cast<int64_t>(g_bound(h, k)));
    return CW_OK;
  });
}

}  // extern "C"
