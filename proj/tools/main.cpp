// Command-line front end. Talks to the library only through the C API.
#include <cyclewidth/cyclewidth.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBudget = 2, kUsage = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Status from the library, carried to main() for the exit code.
struct StatusError : std::runtime_error {
  cw_status status;
  StatusError(cw_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(cw_status s) {
  if (s != CW_OK) throw StatusError(s, std::string(cw_status_name(s)) + ": " + cw_last_error());
}

int exit_code(cw_status s) {
  switch (s) {
    case CW_OK:
      return kOk;
    case CW_BUDGET_EXCEEDED:
      return kBudget;
    case CW_INVALID_ARGUMENT:
    case CW_PARSE_ERROR:
      return kUsage;
    default:
      return kVerifyFailed;
  }
}

struct CString {
  char* p = nullptr;
  ~CString() { cw_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct GraphHandle {
  cw_graph* g = nullptr;
  ~GraphHandle() { cw_graph_free(g); }
};

struct Options {
  std::string ell = "";
  std::string spec;
  uint64_t budget = CW_DEFAULT_BUDGET;
  uint64_t seed = 0;
  std::string format;
  std::string out;
};

std::string slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + o.out + "'");
  f << text;
}

cw_format format_for(const Options& o, const std::string& path) {
  std::string name = o.format;
  if (name.empty()) name = path.size() > 3 && path.substr(path.size() - 3) == ".gr" ? "gr" : "graph6";
  if (name == "graph6") return CW_FORMAT_GRAPH6;
  if (name == "gr") return CW_FORMAT_PACE_GR;
  throw UsageError("unknown format '" + name + "'");
}

void load(const Options& o, const std::string& path, GraphHandle& h) {
  const std::string text = slurp(path);
  check(cw_graph_parse(format_for(o, path), text.data(), text.size(), &h.g));
}

std::vector<int> int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::istringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("bad ") + what + " '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("missing ") + what);
  return out;
}

int single_ell(const Options& o) {
  auto v = int_list(o.ell, "--ell");
  if (v.size() != 1) throw UsageError("--ell takes one value here");
  return v[0];
}

std::string need_spec(const Options& o) {
  if (o.spec.empty()) throw UsageError("--spec is required");
  return o.spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disjoint-cycle minors and bounded-width tree decompositions"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool ell, bool spec) {
    if (ell) sub->add_option("--ell", o.ell, "Minimum cycle length (sweep: comma-separated list)");
    if (spec) sub->add_option("--spec", o.spec, "Cycle lengths, e.g. 5,3,3");
    sub->add_option("--budget", o.budget, "Search-node budget");
    sub->add_option("--seed", o.seed, "Seed for random families");
    sub->add_option("--format", o.format, "graph6 or gr (default: by extension, else graph6)");
    sub->add_option("--out", o.out, "Output file (default: stdout)");
  };

  std::string graph_path = "-";
  std::vector<std::string> family;
  std::string cert_path, td_path, sweep_path, corpus, sizes = "", seeds = "";

  auto* gen = app.add_subcommand("gen", "Generate a graph: complete N | cycle N | path N | grid A B | "
                                        "complete-bipartite A B | petersen | empty N | random N P | "
                                        "random-cubic N | disjoint-cycles L1,L2,...");
  gen->add_option("family", family, "Family and parameters")->required();
  common(gen, false, false);

  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", graph_path, "Graph file, '-' for stdin"); };
  auto* tw = app.add_subcommand("tw", "Exact treewidth with a PACE .td decomposition");
  graph_arg(tw);
  common(tw, false, false);
  auto* pack = app.add_subcommand("pack", "Maximum packing of disjoint cycles of length >= ell");
  graph_arg(pack);
  common(pack, true, false);
  auto* hit = app.add_subcommand("hit", "Minimum vertex set meeting all cycles of length >= ell");
  graph_arg(hit);
  common(hit, true, false);
  auto* minor = app.add_subcommand("minor", "Test for a disjoint-cycles minor");
  graph_arg(minor);
  common(minor, false, true);
  auto* dec = app.add_subcommand("decompose", "Minor certificate or bounded-width tree decomposition");
  graph_arg(dec);
  common(dec, false, true);
  auto* verify = app.add_subcommand("verify", "Check a decompose certificate, a .td file, or a sweep CSV");
  graph_arg(verify);
  verify->add_option("--cert", cert_path, "Certificate from decompose (needs --spec)");
  verify->add_option("--td", td_path, "PACE .td file");
  verify->add_option("--sweep", sweep_path, "Sweep CSV with its .certs directory");
  common(verify, false, true);
  auto* witness = app.add_subcommand("witness", "Check K_{h-1} as a lower-bound witness for a spec");
  common(witness, false, true);
  auto* sweep = app.add_subcommand("sweep", "Duality sweep over a corpus, CSV plus certificates");
  sweep->add_option("--corpus", corpus, "e.g. 'connected:6', 'all:5;g6:Cr', 'gen:cycle 6', 'file:graphs.g6'")
      ->required();
  common(sweep, true, true);
  auto* girth = app.add_subcommand("girth-demo", "Girth and treewidth lower bounds of random cubic graphs");
  girth->add_option("--sizes", sizes, "Comma-separated even vertex counts");
  girth->add_option("--seeds", seeds, "Comma-separated seeds (default: --seed)");
  common(girth, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      std::string joined;
      for (const auto& f : family) joined += (joined.empty() ? "" : " ") + f;
      GraphHandle g;
      check(cw_graph_generate(joined.c_str(), o.seed, &g.g));
      CString text;
      check(cw_graph_serialize(g.g, format_for(o, o.out), &text.p));
      emit(o, text.str());
    } else if (tw->parsed()) {
      GraphHandle g;
      load(o, graph_path, g);
      int width = 0, exact = 0;
      CString td;
      check(cw_treewidth(g.g, o.budget, &width, &exact, &td.p));
      emit(o, "c width " + std::to_string(width) + (exact ? " exact" : " upper-bound") + "\n" + td.str());
    } else if (pack->parsed()) {
      GraphHandle g;
      load(o, graph_path, g);
      int size = 0;
      CString cycles;
      check(cw_pack(g.g, single_ell(o), o.budget, &size, &cycles.p));
      emit(o, "packing " + std::to_string(size) + "\n" + cycles.str());
    } else if (hit->parsed()) {
      GraphHandle g;
      load(o, graph_path, g);
      int size = 0;
      CString ids;
      check(cw_hit(g.g, single_ell(o), o.budget, &size, &ids.p));
      emit(o, "hitting " + std::to_string(size) + (size ? " " : "") + ids.str() + "\n");
    } else if (minor->parsed()) {
      GraphHandle g;
      load(o, graph_path, g);
      int found = 0;
      CString cycles;
      check(cw_minor(g.g, need_spec(o).c_str(), o.budget, &found, &cycles.p));
      emit(o, found ? "MINOR\n" + cycles.str() : "NONE\n");
    } else if (dec->parsed()) {
      GraphHandle g;
      load(o, graph_path, g);
      CString cert;
      check(cw_decompose(g.g, need_spec(o).c_str(), o.budget, &cert.p));
      emit(o, cert.str());
    } else if (verify->parsed()) {
      const int modes = !cert_path.empty() + !td_path.empty() + !sweep_path.empty();
      if (modes != 1) throw UsageError("verify needs exactly one of --cert, --td, --sweep");
      if (!sweep_path.empty()) {
        int rows = 0, violations = 0;
        CString messages;
        check(cw_verify_sweep(sweep_path.c_str(), o.budget, &rows, &violations, &messages.p));
        std::cerr << messages.str();
        emit(o, "rows " + std::to_string(rows) + " violations " + std::to_string(violations) + "\n");
        return violations ? kVerifyFailed : kOk;
      }
      GraphHandle g;
      load(o, graph_path, g);
      if (!cert_path.empty()) {
        check(cw_verify_outcome(g.g, need_spec(o).c_str(), slurp(cert_path).c_str()));
      } else {
        check(cw_validate_td(g.g, slurp(td_path).c_str()));
      }
      emit(o, "ok\n");
    } else if (witness->parsed()) {
      int ok = 0;
      CString report;
      check(cw_witness(need_spec(o).c_str(), o.budget, &ok, &report.p));
      emit(o, report.str());
      return ok ? kOk : kVerifyFailed;
    } else if (sweep->parsed()) {
      if (o.out.empty()) throw UsageError("sweep needs --out");
      const auto ells = int_list(o.ell, "--ell");
      int rows = 0, budget_rows = 0, violations = 0;
      CString messages;
      check(cw_sweep(corpus.c_str(), ells.data(), ells.size(), o.spec.empty() ? nullptr : o.spec.c_str(),
                     o.out.c_str(), o.budget, o.seed, &rows, &budget_rows, &violations, &messages.p));
      std::cerr << messages.str();
      std::cout << "rows " << rows << " budget " << budget_rows << " violations " << violations << "\n";
      return violations ? kVerifyFailed : kOk;
    } else if (girth->parsed()) {
      std::vector<int> n = sizes.empty() ? std::vector<int>{} : int_list(sizes, "--sizes");
      std::vector<uint64_t> s;
      if (seeds.empty()) {
        s.push_back(o.seed);
      } else {
        for (int v : int_list(seeds, "--seeds")) s.push_back(static_cast<uint64_t>(v));
      }
      CString csv;
      check(cw_girth_demo(n.data(), n.size(), s.data(), s.size(), o.budget, &csv.p));
      emit(o, csv.str());
    }
  } catch (const StatusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.status);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
