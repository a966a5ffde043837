#include "harness.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bounds.hpp"
#include "canon.hpp"
#include "decomposer.hpp"
#include "errors.hpp"
#include "formats.hpp"
#include "generators.hpp"
#include "hitting.hpp"
#include "treewidth.hpp"

namespace cyclewidth {

WitnessReport witness_lower_bound(const CycleFamilySpec& spec, Budget& budget) {
  const int h = spec.h();
  if (h > kMaxWitnessH) {
    throw InvalidArgument("h = " + std::to_string(h) + " exceeds " + std::to_string(kMaxWitnessH) +
                          "; exact verification is infeasible");
  }
  WitnessReport r;
  r.h = h;
  r.graph = complete_graph(h - 1);
  r.minor_found = has_disjoint_cycles_minor(r.graph, spec, budget).has_value();
  auto tw = exact_treewidth(r.graph, budget);
  r.treewidth = tw.width;
  r.treewidth_exact = tw.exact;
  return r;
}

std::string girth_demo(const std::vector<int>& sizes, const std::vector<std::uint64_t>& seeds, std::uint64_t budget) {
  std::string out = "n,seed,girth,tw_lower_bound,lb_kind\n";
  for (int n : sizes) {
    for (std::uint64_t seed : seeds) {
      const Graph g = random_cubic_graph(n, seed);
      const auto gi = girth(g);
      int lb = minor_min_width(g);
      std::string kind = "mmw";
      Budget b(budget);
      auto tw = exact_treewidth(g, b);
      if (tw.exact) {
        lb = tw.width;
        kind = "exact";
      }
      out += std::to_string(n) + "," + std::to_string(seed) + "," + (gi ? std::to_string(*gi) : "none") + "," +
             std::to_string(lb) + "," + kind + "\n";
    }
  }
  return out;
}

namespace {

int parse_count(const std::string& s, const std::string& entry) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size() && v >= 0) return v;
  } catch (const std::logic_error&) {
  }
  throw InvalidArgument("bad corpus entry '" + entry + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double d = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return d;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string certs_dir(const std::string& csv_path) { return csv_path + ".certs"; }

std::string cert_path(const std::string& csv_path, int row) {
  return certs_dir(csv_path) + "/" + std::to_string(row) + ".cert";
}

std::string join_ids(const std::vector<Vertex>& ids) {
  std::string out;
  for (Vertex v : ids) out += " " + std::to_string(v);
  return out;
}

struct RowResult {
  std::vector<std::string> fields;
  std::string cert;
  std::vector<std::string> violations;
  bool budget = false;
};

RowResult evaluate_row(const Graph& g, int ell, const CycleFamilySpec& spec, std::uint64_t limit) {
  RowResult r;
  const std::string id = to_graph6(g);
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) r.violations.push_back(id + " ell=" + std::to_string(ell) + ": " + what);
  };
  Budget budget(limit);
  Stopwatch clock;
  try {
    auto packing = max_long_cycle_packing(g, ell, std::nullopt, budget);
    const double t_pack = clock.lap();
    auto hitting = min_hitting_set_long_cycles(g, ell, budget);
    const double t_hit = clock.lap();
    auto tw = exact_treewidth(g, budget);
    const double t_tw = clock.lap();
    auto outcome = decompose(g, spec, budget);
    const double t_dec = clock.lap();

    const int nu = packing.size();
    const int tau = hitting.size();
    const std::int64_t ep = ep_bound(nu + 1, ell);
    const std::int64_t gb = g_bound(spec.h(), spec.k());

    auto pc = verify_packing(g, packing, ell);
    check(pc.ok, "packing: " + pc.reason);
    auto hc = verify_hitting_set(g, hitting.vertices, ell, budget);
    check(hc.ok, "hitting set: " + hc.reason);
    check(nu <= tau, "nu > tau");
    check(tau <= ep, "tau > ep_bound(nu+1, ell)");
    const bool medium = g.order() >= ell && find_cycle_in_range(g, ell, std::min(6 * ell, g.order()), budget).has_value();
    if (!medium) check(tau <= ep_bound_no_medium(nu + 1), "tau > ep_bound_no_medium(nu+1) without medium cycles");
    auto rest = delete_vertices(g, hitting.vertices);
    auto rest_tw = exact_treewidth(rest.graph, budget);
    check(rest_tw.width <= ell - 2 || !rest_tw.exact, "tw(G - X) > ell - 2");
    if (!rest_tw.exact && rest_tw.width > ell - 2) throw BudgetExceeded("tw(G - X) undecided");
    auto tdc = validate_td(g, tw.td);
    check(tdc.ok, "treewidth decomposition: " + tdc.reason);
    check(tw.td.width() == tw.width, "treewidth decomposition width differs from reported width");
    auto oc = verify_outcome(g, spec, outcome);
    check(oc.ok, "outcome: " + oc.reason);
    int width = -1;
    if (!outcome.is_minor()) {
      width = outcome.decomposition().td.width();
      check(width <= gb, "decomposition width exceeds g_bound");
    }

    r.fields = {std::to_string(nu),
                std::to_string(tau),
                std::to_string(ep),
                std::to_string(tw.width),
                tw.exact ? "1" : "0",
                outcome.is_minor() ? "minor" : "td",
                outcome.is_minor() ? "NA" : std::to_string(width),
                std::to_string(gb),
                r.violations.empty() ? "ok" : "violation",
                ms(t_pack),
                ms(t_hit),
                ms(t_tw),
                ms(t_dec)};
    std::string cert;
    cert += "packing " + std::to_string(nu) + "\n" + format_cycles(packing.cycles);
    cert += "hitting " + std::to_string(tau) + join_ids(hitting.vertices.members()) + "\n";
    cert += "treewidth " + std::to_string(tw.width) + " " + (tw.exact ? "1" : "0") + "\n";
    cert += to_pace_td(tw.td, g.order());
    cert += "outcome\n" + format_outcome(outcome, g.order());
    r.cert = cert;
  } catch (const BudgetExceeded& e) {
    r = RowResult{};
    r.budget = true;
    r.fields = {"NA", "NA", "NA", "NA", "NA", "NA", "NA", std::to_string(g_bound(spec.h(), spec.k())),
                "budget", "NA", "NA", "NA", "NA"};
    r.cert = std::string("budget ") + e.what() + "\n";
  } catch (const Error& e) {
    r = RowResult{};
    r.violations.push_back(id + " ell=" + std::to_string(ell) + ": " + e.what());
    r.fields = {"NA", "NA", "NA", "NA", "NA", "NA", "NA", std::to_string(g_bound(spec.h(), spec.k())),
                "violation", "NA", "NA", "NA", "NA"};
    r.cert = std::string("violation ") + e.what() + "\n";
  }
  return r;
}

}  // namespace

void for_each_corpus_graph(const std::string& corpus, std::uint64_t seed, const std::function<void(const Graph&)>& fn) {
  for (const std::string& raw : split(corpus, ';')) {
    const std::string entry = trim(raw);
    if (entry.empty()) continue;
    const auto colon = entry.find(':');
    if (colon == std::string::npos) throw InvalidArgument("bad corpus entry '" + entry + "'");
    const std::string kind = entry.substr(0, colon);
    const std::string arg = entry.substr(colon + 1);
    if (kind == "connected" || kind == "all") {
      const int max_n = parse_count(arg, entry);
      for (int n = 1; n <= max_n; ++n) {
        for (std::uint64_t code : enumerate_graph_codes(n, kind == "connected")) fn(graph_from_code(n, code));
      }
    } else if (kind == "g6") {
      fn(parse_graph6(arg));
    } else if (kind == "file") {
      for (const Graph& g : parse_graph6_lines(read_file(arg))) fn(g);
    } else if (kind == "gen") {
      std::vector<std::string> args;
      std::istringstream in(arg);
      for (std::string tok; in >> tok;) args.push_back(tok);
      fn(generate(args, seed));
    } else {
      throw InvalidArgument("unknown corpus kind '" + kind + "'");
    }
  }
}

SweepSummary run_duality_sweep(const SweepConfig& config) {
  if (config.ells.empty()) throw InvalidArgument("sweep needs at least one ell");
  for (int ell : config.ells) {
    if (ell < 3) throw InvalidArgument("ell must be >= 3");
  }
  std::ofstream csv(config.out_path, std::ios::binary);
  if (!csv) throw InvalidArgument("cannot write '" + config.out_path + "'");
  std::filesystem::remove_all(certs_dir(config.out_path));
  std::filesystem::create_directories(certs_dir(config.out_path));
  csv << kSweepHeader << "\n";

  SweepSummary summary;
  for_each_corpus_graph(config.corpus, config.seed, [&](const Graph& g) {
    for (int ell : config.ells) {
      const CycleFamilySpec spec = config.spec ? *config.spec : CycleFamilySpec({ell, ell});
      RowResult r = evaluate_row(g, ell, spec, config.budget);
      const std::string id = to_graph6(g);
      csv << id << "," << g.order() << "," << g.size() << "," << ell;
      for (const auto& f : r.fields) csv << "," << f;
      csv << "\n";
      std::ofstream cert(cert_path(config.out_path, summary.rows), std::ios::binary);
      cert << "graph " << id << "\nell " << ell << "\nspec " << spec.to_string() << "\n" << r.cert;
      ++summary.rows;
      if (r.budget) ++summary.budget_rows;
      if (!r.violations.empty()) {
        ++summary.violations;
        summary.messages.insert(summary.messages.end(), r.violations.begin(), r.violations.end());
      }
    }
  });
  return summary;
}

namespace {

/// Line-oriented reader over a certificate file.
class CertReader {
 public:
  explicit CertReader(const std::string& text) : in_(text) {}

  std::string expect(const std::string& key) {
    std::string line;
    if (!std::getline(in_, line) || line.rfind(key, 0) != 0) throw ParseError("certificate: expected '" + key + "'");
    return trim(line.substr(key.size()));
  }

  std::string line() {
    std::string l;
    if (!std::getline(in_, l)) throw ParseError("certificate truncated");
    return l;
  }

  std::string until(const std::string& marker) {
    std::string out, l;
    while (std::getline(in_, l)) {
      if (l == marker) return out;
      out += l + "\n";
    }
    throw ParseError("certificate: missing '" + marker + "'");
  }

  std::string rest() {
    std::ostringstream ss;
    ss << in_.rdbuf();
    return ss.str();
  }

 private:
  std::istringstream in_;
};

std::vector<Vertex> parse_ids(const std::string& s) {
  std::vector<Vertex> out;
  std::istringstream in(s);
  for (Vertex v; in >> v;) out.push_back(v);
  return out;
}

}  // namespace

SweepSummary verify_sweep(const std::string& csv_path, std::uint64_t budget) {
  std::istringstream csv(read_file(csv_path));
  std::string line;
  if (!std::getline(csv, line) || line != kSweepHeader) throw ParseError("sweep CSV: unexpected header");
  SweepSummary summary;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    const int row = summary.rows++;
    const auto f = split(line, ',');
    auto fail = [&](const std::string& why) {
      ++summary.violations;
      summary.messages.push_back("row " + std::to_string(row) + " (" + (f.empty() ? "" : f[0]) + "): " + why);
    };
    if (f.size() != 17) {
      fail("expected 17 fields");
      continue;
    }
    try {
      CertReader cert(read_file(cert_path(csv_path, row)));
      const Graph g = parse_graph6(cert.expect("graph "));
      if (to_graph6(g) != f[0]) fail("graph differs from graph_id");
      const int ell = std::stoi(cert.expect("ell "));
      const CycleFamilySpec spec = CycleFamilySpec::parse(cert.expect("spec "));
      if (std::to_string(ell) != f[3]) fail("ell differs");
      if (std::to_string(g.order()) != f[1] || std::to_string(g.size()) != f[2]) fail("n or m differs");
      if (f[12] == "budget") {
        ++summary.budget_rows;
        continue;
      }
      Budget b(budget);
      const int nu = std::stoi(cert.expect("packing "));
      CyclePacking packing;
      for (int i = 0; i < nu; ++i) {
        auto cs = parse_cycles(cert.line());
        if (cs.size() != 1) throw ParseError("certificate: bad packing cycle");
        packing.cycles.push_back(cs[0]);
      }
      auto hit_ids = parse_ids(cert.expect("hitting "));
      if (hit_ids.empty()) throw ParseError("certificate: bad hitting line");
      const int tau = hit_ids.front();
      const VertexSet x(std::vector<Vertex>(hit_ids.begin() + 1, hit_ids.end()));
      auto tw_fields = parse_ids(cert.expect("treewidth "));
      if (tw_fields.size() != 2) throw ParseError("certificate: bad treewidth line");
      const auto td = parse_pace_td(cert.until("outcome"));
      const Outcome outcome = parse_outcome(cert.rest());

      if (auto c = verify_packing(g, packing, ell); !c) fail("packing: " + c.reason);
      if (std::to_string(nu) != f[4]) fail("nu differs");
      if (static_cast<int>(x.size()) != tau || std::to_string(tau) != f[5]) fail("tau differs");
      if (auto c = verify_hitting_set(g, x, ell, b); !c) fail("hitting set: " + c.reason);
      if (!(nu <= tau && tau <= ep_bound(nu + 1, ell))) fail("nu <= tau <= ep_bound(nu+1, ell) fails");
      if (std::to_string(ep_bound(nu + 1, ell)) != f[6]) fail("ep_bound differs");
      if (td.n != g.order()) fail("td vertex count differs");
      if (auto c = validate_td(g, td.td); !c) fail("treewidth decomposition: " + c.reason);
      if (std::to_string(td.td.width()) != f[7] || std::to_string(tw_fields[0]) != f[7]) fail("treewidth differs");
      if (std::to_string(tw_fields[1]) != f[8]) fail("tw_exact differs");
      if (auto c = verify_outcome(g, spec, outcome); !c) fail("outcome: " + c.reason);
      if ((outcome.is_minor() ? "minor" : "td") != f[9]) fail("outcome tag differs");
      const std::int64_t gb = g_bound(spec.h(), spec.k());
      if (std::to_string(gb) != f[11]) fail("g_bound differs");
      if (!outcome.is_minor()) {
        const int w = outcome.decomposition().td.width();
        if (std::to_string(w) != f[10]) fail("width differs");
        if (w > gb) fail("width exceeds g_bound");
      }
      if (f[12] != "ok") fail("row status is '" + f[12] + "'");
    } catch (const Error& e) {
      fail(e.what());
    } catch (const std::logic_error& e) {
      fail(std::string("malformed field: ") + e.what());
    }
  }
  return summary;
}

}  // namespace cyclewidth
