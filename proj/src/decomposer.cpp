#include "decomposer.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"
#include "formats.hpp"
#include "hitting.hpp"
#include "treewidth.hpp"

namespace cyclewidth {

namespace {

std::vector<Vertex> lift(const std::vector<Vertex>& ids, const std::vector<Vertex>& to_root) {
  std::vector<Vertex> out;
  out.reserve(ids.size());
  for (Vertex v : ids) out.push_back(to_root[static_cast<std::size_t>(v)]);
  return out;
}

std::vector<Vertex> compose(const std::vector<Vertex>& to_parent, const std::vector<Vertex>& parent_to_root) {
  return lift(to_parent, parent_to_root);
}

void require_width(const TreeDecomposition& td, std::int64_t bound, const char* where) {
  if (td.width() > bound) {
    throw TheoremViolation(std::string(where) + ": width " + std::to_string(td.width()) + " exceeds " +
                           std::to_string(bound));
  }
}

Outcome recurse(const Graph& g, const std::vector<Vertex>& to_root, const CycleFamilySpec& spec, Budget& budget,
                std::vector<BranchRecord>& trace) {
  const int ell = spec.longest();
  const int h = spec.h();
  const int k = spec.k();
  const int n = g.order();

  if (k == 1) {
    trace.push_back({BranchRecord::Kind::BaseCase, ell, 0, {}, 0});
    if (n >= ell) {
      if (auto c = find_cycle_in_range(g, ell, n, budget)) {
        return {MinorModel{{*c}, {0}}, {}};
      }
    }
    Decomposition d{birmele_decomposition(g, ell, budget), g_bound(h, 1)};
    require_width(d.td, ell - 2, "base case");
    return {std::move(d), {}};
  }

  if (n >= ell) {
    if (auto c = find_cycle_in_range(g, ell, std::min(6 * ell, n), budget)) {
      trace.push_back({BranchRecord::Kind::MediumCycleRemoved, ell, 6 * ell, lift(c->vertices, to_root), 0});
      const CycleFamilySpec rest_spec = spec.without_longest();
      const std::int64_t inner_bound = g_bound(rest_spec.h(), k - 1);
      const std::int64_t bound = g_bound(h, k);
      if (inner_bound + 6 * static_cast<std::int64_t>(h - rest_spec.h()) > bound) {
        throw TheoremViolation("g(h', k-1) + 6(h - h') > g(h, k) for h=" + std::to_string(h) + ", k=" + std::to_string(k));
      }
      const VertexSet removed(c->vertices);
      auto sub = delete_vertices(g, removed);
      Outcome inner = recurse(sub.graph, compose(sub.to_original, to_root), rest_spec, budget, trace);
      if (inner.is_minor()) {
        MinorModel m;
        m.cycles.push_back(*c);
        m.assignment.push_back(0);
        const auto& im = inner.minor();
        for (std::size_t i = 0; i < im.cycles.size(); ++i) {
          m.cycles.push_back(canonical_cycle(lift(im.cycles[i].vertices, sub.to_original)));
          m.assignment.push_back(im.assignment[i] + 1);
        }
        return {std::move(m), {}};
      }
      const auto& inner_td = inner.decomposition().td;
      Decomposition d{td_add_to_all_bags(inner_td, removed, sub.to_original), bound};
      require_width(d.td, inner_td.width() + c->length(), "medium-cycle branch");
      require_width(d.td, bound, "medium-cycle branch");
      return {std::move(d), {}};
    }
  }

  auto packing = max_long_cycle_packing(g, ell, k, budget);
  if (packing.size() >= k) {
    auto cycles = packing.cycles;
    std::stable_sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) { return a.length() > b.length(); });
    cycles.resize(static_cast<std::size_t>(k));
    MinorModel m;
    for (int i = 0; i < k; ++i) {
      m.cycles.push_back(cycles[static_cast<std::size_t>(i)]);
      m.assignment.push_back(i);
    }
    return {std::move(m), {}};
  }
  const int r = packing.size();
  auto x = min_hitting_set_long_cycles(g, ell, budget);
  if (x.size() > ep_bound_no_medium(r + 1)) {
    throw TheoremViolation("hitting set of size " + std::to_string(x.size()) + " exceeds bound " +
                           std::to_string(ep_bound_no_medium(r + 1)) + " for r=" + std::to_string(r));
  }
  trace.push_back({BranchRecord::Kind::HittingSet, ell, 0, lift(x.vertices.members(), to_root), r});
  auto rest = delete_vertices(g, x.vertices);
  auto base = birmele_decomposition(rest.graph, ell, budget);
  const std::int64_t bound = g_bound(h, k);
  if (ep_bound_no_medium(r + 1) + ell - 2 > bound) {
    throw TheoremViolation("g(0, r+1) + ell - 2 > g(h, k)");
  }
  Decomposition d{td_add_to_all_bags(base, x.vertices, rest.to_original), bound};
  require_width(d.td, bound, "hitting-set branch");
  return {std::move(d), {}};
}

const char* kind_name(BranchRecord::Kind k) {
  switch (k) {
    case BranchRecord::Kind::BaseCase:
      return "base";
    case BranchRecord::Kind::MediumCycleRemoved:
      return "medium";
    case BranchRecord::Kind::HittingSet:
      return "hitting";
  }
  return "?";
}

}  // namespace

Outcome decompose(const Graph& g, const CycleFamilySpec& spec, Budget& budget) {
  std::vector<Vertex> identity(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) identity[static_cast<std::size_t>(v)] = v;
  std::vector<BranchRecord> trace;
  try {
    Outcome o = recurse(g, identity, spec, budget, trace);
    o.trace = std::move(trace);
    return o;
  } catch (const BudgetExceeded& e) {
    std::string steps;
    for (const auto& rec : trace) steps += std::string(" ") + kind_name(rec.kind) + "(" + std::to_string(rec.ell) + ")";
    throw BudgetExceeded(std::string(e.what()) + "; trace so far:" + (steps.empty() ? " (none)" : steps));
  }
}

CheckResult verify_outcome(const Graph& g, const CycleFamilySpec& spec, const Outcome& o) {
  if (o.is_minor()) return verify_minor_model(g, spec, o.minor());
  const auto& d = o.decomposition();
  const std::int64_t bound = g_bound(spec.h(), spec.k());
  if (d.claimed_bound != bound) {
    return CheckResult::fail("claimed bound " + std::to_string(d.claimed_bound) + " differs from g(h,k) = " +
                             std::to_string(bound));
  }
  if (auto r = validate_td(g, d.td); !r) return r;
  if (d.td.width() > bound) {
    return CheckResult::fail("width " + std::to_string(d.td.width()) + " exceeds g(h,k) = " + std::to_string(bound));
  }
  return CheckResult::pass();
}

std::int64_t trace_width_bound(const std::vector<BranchRecord>& trace) {
  std::int64_t total = 0;
  for (const auto& rec : trace) {
    switch (rec.kind) {
      case BranchRecord::Kind::BaseCase:
        total += rec.ell - 2;
        break;
      case BranchRecord::Kind::MediumCycleRemoved:
        total += 6 * rec.ell;
        break;
      case BranchRecord::Kind::HittingSet:
        total += static_cast<std::int64_t>(rec.vertices.size()) + rec.ell - 2;
        break;
    }
  }
  return total;
}

std::string format_outcome(const Outcome& o, int n) {
  std::string out;
  if (o.is_minor()) {
    const auto& m = o.minor();
    std::vector<Cycle> ordered(m.cycles.size());
    for (std::size_t i = 0; i < m.cycles.size(); ++i) ordered[static_cast<std::size_t>(m.assignment[i])] = m.cycles[i];
    out = "MINOR\n" + format_cycles(ordered);
  } else {
    const auto& d = o.decomposition();
    out = "TD " + std::to_string(d.td.width()) + " " + std::to_string(d.claimed_bound) + "\n" + to_pace_td(d.td, n);
  }
  for (const auto& rec : o.trace) {
    out += std::string("TRACE ") + kind_name(rec.kind) + " " + std::to_string(rec.ell);
    if (rec.kind == BranchRecord::Kind::MediumCycleRemoved) out += " " + std::to_string(rec.window_hi);
    if (rec.kind == BranchRecord::Kind::HittingSet) out += " " + std::to_string(rec.packing);
    for (Vertex v : rec.vertices) out += " " + std::to_string(v);
    out += '\n';
  }
  return out;
}

Outcome parse_outcome(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  while (std::getline(in, header) && header.empty()) {
  }
  std::string body;
  std::vector<BranchRecord> trace;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("TRACE", 0) == 0) {
      std::istringstream ls(line.substr(5));
      std::string kind;
      BranchRecord rec;
      if (!(ls >> kind >> rec.ell)) throw ParseError("malformed TRACE line '" + line + "'");
      if (kind == "base") {
        rec.kind = BranchRecord::Kind::BaseCase;
      } else if (kind == "medium") {
        rec.kind = BranchRecord::Kind::MediumCycleRemoved;
        if (!(ls >> rec.window_hi)) throw ParseError("TRACE medium needs a window bound");
      } else if (kind == "hitting") {
        rec.kind = BranchRecord::Kind::HittingSet;
        if (!(ls >> rec.packing)) throw ParseError("TRACE hitting needs a packing size");
      } else {
        throw ParseError("unknown TRACE kind '" + kind + "'");
      }
      Vertex v;
      while (ls >> v) rec.vertices.push_back(v);
      if (!ls.eof()) throw ParseError("malformed TRACE line '" + line + "'");
      trace.push_back(std::move(rec));
    } else {
      if (!trace.empty()) throw ParseError("certificate body after TRACE lines");
      body += line;
      body += '\n';
    }
  }
  Outcome o;
  o.trace = std::move(trace);
  if (header == "MINOR") {
    MinorModel m;
    m.cycles = parse_cycles(body);
    for (std::size_t i = 0; i < m.cycles.size(); ++i) m.assignment.push_back(static_cast<int>(i));
    o.result = std::move(m);
    return o;
  }
  std::istringstream hs(header);
  std::string tag;
  long long width = 0, bound = 0;
  if (!(hs >> tag >> width >> bound) || tag != "TD") throw ParseError("certificate header must be MINOR or TD <width> <bound>");
  auto parsed = parse_pace_td(body);
  if (parsed.td.width() != width) throw ParseError("TD header width disagrees with the decomposition");
  o.result = Decomposition{std::move(parsed.td), bound};
  return o;
}

}  // namespace cyclewidth
