#include "formats.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace cyclewidth {

namespace {

constexpr int kG6Bias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto pos = text.find('\n');
    std::string_view line = text.substr(0, pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::string_view what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected integer for " + std::string(what) + ", got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

GraphFormat parse_format_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "gr" || name == "dimacs-gr" || name == "pace") return GraphFormat::PaceGr;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

Graph parse_graph(GraphFormat format, std::string_view bytes) {
  return format == GraphFormat::Graph6 ? parse_graph6(bytes) : parse_pace_gr(bytes);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? to_graph6(g) + "\n" : to_pace_gr(g);
}

// graph6 -------------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126");
  }
  std::size_t pos = 0;
  auto next6 = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw ParseError("graph6: truncated vertex count");
    return static_cast<std::uint64_t>(text[pos++] - kG6Bias);
  };
  std::uint64_t n = next6();
  if (n == 63) {
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next6();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | next6();
    }
  }
  if (n > (1u << 20)) throw ParseError("graph6: vertex count too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  if (text.size() - pos != need) {
    throw ParseError("graph6: expected " + std::to_string(need) + " adjacency bytes, got " +
                     std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kG6Bias;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kG6Bias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kG6Bias));
  }
  int acc = 0, filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Bias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Bias));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  for (auto line : split_lines(text)) {
    line = trim(line);
    if (!line.empty()) out.push_back(parse_graph6(line));
  }
  return out;
}

// PACE .gr -------------------------------------------------------------------

Graph parse_pace_gr(std::string_view text) {
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  for (auto line : split_lines(text)) {
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError("gr: duplicate header");
      if (tok.size() != 4 || tok[1] != "tw") throw ParseError("gr: malformed header, expected 'p tw <n> <m>'");
      n = to_int(tok[2], "vertex count");
      m = to_int(tok[3], "edge count");
      if (n < 0 || m < 0) throw ParseError("gr: negative count in header");
      continue;
    }
    if (n < 0) throw ParseError("gr: edge line before header");
    if (tok.size() != 2) throw ParseError("gr: edge line must have exactly two endpoints: '" + std::string(line) + "'");
    long long u = to_int(tok[0], "edge endpoint"), v = to_int(tok[1], "edge endpoint");
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError("gr: vertex id out of range in '" + std::string(line) + "'");
    if (u == v) throw ParseError("gr: self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (n < 0) throw ParseError("gr: missing header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("gr: header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string to_pace_gr(const Graph& g) {
  std::string out = "p tw " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u + 1);
    out += ' ';
    out += std::to_string(v + 1);
    out += '\n';
  }
  return out;
}

// PACE .td -------------------------------------------------------------------

ParsedTd parse_pace_td(std::string_view text) {
  ParsedTd out;
  long long nbags = -1, maxbag = -1;
  std::vector<char> seen;
  for (auto line : split_lines(text)) {
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "s") {
      if (nbags >= 0) throw ParseError("td: duplicate header");
      if (tok.size() != 5 || tok[1] != "td") throw ParseError("td: malformed header, expected 's td <bags> <max bag> <n>'");
      nbags = to_int(tok[2], "bag count");
      maxbag = to_int(tok[3], "max bag size");
      out.n = static_cast<int>(to_int(tok[4], "vertex count"));
      if (nbags < 0 || maxbag < 0 || out.n < 0) throw ParseError("td: negative count in header");
      out.td.bags.assign(static_cast<std::size_t>(nbags), {});
      seen.assign(static_cast<std::size_t>(nbags), 0);
      continue;
    }
    if (nbags < 0) throw ParseError("td: content before header");
    if (tok[0] == "b") {
      if (tok.size() < 2) throw ParseError("td: bag line without id");
      long long id = to_int(tok[1], "bag id");
      if (id < 1 || id > nbags) throw ParseError("td: bag id out of range");
      if (seen[static_cast<std::size_t>(id - 1)]) throw ParseError("td: bag " + std::to_string(id) + " listed twice");
      seen[static_cast<std::size_t>(id - 1)] = 1;
      auto& bag = out.td.bags[static_cast<std::size_t>(id - 1)];
      for (std::size_t i = 2; i < tok.size(); ++i) {
        long long v = to_int(tok[i], "bag vertex");
        if (v < 1 || v > out.n) throw ParseError("td: vertex id out of range in bag " + std::to_string(id));
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      continue;
    }
    if (tok.size() != 2) throw ParseError("td: malformed tree edge line '" + std::string(line) + "'");
    long long a = to_int(tok[0], "tree node"), b = to_int(tok[1], "tree node");
    if (a < 1 || b < 1 || a > nbags || b > nbags) throw ParseError("td: tree edge references unknown bag");
    out.td.edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (nbags < 0) throw ParseError("td: missing header");
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw ParseError("td: bag " + std::to_string(i + 1) + " missing");
  }
  if (static_cast<long long>(out.td.max_bag_size()) != maxbag) {
    throw ParseError("td: header announces max bag size " + std::to_string(maxbag) + ", found " +
                     std::to_string(out.td.max_bag_size()));
  }
  return out;
}

std::string to_pace_td(const TreeDecomposition& td, int n) {
  TreeDecomposition c = td;
  c.normalize();
  std::string out = "s td " + std::to_string(c.bags.size()) + " " + std::to_string(c.max_bag_size()) + " " +
                    std::to_string(n) + "\n";
  for (std::size_t i = 0; i < c.bags.size(); ++i) {
    out += "b " + std::to_string(i + 1);
    for (Vertex v : c.bags[i]) out += " " + std::to_string(v + 1);
    out += '\n';
  }
  for (auto [a, b] : c.edges) out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
  return out;
}

}  // namespace cyclewidth
