#include "happy/instance_io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "happy/errors.hpp"

namespace happy {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && (raw[pos] == ' ' || raw[pos] == '\t' || raw[pos] == '\r')) ++pos;
      std::size_t stop = pos;
      while (stop < raw.size() && raw[stop] != ' ' && raw[stop] != '\t' && raw[stop] != '\r') {
        ++stop;
      }
      if (stop > pos) line.tokens.push_back(raw.substr(pos, stop - pos));
      pos = stop;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long to_integer(std::string_view token, std::size_t line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t lo, std::size_t hi) {
  if (line.tokens.size() < lo || line.tokens.size() > hi) {
    throw ParseError(line.number, "wrong number of fields for '" +
                                      std::string(line.tokens.front()) + "' record");
  }
}

int vertex_id(std::string_view token, int n, std::size_t line) {
  const long long id = to_integer(token, line);
  if (id < 1 || id > n) throw ParseError(line, "vertex id " + std::string(token) + " out of range");
  return static_cast<int>(id);
}

struct Header {
  int n;
  long long m;
  long long third;
  std::size_t line;
};

Header read_header(const std::vector<Line>& lines, std::string_view kind) {
  if (lines.empty()) throw ParseError(1, "missing header");
  const Line& first = lines.front();
  if (first.tokens[0] != "p" || first.tokens.size() != 5 || first.tokens[1] != kind) {
    throw ParseError(first.number, "expected header 'p " + std::string(kind) + " ...'");
  }
  const long long n = to_integer(first.tokens[2], first.number);
  const long long m = to_integer(first.tokens[3], first.number);
  const long long third = to_integer(first.tokens[4], first.number);
  if (n < 0 || n > 100'000'000 || m < 0) throw ParseError(first.number, "bad header counts");
  return {static_cast<int>(n), m, third, first.number};
}

// Reads an `e u v [w]` record into edges, rejecting self-loops and duplicates.
void read_edge(const Line& line, int n, bool weighted, std::set<std::pair<int, int>>& seen,
               std::vector<Edge>& edges) {
  expect_arity(line, 3, weighted ? 4 : 3);
  int u = vertex_id(line.tokens[1], n, line.number);
  int v = vertex_id(line.tokens[2], n, line.number);
  if (u == v) throw ParseError(line.number, "self-loop");
  if (u > v) std::swap(u, v);
  if (!seen.insert({u, v}).second) throw ParseError(line.number, "duplicate edge");
  Rational weight(1);
  if (line.tokens.size() == 4) {
    try {
      weight = parse_rational(line.tokens[3]);
    } catch (const std::exception&) {
      throw ParseError(line.number, "bad edge weight '" + std::string(line.tokens[3]) + "'");
    }
  }
  edges.push_back({u, v, weight});
}

void check_edge_count(const Header& header, std::size_t actual) {
  if (static_cast<long long>(actual) != header.m) {
    throw ParseError(header.line, "header announces " + std::to_string(header.m) +
                                      " edges but the file has " + std::to_string(actual));
  }
}

}  // namespace

HappyInstance parse_instance(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  const Header header = read_header(lines, "happy");
  const int n = header.n;
  if (header.third < 1 || header.third > 1'000'000) {
    throw ParseError(header.line, "k must be at least 1");
  }
  const int k = static_cast<int>(header.third);

  HappyInstance out;
  out.spec = ColorSpec::uncolored(n, k);
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  bool mode_seen = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string_view tag = line.tokens[0];
    if (tag == "v") {
      expect_arity(line, 3, 3);
      const int v = vertex_id(line.tokens[1], n, line.number);
      const long long c = to_integer(line.tokens[2], line.number);
      if (c < 1 || c > k) throw ParseError(line.number, "color out of range");
      if (out.spec.precolor[v] != kUncolored) throw ParseError(line.number, "vertex colored twice");
      out.spec.precolor[v] = static_cast<Color>(c);
    } else if (tag == "e") {
      read_edge(line, n, true, seen, edges);
    } else if (tag == "mode") {
      if (mode_seen) throw ParseError(line.number, "duplicate mode line");
      mode_seen = true;
      if (line.tokens.size() == 2 && line.tokens[1] == "strict") {
        out.mode = HappinessMode::strict();
      } else if (line.tokens.size() == 3 && line.tokens[1] == "soft") {
        try {
          out.mode = HappinessMode::soft(parse_rational(line.tokens[2]));
        } catch (const std::exception&) {
          throw ParseError(line.number, "bad soft threshold '" + std::string(line.tokens[2]) + "'");
        }
      } else if (line.tokens.size() == 3 && line.tokens[1] == "hard") {
        const long long q = to_integer(line.tokens[2], line.number);
        if (q < 1 || q > 1'000'000'000) throw ParseError(line.number, "hard threshold must be positive");
        out.mode = HappinessMode::hard(static_cast<int>(q));
      } else {
        throw ParseError(line.number, "unknown mode");
      }
    } else if (tag == "p") {
      throw ParseError(line.number, "duplicate header");
    } else {
      throw ParseError(line.number, "unknown record '" + std::string(tag) + "'");
    }
  }
  check_edge_count(header, edges.size());
  out.graph = Graph(n, std::move(edges));
  return out;
}

std::string write_instance(const HappyInstance& instance) {
  const Graph& g = instance.graph;
  std::ostringstream out;
  out << "p happy " << g.vertex_count() << ' ' << g.edge_count() << ' ' << instance.spec.k << '\n';
  out << "mode " << instance.mode.to_string() << '\n';
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    if (instance.spec.is_precolored(v)) out << "v " << v << ' ' << instance.spec.precolor[v] << '\n';
  }
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v;
    if (e.weight != Rational(1)) out << ' ' << format_rational(e.weight);
    out << '\n';
  }
  return out.str();
}

MultiwayCutInstance parse_multiway_cut(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  const Header header = read_header(lines, "mwc");
  const int n = header.n;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  MultiwayCutInstance out;
  std::set<int> terminal_set;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string_view tag = line.tokens[0];
    if (tag == "t") {
      expect_arity(line, 2, 2);
      const int v = vertex_id(line.tokens[1], n, line.number);
      if (!terminal_set.insert(v).second) throw ParseError(line.number, "duplicate terminal");
      out.terminals.push_back(v);
    } else if (tag == "e") {
      read_edge(line, n, false, seen, edges);
    } else if (tag == "p") {
      throw ParseError(line.number, "duplicate header");
    } else {
      throw ParseError(line.number, "unknown record '" + std::string(tag) + "'");
    }
  }
  check_edge_count(header, edges.size());
  if (static_cast<long long>(out.terminals.size()) != header.third) {
    throw ParseError(header.line, "header announces " + std::to_string(header.third) +
                                      " terminals but the file has " +
                                      std::to_string(out.terminals.size()));
  }
  out.graph = Graph(n, std::move(edges));
  return out;
}

std::string write_multiway_cut(const MultiwayCutInstance& instance) {
  const Graph& g = instance.graph;
  std::ostringstream out;
  out << "p mwc " << g.vertex_count() << ' ' << g.edge_count() << ' ' << instance.terminals.size()
      << '\n';
  for (VertexId t : instance.terminals) out << "t " << t << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace happy
