#include "oim/problem_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace oim {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

/// Calls f(line_number, tokens) for every non-blank line.
template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    ++line_no;
    const auto tokens = split_ws(text.substr(pos, end - pos));
    if (!tokens.empty()) f(line_no, tokens);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

template <class T>
bool parse_number(std::string_view token, T& out) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t v = 0;
  if (!parse_number(token, v))
    throw ParseError(ParseErrorKind::MalformedLine, line,
                     std::string("expected a non-negative integer ") + what + ", got '" +
                         std::string(token) + "'");
  return v;
}

std::uint64_t pair_key(std::size_t u, std::size_t v) {
  return (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
}

/// Validates a 1-based endpoint and returns it 0-based.
std::size_t endpoint(std::string_view token, std::size_t node_count, std::size_t line) {
  long long v = 0;
  if (!parse_number(token, v))
    throw ParseError(ParseErrorKind::MalformedLine, line,
                     "expected a node index, got '" + std::string(token) + "'");
  if (v < 1 || static_cast<unsigned long long>(v) > node_count)
    throw ParseError(ParseErrorKind::IndexOutOfRange, line,
                     "node " + std::to_string(v) + " outside 1.." + std::to_string(node_count));
  return static_cast<std::size_t>(v - 1);
}

/// Uniform integer in [0, bound) from a 64-bit engine, by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedLine: return "malformed line";
    case ParseErrorKind::DuplicateEdge: return "duplicate edge";
    case ParseErrorKind::IndexOutOfRange: return "index out of range";
    case ParseErrorKind::CountMismatch: return "edge count mismatch";
    case ParseErrorKind::SelfLoop: return "self-loop";
    case ParseErrorKind::MissingProblemLine: return "missing problem line";
    case ParseErrorKind::UnknownDirective: return "unknown directive";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) +
                         (line > 0 ? " at line " + std::to_string(line) : std::string()) + ": " +
                         detail),
      kind_(kind),
      line_(line) {}

Graph parse_gset(std::string_view text) {
  bool have_header = false;
  std::size_t node_count = 0;
  std::size_t declared_edges = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    if (!have_header) {
      if (tok.size() != 2)
        throw ParseError(ParseErrorKind::MalformedLine, line,
                         "header must be '<nodes> <edges>'");
      node_count = parse_count(tok[0], line, "node count");
      declared_edges = parse_count(tok[1], line, "edge count");
      if (node_count == 0)
        throw ParseError(ParseErrorKind::MalformedLine, line, "graph has no nodes");
      edges.reserve(declared_edges);
      seen.reserve(declared_edges * 2);
      have_header = true;
      return;
    }
    if (tok.size() < 2 || tok.size() > 3)
      throw ParseError(ParseErrorKind::MalformedLine, line, "edge line must be 'u v [w]'");
    const std::size_t u = endpoint(tok[0], node_count, line);
    const std::size_t v = endpoint(tok[1], node_count, line);
    double w = 1.0;
    if (tok.size() == 3 && (!parse_number(tok[2], w) || !std::isfinite(w)))
      throw ParseError(ParseErrorKind::MalformedLine, line,
                       "bad weight '" + std::string(tok[2]) + "'");
    if (u == v)
      throw ParseError(ParseErrorKind::SelfLoop, line, "self-loop on node " + std::to_string(u + 1));
    if (!seen.insert(pair_key(u, v)).second)
      throw ParseError(ParseErrorKind::DuplicateEdge, line,
                       "edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                           " already listed");
    edges.push_back({u, v, w});
  });

  if (!have_header) throw ParseError(ParseErrorKind::MalformedLine, 0, "empty input");
  if (edges.size() != declared_edges)
    throw ParseError(ParseErrorKind::CountMismatch, 0,
                     "header declares " + std::to_string(declared_edges) + " edges but " +
                         std::to_string(edges.size()) + " were listed");
  return Graph(node_count, std::move(edges));
}

Graph parse_dimacs_col(std::string_view text) {
  bool have_problem = false;
  std::size_t node_count = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    const std::string_view directive = tok[0];
    if (directive == "c") return;
    if (directive == "p") {
      if (have_problem)
        throw ParseError(ParseErrorKind::MalformedLine, line, "second problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw ParseError(ParseErrorKind::MalformedLine, line,
                         "problem line must be 'p edge <nodes> <edges>'");
      node_count = parse_count(tok[2], line, "node count");
      const std::size_t m = parse_count(tok[3], line, "edge count");
      if (node_count == 0)
        throw ParseError(ParseErrorKind::MalformedLine, line, "graph has no nodes");
      edges.reserve(m);
      have_problem = true;
      return;
    }
    if (directive == "e") {
      if (!have_problem)
        throw ParseError(ParseErrorKind::MissingProblemLine, line,
                         "edge listed before the 'p edge' line");
      if (tok.size() != 3)
        throw ParseError(ParseErrorKind::MalformedLine, line, "edge line must be 'e u v'");
      const std::size_t u = endpoint(tok[1], node_count, line);
      const std::size_t v = endpoint(tok[2], node_count, line);
      if (u == v)
        throw ParseError(ParseErrorKind::SelfLoop, line,
                         "self-loop on node " + std::to_string(u + 1));
      if (seen.insert(pair_key(u, v)).second) edges.push_back({u, v, 1.0});
      return;
    }
    throw ParseError(ParseErrorKind::UnknownDirective, line,
                     "unknown directive '" + std::string(directive) + "'");
  });

  if (!have_problem)
    throw ParseError(ParseErrorKind::MissingProblemLine, 0, "no 'p edge' line found");
  return Graph(node_count, std::move(edges));
}

void write_gset(std::ostream& out, const Graph& g) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  char buf[64];
  for (const Edge& e : g.edges()) {
    double whole = 0.0;
    if (std::modf(e.weight, &whole) == 0.0 && std::abs(e.weight) < 1e15) {
      out << e.u + 1 << ' ' << e.v + 1 << ' ' << static_cast<long long>(e.weight) << '\n';
    } else {
      const auto res = std::to_chars(buf, buf + sizeof buf, e.weight);
      out << e.u + 1 << ' ' << e.v + 1 << ' ' << std::string_view(buf, res.ptr - buf) << '\n';
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProblemInstance::ProblemInstance(Graph g, ProblemKind k, int states, std::string name)
    : graph(std::move(g)), kind(k), n_states(states), source_name(std::move(name)) {
  if (kind == ProblemKind::MaxCut && n_states != 2)
    throw std::invalid_argument("max-cut instances have exactly 2 states");
  if (n_states < 2) throw std::invalid_argument("n_states must be at least 2");
}

CouplingMatrix build_maxcut_coupling(const Graph& g, StoragePolicy policy) {
  std::vector<CouplingEntry> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) pairs.push_back({e.u, e.v, e.weight});
  return CouplingMatrix::from_pairs(g.node_count(), pairs, policy);
}

CouplingMatrix build_coloring_coupling(const Graph& g, int n_states, StoragePolicy policy) {
  if (n_states < 2) throw std::invalid_argument("n_states must be at least 2");
  std::vector<CouplingEntry> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) pairs.push_back({e.u, e.v, 1.0});
  return CouplingMatrix::from_pairs(g.node_count(), pairs, policy);
}

CouplingMatrix build_coupling(const ProblemInstance& instance, StoragePolicy policy) {
  return instance.kind == ProblemKind::MaxCut
             ? build_maxcut_coupling(instance.graph, policy)
             : build_coloring_coupling(instance.graph, instance.n_states, policy);
}

Graph generate_colorable_graph(std::size_t n, std::size_t m, int n_states, std::uint64_t seed) {
  if (n_states < 2) throw std::invalid_argument("n_states must be at least 2");
  const auto groups = static_cast<std::size_t>(n_states);
  if (n < groups)
    throw std::invalid_argument("need at least as many nodes as colors");

  // Group g holds the nodes v with v % N == g.
  std::uint64_t same_group_pairs = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const std::uint64_t size = n / groups + (g < n % groups ? 1 : 0);
    same_group_pairs += size * (size - 1) / 2;
  }
  const std::uint64_t cross_pairs = std::uint64_t{n} * (n - 1) / 2 - same_group_pairs;
  if (m > cross_pairs)
    throw std::invalid_argument("requested " + std::to_string(m) + " edges but only " +
                                std::to_string(cross_pairs) + " cross-group pairs exist");

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  if (m * 2 <= cross_pairs) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m * 2);
    while (edges.size() < m) {
      const auto u = static_cast<std::size_t>(uniform_below(rng, n));
      const auto v = static_cast<std::size_t>(uniform_below(rng, n));
      if (u % groups == v % groups) continue;
      if (seen.insert(pair_key(u, v)).second) edges.push_back({std::min(u, v), std::max(u, v), 1.0});
    }
  } else {
    std::vector<Edge> all;
    all.reserve(cross_pairs);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (u % groups != v % groups) all.push_back({u, v, 1.0});
    for (std::size_t k = 0; k < m; ++k) {
      const auto pick = k + static_cast<std::size_t>(uniform_below(rng, all.size() - k));
      std::swap(all[k], all[pick]);
    }
    edges.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  return Graph(n, std::move(edges));
}

StateAssignment planted_coloring(std::size_t n, int n_states) {
  std::vector<int> states(n);
  for (std::size_t v = 0; v < n; ++v) states[v] = static_cast<int>(v % static_cast<std::size_t>(n_states));
  return StateAssignment(n_states, std::move(states));
}

Graph generate_random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  const auto threshold = static_cast<std::uint64_t>(
      std::ldexp(edge_probability, 53));
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if ((rng() >> 11) < threshold) edges.push_back({u, v, 1.0});
  return Graph(n, std::move(edges));
}

}  // namespace oim
