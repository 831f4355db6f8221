#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "oim/coupling.hpp"
#include "oim/types.hpp"

namespace oim {

enum class ParseErrorKind {
  MalformedLine,
  DuplicateEdge,
  IndexOutOfRange,
  CountMismatch,
  SelfLoop,
  MissingProblemLine,
  UnknownDirective,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);
  ParseErrorKind kind() const { return kind_; }
  /// 1-based line number; 0 when the error is not tied to one line.
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// G-set text: header `n m`, then `u v [w]` per edge, 1-based, LF or CRLF.
Graph parse_gset(std::string_view text);

/// DIMACS .col: `c` comments, one `p edge n m`, then `e u v` lines.
/// Repeated pairs in either orientation collapse into one unit edge.
Graph parse_dimacs_col(std::string_view text);

/// Writes G-set text with integer weights where possible.
void write_gset(std::ostream& out, const Graph& g);

std::string read_file(const std::string& path);

struct ProblemInstance {
  Graph graph;
  ProblemKind kind = ProblemKind::MaxCut;
  int n_states = 2;
  std::string source_name;

  ProblemInstance(Graph g, ProblemKind k, int states, std::string name);
};

/// J_uv = J_vu = +w for each edge; anti-phase neighbours lower the energy.
CouplingMatrix build_maxcut_coupling(const Graph& g,
                                     StoragePolicy policy = StoragePolicy::Auto);

/// J_uv = J_vu = +1 for each edge, pushing neighbours onto different phases.
CouplingMatrix build_coloring_coupling(const Graph& g, int n_states,
                                       StoragePolicy policy = StoragePolicy::Auto);

CouplingMatrix build_coupling(const ProblemInstance& instance,
                              StoragePolicy policy = StoragePolicy::Auto);

/// Random graph with a planted N-coloring: node v belongs to group v % N and
/// m distinct unit edges are drawn uniformly from the cross-group pairs.
Graph generate_colorable_graph(std::size_t n, std::size_t m, int n_states, std::uint64_t seed);

/// The planted coloring of generate_colorable_graph (node v has color v % N).
StateAssignment planted_coloring(std::size_t n, int n_states);

/// Erdos-Renyi G(n, p) with unit weights, deterministic per seed.
Graph generate_random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

}  // namespace oim
