#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "timw/decomposition.hpp"
#include "timw/problems.hpp"
#include "timw/temporal_graph.hpp"

namespace timw {

// Text format:
//   tgraph <n> <Λ>
//   e <u> <v> <t>      one line per time-edge
//   root <v> | source <v>
//   # comment
struct GraphFile {
  TemporalGraph g;
  std::optional<Vertex> root;
  std::optional<Vertex> source;
};

// Throws ParseError naming the offending line.
GraphFile parse_graph_file(std::string_view text);
inline TemporalGraph parse_temporal_graph(std::string_view text) { return parse_graph_file(text).g; }
GraphFile read_graph_file(const std::string& path);

// Canonical form: header, directives, then edges in (t, u, v) order.
std::string emit_temporal_graph(const TemporalGraph& g, std::optional<Vertex> root = std::nullopt,
                                std::optional<Vertex> source = std::nullopt);

// `node <id> time=<t> bag=<v,...>` lines followed by `arc <i> <j>` lines.
std::string emit_decomposition(const TimDecomposition& d);
TimDecomposition parse_decomposition(std::string_view text);
std::string emit_two_step(const TwoStepDecomposition& ts);
std::string decomposition_dot(const TimDecomposition& d);

// DIMACS 2-CNF; an optional `c k <k>` line carries the Max-2-SAT target.
TwoCnf parse_dimacs_2cnf(std::string_view text);
std::string emit_dimacs_2cnf(const TwoCnf& f);

std::string read_file(const std::string& path);

}  // namespace timw
