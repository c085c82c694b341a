#include "timw/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace timw {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

int to_int(std::string_view s, int line) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || p != end) fail(line, "expected an integer, got '" + std::string(s) + "'");
  return value;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    f(line, number);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

}  // namespace

GraphFile parse_graph_file(std::string_view text) {
  bool have_header = false;
  int n = 0;
  Time lam = 0;
  std::vector<TimeEdge> edges;
  std::set<std::tuple<Time, Vertex, Vertex>> seen;
  GraphFile out;
  for_each_line(text, [&](std::string_view raw, int line) {
    const auto hash = raw.find('#');
    const auto tok = split_ws(hash == std::string_view::npos ? raw : raw.substr(0, hash));
    if (tok.empty()) return;
    if (!have_header) {
      if (tok[0] != "tgraph" || tok.size() != 3) fail(line, "expected header 'tgraph <n> <lifetime>'");
      n = to_int(tok[1], line);
      lam = to_int(tok[2], line);
      if (n < 0 || lam < 0) fail(line, "negative size in header");
      have_header = true;
      return;
    }
    auto vertex = [&](std::string_view s) {
      const int v = to_int(s, line);
      if (v < 0 || v >= n) fail(line, "vertex " + std::to_string(v) + " out of range");
      return v;
    };
    if (tok[0] == "e") {
      if (tok.size() != 4) fail(line, "expected 'e <u> <v> <t>'");
      Vertex u = vertex(tok[1]), v = vertex(tok[2]);
      const Time t = to_int(tok[3], line);
      if (t < 1 || t > lam) fail(line, "time " + std::to_string(t) + " outside [1, " + std::to_string(lam) + "]");
      if (u == v) fail(line, "self-loop");
      if (u > v) std::swap(u, v);
      if (!seen.insert({t, u, v}).second) fail(line, "duplicate time-edge");
      edges.push_back({u, v, t});
    } else if (tok[0] == "root" || tok[0] == "source") {
      if (tok.size() != 2) fail(line, "expected '" + std::string(tok[0]) + " <v>'");
      (tok[0] == "root" ? out.root : out.source) = vertex(tok[1]);
    } else {
      fail(line, "unknown directive '" + std::string(tok[0]) + "'");
    }
  });
  if (!have_header) throw ParseError("line 1: missing 'tgraph' header");
  Time max_t = 0;
  for (const auto& e : edges) max_t = std::max(max_t, e.t);
  if (max_t != lam)
    throw ParseError("header lifetime " + std::to_string(lam) + " differs from the latest edge time " +
                     std::to_string(max_t));
  out.g = TemporalGraph(n, std::move(edges));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphFile read_graph_file(const std::string& path) { return parse_graph_file(read_file(path)); }

std::string emit_temporal_graph(const TemporalGraph& g, std::optional<Vertex> root, std::optional<Vertex> source) {
  std::ostringstream os;
  os << "tgraph " << g.n() << ' ' << g.lifetime() << '\n';
  if (root) os << "root " << *root << '\n';
  if (source) os << "source " << *source << '\n';
  for (const auto& e : g.time_edges()) os << "e " << e.u << ' ' << e.v << ' ' << e.t << '\n';
  return os.str();
}

namespace {

void write_bag(std::ostream& os, const std::vector<Vertex>& bag) {
  for (std::size_t i = 0; i < bag.size(); ++i) os << (i ? "," : "") << bag[i];
}

}  // namespace

std::string emit_decomposition(const TimDecomposition& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) {
    os << "node " << i << " time=" << d.time[i] << " bag=";
    write_bag(os, d.bags[i]);
    os << '\n';
  }
  for (const auto& [a, b] : d.arcs) os << "arc " << a << ' ' << b << '\n';
  return os.str();
}

TimDecomposition parse_decomposition(std::string_view text) {
  std::map<int, std::pair<Time, std::vector<Vertex>>> nodes;
  std::vector<std::pair<int, int>> arcs;
  for_each_line(text, [&](std::string_view raw, int line) {
    const auto hash = raw.find('#');
    const auto tok = split_ws(hash == std::string_view::npos ? raw : raw.substr(0, hash));
    if (tok.empty()) return;
    if (tok[0] == "node") {
      if (tok.size() != 4 || tok[2].substr(0, 5) != "time=" || tok[3].substr(0, 4) != "bag=")
        fail(line, "expected 'node <id> time=<t> bag=<v,...>'");
      const int id = to_int(tok[1], line);
      const Time t = to_int(tok[2].substr(5), line);
      std::vector<Vertex> bag;
      auto rest = tok[3].substr(4);
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        bag.push_back(to_int(rest.substr(0, comma), line));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      std::sort(bag.begin(), bag.end());
      if (!nodes.emplace(id, std::make_pair(t, std::move(bag))).second) fail(line, "duplicate node id");
    } else if (tok[0] == "arc") {
      if (tok.size() != 3) fail(line, "expected 'arc <i> <j>'");
      arcs.push_back({to_int(tok[1], line), to_int(tok[2], line)});
    } else {
      fail(line, "unknown directive '" + std::string(tok[0]) + "'");
    }
  });
  TimDecomposition d;
  int expect = 0;
  for (auto& [id, node] : nodes) {
    if (id != expect++) throw ParseError("node ids must be 0..N-1");
    d.time.push_back(node.first);
    d.bags.push_back(std::move(node.second));
  }
  for (const auto& [a, b] : arcs)
    if (a < 0 || b < 0 || a >= static_cast<int>(d.size()) || b >= static_cast<int>(d.size()))
      throw ParseError("arc endpoint out of range");
  std::sort(arcs.begin(), arcs.end());
  d.arcs = std::move(arcs);
  return d;
}

std::string emit_two_step(const TwoStepDecomposition& ts) {
  std::ostringstream os;
  const auto& rd = ts.rooted;
  for (std::size_t s = 0; s < ts.bags.size(); ++s) {
    os << "node " << s << " time=" << rd.time(static_cast<int>(s)) << " parent=" << rd.parent[s] << " pairs=";
    for (std::size_t i = 0; i < ts.bags[s].size(); ++i)
      os << (i ? "," : "") << ts.bags[s][i].v << '@' << ts.bags[s][i].t;
    os << '\n';
  }
  return os.str();
}

std::string decomposition_dot(const TimDecomposition& d) {
  std::ostringstream os;
  os << "digraph tim {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    os << "  n" << i << " [label=\"t=" << d.time[i] << "\\n{";
    write_bag(os, d.bags[i]);
    os << "}\"];\n";
  }
  for (const auto& [a, b] : d.arcs) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

TwoCnf parse_dimacs_2cnf(std::string_view text) {
  TwoCnf f;
  bool have_header = false;
  int declared = 0;
  std::vector<int> pending;
  for_each_line(text, [&](std::string_view raw, int line) {
    const auto tok = split_ws(raw);
    if (tok.empty()) return;
    if (tok[0] == "c") {
      if (tok.size() == 3 && tok[1] == "k") f.k = to_int(tok[2], line);
      return;
    }
    if (tok[0] == "p") {
      if (tok.size() != 4 || tok[1] != "cnf") fail(line, "expected 'p cnf <v> <w>'");
      f.variables = to_int(tok[2], line);
      declared = to_int(tok[3], line);
      have_header = true;
      return;
    }
    if (!have_header) fail(line, "clause before 'p cnf' header");
    for (auto s : tok) {
      const int lit = to_int(s, line);
      if (lit == 0) {
        if (pending.size() != 2) fail(line, "clause must have exactly two literals");
        if (std::abs(pending[0]) > f.variables || std::abs(pending[1]) > f.variables)
          fail(line, "literal out of range");
        f.clauses.push_back({pending[0], pending[1]});
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
  });
  if (!have_header) throw ParseError("line 1: missing 'p cnf' header");
  if (!pending.empty()) throw ParseError("unterminated clause");
  if (static_cast<int>(f.clauses.size()) != declared)
    throw ParseError("header declares " + std::to_string(declared) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  return f;
}

std::string emit_dimacs_2cnf(const TwoCnf& f) {
  std::ostringstream os;
  os << "c k " << f.k << '\n';
  os << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& [a, b] : f.clauses) os << a << ' ' << b << " 0\n";
  return os.str();
}

}  // namespace timw
