#include "sbn/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "sbn/errors.hpp"
#include "sbn/limits.hpp"

namespace sbn {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for (Vertex v : *this) {
    if (!first_member) out += ',';
    out += std::to_string(v);
    first_member = false;
  }
  return out + "}";
}

bool lex_less(VertexSet a, VertexSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

bool lex_less(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
}

Limits Limits::uniform(int n) {
  Limits l;
  l.exponential = l.oracle = l.lenient_search = l.treewidth = l.minor_pattern = l.canonical = n;
  return l;
}

void enforce_guard(const char* what, int value, int guard) {
  if (value > guard) {
    throw GuardRefusal(std::string(what) + ": input size " + std::to_string(value) +
                       " exceeds the size guard " + std::to_string(guard) +
                       " (raise it with --guard)");
  }
}

// --- Graph ----------------------------------------------------------------

Graph::Graph(int order) {
  if (order < 0 || order > kMaxVertices) {
    throw StructuralError("graph order " + std::to_string(order) + " outside [0, " +
                          std::to_string(kMaxVertices) + "]");
  }
  adj_.assign(order, VertexSet{});
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw StructuralError("self-loop at vertex " + std::to_string(u));
    if (!g.add_edge(u, v)) {
      throw StructuralError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw StructuralError("vertex " + std::to_string(v) + " outside [0, " +
                          std::to_string(order()) + ")");
  }
}

VertexSet Graph::neighbors(VertexSet s) const {
  VertexSet out;
  for (Vertex v : s) out |= adj_[v];
  return out - s;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet n : adj_) twice += n.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = u + 1; v < order(); ++v) {
      if (!adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw StructuralError("self-loop at vertex " + std::to_string(u));
  if (adj_[u].contains(v)) return false;
  adj_[u].insert(v);
  adj_[v].insert(u);
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!adj_[u].contains(v)) return false;
  adj_[u].erase(v);
  adj_[v].erase(u);
  return true;
}

bool Graph::is_complete() const {
  for (Vertex v = 0; v < order(); ++v) {
    if (adj_[v].size() != order() - 1) return false;
  }
  return true;
}

VertexSet Subgraph::to_host(VertexSet local) const {
  VertexSet out;
  for (Vertex v : local) out.insert(original[v]);
  return out;
}

VertexSet Subgraph::to_local(VertexSet host) const {
  VertexSet out;
  for (std::size_t i = 0; i < original.size(); ++i) {
    if (host.contains(original[i])) out.insert(static_cast<Vertex>(i));
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, VertexSet s) {
  Subgraph sub;
  sub.members = s;
  sub.original = s.to_vector();
  sub.graph = Graph(s.size());
  for (std::size_t i = 0; i < sub.original.size(); ++i) {
    for (std::size_t j = i + 1; j < sub.original.size(); ++j) {
      if (g.adjacent(sub.original[i], sub.original[j])) {
        sub.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return sub;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph wheel_graph(int rim) {
  if (rim < 3) throw DomainError("a wheel needs a rim of at least 3 vertices");
  Graph g(rim + 1);
  for (Vertex v = 1; v <= rim; ++v) {
    g.add_edge(0, v);
    g.add_edge(v, v == rim ? 1 : v + 1);
  }
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw PreconditionError("relabel: permutation size mismatch");
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  Subgraph sub = induced_subgraph(g, g.vertices() - VertexSet::singleton(v));
  return sub.graph;
}

Graph delete_edge(const Graph& g, Edge e) {
  Graph out = g;
  if (!out.remove_edge(e.first, e.second)) throw PreconditionError("delete_edge: not an edge");
  return out;
}

Graph contract_edge(const Graph& g, Edge e) {
  auto [u, v] = e;
  if (!g.adjacent(u, v)) throw PreconditionError("contract_edge: not an edge");
  auto shift = [v](Vertex w) { return w > v ? w - 1 : w; };
  Graph out(g.order() - 1);
  for (auto [a, b] : g.edges()) {
    Vertex x = a == v ? u : a;
    Vertex y = b == v ? u : b;
    if (x == y) continue;
    out.add_edge(shift(x), shift(y));
  }
  return out;
}

std::string OneStepMinor::describe() const {
  switch (op) {
    case MinorOp::kDeleteVertex:
      return "delete-vertex " + std::to_string(target.first);
    case MinorOp::kDeleteEdge:
      return "delete-edge " + std::to_string(target.first) + "-" + std::to_string(target.second);
    case MinorOp::kContractEdge:
      return "contract-edge " + std::to_string(target.first) + "-" +
             std::to_string(target.second);
  }
  return "?";
}

std::vector<OneStepMinor> one_step_minors(const Graph& g) {
  std::vector<OneStepMinor> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    out.push_back({MinorOp::kDeleteVertex, {v, v}, delete_vertex(g, v)});
  }
  for (Edge e : g.edges()) out.push_back({MinorOp::kDeleteEdge, e, delete_edge(g, e)});
  for (Edge e : g.edges()) out.push_back({MinorOp::kContractEdge, e, contract_edge(g, e)});
  return out;
}

// --- edge list -------------------------------------------------------------

namespace {

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

std::vector<std::pair<std::string_view, std::size_t>> tokens_of(std::string_view line,
                                                                std::size_t base) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start), base + start);
  }
  return out;
}

int parse_int(std::string_view tok, std::size_t line, std::size_t offset) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
    throw ParseError("line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                         std::string(tok) + "'",
                     line, offset);
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  std::optional<Graph> g;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    std::size_t base = pos;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (is_blank(line)) {
      if (end == text.size()) break;
      continue;
    }
    auto toks = tokens_of(line, base);
    if (!g) {
      if (toks.size() != 1) {
        throw ParseError("line " + std::to_string(line_no) + ": expected the vertex count alone",
                         line_no, toks[0].second);
      }
      int n = parse_int(toks[0].first, line_no, toks[0].second);
      if (n > kMaxVertices) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex count " +
                             std::to_string(n) + " exceeds " + std::to_string(kMaxVertices),
                         line_no, toks[0].second);
      }
      g.emplace(n);
    } else {
      if (toks.size() != 2) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'", line_no,
                         toks[0].second);
      }
      int u = parse_int(toks[0].first, line_no, toks[0].second);
      int v = parse_int(toks[1].first, line_no, toks[1].second);
      auto fail = [&](const std::string& why) {
        throw ParseError("line " + std::to_string(line_no) + ": " + why, line_no, toks[0].second);
      };
      if (u >= g->order() || v >= g->order()) fail("vertex out of range");
      if (u == v) fail("self-loop at vertex " + std::to_string(u));
      if (!g->add_edge(u, v)) fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    if (end == text.size()) break;
  }
  if (!g) throw ParseError("empty edge list: missing vertex count", 1, 0);
  return *g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// --- graph6 ----------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  std::size_t stop = text.size();
  while (stop > pos && std::isspace(static_cast<unsigned char>(text[stop - 1]))) --stop;
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= stop) throw ParseError("graph6: unexpected end of input", 0, i);
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " outside [63, 126] at offset " +
                           std::to_string(i),
                       0, i);
    }
    return c - 63;
  };
  long n = byte_at(pos);
  ++pos;
  if (n == 63) {
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos++);
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxVertices),
                     0, 0);
  }
  Graph g(static_cast<int>(n));
  long bits = n * (n - 1) / 2;
  long bytes = (bits + 5) / 6;
  long k = 0;
  for (long b = 0; b < bytes; ++b) {
    std::size_t at = pos + static_cast<std::size_t>(b);
    int value = byte_at(at);
    for (int shift = 5; shift >= 0; --shift, ++k) {
      bool bit = (value >> shift) & 1;
      if (k >= bits) {
        if (bit) throw ParseError("graph6: nonzero padding bit", 0, at);
        continue;
      }
      if (!bit) continue;
      // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
      long j = 1;
      long before = 0;
      while (before + j <= k) {
        before += j;
        ++j;
      }
      long i = k - before;
      g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (pos + static_cast<std::size_t>(bytes) != stop) {
    throw ParseError("graph6: trailing bytes", 0, pos + static_cast<std::size_t>(bytes));
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string out;
  int n = g.order();
  if (n < 63) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

GraphFormat detect_format(std::string_view text) {
  auto toks = tokens_of(text, 0);
  if (toks.size() == 1) {
    // A lone integer is an edge list with no edges.
    bool digits = std::all_of(toks[0].first.begin(), toks[0].first.end(),
                              [](unsigned char c) { return std::isdigit(c); });
    return digits ? GraphFormat::kEdgeList : GraphFormat::kGraph6;
  }
  return GraphFormat::kEdgeList;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? parse_graph6(text) : parse_edge_list(text);
}

}  // namespace sbn
