#include "sbn/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sbn/algorithms.hpp"
#include "sbn/bramble.hpp"
#include "sbn/domino.hpp"
#include "sbn/errors.hpp"
#include "sbn/json_io.hpp"
#include "sbn/lenient.hpp"
#include "sbn/obstructions.hpp"
#include "sbn/reduction.hpp"

namespace sbn {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> in;
  std::string format;
  std::optional<int> k;
  std::optional<int> n;
  bool json = false;
  int threads = 1;
  std::optional<int> guard;
  std::string cert;
  std::string family;
};

// A source is "-" (standard input), an existing file, or the text itself.
// Graph6 never contains '/' or '.', so such a source must name a file.
std::string read_source(const std::string& source, std::istream& in) {
  std::ostringstream buf;
  if (source == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream f(source, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + source + "'");
    buf << f.rdbuf();
    return buf.str();
  }
  if (source.find_first_of("/.") != std::string::npos) throw UsageError("no such file '" + source + "'");
  return source;
}

std::string trim(std::string s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Graph read_graph(const std::string& source, const Options& o, std::istream& in) {
  std::string text = read_source(source, in);
  GraphFormat fmt = o.format.empty() ? detect_format(text)
                    : o.format == "graph6" ? GraphFormat::kGraph6
                                           : GraphFormat::kEdgeList;
  if (fmt == GraphFormat::kGraph6) text = trim(text);
  return parse_graph(text, fmt);
}

Graph single_input(const Options& o, std::istream& in) {
  if (o.in.size() != 1) throw UsageError("expected exactly one --in, got " + std::to_string(o.in.size()));
  return read_graph(o.in[0], o, in);
}

Limits limits_of(const Options& o) { return o.guard ? Limits::uniform(*o.guard) : Limits{}; }

void print_graph(std::ostream& out, const Graph& g, const Options& o) {
  if (o.format == "graph6") {
    out << to_graph6(g) << '\n';
  } else {
    out << to_edge_list(g);
  }
}

void print_bramble(std::ostream& out, const StrictBramble& b, int order) {
  out << "bramble (" << to_string(b.mode) << ", order " << order << ", " << b.sets.size() << " sets):";
  for (VertexSet s : b.sets) out << ' ' << s.to_string();
  out << '\n';
}

void print_decomposition(std::ostream& out, const Decomposition& d, DecompositionKind kind) {
  int width = kind == DecompositionKind::kClassic ? classic_width(d) : ltd_width(d);
  out << "decomposition (" << to_string(kind) << ", width " << width << ", " << d.node_count()
      << " nodes)\n";
  for (int t = 0; t < d.node_count(); ++t) out << "  node " << t << ": " << d.bags[t].to_string() << '\n';
  out << "  tree edges:";
  for (auto [a, b] : d.tree.edges()) out << ' ' << a << '-' << b;
  out << '\n';
}

// Every certificate passes through one of these before it is printed.
int checked_order(const Graph& g, const StrictBramble& b) {
  BrambleVerdict v = validate_bramble(g, b);
  if (!v.valid) throw InternalError("emitted bramble failed revalidation: " + v.reason);
  return bramble_order(b).order;
}

void check_decomposition(const Graph& g, const Decomposition& d, DecompositionKind kind, int max_width) {
  DecompositionVerdict v = validate(g, d, kind);
  if (!v.valid) throw InternalError("emitted decomposition failed revalidation at " + v.condition + ": " + v.reason);
  int width = kind == DecompositionKind::kClassic ? classic_width(d) : ltd_width(d);
  if (width > max_width) throw InternalError("emitted decomposition is wider than claimed");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_sbn(const Options& o, std::istream& in, std::ostream& out) {
  Graph g = single_input(o, in);
  SbnResult r = sbn_exact(g, limits_of(o));
  if (checked_order(g, r.lower) != r.value) throw InternalError("bramble order differs from sbn");
  check_decomposition(g, r.upper, DecompositionKind::kLenient, r.value);
  if (o.json) {
    emit(out, Json{{"sbn", r.value},
                   {"graph6", to_graph6(g)},
                   {"bramble", to_json(r.lower)},
                   {"decomposition", to_json(r.upper, DecompositionKind::kLenient)}});
  } else {
    out << "sbn " << r.value << '\n';
    print_bramble(out, r.lower, r.value);
    print_decomposition(out, r.upper, DecompositionKind::kLenient);
  }
  return kExitOk;
}

int cmd_decide(const Options& o, std::istream& in, std::ostream& out) {
  Graph g = single_input(o, in);
  const int k = *o.k;
  if (k < 0) throw UsageError("--k must be nonnegative");
  Limits limits = limits_of(o);
  if (auto d = decide_width_le_k(g, k, limits)) {
    check_decomposition(g, *d, DecompositionKind::kLenient, k);
    if (o.json) {
      emit(out, Json{{"decision", true}, {"k", k}, {"decomposition", to_json(*d, DecompositionKind::kLenient)}});
    } else {
      out << "yes: lenient decomposition of width at most " << k << '\n';
      print_decomposition(out, *d, DecompositionKind::kLenient);
    }
    return kExitOk;
  }
  // The negative answer is certified by a bramble when the oracle guard allows it.
  std::optional<StrictBramble> b;
  if (g.order() <= limits.oracle) b = find_bramble_of_order(g, k + 1, BrambleMode::kStrict, limits);
  if (b && checked_order(g, *b) < k + 1) throw InternalError("negative certificate has too small an order");
  std::string reason = b ? "strict bramble of order " + std::to_string(k + 1) + " found"
                         : "no lenient decomposition of width at most " + std::to_string(k);
  if (o.json) {
    Json j{{"decision", false}, {"k", k}, {"reason", reason}};
    if (b) j["bramble"] = to_json(*b);
    emit(out, j);
  } else {
    out << "no: " << reason << '\n';
    if (b) print_bramble(out, *b, bramble_order(*b).order);
  }
  return kExitNegative;
}

bool validate_one(const Graph& g, const Json& cert, std::ostream& out, Json& report) {
  if (cert.contains("sets")) {
    StrictBramble b = bramble_from_json(cert);
    BrambleVerdict v = validate_bramble(g, b);
    if (v.valid) {
      int order = bramble_order(b).order;
      out << "bramble: valid (" << to_string(b.mode) << ", order " << order << ")\n";
      report.push_back(Json{{"certificate", "bramble"}, {"valid", true}, {"order", order}});
    } else {
      out << "bramble: INVALID: " << v.reason << '\n';
      report.push_back(Json{{"certificate", "bramble"}, {"valid", false}, {"reason", v.reason}});
    }
    return v.valid;
  }
  auto [d, kind] = decomposition_from_json(cert);
  DecompositionVerdict v = validate(g, d, kind);
  int width = kind == DecompositionKind::kClassic ? classic_width(d) : ltd_width(d);
  if (v.valid) {
    out << "decomposition: valid (" << to_string(kind) << ", width " << width << ")\n";
    report.push_back(Json{{"certificate", "decomposition"}, {"kind", to_string(kind)}, {"valid", true}, {"width", width}});
  } else {
    out << "decomposition: INVALID at " << v.condition << ": " << v.reason << '\n';
    report.push_back(Json{{"certificate", "decomposition"}, {"kind", to_string(kind)}, {"valid", false},
                          {"condition", v.condition}, {"reason", v.reason}});
  }
  return v.valid;
}

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  Graph g = single_input(o, in);
  Json cert = Json::parse(read_source(o.cert, in));
  if (!cert.is_object()) throw StructuralError("certificate must be a JSON object");
  // Accept a bare certificate or the output of `sbn --json` / `decide --json`.
  std::vector<Json> parts;
  if (cert.contains("sets") || cert.contains("bags")) {
    parts.push_back(cert);
  } else {
    for (const char* key : {"bramble", "decomposition"}) {
      if (cert.contains(key)) parts.push_back(cert[key]);
    }
  }
  if (parts.empty()) throw StructuralError("certificate holds neither a bramble nor a decomposition");
  std::ostringstream text;
  Json report = Json::array();
  bool ok = true;
  for (const Json& p : parts) ok = validate_one(g, p, text, report) && ok;
  if (o.json) {
    emit(out, Json{{"valid", ok}, {"certificates", report}});
  } else {
    out << text.str();
  }
  return ok ? kExitOk : kExitNegative;
}

int cmd_recognize(const Options& o, std::istream& in, std::ostream& out) {
  Graph g = single_input(o, in);
  DominoReport r = recognize_domino(g, *o.k, limits_of(o));
  if (o.json) {
    emit(out, to_json(r));
  } else {
    out << r.k << "-domino-tree: " << (r.verdict ? "yes" : "no") << (r.base_case ? " (complete graph base case)" : "")
        << '\n';
    for (const char* id : domino_property_ids()) {
      const PropertyCheck& c = r.properties.at(id);
      out << "  " << id << ": " << (c.pass ? "pass" : "FAIL");
      if (!c.pass) {
        out << "  " << c.description;
        for (VertexSet s : c.witness) out << ' ' << s.to_string();
      }
      out << '\n';
    }
  }
  return r.verdict ? kExitOk : kExitNegative;
}

int cmd_gen(const Options& o, std::ostream& out) {
  Graph g = o.family == "chain" ? gen_chain(*o.n, *o.k) : gen_fan(*o.n, *o.k);
  if (o.json) {
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    emit(out, Json{{"family", o.family}, {"n", *o.n}, {"k", *o.k}, {"order", g.order()},
                   {"edge_count", g.edge_count()}, {"graph6", to_graph6(g)}, {"edges", edges}});
  } else {
    print_graph(out, g, o);
  }
  return kExitOk;
}

void check_record(const ObstructionRecord& r, const Limits& limits) {
  if (!verify_record(r, limits)) throw InternalError("obstruction record failed revalidation");
}

void print_record(std::ostream& out, const ObstructionRecord& r) {
  out << (r.name.empty() ? "" : r.name + " ") << to_graph6(r.graph) << ": " << r.graph.order() << " vertices, "
      << r.graph.edge_count() << " edges, 2-connected " << (is_biconnected(r.graph) ? "yes" : "no") << '\n';
  out << "  edges:";
  for (auto [a, b] : r.graph.edges()) out << ' ' << a << '-' << b;
  out << "\n  ";
  print_bramble(out, r.bramble, bramble_order(r.bramble).order);
  int worst = 0;
  for (const auto& e : r.minimality_log) worst = std::max(worst, e.sbn);
  out << "  one-step minors: " << r.minimality_log.size() << ", largest sbn " << worst << '\n';
}

int print_records(const std::vector<ObstructionRecord>& records, const Options& o, std::ostream& out) {
  Limits limits = limits_of(o);
  for (const auto& r : records) check_record(r, limits);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    emit(out, arr);
  } else {
    for (const auto& r : records) print_record(out, r);
    out << records.size() << " obstructions\n";
  }
  return kExitOk;
}

int cmd_gadget(const Options& o, std::istream& in, std::ostream& out) {
  Graph g = single_input(o, in);
  GadgetMap h = gadget(g, *o.k);
  if (o.json) {
    emit(out, to_json(h));
  } else {
    print_graph(out, h.output, o);
    for (int v = 0; v < h.output.order(); ++v) {
      const Provenance& p = h.provenance[v];
      out << "# " << v << ": ";
      if (p.original) {
        out << "original " << p.vertex << '\n';
      } else {
        out << "edge " << p.edge.first << '-' << p.edge.second << " copy " << p.copy << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_tw(const Options& o, std::istream& in, std::ostream& out) {
  Graph g = single_input(o, in);
  TreewidthResult r = treewidth_exact(g, limits_of(o));
  check_decomposition(g, r.witness, DecompositionKind::kClassic, r.value);
  if (o.json) {
    emit(out, Json{{"tw", r.value}, {"graph6", to_graph6(g)}, {"decomposition", to_json(r.witness, DecompositionKind::kClassic)}});
  } else {
    out << "tw " << r.value << '\n';
    print_decomposition(out, r.witness, DecompositionKind::kClassic);
  }
  return kExitOk;
}

int cmd_product(const Options& o, std::istream& in, std::ostream& out) {
  if (o.in.size() != 2) throw UsageError("product expects exactly two --in, got " + std::to_string(o.in.size()));
  Graph g = read_graph(o.in[0], o, in);
  Graph h = read_graph(o.in[1], o, in);
  if (g.order() == 0 || h.order() == 0) throw UsageError("product factors must be nonempty");
  Graph p = lexicographic_product(g, h);
  if (o.json) {
    Json edges = Json::array();
    for (auto [a, b] : p.edges()) edges.push_back({a, b});
    emit(out, Json{{"order", p.order()}, {"edge_count", p.edge_count()}, {"graph6", to_graph6(p)}, {"edges", edges}});
  } else {
    print_graph(out, p, o);
  }
  return kExitOk;
}

int cmd_formulas(const Options& o, std::ostream& out) {
  const int n = *o.n;
  const int k = *o.k;
  long long bound = max_edge_bound(n, k);
  std::optional<long long> fan;
  if (n >= 3 * k) fan = fan_edge_count(n, k);
  if (o.json) {
    emit(out, Json{{"n", n}, {"k", k}, {"max", bound}, {"fan", fan ? Json(*fan) : Json(nullptr)}});
  } else {
    out << "max " << bound << '\n';
    if (fan) {
      out << "fan " << *fan << '\n';
    } else {
      out << "fan n/a (needs n >= 3k)\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact strict bramble number toolkit", "sbn"};
  app.require_subcommand(1);
  Options o;

  auto add_in = [&](CLI::App* s) {
    s->add_option("--in", o.in, "Graph file, '-' for standard input, or an inline graph")->required();
    s->add_option("--format", o.format, "Graph format")->check(CLI::IsMember({"edge-list", "graph6"}));
  };
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json, "Machine-readable output"); };
  auto add_guard = [&](CLI::App* s) {
    s->add_option("--guard", o.guard, "Vertex-count guard for exponential procedures")->check(CLI::NonNegativeNumber);
  };
  auto add_k = [&](CLI::App* s) { s->add_option("--k", o.k, "Width parameter")->required(); };
  auto add_n = [&](CLI::App* s) { s->add_option("--n", o.n, "Vertex count")->required(); };

  auto* sbn = app.add_subcommand("sbn", "Strict bramble number with both certificates");
  add_in(sbn), add_json(sbn), add_guard(sbn);
  auto* decide = app.add_subcommand("decide", "Decide sbn <= k");
  add_in(decide), add_k(decide), add_json(decide), add_guard(decide);
  auto* validate = app.add_subcommand("validate", "Validate a bramble or decomposition certificate");
  add_in(validate), add_json(validate);
  validate->add_option("--cert", o.cert, "Certificate JSON file, '-' or inline JSON")->required();
  auto* recognize = app.add_subcommand("recognize-domino", "Check the k-domino-tree properties");
  add_in(recognize), add_k(recognize), add_json(recognize), add_guard(recognize);
  auto* gen = app.add_subcommand("gen", "Generate an extremal k-domino-tree");
  add_n(gen), add_k(gen), add_json(gen);
  gen->add_option("--family", o.family, "Generator family")->required()->check(CLI::IsMember({"chain", "fan"}));
  gen->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"edge-list", "graph6"}));
  auto* obs2 = app.add_subcommand("obs2", "The three obstructions for sbn <= 2 with their brambles");
  add_json(obs2), add_guard(obs2);
  auto* search = app.add_subcommand("search-obs", "Search minor-minimal graphs with sbn > k");
  add_k(search), add_n(search), add_json(search), add_guard(search);
  search->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  auto* gad = app.add_subcommand("gadget", "Hardness gadget: each edge becomes 2k-1 paths of length two");
  add_in(gad), add_k(gad), add_json(gad);
  auto* tw = app.add_subcommand("tw", "Exact treewidth with a classic decomposition");
  add_in(tw), add_json(tw), add_guard(tw);
  auto* product = app.add_subcommand("product", "Lexicographic product of two graphs");
  add_in(product), add_json(product);
  auto* formulas = app.add_subcommand("formulas", "Extremal edge counts");
  add_n(formulas), add_k(formulas), add_json(formulas);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sbn) return cmd_sbn(o, in, out);
    if (*decide) return cmd_decide(o, in, out);
    if (*validate) return cmd_validate(o, in, out);
    if (*recognize) return cmd_recognize(o, in, out);
    if (*gen) return cmd_gen(o, out);
    if (*obs2) return print_records(builtin_obstructions(), o, out);
    if (*search) return print_records(obstruction_search(*o.k, *o.n, limits_of(o), o.threads), o, out);
    if (*gad) return cmd_gadget(o, in, out);
    if (*tw) return cmd_tw(o, in, out);
    if (*product) return cmd_product(o, in, out);
    if (*formulas) return cmd_formulas(o, out);
  } catch (const GuardRefusal& e) {
    err << "refused: " << e.what() << '\n';
    return kExitGuard;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    // Parse, structural, domain and precondition errors: the request itself is wrong.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sbn
