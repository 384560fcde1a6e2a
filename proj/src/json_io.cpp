#include "sbn/json_io.hpp"

#include <map>

#include "sbn/errors.hpp"

namespace sbn {

Json to_json(VertexSet s) { return Json(s.to_vector()); }

Json to_json(const StrictBramble& b) {
  Json sets = Json::array();
  for (VertexSet s : b.sets) sets.push_back(to_json(s));
  return Json{{"mode", to_string(b.mode)}, {"sets", sets}};
}

Json to_json(const Decomposition& d, DecompositionKind kind) {
  Json edges = Json::array();
  for (auto [a, b] : d.tree.edges()) edges.push_back({a, b});
  Json bags = Json::object();
  for (int t = 0; t < d.tree.order(); ++t) bags[std::to_string(t)] = to_json(d.bags[t]);
  return Json{{"kind", to_string(kind)}, {"tree_edges", edges}, {"bags", bags}};
}

Json to_json(const DominoReport& r) {
  Json props = Json::object();
  for (const char* id : domino_property_ids()) {
    const PropertyCheck& c = r.properties.at(id);
    Json witness = nullptr;
    if (!c.pass) {
      Json sets = Json::array();
      for (VertexSet s : c.witness) sets.push_back(to_json(s));
      witness = Json{{"description", c.description}, {"sets", sets}};
    }
    props[id] = Json{{"pass", c.pass}, {"witness", witness}};
  }
  return Json{{"k", r.k}, {"verdict", r.verdict}, {"base_case", r.base_case}, {"properties", props}};
}

Json to_json(const MinorModel& m) {
  Json branch = Json::object();
  for (std::size_t u = 0; u < m.branch_sets.size(); ++u) branch[std::to_string(u)] = to_json(m.branch_sets[u]);
  return Json{{"pattern", to_graph6(m.pattern)}, {"host", to_graph6(m.host)}, {"branch_sets", branch}};
}

Json to_json(const ObstructionRecord& r) {
  Json log = Json::array();
  for (const auto& e : r.minimality_log) {
    log.push_back(Json{{"operation", e.operation}, {"minor", to_graph6(e.minor)}, {"sbn", e.sbn}});
  }
  Json out{{"graph6", to_graph6(r.graph)}, {"k", r.k}, {"bramble", to_json(r.bramble)}, {"minimality_log", log}};
  if (!r.name.empty()) out["name"] = r.name;
  return out;
}

Json to_json(const GadgetMap& h) {
  Json prov = Json::array();
  for (std::size_t v = 0; v < h.provenance.size(); ++v) {
    const Provenance& p = h.provenance[v];
    if (p.original) {
      prov.push_back(Json{{"vertex", v}, {"original", p.vertex}});
    } else {
      prov.push_back(Json{{"vertex", v}, {"edge", {p.edge.first, p.edge.second}}, {"copy", p.copy}});
    }
  }
  Json edges = Json::array();
  for (auto [a, b] : h.output.edges()) edges.push_back({a, b});
  return Json{{"source", to_graph6(h.source)}, {"k", h.k}, {"order", h.output.order()},
              {"edges", edges}, {"graph6", to_graph6(h.output)}, {"provenance", prov}};
}

namespace {

VertexSet set_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw StructuralError(std::string(what) + ": expected an array of vertices");
  VertexSet s;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw StructuralError(std::string(what) + ": vertex is not an integer");
    int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw StructuralError(std::string(what) + ": vertex out of range");
    s.insert(x);
  }
  return s;
}

}  // namespace

StrictBramble bramble_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sets")) throw StructuralError("bramble: missing \"sets\"");
  StrictBramble b;
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw StructuralError("bramble: \"mode\" must be a string");
    b.mode = parse_bramble_mode(j["mode"].get<std::string>());
  }
  if (!j["sets"].is_array()) throw StructuralError("bramble: \"sets\" must be an array");
  for (const Json& s : j["sets"]) b.sets.push_back(set_from_json(s, "bramble set"));
  return b;
}

std::pair<Decomposition, DecompositionKind> decomposition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("bags") || !j["bags"].is_object()) {
    throw StructuralError("decomposition: missing \"bags\" object");
  }
  DecompositionKind kind = DecompositionKind::kLenient;
  if (j.contains("kind")) {
    std::string k = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    if (k == "classic") {
      kind = DecompositionKind::kClassic;
    } else if (k != "lenient") {
      throw StructuralError("decomposition: unknown kind");
    }
  }
  std::map<int, VertexSet> bags;
  for (auto it = j["bags"].begin(); it != j["bags"].end(); ++it) {
    int node = -1;
    try {
      std::size_t used = 0;
      node = std::stoi(it.key(), &used);
      if (used != it.key().size()) node = -1;
    } catch (const std::exception&) {
      node = -1;
    }
    if (node < 0) throw StructuralError("decomposition: bag key '" + it.key() + "' is not a node index");
    bags[node] = set_from_json(it.value(), "bag");
  }
  const int n = static_cast<int>(bags.size());
  if (n > kMaxVertices) throw StructuralError("decomposition: more than 64 nodes");
  for (int t = 0; t < n; ++t) {
    if (!bags.count(t)) throw StructuralError("decomposition: bag for a node outside 0.." + std::to_string(n - 1));
  }
  Decomposition d{Graph(n), {}};
  for (auto& [t, b] : bags) d.bags.push_back(b);
  if (j.contains("tree_edges")) {
    if (!j["tree_edges"].is_array()) throw StructuralError("decomposition: \"tree_edges\" must be an array");
    for (const Json& e : j["tree_edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw StructuralError("decomposition: tree edge must be a pair of node indices");
      }
      int a = e[0].get<int>();
      int b = e[1].get<int>();
      if (a < 0 || b < 0 || a >= n || b >= n) throw StructuralError("decomposition: tree edge to a node without a bag");
      if (a == b || !d.tree.add_edge(a, b)) throw StructuralError("decomposition: loop or repeated tree edge");
    }
  }
  return {d, kind};
}

}  // namespace sbn
