#include "genpos/json_io.hpp"

#include <json.hpp>

namespace genpos {

namespace {

using nlohmann::json;

json kind_map_to_json(const std::map<PositionKind, int>& values) {
  json out = json::object();
  for (const auto& [kind, size] : values) out[kind_name(kind)] = size;
  return out;
}

json optional_kind_map_to_json(
    const std::map<PositionKind, std::optional<int>>& values) {
  json out = json::object();
  for (const auto& [kind, size] : values) {
    if (size)
      out[kind_name(kind)] = *size;
    else
      out[kind_name(kind)] = nullptr;
  }
  return out;
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const EdgeRef& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
  json out = {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
  if (!g.name().empty()) out["name"] = g.name();
  return out;
}

json report_json(const RemovalReport& r) {
  json element;
  if (std::holds_alternative<int>(r.element)) {
    element = {{"type", "vertex"}, {"v", std::get<int>(r.element)}};
  } else {
    EdgeRef e = std::get<EdgeRef>(r.element);
    element = {{"type", "edge"}, {"u", e.u}, {"v", e.v}};
  }
  json bounds = json::array();
  for (const BoundVerdict& b : r.bounds) {
    json verdict = {{"id", b.id}, {"applicable", b.applicable}};
    verdict["holds"] = b.holds ? json(*b.holds) : json(nullptr);
    verdict["lhs"] = b.lhs ? json(*b.lhs) : json(nullptr);
    verdict["rhs"] = b.rhs ? json(*b.rhs) : json(nullptr);
    bounds.push_back(std::move(verdict));
  }
  json out = {{"graph", r.graph_name},
              {"graph6", r.graph6},
              {"element", std::move(element)},
              {"premises", r.premises},
              {"before", kind_map_to_json(r.before)},
              {"after", optional_kind_map_to_json(r.after)},
              {"after_connected", r.after_connected},
              {"bounds", std::move(bounds)}};
  out["deg"] = r.removed_degree ? json(*r.removed_degree) : json(nullptr);
  return out;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw BadInputError("malformed JSON at byte " + std::to_string(e.byte) +
                        ": " + e.what());
  }
}

}  // namespace

std::string graph_to_json(const Graph& g) { return graph_json(g).dump(); }

Graph graph_from_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw BadInputError("edge-list JSON needs object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer())
    throw BadInputError("edge-list JSON: \"n\" must be an integer");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw BadInputError("edge-list JSON: each edge must be [u, v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::string name = j.value("name", std::string{});
  return build_graph(n, edges, name);
}

std::string solve_result_to_json(const SolveResult& r, bool include_millis) {
  json out = {{"kind", kind_name(r.kind)},
              {"size", r.size},
              {"witness", r.witness.to_vector()},
              {"method", method_name(r.method)},
              {"millis", include_millis ? r.millis : 0}};
  return out.dump();
}

std::string diagnostics_to_json(const CheckDiagnostics& d) {
  json out = {{"kind", kind_name(d.kind)}, {"holds", d.holds}};
  if (d.witness)
    out["witness"] = {{"u", d.witness->u}, {"v", d.witness->v}, {"w", d.witness->w}};
  return out.dump();
}

std::string report_to_json(const RemovalReport& r) { return report_json(r).dump(); }

std::string family_to_json(const FamilyInstance& f) {
  json out = graph_json(f.graph);
  out["family"] = f.family;
  out["params"] = f.params;
  if (f.distinguished_vertex) out["distinguished_vertex"] = *f.distinguished_vertex;
  if (f.distinguished_edge)
    out["distinguished_edge"] = json::array({f.distinguished_edge->u,
                                             f.distinguished_edge->v});
  json expected = json::object();
  for (const auto& [key, value] : f.expected) {
    const char* phase = key.second == Phase::Before ? "before" : "after";
    expected[kind_name(key.first)][phase] = value;
  }
  if (!expected.empty()) out["expected"] = std::move(expected);
  return out.dump();
}

SweepManifest manifest_from_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("mode") || !j.contains("n"))
    throw BadInputError("sweep manifest needs \"mode\" and \"n\"");
  SweepManifest m;
  std::string mode = j["mode"].get<std::string>();
  if (mode == "enumerate") {
    m.mode = SweepManifest::Mode::Enumerate;
  } else if (mode == "random") {
    m.mode = SweepManifest::Mode::Random;
  } else {
    throw BadInputError("sweep manifest mode must be \"enumerate\" or \"random\"");
  }
  m.n = j["n"].get<int>();
  if (m.mode == SweepManifest::Mode::Random) {
    if (!j.contains("count"))
      throw BadInputError("random sweep manifest needs \"count\"");
    m.count = j["count"].get<int>();
    m.p = j.value("p", 0.5);
    m.seed = j.value("seed", std::uint64_t{0});
  }
  return m;
}

std::string violation_to_json(const ConjectureViolation& v) {
  json out = {{"graph6", v.graph6},
              {"vertex", v.vertex},
              {"report", report_json(v.report)}};
  return out.dump();
}

}  // namespace genpos
