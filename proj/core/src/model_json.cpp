#include "orbitspace/model_json.hpp"

#include <fstream>
#include <sstream>

#include "json_support.hpp"

namespace orbitspace {

using detail::Json;

namespace {

ModelFlags parse_flags(const Json& j) {
  detail::require_object(j, "flags");
  detail::reject_unknown_keys(j, {"hausdorff", "compact", "surface"}, "flags");
  ModelFlags flags;
  if (j.contains("hausdorff")) flags.hausdorff = detail::get_bool(j["hausdorff"], "flags.hausdorff");
  if (j.contains("compact")) flags.compact = detail::get_bool(j["compact"], "flags.compact");
  if (j.contains("surface") && !j["surface"].is_null()) {
    const auto& s = j["surface"];
    detail::require_object(s, "flags.surface");
    detail::reject_unknown_keys(s, {"closed", "euler_characteristic", "has_boundary"},
                                "flags.surface");
    SurfaceFlags surface;
    if (s.contains("closed")) surface.closed = detail::get_bool(s["closed"], "flags.surface.closed");
    surface.euler_characteristic = static_cast<int>(detail::get_int(
        detail::require_key(s, "euler_characteristic", "flags.surface"),
        "flags.surface.euler_characteristic"));
    if (s.contains("has_boundary"))
      surface.has_boundary = detail::get_bool(s["has_boundary"], "flags.surface.has_boundary");
    flags.surface = surface;
  }
  return flags;
}

OrbitNode parse_node(const Json& j, std::size_t position) {
  const std::string where = "nodes[" + std::to_string(position) + "]";
  detail::require_object(j, where);
  detail::reject_unknown_keys(j,
                              {"id", "kind", "granularity", "alpha", "omega",
                               "transverse_boundary", "period_type", "surface_tag", "embedding"},
                              where);
  OrbitNode node;
  node.id = detail::get_string(detail::require_key(j, "id", where), where + ".id");
  const auto kind = detail::get_string(detail::require_key(j, "kind", where), where + ".kind");
  if (auto k = parse_orbit_kind(kind)) node.kind = *k;
  else throw ParseError(where + ": unknown kind '" + kind + "'");

  if (j.contains("granularity")) {
    const auto g = detail::get_string(j["granularity"], where + ".granularity");
    if (auto parsed = parse_granularity(g)) node.granularity = *parsed;
    else throw ParseError(where + ": unknown granularity '" + g + "'");
  }
  if (j.contains("alpha")) node.alpha = detail::get_string_set(j["alpha"], where + ".alpha");
  if (j.contains("omega")) node.omega = detail::get_string_set(j["omega"], where + ".omega");
  if (j.contains("transverse_boundary"))
    node.transverse_boundary =
        detail::get_string_set(j["transverse_boundary"], where + ".transverse_boundary");
  if (j.contains("period_type") && !j["period_type"].is_null()) {
    const auto p = detail::get_string(j["period_type"], where + ".period_type");
    if (auto parsed = parse_period_type(p)) node.period_type = *parsed;
    else throw ParseError(where + ": unknown period_type '" + p + "'");
  }
  if (j.contains("surface_tag") && !j["surface_tag"].is_null()) {
    const auto t = detail::get_string(j["surface_tag"], where + ".surface_tag");
    if (auto parsed = parse_surface_tag(t)) node.surface_tag = *parsed;
    else throw ParseError(where + ": unknown surface_tag '" + t + "'");
  }
  if (j.contains("embedding")) node.embedding = detail::get_string(j["embedding"], where + ".embedding");
  return node;
}

Json ids_to_json(const IdSet& ids) {
  Json arr = Json::array();
  for (const auto& id : ids) arr.push_back(id);
  return arr;
}

}  // namespace

FlowModel parse_model_json(std::string_view text) {
  const Json doc = detail::parse_json_text(text);
  detail::require_object(doc, "model");
  detail::reject_unknown_keys(doc, {"flags", "nodes", "adjacency"}, "model");

  ModelFlags flags;
  if (doc.contains("flags")) flags = parse_flags(doc["flags"]);

  const auto& nodes_json = detail::require_key(doc, "nodes", "model");
  if (!nodes_json.is_array()) throw ParseError("nodes: expected an array");
  std::vector<OrbitNode> nodes;
  for (std::size_t i = 0; i < nodes_json.size(); ++i) nodes.push_back(parse_node(nodes_json[i], i));

  std::vector<IdPair> adjacency;
  if (doc.contains("adjacency")) {
    const auto& adj = doc["adjacency"];
    if (!adj.is_array()) throw ParseError("adjacency: expected an array");
    for (const auto& pair : adj) {
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError("adjacency: each entry must be a pair of ids");
      adjacency.emplace_back(detail::get_string(pair[0], "adjacency"),
                             detail::get_string(pair[1], "adjacency"));
    }
  }
  return FlowModel(flags, std::move(nodes), std::move(adjacency));
}

std::string model_to_json(const FlowModel& model, int indent) {
  Json doc;
  const auto& flags = model.flags();
  doc["flags"] = {{"hausdorff", flags.hausdorff}, {"compact", flags.compact}};
  if (flags.surface) {
    doc["flags"]["surface"] = {{"closed", flags.surface->closed},
                               {"euler_characteristic", flags.surface->euler_characteristic},
                               {"has_boundary", flags.surface->has_boundary}};
  }
  Json nodes = Json::array();
  for (const auto& n : model.nodes()) {
    Json j;
    j["id"] = n.id;
    j["kind"] = std::string(to_string(n.kind));
    j["granularity"] = std::string(to_string(n.granularity));
    j["alpha"] = ids_to_json(n.alpha);
    j["omega"] = ids_to_json(n.omega);
    j["transverse_boundary"] = ids_to_json(n.transverse_boundary);
    if (n.period_type) j["period_type"] = std::string(to_string(*n.period_type));
    if (n.surface_tag) j["surface_tag"] = to_string(*n.surface_tag);
    if (!n.embedding.empty()) j["embedding"] = n.embedding;
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  Json adjacency = Json::array();
  for (const auto& [a, b] : model.adjacency()) adjacency.push_back(Json::array({a, b}));
  doc["adjacency"] = std::move(adjacency);
  return doc.dump(indent);
}

FlowModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model_json(buffer.str());
}

}  // namespace orbitspace
