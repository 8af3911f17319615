#include "orbitspace/suspension.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json_support.hpp"
#include "orbitspace/error.hpp"
#include "orbitspace/surface.hpp"

namespace orbitspace {

using detail::Json;

namespace {

constexpr std::pair<MapKind, std::string_view> kMapKindNames[] = {
    {MapKind::Fixed, "FIXED"},
    {MapKind::Periodic, "PERIODIC"},
    {MapKind::NonperiodicRecurrent, "NONPERIODIC_RECURRENT"},
    {MapKind::Nonrecurrent, "NONRECURRENT"},
};

OrbitKind flow_kind(MapKind kind) {
  switch (kind) {
    case MapKind::Fixed:
    case MapKind::Periodic:
      return OrbitKind::Periodic;
    case MapKind::NonperiodicRecurrent: return OrbitKind::RecurrentNonclosed;
    case MapKind::Nonrecurrent: return OrbitKind::Nonrecurrent;
  }
  return OrbitKind::Nonrecurrent;
}

FlowModel suspend_unchecked(const MapModel& m) {
  std::vector<OrbitNode> nodes;
  for (const auto& n : m.nodes()) {
    OrbitNode o;
    o.id = n.id;
    o.kind = flow_kind(n.kind);
    o.granularity = n.granularity;
    o.alpha = n.alpha;
    o.omega = n.omega;
    o.transverse_boundary = n.transverse_boundary;
    if (o.kind == OrbitKind::Periodic) o.period_type = n.period_type;
    o.embedding = n.embedding;
    nodes.push_back(std::move(o));
  }
  ModelFlags flags = m.flags();
  flags.surface.reset();
  return FlowModel(flags, std::move(nodes), m.adjacency());
}

Json ids_to_json(const IdSet& ids) {
  Json arr = Json::array();
  for (const auto& id : ids) arr.push_back(id);
  return arr;
}

MapNode parse_map_node(const Json& j, std::size_t position) {
  const std::string where = "nodes[" + std::to_string(position) + "]";
  detail::require_object(j, where);
  detail::reject_unknown_keys(j,
                              {"id", "kind", "period", "granularity", "alpha", "omega",
                               "transverse_boundary", "period_type", "embedding"},
                              where);
  MapNode node;
  node.id = detail::get_string(detail::require_key(j, "id", where), where + ".id");
  const auto kind = detail::get_string(detail::require_key(j, "kind", where), where + ".kind");
  if (auto k = parse_map_kind(kind)) node.kind = *k;
  else throw ParseError(where + ": unknown kind '" + kind + "'");
  node.period = node.kind == MapKind::Fixed ? 1 : 0;
  if (j.contains("period"))
    node.period = static_cast<int>(detail::get_int(j["period"], where + ".period"));
  else if (node.kind == MapKind::Periodic)
    throw ParseError(where + ": PERIODIC node needs 'period'");
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
  if (j.contains("embedding")) node.embedding = detail::get_string(j["embedding"], where + ".embedding");
  return node;
}

}  // namespace

std::string_view to_string(MapKind kind) {
  for (const auto& [k, name] : kMapKindNames)
    if (k == kind) return name;
  return "?";
}

std::optional<MapKind> parse_map_kind(std::string_view text) {
  for (const auto& [k, name] : kMapKindNames)
    if (name == text) return k;
  return std::nullopt;
}

MapModel::MapModel(ModelFlags flags, std::vector<MapNode> nodes, std::vector<IdPair> adjacency)
    : flags_(std::move(flags)), nodes_(std::move(nodes)) {
  for (const auto& n : nodes_)
    if (!is_well_formed_id(n.id)) throw ParseError("malformed node id '" + n.id + "'");
  std::sort(nodes_.begin(), nodes_.end(),
            [](const MapNode& a, const MapNode& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (nodes_[i - 1].id == nodes_[i].id)
      throw ParseError("duplicate node id '" + nodes_[i].id + "'");
  for (auto& [a, b] : adjacency) {
    if (!is_well_formed_id(a) || !is_well_formed_id(b))
      throw ParseError("malformed id in adjacency pair");
    if (b < a) std::swap(a, b);
  }
  std::sort(adjacency.begin(), adjacency.end());
  adjacency.erase(std::unique(adjacency.begin(), adjacency.end()), adjacency.end());
  adjacency_ = std::move(adjacency);
}

MapModel parse_map_model_json(std::string_view text) {
  const Json doc = detail::parse_json_text(text);
  detail::require_object(doc, "map model");
  detail::reject_unknown_keys(doc, {"flags", "nodes", "adjacency"}, "map model");
  ModelFlags flags;
  if (doc.contains("flags")) {
    const auto& f = doc["flags"];
    detail::require_object(f, "flags");
    detail::reject_unknown_keys(f, {"hausdorff", "compact"}, "flags");
    if (f.contains("hausdorff")) flags.hausdorff = detail::get_bool(f["hausdorff"], "flags.hausdorff");
    if (f.contains("compact")) flags.compact = detail::get_bool(f["compact"], "flags.compact");
  }
  const auto& nodes_json = detail::require_key(doc, "nodes", "map model");
  if (!nodes_json.is_array()) throw ParseError("nodes: expected an array");
  std::vector<MapNode> nodes;
  for (std::size_t i = 0; i < nodes_json.size(); ++i)
    nodes.push_back(parse_map_node(nodes_json[i], i));
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
  return MapModel(flags, std::move(nodes), std::move(adjacency));
}

std::string map_model_to_json(const MapModel& model, int indent) {
  Json doc;
  doc["flags"] = {{"hausdorff", model.flags().hausdorff}, {"compact", model.flags().compact}};
  Json nodes = Json::array();
  for (const auto& n : model.nodes()) {
    Json j;
    j["id"] = n.id;
    j["kind"] = std::string(to_string(n.kind));
    if (n.kind == MapKind::Periodic) j["period"] = n.period;
    j["granularity"] = std::string(to_string(n.granularity));
    j["alpha"] = ids_to_json(n.alpha);
    j["omega"] = ids_to_json(n.omega);
    j["transverse_boundary"] = ids_to_json(n.transverse_boundary);
    if (n.period_type) j["period_type"] = std::string(to_string(*n.period_type));
    if (!n.embedding.empty()) j["embedding"] = n.embedding;
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  Json adjacency = Json::array();
  for (const auto& [a, b] : model.adjacency()) adjacency.push_back(Json::array({a, b}));
  doc["adjacency"] = std::move(adjacency);
  return doc.dump(indent);
}

MapModel load_map_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_map_model_json(buffer.str());
}

ValidationReport validate_map_model(const MapModel& model) {
  ValidationReport report;
  for (const auto& n : model.nodes()) {
    if (n.kind == MapKind::Fixed && n.period != 1)
      report.violations.push_back({n.id, "bad period", "FIXED nodes have period 1"});
    if (n.kind == MapKind::Periodic && n.period < 2)
      report.violations.push_back({n.id, "bad period", "PERIODIC nodes need period >= 2"});
  }
  auto flow = validate_model(suspend_unchecked(model));
  report.violations.insert(report.violations.end(), flow.violations.begin(),
                           flow.violations.end());
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     return std::tie(a.node, a.rule) < std::tie(b.node, b.rule);
                   });
  return report;
}

FlowModel suspend(const MapModel& model) {
  const auto report = validate_map_model(model);
  if (!report.valid()) {
    const auto& v = report.violations.front();
    throw PreconditionError("invalid map model: node '" + v.node + "': " + v.rule);
  }
  return suspend_unchecked(model);
}

PeriodAnnotation annotations_from_model(const FlowModel& model) {
  PeriodAnnotation out;
  for (const auto& n : model.nodes())
    if (n.kind == OrbitKind::Periodic && n.period_type) out[n.id] = *n.period_type;
  return out;
}

TimeOneResult time_one_awo_space(const IndexedModel& flow, const PeriodAnnotation& periods) {
  if (!flow.nodes_of_kind(OrbitKind::RecurrentNonclosed).empty())
    throw PreconditionError("time-one analysis needs a flow without non-closed recurrence");
  const auto awo = abstract_weak_orbit_space(flow);

  TimeOneResult out;
  out.level1 = awo;
  for (std::size_t b = 0; b < awo.size(); ++b) {
    const auto& block = awo.blocks[b];
    if (flow.kind(block.members().front()) != OrbitKind::Nonrecurrent) continue;
    bool split = false;
    for (auto p : (flow.alpha(block) | flow.omega(block)).members()) {
      if (flow.kind(p) != OrbitKind::Periodic) continue;
      auto it = periods.find(flow.id(p));
      if (it == periods.end())
        throw PreconditionError("periodic node '" + flow.id(p) + "' has no period annotation");
      if (it->second != PeriodType::Irrational) split = true;
    }
    if (split) out.split_blocks.push_back(awo.labels[b]);
  }
  out.level1_equal = out.split_blocks.empty();

  // Level 2: closed blocks stay; non-recurrent nodes are grouped by the
  // level-1 blocks their limit sets meet, then split into components.
  auto blocks_met = [&](const IndexSet& s) {
    IndexSet met(awo.size());
    for (auto i : s.members()) met.insert(awo.block_of[i]);
    return met;
  };
  Partition level2;
  std::map<std::pair<IndexSet, IndexSet>, IndexSet> groups;
  for (std::size_t b = 0; b < awo.size(); ++b) {
    const auto& block = awo.blocks[b];
    if (flow.kind(block.members().front()) != OrbitKind::Nonrecurrent) {
      level2.push_back(block);
      continue;
    }
    for (auto i : block.members()) {
      auto key = std::make_pair(blocks_met(flow.alpha(i)), blocks_met(flow.omega(i)));
      auto [it, inserted] = groups.try_emplace(key, flow.size());
      it->second.insert(i);
    }
  }
  for (const auto& [key, nodes] : groups)
    for (auto& c : flow.components(nodes)) level2.push_back(std::move(c));
  out.level2 = make_quotient(flow, QuotientLevel::AwoK, std::move(level2), 2);
  out.level2_equal = out.level2.blocks == awo.blocks;
  return out;
}

HamReconstruction ham_reconstruction_check(const IndexedModel& flow,
                                           const PeriodAnnotation& periods) {
  if (!flow.model().flags().surface || !is_hamiltonian_shaped(flow))
    throw PreconditionError("reconstruction check needs a Hamiltonian-shaped surface model");
  HamReconstruction out;
  out.verdict = true;
  for (auto i : flow.nodes_of_kind(OrbitKind::Periodic).members()) {
    if (flow.node(i).granularity != Granularity::Family) continue;
    const auto& id = flow.id(i);
    auto it = periods.find(id);
    if (it == periods.end())
      throw PreconditionError("periodic family '" + id + "' has no period annotation");
    switch (it->second) {
      case PeriodType::MixedDense:
        out.resolution[id] = "resolves to orbit space of family";
        break;
      case PeriodType::Rational:
        out.resolution[id] = "constant rational period: family is not resolved";
        out.verdict = false;
        break;
      case PeriodType::Irrational:
        out.resolution[id] = "constant irrational period: family is not resolved";
        out.verdict = false;
        break;
    }
  }
  return out;
}

}  // namespace orbitspace
