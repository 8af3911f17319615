#include "orbitspace/model.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

#include "orbitspace/error.hpp"

namespace orbitspace {

namespace {

constexpr std::array<std::pair<SurfaceTagKind, std::string_view>, 12> kTagNames{{
    {SurfaceTagKind::Center, "CENTER"},
    {SurfaceTagKind::Saddle, "SADDLE"},
    {SurfaceTagKind::BoundarySaddle, "BOUNDARY_SADDLE"},
    {SurfaceTagKind::Sink, "SINK"},
    {SurfaceTagKind::Source, "SOURCE"},
    {SurfaceTagKind::BoundarySink, "BOUNDARY_SINK"},
    {SurfaceTagKind::BoundarySource, "BOUNDARY_SOURCE"},
    {SurfaceTagKind::Separatrix, "SEPARATRIX"},
    {SurfaceTagKind::PeriodicAnnulus, "PERIODIC_ANNULUS"},
    {SurfaceTagKind::TransverseAnnulus, "TRANSVERSE_ANNULUS"},
    {SurfaceTagKind::TrivialFlowBox, "TRIVIAL_FLOW_BOX"},
    {SurfaceTagKind::LimitCycle, "LIMIT_CYCLE"},
}};

std::string join_ids(const IdSet& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

std::string_view to_string(OrbitKind kind) {
  switch (kind) {
    case OrbitKind::Singular: return "SINGULAR";
    case OrbitKind::Periodic: return "PERIODIC";
    case OrbitKind::Nonrecurrent: return "NONRECURRENT";
    case OrbitKind::RecurrentNonclosed: return "RECURRENT_NONCLOSED";
  }
  return "?";
}

std::string_view to_string(Granularity granularity) {
  return granularity == Granularity::SingleOrbit ? "SINGLE_ORBIT" : "FAMILY";
}

std::string_view to_string(PeriodType type) {
  switch (type) {
    case PeriodType::Rational: return "RATIONAL";
    case PeriodType::Irrational: return "IRRATIONAL";
    case PeriodType::MixedDense: return "MIXED_DENSE";
  }
  return "?";
}

std::string to_string(const SurfaceTag& tag) {
  std::string name;
  for (const auto& [kind, text] : kTagNames)
    if (kind == tag.kind) name = text;
  if (tag.is_saddle()) name += "(" + std::to_string(tag.sectors) + ")";
  return name;
}

std::optional<OrbitKind> parse_orbit_kind(std::string_view text) {
  for (auto k : {OrbitKind::Singular, OrbitKind::Periodic, OrbitKind::Nonrecurrent,
                 OrbitKind::RecurrentNonclosed})
    if (to_string(k) == text) return k;
  return std::nullopt;
}

std::optional<Granularity> parse_granularity(std::string_view text) {
  if (text == "SINGLE_ORBIT") return Granularity::SingleOrbit;
  if (text == "FAMILY") return Granularity::Family;
  return std::nullopt;
}

std::optional<PeriodType> parse_period_type(std::string_view text) {
  for (auto t : {PeriodType::Rational, PeriodType::Irrational, PeriodType::MixedDense})
    if (to_string(t) == text) return t;
  return std::nullopt;
}

std::optional<SurfaceTag> parse_surface_tag(std::string_view text) {
  std::string_view name = text;
  std::optional<int> sectors;
  if (auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') return std::nullopt;
    name = text.substr(0, open);
    auto digits = text.substr(open + 1, text.size() - open - 2);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1)
      return std::nullopt;
    sectors = value;
  }
  for (const auto& [kind, known] : kTagNames) {
    if (known != name) continue;
    SurfaceTag tag{kind, 0};
    if (tag.is_saddle()) {
      if (!sectors) return std::nullopt;
      tag.sectors = *sectors;
    } else if (sectors) {
      return std::nullopt;
    }
    return tag;
  }
  return std::nullopt;
}

bool is_well_formed_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return c > ' ' && c < 127 && c != '"';
  });
}

// ---------------------------------------------------------------------------

FlowModel::FlowModel(ModelFlags flags, std::vector<OrbitNode> nodes,
                     std::vector<IdPair> adjacency)
    : flags_(std::move(flags)), nodes_(std::move(nodes)) {
  for (const auto& n : nodes_)
    if (!is_well_formed_id(n.id)) throw ParseError("malformed node id '" + n.id + "'");
  std::sort(nodes_.begin(), nodes_.end(),
            [](const OrbitNode& a, const OrbitNode& b) { return a.id < b.id; });
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

std::optional<std::size_t> FlowModel::find(const NodeId& id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                             [](const OrbitNode& n, const NodeId& key) { return n.id < key; });
  if (it == nodes_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t FlowModel::index_of(const NodeId& id) const {
  if (auto i = find(id)) return *i;
  throw PreconditionError("unknown node id '" + id + "'");
}

// ---------------------------------------------------------------------------

IndexedModel::IndexedModel(FlowModel model) : model_(std::move(model)) {
  const std::size_t n = model_.size();
  alpha_.assign(n, IndexSet(n));
  omega_.assign(n, IndexSet(n));
  transverse_.assign(n, IndexSet(n));
  neighbours_.assign(n, IndexSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& node = model_.node(i);
    alpha_[i] = to_set(node.alpha);
    omega_[i] = to_set(node.omega);
    transverse_[i] = to_set(node.transverse_boundary);
  }
  for (const auto& [a, b] : model_.adjacency()) {
    const auto ia = model_.index_of(a);
    const auto ib = model_.index_of(b);
    if (ia == ib) continue;
    neighbours_[ia].insert(ib);
    neighbours_[ib].insert(ia);
  }
}

IndexSet IndexedModel::singleton(std::size_t i) const {
  IndexSet s(size());
  s.insert(i);
  return s;
}

IndexSet IndexedModel::orbit_closure(std::size_t i) const {
  IndexSet s = alpha_[i] | omega_[i];
  s.insert(i);
  return s;
}

IndexSet IndexedModel::closure(std::size_t i) const {
  IndexSet s = orbit_closure(i);
  s |= transverse_[i];
  return s;
}

IndexSet IndexedModel::closure(const IndexSet& nodes) const {
  IndexSet s(size());
  for (auto i : nodes.members()) s |= closure(i);
  return s;
}

IndexSet IndexedModel::alpha(const IndexSet& nodes) const {
  IndexSet s(size());
  for (auto i : nodes.members()) s |= alpha_[i];
  return s;
}

IndexSet IndexedModel::omega(const IndexSet& nodes) const {
  IndexSet s(size());
  for (auto i : nodes.members()) s |= omega_[i];
  return s;
}

IndexSet IndexedModel::transverse(const IndexSet& nodes) const {
  IndexSet s(size());
  for (auto i : nodes.members()) s |= transverse_[i];
  return s;
}

IndexSet IndexedModel::nodes_of_kind(OrbitKind k) const {
  IndexSet s(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (kind(i) == k) s.insert(i);
  return s;
}

std::vector<IndexSet> IndexedModel::components(const IndexSet& subset) const {
  std::vector<IndexSet> out;
  IndexSet seen(size());
  for (auto start : subset.members()) {
    if (seen.contains(start)) continue;
    IndexSet comp(size());
    std::vector<std::size_t> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (auto w : (neighbours_[v] & subset).members()) {
        if (seen.contains(w)) continue;
        seen.insert(w);
        stack.push_back(w);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool IndexedModel::is_connected(const IndexSet& subset) const {
  return components(subset).size() <= 1;
}

IdSet IndexedModel::ids(const IndexSet& nodes) const {
  IdSet out;
  for (auto i : nodes.members()) out.insert(id(i));
  return out;
}

IndexSet IndexedModel::to_set(const IdSet& ids) const {
  IndexSet s(size());
  for (const auto& id : ids) s.insert(model_.index_of(id));
  return s;
}

// ---------------------------------------------------------------------------

bool ValidationReport::has_rule(std::string_view rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

ValidationReport validate_model(const FlowModel& model) {
  ValidationReport report;
  auto add = [&](const NodeId& node, std::string_view rule, std::string detail) {
    report.violations.push_back({node, std::string(rule), std::move(detail)});
  };

  // Reference integrity first; the semantic rules need a resolvable model.
  bool references_ok = true;
  for (const auto& node : model.nodes()) {
    for (const IdSet* set : {&node.alpha, &node.omega, &node.transverse_boundary})
      for (const auto& ref : *set)
        if (!model.find(ref)) {
          add(node.id, rules::kUnknownReference, "'" + ref + "'");
          references_ok = false;
        }
  }
  for (const auto& [a, b] : model.adjacency()) {
    for (const auto* end : {&a, &b})
      if (!model.find(*end)) {
        add(*end, rules::kUnknownReference, "adjacency endpoint '" + *end + "'");
        references_ok = false;
      }
    if (a == b) add(a, rules::kAdjacencySelfLoop, "");
  }
  if (!references_ok) {
    std::stable_sort(report.violations.begin(), report.violations.end(),
                     [](const Violation& x, const Violation& y) { return x.node < y.node; });
    return report;
  }

  const IndexedModel m(model);
  const auto& flags = model.flags();
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& node = m.node(i);
    const auto& alpha = m.alpha(i);
    const auto& omega = m.omega(i);
    switch (node.kind) {
      case OrbitKind::Singular:
      case OrbitKind::Periodic:
        if (!alpha.empty() || !omega.empty())
          add(node.id, rules::kClosedWithLimits, "alpha/omega must be empty for closed orbits");
        break;
      case OrbitKind::Nonrecurrent:
        if (alpha.contains(i) || omega.contains(i))
          add(node.id, rules::kRecurrenceContradiction,
              "non-recurrent node lists itself as a limit");
        break;
      case OrbitKind::RecurrentNonclosed:
        if (!alpha.contains(i) && !omega.contains(i))
          add(node.id, rules::kMissingRecurrence,
              "recurrent node must lie in its own alpha or omega");
        break;
    }
    if (node.period_type && node.kind != OrbitKind::Periodic)
      add(node.id, rules::kPeriodOnNonPeriodic, std::string(to_string(*node.period_type)));

    if (flags.compact && !node.is_closed()) {
      if (alpha.empty()) add(node.id, rules::kEmptyAlphaCompact, "");
      if (omega.empty()) add(node.id, rules::kEmptyOmegaCompact, "");
    }

    if (flags.hausdorff) {
      const auto& transverse = m.transverse(i);
      if (transverse.contains(i)) add(node.id, rules::kSelfInTransverse, "");
      const auto overlap = transverse & (alpha | omega);
      if (!overlap.empty())
        add(node.id, rules::kTransverseMeetsLimit, join_ids(m.ids(overlap)));

      // A limit set is closed: any whole orbit it contains brings its closure.
      for (const auto* limit : {&alpha, &omega}) {
        for (auto j : limit->members()) {
          if (m.node(j).granularity != Granularity::SingleOrbit) continue;
          const auto missing = m.orbit_closure(j) - *limit;
          if (!missing.empty())
            add(node.id, rules::kLimitNotClosed,
                "closure of '" + m.id(j) + "' leaves the limit set at " + join_ids(m.ids(missing)));
        }
      }

      if (flags.compact) {
        if (!alpha.empty() && !m.is_connected(alpha))
          add(node.id, rules::kDisconnectedAlpha, join_ids(m.ids(alpha)));
        if (!omega.empty() && !m.is_connected(omega))
          add(node.id, rules::kDisconnectedOmega, join_ids(m.ids(omega)));
      }
    }
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& x, const Violation& y) {
                     return std::tie(x.node, x.rule) < std::tie(y.node, y.rule);
                   });
  return report;
}

void require_valid(const FlowModel& model) {
  const auto report = validate_model(model);
  if (report.valid()) return;
  const auto& v = report.violations.front();
  std::string msg = "invalid model: node '" + v.node + "': " + v.rule;
  if (!v.detail.empty()) msg += " (" + v.detail + ")";
  throw PreconditionError(msg);
}

BoundaryDecomposition boundary_decomposition(const FlowModel& model, const NodeId& id) {
  const auto& node = model.node(id);
  BoundaryDecomposition out;
  out.node = id;
  std::set_union(node.alpha.begin(), node.alpha.end(), node.omega.begin(), node.omega.end(),
                 std::inserter(out.perp, out.perp.end()));
  out.perp.erase(id);
  out.pitchfork = node.transverse_boundary;
  out.pitchfork.erase(id);
  out.coborder = out.perp;
  out.coborder.insert(out.pitchfork.begin(), out.pitchfork.end());
  return out;
}

IdSet KindPartition::closed() const {
  IdSet out = singular;
  out.insert(periodic.begin(), periodic.end());
  return out;
}

KindPartition kind_partition(const FlowModel& model) {
  KindPartition out;
  for (const auto& node : model.nodes()) {
    switch (node.kind) {
      case OrbitKind::Singular: out.singular.insert(node.id); break;
      case OrbitKind::Periodic: out.periodic.insert(node.id); break;
      case OrbitKind::Nonrecurrent: out.nonrecurrent.insert(node.id); break;
      case OrbitKind::RecurrentNonclosed: out.recurrent.insert(node.id); break;
    }
  }
  return out;
}

}  // namespace orbitspace
