#include "orbitspace/surface.hpp"

#include <algorithm>

#include "orbitspace/error.hpp"
#include "orbitspace/relations.hpp"

namespace orbitspace {

namespace {

bool has_tag(const OrbitNode& n, SurfaceTagKind kind) {
  return n.surface_tag && n.surface_tag->kind == kind;
}

bool is_saddle(const OrbitNode& n) { return n.surface_tag && n.surface_tag->is_saddle(); }

bool is_ss_component(const OrbitNode& n) {
  return has_tag(n, SurfaceTagKind::Sink) || has_tag(n, SurfaceTagKind::Source) ||
         has_tag(n, SurfaceTagKind::BoundarySink) || has_tag(n, SurfaceTagKind::BoundarySource) ||
         has_tag(n, SurfaceTagKind::LimitCycle);
}

bool is_singular_tag(const SurfaceTag& t) {
  switch (t.kind) {
    case SurfaceTagKind::Center:
    case SurfaceTagKind::Saddle:
    case SurfaceTagKind::BoundarySaddle:
    case SurfaceTagKind::Sink:
    case SurfaceTagKind::Source:
    case SurfaceTagKind::BoundarySink:
    case SurfaceTagKind::BoundarySource:
      return true;
    default:
      return false;
  }
}

IndexSet saddle_nodes(const IndexedModel& m) {
  IndexSet s(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (is_saddle(m.node(i))) s.insert(i);
  return s;
}

void require_surface(const IndexedModel& m, bool need_tags) {
  if (!m.model().flags().surface) throw PreconditionError("model has no surface flags");
  if (!need_tags) return;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!m.node(i).surface_tag)
      throw PreconditionError("node '" + m.id(i) + "' has no surface_tag");
}

// Longest strict chain ending at `top`, bottom first.
std::vector<std::string> chain_to(const FinitePreorder& p, const std::vector<int>& h,
                                  std::size_t top) {
  std::vector<std::string> chain{p.label(top)};
  std::size_t cur = top;
  while (h[cur] > 0) {
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.less(j, cur) && h[j] == h[cur] - 1) {
        cur = j;
        break;
      }
    chain.push_back(p.label(cur));
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

FinitePreorder partial_order_closure(const IndexedModel& m, const QuotientSpace& q) {
  const auto r = compute_relation(m, RelationName::LeqPartial, q);
  return FinitePreorder::closure_of(r.elements, r.holds);
}

}  // namespace

std::string_view to_string(AwoType type) {
  switch (type) {
    case AwoType::SingularPoint: return "singular point";
    case AwoType::SemiMultiSaddleSeparatrix: return "semi-multi-saddle separatrix";
    case AwoType::PeriodicComponent: return "periodic component";
    case AwoType::TrivialFlowBox: return "trivial flow box";
    case AwoType::TransverseAnnulus: return "transverse annulus";
  }
  return "?";
}

std::string_view to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Hamiltonian: return "hamiltonian";
    case SurfaceClass::Gradient: return "gradient";
    case SurfaceClass::FiniteType: return "finite-type";
  }
  return "?";
}

Classification classify_awos(const IndexedModel& m) {
  require_surface(m, true);
  Classification out;
  const auto awo = abstract_weak_orbit_space(m);
  const auto saddles = saddle_nodes(m);
  for (std::size_t b = 0; b < awo.size(); ++b) {
    const auto nodes = awo.blocks[b].members();
    const auto& label = awo.labels[b];
    const auto kind = m.kind(nodes.front());
    auto all_tagged = [&](SurfaceTagKind t) {
      return std::all_of(nodes.begin(), nodes.end(), [&](auto i) { return has_tag(m.node(i), t); });
    };
    switch (kind) {
      case OrbitKind::Singular:
        if (std::all_of(nodes.begin(), nodes.end(),
                        [&](auto i) { return is_singular_tag(*m.node(i).surface_tag); }))
          out.awo_types[label] = AwoType::SingularPoint;
        else
          out.reasons.push_back("block '" + label + "': singular node with a non-singular tag");
        break;
      case OrbitKind::Periodic:
        out.awo_types[label] = AwoType::PeriodicComponent;
        break;
      case OrbitKind::Nonrecurrent: {
        const auto limits = m.alpha(awo.blocks[b]) | m.omega(awo.blocks[b]);
        if (limits.intersects(saddles))
          out.awo_types[label] = AwoType::SemiMultiSaddleSeparatrix;
        else if (all_tagged(SurfaceTagKind::TrivialFlowBox))
          out.awo_types[label] = AwoType::TrivialFlowBox;
        else if (all_tagged(SurfaceTagKind::TransverseAnnulus))
          out.awo_types[label] = AwoType::TransverseAnnulus;
        else
          out.reasons.push_back("block '" + label + "': non-recurrent block of none of the five types");
        break;
      }
      case OrbitKind::RecurrentNonclosed:
        out.reasons.push_back("block '" + label + "': non-closed recurrent orbits");
        break;
    }
  }
  out.is_finite_type = out.reasons.empty();
  return out;
}

bool is_hamiltonian_shaped(const IndexedModel& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& n = m.node(i);
    if (n.kind == OrbitKind::RecurrentNonclosed) return false;
    if (!n.surface_tag) return false;
    switch (n.surface_tag->kind) {
      case SurfaceTagKind::Sink:
      case SurfaceTagKind::Source:
      case SurfaceTagKind::BoundarySink:
      case SurfaceTagKind::BoundarySource:
      case SurfaceTagKind::LimitCycle:
      case SurfaceTagKind::TrivialFlowBox:
      case SurfaceTagKind::TransverseAnnulus:
        return false;
      default:
        break;
    }
  }
  return true;
}

SurfaceClass surface_class(const IndexedModel& m) {
  if (is_hamiltonian_shaped(m)) return SurfaceClass::Hamiltonian;
  bool gradient = m.nodes_of_kind(OrbitKind::Periodic).empty() &&
                  m.nodes_of_kind(OrbitKind::RecurrentNonclosed).empty();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (has_tag(m.node(i), SurfaceTagKind::Center)) gradient = false;
  return gradient ? SurfaceClass::Gradient : SurfaceClass::FiniteType;
}

IdSet msc_diagram(const IndexedModel& m) {
  const auto saddles = saddle_nodes(m);
  IndexSet d = saddles;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.kind(i) == OrbitKind::Nonrecurrent && (m.alpha(i) | m.omega(i)).intersects(saddles))
      d.insert(i);
    if (is_ss_component(m.node(i))) d.insert(i);
  }
  return m.ids(d);
}

Stratification stratification(const IndexedModel& m) {
  const auto cls = classify_awos(m);
  if (!cls.is_finite_type)
    throw PreconditionError("stratification requires a flow of finite type: " + cls.reasons.front());
  Stratification s;
  s.model_class = surface_class(m);
  s.bound = s.model_class == SurfaceClass::FiniteType ? 3 : 2;
  s.s0 = m.ids(m.nodes_of_kind(OrbitKind::Singular));
  s.s1 = s.s0;
  const auto d = msc_diagram(m);
  s.s1.insert(d.begin(), d.end());
  for (std::size_t i = 0; i < m.size(); ++i) s.s2.insert(m.id(i));
  s.nested = std::includes(s.s1.begin(), s.s1.end(), s.s0.begin(), s.s0.end()) &&
             std::includes(s.s2.begin(), s.s2.end(), s.s1.begin(), s.s1.end());

  const auto awo = abstract_weak_orbit_space(m);
  const auto order = partial_order_closure(m, awo);
  const auto h = heights(order);
  const bool has_multi_saddle = !saddle_nodes(m).empty();
  for (std::size_t b = 0; b < awo.size(); ++b) {
    s.heights[awo.labels[b]] = h[b];
    int stratum = 2;
    const auto& members = awo.members[b];
    if (std::includes(s.s0.begin(), s.s0.end(), members.begin(), members.end())) stratum = 0;
    else if (std::includes(s.s1.begin(), s.s1.end(), members.begin(), members.end())) stratum = 1;
    const bool over_bound = h[b] > s.bound;
    const bool over_stratum = has_multi_saddle && h[b] > stratum;
    if ((over_bound || over_stratum) && s.height_bound_ok) {
      s.height_bound_ok = false;
      s.witness = chain_to(order, h, b);
    }
  }
  return s;
}

std::optional<int> doubled_index(const SurfaceTag& tag) {
  switch (tag.kind) {
    case SurfaceTagKind::Center:
    case SurfaceTagKind::Sink:
    case SurfaceTagKind::Source:
      return 2;
    case SurfaceTagKind::Saddle: return 2 - tag.sectors;
    case SurfaceTagKind::BoundarySink:
    case SurfaceTagKind::BoundarySource:
      return 1;
    case SurfaceTagKind::BoundarySaddle: return 1 - tag.sectors;
    default: return std::nullopt;
  }
}

EulerReport euler_check(const IndexedModel& m) {
  require_surface(m, false);
  EulerReport r;
  r.index_convention = "BOUNDARY_SADDLE(k) counts (1 - k)/2, as half of its doubled saddle";
  r.declared_euler_characteristic = m.model().flags().surface->euler_characteristic;
  for (auto i : m.nodes_of_kind(OrbitKind::Singular).members()) {
    const auto& tag = m.node(i).surface_tag;
    const auto idx = tag ? doubled_index(*tag) : std::nullopt;
    if (!idx) throw PreconditionError("singular node '" + m.id(i) + "' has no singular-point tag");
    r.index_sum_doubled += *idx;
  }
  if (r.index_sum_doubled % 2 == 0) r.index_sum = r.index_sum_doubled / 2;
  r.matches = r.index_sum_doubled == 2 * r.declared_euler_characteristic;
  return r;
}

ReebGraph reeb_abstract_graph(const IndexedModel& m) {
  if (!is_hamiltonian_shaped(m))
    throw PreconditionError("Reeb graph requires a Hamiltonian-shaped model");
  ReebGraph g;
  g.extended = extended_weak_orbit_space(m).space;
  const auto order = partial_order_closure(m, g.extended);
  if (!order.is_antisymmetric())
    throw PreconditionError("extended order is not antisymmetric");
  g.poset = FinitePoset(order);
  auto mg = as_multigraph(g.poset);
  if (!mg.accepted())
    throw PreconditionError("extended space is not multi-graph-like: element '" +
                            mg.rejection->element + "': " + mg.rejection->rule);
  g.graph = std::move(*mg.graph);
  return g;
}

SurfaceReport surface_report(const IndexedModel& m) {
  SurfaceReport r;
  r.classification = classify_awos(m);
  r.msc = msc_diagram(m);
  const auto cls = surface_class(m);
  r.convention = cls == SurfaceClass::Hamiltonian
                     ? "D(v): multi-saddles and their separatrices"
                     : "D(v): multi-saddles, separatrices and ss-components";
  if (r.classification.is_finite_type) r.strata = stratification(m);
  if (m.model().flags().surface) r.euler = euler_check(m);
  return r;
}

}  // namespace orbitspace
