#include "orbitspace/corpus.hpp"

#include <functional>
#include <map>

namespace orbitspace {

namespace {

using K = OrbitKind;
using T = SurfaceTagKind;
constexpr auto kFamily = Granularity::Family;

NodeSpec singular(std::string id, T tag, int sectors = 0) {
  NodeSpec n;
  n.id = std::move(id);
  n.tag = SurfaceTag{tag, sectors};
  return n;
}

NodeSpec plain_singular(std::string id) {
  NodeSpec n;
  n.id = std::move(id);
  return n;
}

NodeSpec flow(std::string id, IdSet alpha, IdSet omega, std::optional<T> tag = std::nullopt,
              IdSet tb = {}, Granularity g = Granularity::SingleOrbit) {
  NodeSpec n;
  n.id = std::move(id);
  n.kind = K::Nonrecurrent;
  n.granularity = g;
  n.alpha = std::move(alpha);
  n.omega = std::move(omega);
  n.transverse_boundary = std::move(tb);
  if (tag) n.tag = SurfaceTag{*tag, 0};
  return n;
}

NodeSpec periodic(std::string id, IdSet tb, T tag, Granularity g = kFamily) {
  NodeSpec n;
  n.id = std::move(id);
  n.kind = K::Periodic;
  n.granularity = g;
  n.transverse_boundary = std::move(tb);
  n.tag = SurfaceTag{tag, 0};
  return n;
}

NodeSpec with_embedding(NodeSpec n, std::string embedding) {
  n.embedding = std::move(embedding);
  return n;
}

ModelFlags surface_flags(int chi, bool closed) {
  ModelFlags f;
  f.surface = SurfaceFlags{closed, chi, !closed};
  return f;
}

FlowModel fig1() {
  return build_model(ModelFlags{}, {
      plain_singular("x"), plain_singular("y"), plain_singular("z"),
      flow("O1", {"x"}, {"z"}),
      flow("O2", {"z"}, {"x"}),
      flow("D1", {"x"}, {"y"}, std::nullopt, {"D2", "z"}, kFamily),
      flow("D2", {"y"}, {"z"}, std::nullopt, {"D1", "x"}, kFamily),
  });
}

FlowModel fig2() {
  return build_model(ModelFlags{}, {
      plain_singular("w"), plain_singular("x"), plain_singular("y"), plain_singular("z"),
      flow("O1", {"x"}, {"w"}),
      flow("O2", {"y"}, {"x"}),
      flow("O3", {"z"}, {"y"}),
      flow("D1", {"w"}, {"x"}, std::nullopt, {"D3", "O1"}, kFamily),
      flow("D2", {"x"}, {"y"}, std::nullopt, {"D1", "O2", "z"}, kFamily),
      flow("D3", {"y"}, {"z"}, std::nullopt, {"D2", "O3", "w"}, kFamily),
  });
}

FlowModel sphere_grad() {
  return build_model(surface_flags(2, true), {
      singular("s_plus", T::Source), singular("s_minus", T::Sink),
      flow("A", {"s_plus"}, {"s_minus"}, T::TransverseAnnulus, {}, kFamily),
  });
}

FlowModel disk_grad() {
  return build_model(surface_flags(1, false), {
      singular("b_source", T::BoundarySource), singular("b_sink", T::BoundarySink),
      flow("F", {"b_source"}, {"b_sink"}, T::TrivialFlowBox, {}, kFamily),
  });
}

FlowModel ham_disk() {
  return build_model(surface_flags(1, false), {
      singular("c1", T::Center), singular("c2", T::Center), singular("s", T::Saddle, 4),
      flow("O1", {"s"}, {"s"}, T::Separatrix),
      flow("O2", {"s"}, {"s"}, T::Separatrix),
      periodic("A1", {"c1", "O1", "s"}, T::PeriodicAnnulus),
      periodic("A2", {"c2", "O2", "s"}, T::PeriodicAnnulus),
      periodic("A3", {"O1", "O2", "s"}, T::PeriodicAnnulus),
  });
}

FlowModel ham_trivial_annulus() {
  return build_model(surface_flags(0, false), {periodic("A", {}, T::PeriodicAnnulus)});
}

FlowModel ham_trivial_disk() {
  return build_model(surface_flags(1, false), {
      singular("c", T::Center),
      periodic("A", {"c"}, T::PeriodicAnnulus),
  });
}

FlowModel ham_trivial_sphere() {
  return build_model(surface_flags(2, true), {
      singular("c1", T::Center), singular("c2", T::Center),
      periodic("A", {"c1", "c2"}, T::PeriodicAnnulus),
  });
}

// Two Morse-Smale torus flows with one attracting and one repelling limit
// cycle, differing only in the spiral directions of the two annuli.
FlowModel ms_torus(bool variant_b) {
  auto ga = periodic("ga", {}, T::LimitCycle, Granularity::SingleOrbit);
  auto gr = periodic("gr", {}, T::LimitCycle, Granularity::SingleOrbit);
  ga.period_type = PeriodType::Irrational;
  gr.period_type = PeriodType::Irrational;
  auto u1 = flow("U1", {"gr"}, {"ga"}, T::TransverseAnnulus, {}, kFamily);
  auto u2 = flow("U2", {"gr"}, {"ga"}, T::TransverseAnnulus, {}, kFamily);
  return build_model(surface_flags(0, true), {
      ga, gr,
      with_embedding(u1, variant_b ? "spiral=ccw" : "spiral=cw"),
      with_embedding(u2, "spiral=cw"),
  });
}

// Two saddles joined by a cycle of connections e1, e2 and carrying one
// homoclinic loop each. In variant a both loops lie outside the cycle; in
// variant b the loop L1 lies inside it.
FlowModel fig05(bool variant_b) {
  std::vector<NodeSpec> nodes = {
      with_embedding(singular("s1", T::Saddle, 4),
                     variant_b ? "cyclic=e1,L1,L1,e2" : "cyclic=e1,e2,L1,L1"),
      with_embedding(singular("s2", T::Saddle, 4), "cyclic=e2,e1,L2,L2"),
      singular("c1", T::Center), singular("c2", T::Center), singular("c3", T::Center),
      flow("L1", {"s1"}, {"s1"}, T::Separatrix),
      flow("L2", {"s2"}, {"s2"}, T::Separatrix),
      flow("e1", {"s1"}, {"s2"}, T::Separatrix),
      flow("e2", {"s2"}, {"s1"}, T::Separatrix),
      periodic("A1", {"c1", "L1", "s1"}, T::PeriodicAnnulus),
      periodic("A2", {"c2", "L2", "s2"}, T::PeriodicAnnulus),
  };
  if (variant_b) {
    nodes.push_back(periodic("A3", {"c3", "e1", "e2", "L1", "s1", "s2"}, T::PeriodicAnnulus));
    nodes.push_back(periodic("Aout", {"e1", "e2", "L2", "s1", "s2"}, T::PeriodicAnnulus));
  } else {
    nodes.push_back(periodic("A3", {"c3", "e1", "e2", "s1", "s2"}, T::PeriodicAnnulus));
    nodes.push_back(periodic("Aout", {"L1", "L2", "e1", "e2", "s1", "s2"}, T::PeriodicAnnulus));
  }
  return build_model(surface_flags(1, false), nodes);
}

FlowModel morse_sphere() {
  return build_model(surface_flags(2, true), {
      singular("src", T::Source), singular("sad", T::Saddle, 4),
      singular("k1", T::Sink), singular("k2", T::Sink),
      flow("st1", {"src"}, {"sad"}, T::Separatrix),
      flow("st2", {"src"}, {"sad"}, T::Separatrix),
      flow("u1", {"sad"}, {"k1"}, T::Separatrix),
      flow("u2", {"sad"}, {"k2"}, T::Separatrix),
      flow("F1", {"src"}, {"k1"}, T::TrivialFlowBox, {"st1", "st2", "sad", "u1"}, kFamily),
      flow("F2", {"src"}, {"k2"}, T::TrivialFlowBox, {"st1", "st2", "sad", "u2"}, kFamily),
  });
}

const std::vector<std::pair<std::string, std::function<FlowModel()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<FlowModel()>>> r = {
      {"fig1", fig1},
      {"fig2", fig2},
      {"sphere-grad", sphere_grad},
      {"disk-grad", disk_grad},
      {"ham-disk", ham_disk},
      {"ham-trivial-annulus", ham_trivial_annulus},
      {"ham-trivial-disk", ham_trivial_disk},
      {"ham-trivial-sphere", ham_trivial_sphere},
      {"ms-torus-a", [] { return ms_torus(false); }},
      {"ms-torus-b", [] { return ms_torus(true); }},
      {"fig05-a", [] { return fig05(false); }},
      {"fig05-b", [] { return fig05(true); }},
      {"morse-sphere", morse_sphere},
  };
  return r;
}

MapNode map_node(std::string id, MapKind kind, int period = 1) {
  MapNode n;
  n.id = std::move(id);
  n.kind = kind;
  n.period = kind == MapKind::Fixed ? 1 : period;
  return n;
}

std::vector<IdPair> derived_adjacency(const std::vector<MapNode>& nodes) {
  std::vector<IdPair> adj;
  for (const auto& n : nodes)
    for (const auto* set : {&n.alpha, &n.omega, &n.transverse_boundary})
      for (const auto& other : *set)
        if (other != n.id) adj.emplace_back(n.id, other);
  return adj;
}

MapModel map_fixed() {
  std::vector<MapNode> nodes = {map_node("p", MapKind::Fixed)};
  return MapModel(ModelFlags{}, nodes, {});
}

// Irrational rotation of the circle: one dense orbit family.
MapModel map_rotation() {
  auto c = map_node("C", MapKind::NonperiodicRecurrent, 0);
  c.granularity = kFamily;
  c.alpha = {"C"};
  c.omega = {"C"};
  std::vector<MapNode> nodes = {c};
  return MapModel(ModelFlags{}, nodes, {});
}

// Dense orbits accumulating on a fixed point and a period-two orbit.
MapModel map_pseudo_anosov() {
  auto d = map_node("D", MapKind::NonperiodicRecurrent, 0);
  d.granularity = kFamily;
  d.alpha = {"D", "p1", "p2"};
  d.omega = {"D", "p1", "p2"};
  std::vector<MapNode> nodes = {d, map_node("p1", MapKind::Fixed),
                                map_node("p2", MapKind::Periodic, 2)};
  return MapModel(ModelFlags{}, nodes, derived_adjacency(nodes));
}

}  // namespace

FlowModel build_model(ModelFlags flags, const std::vector<NodeSpec>& specs) {
  std::vector<OrbitNode> nodes;
  std::vector<IdPair> adjacency;
  for (const auto& s : specs) {
    OrbitNode n;
    n.id = s.id;
    n.kind = s.kind;
    n.granularity = s.granularity;
    n.alpha = s.alpha;
    n.omega = s.omega;
    n.transverse_boundary = s.transverse_boundary;
    n.surface_tag = s.tag;
    n.period_type = s.period_type;
    n.embedding = s.embedding;
    for (const auto* set : {&s.alpha, &s.omega, &s.transverse_boundary})
      for (const auto& other : *set)
        if (other != s.id) adjacency.emplace_back(s.id, other);
    nodes.push_back(std::move(n));
  }
  return FlowModel(std::move(flags), std::move(nodes), std::move(adjacency));
}

std::vector<std::string> corpus_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, make] : registry()) ids.push_back(id);
  return ids;
}

std::optional<FlowModel> corpus_model(std::string_view id) {
  for (const auto& [name, make] : registry())
    if (name == id) return make();
  return std::nullopt;
}

std::vector<std::string> map_corpus_ids() {
  return {"map-fixed", "map-rotation", "map-pseudo-anosov"};
}

std::optional<MapModel> map_corpus_model(std::string_view id) {
  if (id == "map-fixed") return map_fixed();
  if (id == "map-rotation") return map_rotation();
  if (id == "map-pseudo-anosov") return map_pseudo_anosov();
  return std::nullopt;
}

}  // namespace orbitspace
