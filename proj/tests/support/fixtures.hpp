#pragma once

// Small hand-built models shared by several test files.

#include <string>
#include <utility>
#include <vector>

#include "orbitspace/corpus.hpp"
#include "orbitspace/model.hpp"

namespace fixtures {

using namespace orbitspace;

inline OrbitNode node(std::string id, OrbitKind kind, IdSet alpha = {}, IdSet omega = {},
                      IdSet tb = {}, Granularity g = Granularity::SingleOrbit) {
  OrbitNode n;
  n.id = std::move(id);
  n.kind = kind;
  n.granularity = g;
  n.alpha = std::move(alpha);
  n.omega = std::move(omega);
  n.transverse_boundary = std::move(tb);
  return n;
}

inline OrbitNode tagged(OrbitNode n, SurfaceTagKind kind, int sectors = 0) {
  n.surface_tag = SurfaceTag{kind, sectors};
  return n;
}

inline FlowModel corpus(const std::string& id) { return corpus_model(id).value(); }

/// Two recurrent nodes with the same closure {r1, r2, p} but different
/// limit sets: r1 has alpha = closure and omega = {p}, r2 the reverse.
inline FlowModel shared_closure_r_model() {
  return FlowModel(ModelFlags{},
                   {node("p", OrbitKind::Singular),
                    node("r1", OrbitKind::RecurrentNonclosed, {"p", "r1", "r2"}, {"p"}),
                    node("r2", OrbitKind::RecurrentNonclosed, {"p"}, {"p", "r1", "r2"})},
                   {{"p", "r1"}, {"p", "r2"}, {"r1", "r2"}});
}

/// Minimal flow: three recurrent nodes, each dense in the whole space.
inline FlowModel minimal_flow() {
  const IdSet all = {"m1", "m2", "m3"};
  return FlowModel(ModelFlags{},
                   {node("m1", OrbitKind::RecurrentNonclosed, all, all),
                    node("m2", OrbitKind::RecurrentNonclosed, all, all),
                    node("m3", OrbitKind::RecurrentNonclosed, all, all)},
                   {{"m1", "m2"}, {"m2", "m3"}});
}

/// One recurrent node whose limit sets are itself.
inline FlowModel single_r_node() {
  return FlowModel(ModelFlags{}, {node("m", OrbitKind::RecurrentNonclosed, {"m"}, {"m"})}, {});
}

inline FlowModel single_singular() {
  return FlowModel(ModelFlags{}, {node("x", OrbitKind::Singular)}, {});
}

inline NodeSpec spec(std::string id, SurfaceTagKind tag, int sectors = 0) {
  NodeSpec n;
  n.id = std::move(id);
  n.tag = SurfaceTag{tag, sectors};
  return n;
}

inline NodeSpec spec(std::string id, IdSet alpha, IdSet omega, SurfaceTagKind tag, IdSet tb = {},
                     Granularity g = Granularity::SingleOrbit) {
  NodeSpec n;
  n.id = std::move(id);
  n.kind = OrbitKind::Nonrecurrent;
  n.granularity = g;
  n.alpha = std::move(alpha);
  n.omega = std::move(omega);
  n.transverse_boundary = std::move(tb);
  n.tag = SurfaceTag{tag, 0};
  return n;
}

inline ModelFlags sphere_flags() {
  ModelFlags f;
  f.surface = SurfaceFlags{true, 2, false};
  return f;
}

/// Sphere with a source, a sink and two 4-sector saddles: index sum 0.
inline FlowModel two_saddle_sphere() {
  using T = SurfaceTagKind;
  return build_model(sphere_flags(),
                     {spec("src", T::Source), spec("k", T::Sink), spec("s1", T::Saddle, 4),
                      spec("s2", T::Saddle, 4), spec("a1", {"src"}, {"s1"}, T::Separatrix),
                      spec("b1", {"s1"}, {"k"}, T::Separatrix),
                      spec("a2", {"src"}, {"s2"}, T::Separatrix),
                      spec("b2", {"s2"}, {"k"}, T::Separatrix),
                      spec("F", {"src"}, {"k"}, T::TrivialFlowBox,
                           {"a1", "b1", "a2", "b2", "s1", "s2"}, Granularity::Family)});
}

/// Surface model whose flow boxes are stacked through transverse
/// boundaries: F1 < F2 < F3 < F4 above the singular points, height 4.
inline FlowModel stacked_flow_boxes() {
  using T = SurfaceTagKind;
  std::vector<NodeSpec> specs = {spec("src", T::Source)};
  IdSet below;
  for (int i = 1; i <= 4; ++i) {
    const auto k = "k" + std::to_string(i);
    const auto f = "F" + std::to_string(i);
    specs.push_back(spec(k, T::Sink));
    specs.push_back(spec(f, {"src"}, {k}, T::TrivialFlowBox, below, Granularity::Family));
    below.insert(f);
  }
  return build_model(sphere_flags(), specs);
}

/// Two adjacent orbits p1 -> k1 and p2 -> k2 from a common source, where
/// the sinks k1, k2 are adjacent and so form one singular block. The
/// orbits differ node-wise but agree block-wise, so the second refinement
/// merges them.
inline FlowModel split_limit_model() {
  return FlowModel(ModelFlags{},
                   {node("src", OrbitKind::Singular), node("k1", OrbitKind::Singular),
                    node("k2", OrbitKind::Singular),
                    node("p1", OrbitKind::Nonrecurrent, {"src"}, {"k1"}),
                    node("p2", OrbitKind::Nonrecurrent, {"src"}, {"k2"})},
                   {{"k1", "k2"}, {"p1", "p2"}, {"p1", "src"}, {"p2", "src"}, {"p1", "k1"},
                    {"p2", "k2"}});
}

/// Two single orbits with equal limits joined by adjacency.
inline FlowModel equal_limit_pair() {
  return FlowModel(ModelFlags{},
                   {node("a", OrbitKind::Singular), node("b", OrbitKind::Singular),
                    node("o1", OrbitKind::Nonrecurrent, {"a"}, {"b"}),
                    node("o2", OrbitKind::Nonrecurrent, {"a"}, {"b"})},
                   {{"a", "o1"}, {"a", "o2"}, {"b", "o1"}, {"b", "o2"}, {"o1", "o2"}});
}

/// Morse model of a sphere: a source, a saddle and two sinks with six
/// separatrix and flow-box blocks.
inline FlowModel morse_sphere() { return corpus("morse-sphere"); }

}  // namespace fixtures
