#pragma once

#include <string>
#include <string_view>

#include "orbitspace/finite_topology.hpp"
#include "orbitspace/morse.hpp"
#include "orbitspace/quotients.hpp"
#include "orbitspace/relations.hpp"
#include "orbitspace/surface.hpp"

namespace orbitspace {

/// Double-quoted DOT identifier with `"` and `\` escaped.
std::string dot_quote(std::string_view text);

/// Digraph with one arc per non-identity entry; the graph label is the
/// relation name.
std::string relation_to_dot(const RelationMatrix& relation);

/// Hasse diagram: an arc a -> b for each covering pair a < b, plus arcs in
/// both directions between distinct equivalent elements.
std::string preorder_to_dot(const FinitePreorder& order, std::string_view name = "order");

/// Hasse diagram of the quotient order, blocks labelled with their members.
std::string quotient_to_dot(const QuotientSpace& quotient);

/// One vertex per Morse set, one arc per edge, labelled with sizes.
std::string morse_graph_to_dot(const MorseGraph& graph);

/// Undirected multigraph: vertices are the height-0 extended blocks, each
/// edge is a height-1 block joining its one or two ends.
std::string reeb_graph_to_dot(const ReebGraph& reeb);

}  // namespace orbitspace
