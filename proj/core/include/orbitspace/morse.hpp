#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orbitspace/index_set.hpp"
#include "orbitspace/model.hpp"
#include "orbitspace/quotients.hpp"

namespace orbitspace {

/// Morse sets over a set of atoms (model nodes, or grid boxes).
struct MorseGraph {
  std::vector<std::string> atom_labels;
  std::vector<IndexSet> morse_sets;
  struct Edge {
    std::size_t from;
    std::size_t to;
    /// Atoms that run from `from` to `to`.
    IndexSet connecting;
  };
  std::vector<Edge> edges;

  std::size_t size() const { return morse_sets.size(); }
  bool has_edge(std::size_t from, std::size_t to) const;
  /// Reflexive-transitive reachability between Morse sets.
  std::vector<IndexSet> reachability() const;
};

/// Arcs a -> x for a in alpha(x), x -> w for w in omega(x), and a self-loop
/// on every closed or recurrent node.
struct ChainDigraph {
  std::size_t size = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

ChainDigraph chain_digraph(const IndexedModel& model);

/// Strongly connected components of a digraph given by successor lists;
/// `component[v]` numbers components in reverse topological order.
struct SccResult {
  std::vector<std::size_t> component;
  std::size_t count = 0;
};
SccResult strongly_connected_components(const std::vector<std::vector<std::size_t>>& successors);

/// Nodes lying on a cycle of the chain digraph.
IndexSet chain_recurrent_nodes(const IndexedModel& model);

/// Combinatorial Morse graph. Requires a compact model. Throws
/// ModelInconsistency when a limit set meets a non-recurrent node or
/// straddles two Morse sets.
MorseGraph morse_graph(const IndexedModel& model);
MorseGraph morse_graph(const FlowModel& model);

/// Morse sets and connecting sets as a partition of the nodes.
QuotientSpace morse_quotient(const IndexedModel& model);

struct MorseQuotientReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Every AO block lies in one Morse set or one connecting set, and the
/// connecting blocks point from the set meeting their alpha to the set
/// meeting their omega.
MorseQuotientReport verify_morse_quotient(const IndexedModel& model);

struct UnstableDecomposition {
  /// One cell per singular AWO block: the block plus every non-recurrent
  /// node whose alpha lies in it. Ordered as the singular AWO blocks.
  std::vector<IdSet> cells;
  bool partitions_nodes = false;
  bool cells_are_awo_unions = false;
};

/// Throws PreconditionError if the model has periodic or recurrent nodes,
/// or a limit set not inside one singular block.
UnstableDecomposition unstable_decomposition(const IndexedModel& model);

}  // namespace orbitspace
