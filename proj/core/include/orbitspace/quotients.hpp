#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitspace/finite_topology.hpp"
#include "orbitspace/index_set.hpp"
#include "orbitspace/model.hpp"

namespace orbitspace {

enum class QuotientLevel { Orbit, WeakClass, Class, Awo, Ao, AwoK, AoK, Extended, Morse };

std::string_view to_string(QuotientLevel level);
/// Accepts the enum spelling (`AWO`, `WEAK_CLASS`) or lower-case CLI
/// spelling (`awo`, `weak-class`, `awo-k`).
std::optional<QuotientLevel> parse_quotient_level(std::string_view text);

/// Node partition as index sets over an IndexedModel, ordered by smallest
/// member.
using Partition = std::vector<IndexSet>;

/// One rung of the quotient tower.
///
/// `order` is the specialization order of the quotient topology: the
/// reflexive-transitive closure of "block B meets the closure of block C".
struct QuotientSpace {
  QuotientLevel level = QuotientLevel::Orbit;
  int k = 0;  ///< refinement index for AWO_K / AO_K, else 0
  Partition blocks;
  std::vector<IdSet> members;
  std::vector<std::string> labels;  ///< smallest member id of each block
  std::vector<std::size_t> block_of;  ///< node index -> block index
  FinitePreorder order;

  std::size_t size() const { return blocks.size(); }
  /// Throws PreconditionError for unknown labels.
  std::size_t index_of_label(std::string_view label) const;
  /// Union of block members' closures.
  IndexSet closure(const IndexedModel& model, std::size_t block) const;
};

/// Builds labels, the node->block map and the quotient order. `blocks`
/// must partition the model's nodes; it is re-sorted by smallest member.
QuotientSpace make_quotient(const IndexedModel& model, QuotientLevel level, Partition blocks,
                            int k = 0);

bool is_partition(const Partition& blocks, std::size_t universe);
/// Every block of `fine` lies inside one block of `coarse`.
bool refines(const Partition& fine, const Partition& coarse);

QuotientSpace orbit_space(const IndexedModel& model);
QuotientSpace orbit_class_space(const IndexedModel& model);
QuotientSpace weak_orbit_class_space(const IndexedModel& model);
QuotientSpace abstract_weak_orbit_space(const IndexedModel& model);
QuotientSpace abstract_orbit_space(const IndexedModel& model);

QuotientSpace abstract_weak_orbit_space(const FlowModel& model);
QuotientSpace abstract_orbit_space(const FlowModel& model);

/// ORBIT, WEAK_CLASS, CLASS, AWO, AO or EXTENDED; other levels need extra
/// parameters and throw PreconditionError.
QuotientSpace quotient_at_level(const IndexedModel& model, QuotientLevel level);

struct KthResult {
  QuotientSpace space;
  /// Smallest k with partition_k == partition_{k+1}; empty when the
  /// iteration did not settle within node-count + 1 steps.
  std::optional<int> stabilization_index;
};

/// k-th refinement. Level 1 is the AWO (or AO) space; at step k+1 the
/// non-recurrent nodes are regrouped by the sets of level-k blocks met by
/// their alpha and omega, taking adjacency components of each group.
/// Throws PreconditionError for k < 1.
KthResult kth_space(const IndexedModel& model, int k, bool abstract_orbit = false);

struct QuasiSaddle {
  IdSet core;
  IdSet separatrices;
};

struct ExtendedResult {
  QuotientSpace space;
  std::vector<QuasiSaddle> quasi_saddles;
  /// Connections of the quasi-saddle diagram, and which of them are closed.
  std::vector<IdSet> connections;
  std::vector<bool> connection_closed;
  /// True when candidate enumeration hit its budget; the result is then
  /// built from the quasi-saddles found so far.
  bool budget_exhausted = false;
};

/// Quasi-saddles are the inclusion-minimal closed connected unions of AWO
/// blocks that receive an outside block with alpha inside and one with
/// omega inside. Each closed connection of the diagram becomes one block.
ExtendedResult extended_weak_orbit_space(const IndexedModel& model,
                                         std::size_t candidate_budget = 20000);

struct ChainStep {
  QuotientLevel fine;
  QuotientLevel coarse;
  bool holds;
};

struct ChainReport {
  std::vector<ChainStep> steps;
  /// Set when a rung could not be computed (e.g. MORSE on a non-compact
  /// model); those steps are omitted.
  std::vector<std::string> notes;
  bool ok() const;
};

/// ORBIT -> WEAK_CLASS -> CLASS; WEAK_CLASS -> AWO; CLASS -> AO; AWO -> AO;
/// AWO -> EXTENDED; AO -> MORSE.
ChainReport refinement_chain_check(const IndexedModel& model);

/// {"level", "k", "blocks": [{"label", "members"}], "order": [[0|1,...],...]}
std::string quotient_to_json(const QuotientSpace& q, int indent = 2);

}  // namespace orbitspace
