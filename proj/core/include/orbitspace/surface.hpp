#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitspace/finite_topology.hpp"
#include "orbitspace/model.hpp"
#include "orbitspace/quotients.hpp"

namespace orbitspace {

/// The five kinds of abstract weak orbit of a surface flow of finite type.
enum class AwoType {
  SingularPoint = 1,
  SemiMultiSaddleSeparatrix = 2,
  PeriodicComponent = 3,
  TrivialFlowBox = 4,
  TransverseAnnulus = 5,
};

std::string_view to_string(AwoType type);

/// Model classes that change the D(v) and height conventions.
enum class SurfaceClass { Hamiltonian, Gradient, FiniteType };
std::string_view to_string(SurfaceClass c);

struct Classification {
  bool is_finite_type = true;
  /// AWO block label -> type, for classified blocks.
  std::map<std::string, AwoType> awo_types;
  /// One entry per unclassified block or finite-type obstruction.
  std::vector<std::string> reasons;
};

/// Requires a surface-flagged model with a tag on every node
/// (PreconditionError otherwise).
Classification classify_awos(const IndexedModel& model);

/// Hamiltonian shape: singular points are centers or (boundary) saddles,
/// no recurrent nodes, no sink/source/limit-cycle/flow-box/transverse tags.
bool is_hamiltonian_shaped(const IndexedModel& model);
SurfaceClass surface_class(const IndexedModel& model);

/// Saddle-tagged nodes, non-recurrent nodes with a saddle in alpha or
/// omega, and sinks, sources, their boundary variants and limit cycles.
/// On Hamiltonian-shaped models the last group is empty.
IdSet msc_diagram(const IndexedModel& model);

struct Stratification {
  SurfaceClass model_class = SurfaceClass::FiniteType;
  IdSet s0, s1, s2;
  bool nested = true;
  /// AWO block label -> height under the transitive closure of <=_partial.
  std::map<std::string, int> heights;
  int bound = 3;
  bool height_bound_ok = true;
  /// Longest chain (bottom first) at an element breaking the bound, or at
  /// an element whose height exceeds its stratum.
  std::vector<std::string> witness;
};

/// Builds S0 = Sing, S1 = Sing | D(v), S2 = everything and checks AWO
/// heights: at most 2 for gradient and Hamiltonian models, 3 otherwise,
/// and, when a multi-saddle exists, no block higher than its stratum.
/// Throws PreconditionError when the model is not of finite type.
Stratification stratification(const IndexedModel& model);

struct EulerReport {
  /// Sum of indices in half-units (a boundary sink counts 1).
  int index_sum_doubled = 0;
  /// Integer index sum when index_sum_doubled is even.
  std::optional<int> index_sum;
  int declared_euler_characteristic = 0;
  bool matches = false;
  /// The boundary-saddle index rule used, reported with every sum.
  std::string index_convention;
};

/// Index table: center, sink, source +1; SADDLE(k) 1 - k/2; boundary sink
/// and source 1/2; BOUNDARY_SADDLE(k) (1 - k)/2. Throws PreconditionError
/// for untagged singular nodes or a model without surface flags.
EulerReport euler_check(const IndexedModel& model);

/// Doubled index of one singular tag, or nullopt for non-singular tags.
std::optional<int> doubled_index(const SurfaceTag& tag);

struct ReebGraph {
  QuotientSpace extended;
  /// Extended blocks under the reflexive-transitive closure of <=_partial.
  FinitePoset poset;
  AbstractMultigraph graph;
};

/// Throws PreconditionError for non-Hamiltonian models or when the
/// extended order is not multi-graph-like (the message names the element
/// and rule).
ReebGraph reeb_abstract_graph(const IndexedModel& model);

struct SurfaceReport {
  Classification classification;
  IdSet msc;
  std::optional<Stratification> strata;
  std::optional<EulerReport> euler;
  std::string convention;
};

/// Everything above that applies; stratification is skipped for models not
/// of finite type and the index check for models without declared chi.
SurfaceReport surface_report(const IndexedModel& model);

}  // namespace orbitspace
