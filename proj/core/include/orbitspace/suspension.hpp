#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitspace/model.hpp"
#include "orbitspace/quotients.hpp"

namespace orbitspace {

/// Orbit kinds of a homeomorphism: X = Per(f) ⊔ R(f) ⊔ P(f), with Per(f)
/// split into fixed points and periodic points of period k >= 2.
enum class MapKind { Fixed, Periodic, NonperiodicRecurrent, Nonrecurrent };

std::string_view to_string(MapKind kind);
std::optional<MapKind> parse_map_kind(std::string_view text);

struct MapNode {
  NodeId id;
  MapKind kind = MapKind::Fixed;
  /// Period of PERIODIC nodes (>= 2); 1 for FIXED, 0 otherwise.
  int period = 1;
  Granularity granularity = Granularity::SingleOrbit;
  IdSet alpha;
  IdSet omega;
  IdSet transverse_boundary;
  std::optional<PeriodType> period_type;
  std::string embedding;

  bool operator==(const MapNode&) const = default;
};

/// Finite combinatorial model of a homeomorphism. Nodes are sorted by id and
/// adjacency is normalized as in FlowModel.
class MapModel {
 public:
  MapModel() = default;
  MapModel(ModelFlags flags, std::vector<MapNode> nodes, std::vector<IdPair> adjacency);

  const ModelFlags& flags() const { return flags_; }
  const std::vector<MapNode>& nodes() const { return nodes_; }
  const std::vector<IdPair>& adjacency() const { return adjacency_; }
  std::size_t size() const { return nodes_.size(); }

  bool operator==(const MapModel&) const = default;

 private:
  ModelFlags flags_;
  std::vector<MapNode> nodes_;
  std::vector<IdPair> adjacency_;
};

/// Same document shape as a flow model; `kind` is FIXED, PERIODIC,
/// NONPERIODIC_RECURRENT or NONRECURRENT and PERIODIC nodes carry `period`.
MapModel parse_map_model_json(std::string_view text);
std::string map_model_to_json(const MapModel& model, int indent = 2);
MapModel load_map_model(const std::filesystem::path& path);

/// Period checks plus every flow-model violation of the suspension.
ValidationReport validate_map_model(const MapModel& model);

/// FIXED and PERIODIC nodes become PERIODIC flow nodes, NONPERIODIC_RECURRENT
/// becomes RECURRENT_NONCLOSED, NONRECURRENT stays. Limit sets, transverse
/// boundaries and adjacency carry over unchanged. Throws PreconditionError
/// when the map model is invalid.
FlowModel suspend(const MapModel& model);

/// PERIODIC flow node id -> period type.
using PeriodAnnotation = std::map<NodeId, PeriodType>;

/// Collects the `period_type` fields of a flow model's PERIODIC nodes.
PeriodAnnotation annotations_from_model(const FlowModel& model);

struct TimeOneResult {
  /// Level 1 keeps the flow blocks; blocks listed in `split_blocks` stand
  /// for a strictly finer family of time-one abstract weak orbits.
  QuotientSpace level1;
  std::vector<std::string> split_blocks;
  /// Level 2 regroups non-recurrent nodes by the level-1 blocks met by
  /// their limit sets.
  QuotientSpace level2;
  bool level1_equal = false;
  bool level2_equal = false;
};

/// Time-one abstract weak orbit spaces of a flow without non-closed
/// recurrence. A non-recurrent block is split at level 1 when its alpha or
/// omega contains a periodic node whose period is not IRRATIONAL. Throws
/// PreconditionError on R-nodes or when a periodic node met by a limit set
/// has no annotation.
TimeOneResult time_one_awo_space(const IndexedModel& flow, const PeriodAnnotation& periods);

struct HamReconstruction {
  bool verdict = false;
  /// Periodic family id -> how its time-one abstract weak orbits resolve.
  std::map<NodeId, std::string> resolution;
};

/// True iff every periodic family is MIXED_DENSE. Requires a
/// Hamiltonian-shaped surface model and an annotation on every periodic
/// family (PreconditionError otherwise).
HamReconstruction ham_reconstruction_check(const IndexedModel& flow,
                                           const PeriodAnnotation& periods);

}  // namespace orbitspace
