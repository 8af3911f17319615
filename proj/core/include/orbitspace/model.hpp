#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitspace/index_set.hpp"

namespace orbitspace {

using NodeId = std::string;
using IdSet = std::set<NodeId>;
using IdPair = std::pair<NodeId, NodeId>;

/// Which piece of the decomposition X = Sing ⊔ Per ⊔ P ⊔ R a node lives in.
enum class OrbitKind { Singular, Periodic, Nonrecurrent, RecurrentNonclosed };

enum class Granularity { SingleOrbit, Family };

enum class PeriodType { Rational, Irrational, MixedDense };

enum class SurfaceTagKind {
  Center,
  Saddle,
  BoundarySaddle,
  Sink,
  Source,
  BoundarySink,
  BoundarySource,
  Separatrix,
  PeriodicAnnulus,
  TransverseAnnulus,
  TrivialFlowBox,
  LimitCycle,
};

/// Surface-flow role of a node. `sectors` is the number of hyperbolic
/// sectors and is only meaningful for (boundary) saddles.
struct SurfaceTag {
  SurfaceTagKind kind = SurfaceTagKind::Center;
  int sectors = 0;

  bool is_saddle() const {
    return kind == SurfaceTagKind::Saddle || kind == SurfaceTagKind::BoundarySaddle;
  }
  bool operator==(const SurfaceTag&) const = default;
};

std::string_view to_string(OrbitKind kind);
std::string_view to_string(Granularity granularity);
std::string_view to_string(PeriodType type);
std::string to_string(const SurfaceTag& tag);

std::optional<OrbitKind> parse_orbit_kind(std::string_view text);
std::optional<Granularity> parse_granularity(std::string_view text);
std::optional<PeriodType> parse_period_type(std::string_view text);
/// Accepts `CENTER`, `SADDLE(4)`, `BOUNDARY_SADDLE(2)`, ...
std::optional<SurfaceTag> parse_surface_tag(std::string_view text);

/// True when `id` is usable as a node token: non-empty printable ASCII
/// without whitespace or double quotes.
bool is_well_formed_id(std::string_view id);

/// One aggregate of orbits. For closed kinds `alpha`/`omega` are stored empty
/// (the limit sets minus the orbit itself are empty). For P-nodes they are the
/// limit sets as met nodes; an R-node lists itself in `alpha` or `omega`.
struct OrbitNode {
  NodeId id;
  OrbitKind kind = OrbitKind::Singular;
  Granularity granularity = Granularity::SingleOrbit;
  IdSet alpha;
  IdSet omega;
  IdSet transverse_boundary;
  std::optional<PeriodType> period_type;
  std::optional<SurfaceTag> surface_tag;
  /// Free-form embedding data (cyclic orders, spiral directions). Carried
  /// through serialization, never read by any invariant.
  std::string embedding;

  bool is_closed() const {
    return kind == OrbitKind::Singular || kind == OrbitKind::Periodic;
  }
  bool operator==(const OrbitNode&) const = default;
};

struct SurfaceFlags {
  bool closed = true;
  int euler_characteristic = 0;
  bool has_boundary = false;
  bool operator==(const SurfaceFlags&) const = default;
};

struct ModelFlags {
  bool hausdorff = true;
  bool compact = true;
  std::optional<SurfaceFlags> surface;
  bool operator==(const ModelFlags&) const = default;
};

/// Finite combinatorial model of a flow.
///
/// Nodes are kept sorted by id. Adjacency pairs are normalized so that
/// `first <= second` and deduplicated. The adjacency must be supplied so that
/// graph connectivity of any saturated node subset equals topological
/// connectivity of the union it represents; this cannot be checked here.
///
/// Construction only rejects structural problems (empty, malformed or
/// duplicate ids). Dangling references survive construction so that
/// validate_model() can report them.
class FlowModel {
 public:
  FlowModel() = default;
  FlowModel(ModelFlags flags, std::vector<OrbitNode> nodes, std::vector<IdPair> adjacency);

  const ModelFlags& flags() const { return flags_; }
  std::span<const OrbitNode> nodes() const { return nodes_; }
  const std::vector<IdPair>& adjacency() const { return adjacency_; }
  std::size_t size() const { return nodes_.size(); }

  std::optional<std::size_t> find(const NodeId& id) const;
  /// Throws PreconditionError for unknown ids.
  std::size_t index_of(const NodeId& id) const;
  const OrbitNode& node(std::size_t index) const { return nodes_.at(index); }
  const OrbitNode& node(const NodeId& id) const { return nodes_[index_of(id)]; }

  bool operator==(const FlowModel&) const = default;

 private:
  ModelFlags flags_;
  std::vector<OrbitNode> nodes_;
  std::vector<IdPair> adjacency_;
};

/// Index-resolved view of a model that has passed reference checking.
/// All downstream algorithms work on this view.
class IndexedModel {
 public:
  /// Throws PreconditionError if any referenced id is unknown.
  explicit IndexedModel(FlowModel model);

  const FlowModel& model() const { return model_; }
  std::size_t size() const { return model_.size(); }
  const NodeId& id(std::size_t i) const { return model_.node(i).id; }
  OrbitKind kind(std::size_t i) const { return model_.node(i).kind; }
  const OrbitNode& node(std::size_t i) const { return model_.node(i); }

  const IndexSet& alpha(std::size_t i) const { return alpha_[i]; }
  const IndexSet& omega(std::size_t i) const { return omega_[i]; }
  const IndexSet& transverse(std::size_t i) const { return transverse_[i]; }
  const IndexSet& neighbours(std::size_t i) const { return neighbours_[i]; }

  IndexSet empty_set() const { return IndexSet(size()); }
  IndexSet singleton(std::size_t i) const;

  /// {i} ∪ α ∪ ω: the closure of one member orbit.
  IndexSet orbit_closure(std::size_t i) const;
  /// {i} ∪ α ∪ ω ∪ transverse boundary: closure of the whole node.
  IndexSet closure(std::size_t i) const;
  /// Union of node closures.
  IndexSet closure(const IndexSet& nodes) const;
  IndexSet alpha(const IndexSet& nodes) const;
  IndexSet omega(const IndexSet& nodes) const;
  IndexSet transverse(const IndexSet& nodes) const;

  IndexSet nodes_of_kind(OrbitKind kind) const;

  /// Adjacency-connected components of the induced subgraph on `subset`,
  /// ordered by smallest member.
  std::vector<IndexSet> components(const IndexSet& subset) const;
  bool is_connected(const IndexSet& subset) const;

  IdSet ids(const IndexSet& nodes) const;
  IndexSet to_set(const IdSet& ids) const;

 private:
  FlowModel model_;
  std::vector<IndexSet> alpha_;
  std::vector<IndexSet> omega_;
  std::vector<IndexSet> transverse_;
  std::vector<IndexSet> neighbours_;
};

/// Rule names reported by validate_model().
namespace rules {
inline constexpr std::string_view kUnknownReference = "unknown reference";
inline constexpr std::string_view kAdjacencySelfLoop = "adjacency self-loop";
inline constexpr std::string_view kClosedWithLimits = "closed orbit with limit data";
inline constexpr std::string_view kRecurrenceContradiction = "recurrence contradiction";
inline constexpr std::string_view kMissingRecurrence = "missing self-recurrence";
inline constexpr std::string_view kPeriodOnNonPeriodic = "period type on non-periodic node";
inline constexpr std::string_view kEmptyAlphaCompact = "empty α-limit on compact model";
inline constexpr std::string_view kEmptyOmegaCompact = "empty ω-limit on compact model";
inline constexpr std::string_view kTransverseMeetsLimit = "transverse boundary meets limit set";
inline constexpr std::string_view kSelfInTransverse = "self in transverse boundary";
inline constexpr std::string_view kLimitNotClosed = "limit set not closed";
inline constexpr std::string_view kDisconnectedAlpha = "disconnected α-limit";
inline constexpr std::string_view kDisconnectedOmega = "disconnected ω-limit";
}  // namespace rules

struct Violation {
  NodeId node;
  std::string rule;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  bool has_rule(std::string_view rule) const;
  bool operator==(const ValidationReport&) const = default;
};

/// Checks reference integrity, the kind invariants and the flag-conditional
/// axioms. Violations are ordered by node id, then rule.
ValidationReport validate_model(const FlowModel& model);

/// Throws PreconditionError describing the first violation, if any.
void require_valid(const FlowModel& model);

struct BoundaryDecomposition {
  NodeId node;
  IdSet coborder;   ///< ∂+ : everything in the closure but outside the node
  IdSet perp;       ///< ∂⊥ : the limit-set part
  IdSet pitchfork;  ///< ∂⋔ : the transverse part
};

BoundaryDecomposition boundary_decomposition(const FlowModel& model, const NodeId& node);

struct KindPartition {
  IdSet singular;
  IdSet periodic;
  IdSet nonrecurrent;
  IdSet recurrent;

  IdSet closed() const;
};

KindPartition kind_partition(const FlowModel& model);

}  // namespace orbitspace
