#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitspace/model.hpp"
#include "orbitspace/suspension.hpp"

namespace orbitspace {

/// Ids of the bundled flow models, in a fixed order.
std::vector<std::string> corpus_ids();
std::optional<FlowModel> corpus_model(std::string_view id);

/// Ids of the bundled homeomorphism models.
std::vector<std::string> map_corpus_ids();
std::optional<MapModel> map_corpus_model(std::string_view id);

/// Node description for building small models by hand. Adjacency is
/// derived from closures: x and y are adjacent when one lies in the
/// closure of the other.
struct NodeSpec {
  std::string id;
  OrbitKind kind = OrbitKind::Singular;
  Granularity granularity = Granularity::SingleOrbit;
  IdSet alpha;
  IdSet omega;
  IdSet transverse_boundary;
  std::optional<SurfaceTag> tag;
  std::optional<PeriodType> period_type;
  std::string embedding;
};

FlowModel build_model(ModelFlags flags, const std::vector<NodeSpec>& nodes);

}  // namespace orbitspace
