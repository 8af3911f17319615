#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orbitspace/model.hpp"

namespace orbitspace {

struct RandomModelOptions {
  std::size_t max_nodes = 8;
  /// Allow RECURRENT_NONCLOSED nodes.
  bool recurrent = true;
};

/// Draws a valid compact Hausdorff model whose Morse graph is well defined.
/// Limit sets are closures of single chain-recurrent nodes, so they are
/// closed, connected and inside one Morse set.
FlowModel random_model(std::mt19937_64& rng, const RandomModelOptions& options = {});

/// `count` models from one seeded generator.
std::vector<FlowModel> random_models(std::uint64_t seed, std::size_t count,
                                     const RandomModelOptions& options = {});

}  // namespace orbitspace
