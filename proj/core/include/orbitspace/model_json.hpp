#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "orbitspace/model.hpp"

namespace orbitspace {

/// Parses the flow-model document (`flags`, `nodes`, `adjacency`).
/// Unknown keys at any level are rejected. Throws ParseError.
FlowModel parse_model_json(std::string_view text);

/// Canonical serialization: nodes by id, set members sorted, optional fields
/// only when present. parse_model_json(model_to_json(m)) == m.
std::string model_to_json(const FlowModel& model, int indent = 2);

/// Reads and parses a model file. Throws ParseError on I/O failure too.
FlowModel load_model(const std::filesystem::path& path);

}  // namespace orbitspace
