#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbitspace {

/// Planar vector field (x, y) -> (dx/dt, dy/dt).
using VectorField = std::function<std::array<double, 2>(double, double)>;

/// Parses "dx ; dy", two arithmetic expressions in x and y.
///
/// Grammar: + - * / ^ (right-assoc), unary minus, parentheses, decimal
/// literals, the constant pi, and sin cos tan exp log sqrt abs tanh.
/// Throws ParseError.
VectorField parse_vector_field(std::string_view text);

/// Evaluates a single expression in x and y; mainly for tests.
double evaluate_expression(std::string_view expression, double x, double y);

/// `linear-sink`, `linear-saddle`, `center`, `double-well`.
std::optional<VectorField> builtin_field(std::string_view name);
std::vector<std::string> builtin_field_names();

}  // namespace orbitspace
