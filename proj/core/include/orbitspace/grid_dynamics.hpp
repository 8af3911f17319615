#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitspace/field_expression.hpp"
#include "orbitspace/morse.hpp"

namespace orbitspace {

struct Rect {
  double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
};

/// Uniform nx-by-ny box grid. Box (i, j) has index j * nx + i.
struct BoxGrid {
  Rect domain;
  int nx = 2;
  int ny = 2;

  /// Throws PreconditionError on nx, ny < 2 or a degenerate domain.
  void validate() const;
  std::size_t box_count() const { return static_cast<std::size_t>(nx) * ny; }
  double width() const { return (domain.x1 - domain.x0) / nx; }
  double height() const { return (domain.y1 - domain.y0) / ny; }
  double diagonal() const;
  Rect box(std::size_t index) const;
  std::array<double, 2> center(std::size_t index) const;
  /// Box containing the point, clamped onto the grid.
  std::size_t locate(double x, double y) const;
  bool contains(double x, double y) const;
};

/// Outer approximation of the time-T map on boxes.
struct MultivaluedMap {
  BoxGrid grid;
  /// Sorted target boxes per box. Targets of EXITING boxes are kept but the
  /// boxes themselves are ignored by grid_morse_graph().
  std::vector<std::vector<std::size_t>> targets;
  std::vector<bool> exiting;
};

struct BoxMapParams {
  double time = 1.0;
  /// Inflation radius; negative means one box diagonal.
  double eps = -1.0;
  /// RK4 step; non-positive means time / 64.
  double step = 0.0;
};

/// Integrates the four corners and the centre of every box for `time` with
/// fixed-step RK4, then targets every box meeting the eps-inflated bounding
/// box of the images. A box is EXITING if any image leaves the domain.
/// Throws PreconditionError on invalid parameters or non-finite field values.
MultivaluedMap build_box_map(const VectorField& field, const BoxGrid& grid,
                             const BoxMapParams& params = {});

/// Morse sets are the SCCs of the non-exiting boxes that are nontrivial or
/// carry a self-loop; edges are the transitive reduction of reachability.
MorseGraph grid_morse_graph(const MultivaluedMap& map);

/// Hand-built reference Morse graph with one anchor point per vertex, for
/// the built-in fields on their default domains.
struct ReferenceMorseGraph {
  MorseGraph graph;
  std::vector<std::array<double, 2>> anchors;
};
std::optional<ReferenceMorseGraph> builtin_reference(std::string_view field_name);
/// Default domain for a built-in field.
Rect builtin_domain(std::string_view field_name);

/// Maps each grid Morse set to the reference vertex whose anchor is
/// nearest to the set's box-centre centroid.
std::vector<std::size_t> correspond_by_anchor(const MorseGraph& grid_result, const BoxGrid& grid,
                                              const ReferenceMorseGraph& reference);

struct CrossCheckReport {
  bool vertex_count_match = false;
  bool edges_match = false;
  std::size_t grid_vertices = 0;
  std::size_t reference_vertices = 0;
  std::vector<std::string> messages;
  bool ok() const { return vertex_count_match && edges_match; }
};

/// `correspondence[j]` is the reference vertex of grid Morse set j. A
/// vertex-count mismatch is reported as a failure; with equal counts the
/// correspondence must be onto, else PreconditionError.
CrossCheckReport cross_check(const MorseGraph& grid_result, const MorseGraph& reference,
                             const std::vector<std::size_t>& correspondence);

}  // namespace orbitspace
