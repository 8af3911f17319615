#include "orbitspace/grid_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>

#include "orbitspace/error.hpp"

namespace orbitspace {

void BoxGrid::validate() const {
  if (nx < 2 || ny < 2) throw PreconditionError("grid resolution must be at least 2x2");
  if (!(domain.x1 > domain.x0) || !(domain.y1 > domain.y0) || !std::isfinite(domain.x0) ||
      !std::isfinite(domain.x1) || !std::isfinite(domain.y0) || !std::isfinite(domain.y1))
    throw PreconditionError("grid domain is degenerate");
}

double BoxGrid::diagonal() const { return std::hypot(width(), height()); }

Rect BoxGrid::box(std::size_t index) const {
  const auto i = static_cast<int>(index % nx);
  const auto j = static_cast<int>(index / nx);
  return {domain.x0 + i * width(), domain.x0 + (i + 1) * width(), domain.y0 + j * height(),
          domain.y0 + (j + 1) * height()};
}

std::array<double, 2> BoxGrid::center(std::size_t index) const {
  const auto r = box(index);
  return {(r.x0 + r.x1) / 2, (r.y0 + r.y1) / 2};
}

std::size_t BoxGrid::locate(double x, double y) const {
  const int i = std::clamp(static_cast<int>(std::floor((x - domain.x0) / width())), 0, nx - 1);
  const int j = std::clamp(static_cast<int>(std::floor((y - domain.y0) / height())), 0, ny - 1);
  return static_cast<std::size_t>(j) * nx + i;
}

bool BoxGrid::contains(double x, double y) const {
  return x >= domain.x0 && x <= domain.x1 && y >= domain.y0 && y <= domain.y1;
}

namespace {

std::array<double, 2> rk4(const VectorField& f, std::array<double, 2> p, double time, double h) {
  const int steps = std::max(1, static_cast<int>(std::lround(time / h)));
  const double dt = time / steps;
  for (int s = 0; s < steps; ++s) {
    const auto k1 = f(p[0], p[1]);
    const auto k2 = f(p[0] + dt / 2 * k1[0], p[1] + dt / 2 * k1[1]);
    const auto k3 = f(p[0] + dt / 2 * k2[0], p[1] + dt / 2 * k2[1]);
    const auto k4 = f(p[0] + dt * k3[0], p[1] + dt * k3[1]);
    p[0] += dt / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
    p[1] += dt / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
    if (!std::isfinite(p[0]) || !std::isfinite(p[1]))
      throw PreconditionError("vector field produced a non-finite value");
  }
  return p;
}

std::vector<std::size_t> bfs(const std::vector<std::vector<std::size_t>>& adj,
                             const std::vector<bool>& active, const std::vector<std::size_t>& seeds,
                             std::vector<bool>& seen) {
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue;
  for (auto s : seeds)
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (auto w : adj[v])
      if (active[w] && !seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  }
  return order;
}

}  // namespace

MultivaluedMap build_box_map(const VectorField& field, const BoxGrid& grid,
                             const BoxMapParams& params) {
  grid.validate();
  if (!(params.time > 0)) throw PreconditionError("integration time must be positive");
  const double eps = params.eps < 0 ? grid.diagonal() : params.eps;
  const double h = params.step > 0 ? params.step : params.time / 64;
  if (params.time < h) throw PreconditionError("integration time must be at least the step");

  MultivaluedMap map;
  map.grid = grid;
  const std::size_t n = grid.box_count();
  map.targets.resize(n);
  map.exiting.assign(n, false);
  for (std::size_t b = 0; b < n; ++b) {
    const auto r = grid.box(b);
    const std::array<std::array<double, 2>, 5> samples{{{r.x0, r.y0},
                                                        {r.x1, r.y0},
                                                        {r.x0, r.y1},
                                                        {r.x1, r.y1},
                                                        {(r.x0 + r.x1) / 2, (r.y0 + r.y1) / 2}}};
    double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
    double lo_y = lo_x, hi_y = -lo_x;
    for (const auto& s : samples) {
      const auto p = rk4(field, s, params.time, h);
      if (!grid.contains(p[0], p[1])) map.exiting[b] = true;
      lo_x = std::min(lo_x, p[0]);
      hi_x = std::max(hi_x, p[0]);
      lo_y = std::min(lo_y, p[1]);
      hi_y = std::max(hi_y, p[1]);
    }
    lo_x -= eps;
    hi_x += eps;
    lo_y -= eps;
    hi_y += eps;
    const auto& d = grid.domain;
    if (hi_x < d.x0 || lo_x > d.x1 || hi_y < d.y0 || lo_y > d.y1) continue;
    // Boxes are closed, so a hull touching a box edge counts as meeting it.
    auto cell = [](double v) { return static_cast<int>(std::clamp(v, -1.0, 1e9)); };
    const int i0 = std::max(0, cell(std::ceil((lo_x - d.x0) / grid.width())) - 1);
    const int i1 = std::min(grid.nx - 1, cell(std::floor((hi_x - d.x0) / grid.width())));
    const int j0 = std::max(0, cell(std::ceil((lo_y - d.y0) / grid.height())) - 1);
    const int j1 = std::min(grid.ny - 1, cell(std::floor((hi_y - d.y0) / grid.height())));
    for (int j = j0; j <= j1; ++j)
      for (int i = i0; i <= i1; ++i) map.targets[b].push_back(static_cast<std::size_t>(j) * grid.nx + i);
  }
  return map;
}

MorseGraph grid_morse_graph(const MultivaluedMap& map) {
  const std::size_t n = map.targets.size();
  std::vector<bool> active(n);
  for (std::size_t b = 0; b < n; ++b) active[b] = !map.exiting[b];
  std::vector<std::vector<std::size_t>> succ(n), pred(n);
  for (std::size_t b = 0; b < n; ++b) {
    if (!active[b]) continue;
    for (auto t : map.targets[b])
      if (active[t]) {
        succ[b].push_back(t);
        pred[t].push_back(b);
      }
  }
  const auto scc = strongly_connected_components(succ);
  std::vector<std::size_t> comp_size(scc.count, 0);
  for (std::size_t b = 0; b < n; ++b)
    if (active[b]) ++comp_size[scc.component[b]];

  MorseGraph g;
  g.atom_labels.reserve(n);
  for (std::size_t b = 0; b < n; ++b)
    g.atom_labels.push_back(std::to_string(b % map.grid.nx) + "," + std::to_string(b / map.grid.nx));

  std::vector<std::size_t> set_of_comp(scc.count, n);
  std::vector<std::size_t> set_of_box(n, n);
  for (std::size_t b = 0; b < n; ++b) {
    if (!active[b]) continue;
    const auto c = scc.component[b];
    const bool loop = std::find(succ[b].begin(), succ[b].end(), b) != succ[b].end();
    if (comp_size[c] < 2 && !loop) continue;
    if (set_of_comp[c] == n) {
      set_of_comp[c] = g.morse_sets.size();
      g.morse_sets.emplace_back(n);
    }
    g.morse_sets[set_of_comp[c]].insert(b);
    set_of_box[b] = set_of_comp[c];
  }

  const std::size_t m = g.morse_sets.size();
  std::vector<std::vector<bool>> forward(m), backward(m);
  std::vector<IndexSet> reach(m, IndexSet(m));
  for (std::size_t s = 0; s < m; ++s) {
    forward[s].assign(n, false);
    backward[s].assign(n, false);
    const auto seeds = g.morse_sets[s].members();
    for (auto v : bfs(succ, active, seeds, forward[s]))
      if (set_of_box[v] != n && set_of_box[v] != s) reach[s].insert(set_of_box[v]);
    bfs(pred, active, seeds, backward[s]);
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (auto b : reach[a].members()) {
      bool direct = true;
      for (auto c : reach[a].members())
        if (c != b && reach[c].contains(b)) direct = false;
      if (!direct) continue;
      IndexSet connecting(n);
      for (std::size_t v = 0; v < n; ++v)
        if (forward[a][v] && backward[b][v] && set_of_box[v] == n) connecting.insert(v);
      g.edges.push_back({a, b, std::move(connecting)});
    }
  }
  return g;
}

Rect builtin_domain(std::string_view name) {
  if (name == "double-well") return {-1.5, 1.5, -1.0, 1.0};
  return {-1.0, 1.0, -1.0, 1.0};
}

std::optional<ReferenceMorseGraph> builtin_reference(std::string_view name) {
  ReferenceMorseGraph ref;
  auto vertex = [&](std::string label, double x, double y) {
    ref.graph.atom_labels.push_back(std::move(label));
    ref.anchors.push_back({x, y});
  };
  if (name == "linear-sink" || name == "linear-saddle" || name == "center") {
    vertex(name == "linear-sink" ? "sink" : name == "linear-saddle" ? "saddle" : "center", 0, 0);
  } else if (name == "double-well") {
    vertex("sink-left", -1, 0);
    vertex("saddle", 0, 0);
    vertex("sink-right", 1, 0);
  } else {
    return std::nullopt;
  }
  const std::size_t n = ref.graph.atom_labels.size();
  for (std::size_t v = 0; v < n; ++v) ref.graph.morse_sets.push_back(IndexSet(n, {v}));
  if (name == "double-well") {
    ref.graph.edges.push_back({1, 0, IndexSet(n)});
    ref.graph.edges.push_back({1, 2, IndexSet(n)});
  }
  return ref;
}

std::vector<std::size_t> correspond_by_anchor(const MorseGraph& grid_result, const BoxGrid& grid,
                                              const ReferenceMorseGraph& reference) {
  std::vector<std::size_t> out;
  for (const auto& set : grid_result.morse_sets) {
    double cx = 0, cy = 0;
    const auto boxes = set.members();
    for (auto b : boxes) {
      const auto c = grid.center(b);
      cx += c[0];
      cy += c[1];
    }
    cx /= static_cast<double>(boxes.size());
    cy /= static_cast<double>(boxes.size());
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < reference.anchors.size(); ++v) {
      const double d = std::hypot(reference.anchors[v][0] - cx, reference.anchors[v][1] - cy);
      if (d < best_d) {
        best_d = d;
        best = v;
      }
    }
    out.push_back(best);
  }
  return out;
}

CrossCheckReport cross_check(const MorseGraph& grid_result, const MorseGraph& reference,
                             const std::vector<std::size_t>& correspondence) {
  CrossCheckReport report;
  report.grid_vertices = grid_result.size();
  report.reference_vertices = reference.size();
  report.vertex_count_match = report.grid_vertices == report.reference_vertices;
  if (!report.vertex_count_match) {
    report.messages.push_back("vertex count mismatch: grid " + std::to_string(report.grid_vertices) +
                              ", reference " + std::to_string(report.reference_vertices));
    return report;
  }
  if (correspondence.size() != grid_result.size())
    throw PreconditionError("correspondence must cover every grid Morse set");
  std::set<std::size_t> image(correspondence.begin(), correspondence.end());
  for (auto v : image)
    if (v >= reference.size()) throw PreconditionError("correspondence target out of range");
  if (image.size() != reference.size())
    throw PreconditionError("correspondence is not onto the reference vertices");

  std::set<std::pair<std::size_t, std::size_t>> mapped, expected;
  for (const auto& e : grid_result.edges) mapped.emplace(correspondence[e.from], correspondence[e.to]);
  for (const auto& e : reference.edges) expected.emplace(e.from, e.to);
  report.edges_match = mapped == expected;
  for (const auto& [a, b] : mapped)
    if (!expected.count({a, b}))
      report.messages.push_back("unexpected edge " + reference.atom_labels[a] + " -> " +
                                reference.atom_labels[b]);
  for (const auto& [a, b] : expected)
    if (!mapped.count({a, b}))
      report.messages.push_back("missing edge " + reference.atom_labels[a] + " -> " +
                                reference.atom_labels[b]);
  return report;
}

}  // namespace orbitspace
