#include "orbitspace/random_model.hpp"

#include <string>

#include "orbitspace/error.hpp"
#include "orbitspace/morse.hpp"

namespace orbitspace {

namespace {

struct Draft {
  OrbitNode node;
  IdSet closure;  // {id} | alpha | omega | transverse_boundary
};

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

FlowModel draw(std::mt19937_64& rng, const RandomModelOptions& opt) {
  const auto n = 1 + pick(rng, opt.max_nodes);
  const auto closed_count = 1 + pick(rng, n);
  std::vector<Draft> drafts;
  std::vector<std::size_t> recurrent;  // closed or R drafts usable as limit targets
  std::vector<std::size_t> bare_singular;

  for (std::size_t i = 0; i < n; ++i) {
    Draft d;
    d.node.id = "n" + std::to_string(i);
    if (i < closed_count) {
      const bool per = coin(rng, 0.35);
      d.node.kind = per ? OrbitKind::Periodic : OrbitKind::Singular;
      if (per) {
        d.node.granularity = coin(rng, 0.5) ? Granularity::Family : Granularity::SingleOrbit;
        if (!bare_singular.empty() && coin(rng, 0.3))
          d.node.transverse_boundary.insert(drafts[bare_singular[pick(rng, bare_singular.size())]].node.id);
      } else if (coin(rng, 0.2)) {
        d.node.granularity = Granularity::Family;
      }
    } else if (opt.recurrent && coin(rng, 0.2)) {
      d.node.kind = OrbitKind::RecurrentNonclosed;
      d.node.granularity = Granularity::Family;
      d.node.alpha.insert(d.node.id);
      for (auto r : recurrent)
        if (drafts[r].node.kind == OrbitKind::Singular && drafts[r].node.transverse_boundary.empty() &&
            coin(rng, 0.3))
          d.node.alpha.insert(drafts[r].node.id);
      d.node.omega = d.node.alpha;
      if (coin(rng, 0.3)) d.node.omega = {d.node.id};
      if (coin(rng, 0.3)) std::swap(d.node.alpha, d.node.omega);
    } else {
      d.node.kind = OrbitKind::Nonrecurrent;
      d.node.granularity = coin(rng, 0.5) ? Granularity::Family : Granularity::SingleOrbit;
      d.node.alpha = drafts[recurrent[pick(rng, recurrent.size())]].closure;
      d.node.omega = drafts[recurrent[pick(rng, recurrent.size())]].closure;
      // Occasionally accumulate transversally on an earlier node.
      if (d.node.granularity == Granularity::Family && i > 0 && coin(rng, 0.4)) {
        const auto& other = drafts[pick(rng, i)];
        if (!d.node.alpha.contains(other.node.id) && !d.node.omega.contains(other.node.id))
          d.node.transverse_boundary.insert(other.node.id);
      }
    }
    d.closure = {d.node.id};
    for (const auto* s : {&d.node.alpha, &d.node.omega, &d.node.transverse_boundary})
      d.closure.insert(s->begin(), s->end());
    if (d.node.kind != OrbitKind::Nonrecurrent) recurrent.push_back(i);
    if (d.node.kind == OrbitKind::Singular && d.node.transverse_boundary.empty())
      bare_singular.push_back(i);
    drafts.push_back(std::move(d));
  }

  std::vector<OrbitNode> nodes;
  std::vector<IdPair> adjacency;
  for (auto& d : drafts) {
    for (const auto& other : d.closure)
      if (other != d.node.id) adjacency.emplace_back(d.node.id, other);
    nodes.push_back(std::move(d.node));
  }
  // A few extra contacts between non-recurrent nodes sharing limit data.
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i].kind == OrbitKind::Nonrecurrent && nodes[j].kind == OrbitKind::Nonrecurrent &&
          nodes[i].alpha == nodes[j].alpha && coin(rng, 0.3))
        adjacency.emplace_back(nodes[i].id, nodes[j].id);
  return FlowModel(ModelFlags{}, std::move(nodes), std::move(adjacency));
}

}  // namespace

FlowModel random_model(std::mt19937_64& rng, const RandomModelOptions& options) {
  if (options.max_nodes == 0) throw PreconditionError("max_nodes must be positive");
  for (;;) {
    auto model = draw(rng, options);
    if (!validate_model(model).valid()) continue;
    try {
      (void)morse_graph(model);
    } catch (const ModelInconsistency&) {
      continue;
    }
    return model;
  }
}

std::vector<FlowModel> random_models(std::uint64_t seed, std::size_t count,
                                     const RandomModelOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<FlowModel> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_model(rng, options));
  return out;
}

}  // namespace orbitspace
