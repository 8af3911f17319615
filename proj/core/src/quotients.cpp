#include "orbitspace/quotients.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "json_support.hpp"
#include "orbitspace/error.hpp"
#include "orbitspace/morse.hpp"

namespace orbitspace {

namespace {

struct LevelName {
  QuotientLevel level;
  std::string_view canonical;
  std::string_view cli;
};

constexpr LevelName kLevelNames[] = {
    {QuotientLevel::Orbit, "ORBIT", "orbit"},
    {QuotientLevel::WeakClass, "WEAK_CLASS", "weak-class"},
    {QuotientLevel::Class, "CLASS", "class"},
    {QuotientLevel::Awo, "AWO", "awo"},
    {QuotientLevel::Ao, "AO", "ao"},
    {QuotientLevel::AwoK, "AWO_K", "awo-k"},
    {QuotientLevel::AoK, "AO_K", "ao-k"},
    {QuotientLevel::Extended, "EXTENDED", "extended"},
    {QuotientLevel::Morse, "MORSE", "morse"},
};

// Groups `subset` by a key, keeping first-seen order of keys.
template <typename KeyFn>
Partition group_by(const IndexedModel& model, const IndexSet& subset, KeyFn key) {
  using Key = decltype(key(std::size_t{}));
  std::map<Key, IndexSet> groups;
  for (auto i : subset.members()) {
    auto [it, fresh] = groups.try_emplace(key(i), model.size());
    it->second.insert(i);
  }
  Partition out;
  for (auto& [k, g] : groups) out.push_back(std::move(g));
  return out;
}

// Adjacency components inside each group.
Partition split_components(const IndexedModel& model, const Partition& groups) {
  Partition out;
  for (const auto& g : groups)
    for (auto& c : model.components(g)) out.push_back(std::move(c));
  return out;
}

Partition singletons(const IndexedModel& model, const IndexSet& subset) {
  Partition out;
  for (auto i : subset.members()) out.push_back(model.singleton(i));
  return out;
}

void append(Partition& into, Partition from) {
  for (auto& b : from) into.push_back(std::move(b));
}

Partition awo_partition(const IndexedModel& m) {
  Partition blocks;
  append(blocks, m.components(m.nodes_of_kind(OrbitKind::Singular)));
  append(blocks, m.components(m.nodes_of_kind(OrbitKind::Periodic)));
  const auto limits = [&](std::size_t i) { return std::make_pair(m.alpha(i), m.omega(i)); };
  append(blocks, split_components(m, group_by(m, m.nodes_of_kind(OrbitKind::Nonrecurrent), limits)));
  append(blocks, group_by(m, m.nodes_of_kind(OrbitKind::RecurrentNonclosed), limits));
  return blocks;
}

Partition ao_partition(const IndexedModel& m) {
  Partition blocks;
  append(blocks, m.components(m.nodes_of_kind(OrbitKind::Singular)));
  append(blocks, m.components(m.nodes_of_kind(OrbitKind::Periodic)));
  const auto limits = [&](std::size_t i) { return std::make_pair(m.alpha(i), m.omega(i)); };
  append(blocks, split_components(m, group_by(m, m.nodes_of_kind(OrbitKind::Nonrecurrent), limits)));
  append(blocks, group_by(m, m.nodes_of_kind(OrbitKind::RecurrentNonclosed),
                          [&](std::size_t i) { return m.orbit_closure(i); }));
  return blocks;
}

IndexSet all_except_recurrent(const IndexedModel& m) {
  return IndexSet::full(m.size()) - m.nodes_of_kind(OrbitKind::RecurrentNonclosed);
}

// Blocks (of `q`) met by a node set, as a sorted index list.
std::vector<std::size_t> blocks_met(const std::vector<std::size_t>& block_of, const IndexSet& s) {
  std::set<std::size_t> met;
  for (auto i : s.members()) met.insert(block_of[i]);
  return {met.begin(), met.end()};
}

std::vector<std::size_t> block_index(const Partition& blocks, std::size_t universe) {
  std::vector<std::size_t> of(universe, blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto i : blocks[b].members()) of[i] = b;
  return of;
}

Partition sorted(Partition p) {
  std::sort(p.begin(), p.end(),
            [](const IndexSet& a, const IndexSet& b) { return a.first() < b.first(); });
  return p;
}

Partition kth_step(const IndexedModel& m, const Partition& current) {
  const auto nonrec = m.nodes_of_kind(OrbitKind::Nonrecurrent);
  Partition next;
  for (const auto& b : current)
    if (!b.intersects(nonrec)) next.push_back(b);
  const auto of = block_index(current, m.size());
  const auto key = [&](std::size_t i) {
    return std::make_pair(blocks_met(of, m.alpha(i)), blocks_met(of, m.omega(i)));
  };
  append(next, split_components(m, group_by(m, nonrec, key)));
  return sorted(std::move(next));
}

}  // namespace

std::string_view to_string(QuotientLevel level) {
  for (const auto& n : kLevelNames)
    if (n.level == level) return n.canonical;
  return "?";
}

std::optional<QuotientLevel> parse_quotient_level(std::string_view text) {
  for (const auto& n : kLevelNames)
    if (n.canonical == text || n.cli == text) return n.level;
  return std::nullopt;
}

std::size_t QuotientSpace::index_of_label(std::string_view label) const {
  for (std::size_t b = 0; b < labels.size(); ++b)
    if (labels[b] == label) return b;
  throw PreconditionError("unknown block '" + std::string(label) + "'");
}

IndexSet QuotientSpace::closure(const IndexedModel& model, std::size_t block) const {
  return model.closure(blocks.at(block));
}

bool is_partition(const Partition& blocks, std::size_t universe) {
  IndexSet seen(universe);
  for (const auto& b : blocks) {
    if (b.universe() != universe || b.empty() || b.intersects(seen)) return false;
    seen |= b;
  }
  return seen.count() == universe;
}

bool refines(const Partition& fine, const Partition& coarse) {
  return std::all_of(fine.begin(), fine.end(), [&](const IndexSet& f) {
    return std::any_of(coarse.begin(), coarse.end(),
                       [&](const IndexSet& c) { return f.is_subset_of(c); });
  });
}

QuotientSpace make_quotient(const IndexedModel& model, QuotientLevel level, Partition blocks,
                            int k) {
  if (!is_partition(blocks, model.size()))
    throw PreconditionError("blocks do not partition the model nodes");
  QuotientSpace q;
  q.level = level;
  q.k = k;
  q.blocks = sorted(std::move(blocks));
  q.block_of = block_index(q.blocks, model.size());
  const std::size_t n = q.blocks.size();
  std::vector<IndexSet> rows(n, IndexSet(n));
  for (std::size_t b = 0; b < n; ++b) {
    q.members.push_back(model.ids(q.blocks[b]));
    q.labels.push_back(model.id(q.blocks[b].first()));
  }
  for (std::size_t c = 0; c < n; ++c) {
    const auto cl = model.closure(q.blocks[c]);
    for (std::size_t b = 0; b < n; ++b)
      if (q.blocks[b].intersects(cl)) rows[b].insert(c);
  }
  q.order = FinitePreorder::closure_of(q.labels, rows);
  return q;
}

QuotientSpace orbit_space(const IndexedModel& m) {
  return make_quotient(m, QuotientLevel::Orbit, singletons(m, IndexSet::full(m.size())));
}

QuotientSpace orbit_class_space(const IndexedModel& m) {
  auto blocks = singletons(m, all_except_recurrent(m));
  append(blocks, group_by(m, m.nodes_of_kind(OrbitKind::RecurrentNonclosed),
                          [&](std::size_t i) { return m.orbit_closure(i); }));
  return make_quotient(m, QuotientLevel::Class, std::move(blocks));
}

QuotientSpace weak_orbit_class_space(const IndexedModel& m) {
  auto blocks = singletons(m, all_except_recurrent(m));
  append(blocks, group_by(m, m.nodes_of_kind(OrbitKind::RecurrentNonclosed), [&](std::size_t i) {
           return std::make_tuple(m.orbit_closure(i), m.alpha(i), m.omega(i));
         }));
  return make_quotient(m, QuotientLevel::WeakClass, std::move(blocks));
}

QuotientSpace abstract_weak_orbit_space(const IndexedModel& m) {
  return make_quotient(m, QuotientLevel::Awo, awo_partition(m));
}

QuotientSpace abstract_orbit_space(const IndexedModel& m) {
  return make_quotient(m, QuotientLevel::Ao, ao_partition(m));
}

QuotientSpace abstract_weak_orbit_space(const FlowModel& model) {
  return abstract_weak_orbit_space(IndexedModel(model));
}

QuotientSpace abstract_orbit_space(const FlowModel& model) {
  return abstract_orbit_space(IndexedModel(model));
}

QuotientSpace quotient_at_level(const IndexedModel& m, QuotientLevel level) {
  switch (level) {
    case QuotientLevel::Orbit: return orbit_space(m);
    case QuotientLevel::WeakClass: return weak_orbit_class_space(m);
    case QuotientLevel::Class: return orbit_class_space(m);
    case QuotientLevel::Awo: return abstract_weak_orbit_space(m);
    case QuotientLevel::Ao: return abstract_orbit_space(m);
    case QuotientLevel::Extended: return extended_weak_orbit_space(m).space;
    default:
      throw PreconditionError("level " + std::string(to_string(level)) +
                              " needs extra parameters");
  }
}

KthResult kth_space(const IndexedModel& m, int k, bool abstract_orbit) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  std::vector<Partition> levels{sorted(abstract_orbit ? ao_partition(m) : awo_partition(m))};
  KthResult result;
  const std::size_t limit = m.size() + 1;
  while (levels.size() <= limit || levels.size() < static_cast<std::size_t>(k)) {
    auto next = kth_step(m, levels.back());
    if (next == levels.back()) {
      result.stabilization_index = static_cast<int>(levels.size());
      break;
    }
    levels.push_back(std::move(next));
  }
  auto at_k = static_cast<std::size_t>(k) <= levels.size() ? levels[k - 1] : levels.back();
  result.space = make_quotient(m, abstract_orbit ? QuotientLevel::AoK : QuotientLevel::AwoK,
                               std::move(at_k), k);
  return result;
}

// ---------------------------------------------------------------------------

namespace {

class ExtendedBuilder {
 public:
  ExtendedBuilder(const IndexedModel& m, std::size_t budget)
      : m_(m), awo_(abstract_weak_orbit_space(m)), budget_(budget) {
    const std::size_t nb = awo_.size();
    down_.assign(nb, IndexSet(nb));
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t c = 0; c < nb; ++c)
        if (awo_.order.leq(c, b)) down_[b].insert(c);
    neighbours_.assign(nb, IndexSet(nb));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (auto j : m.neighbours(i).members())
        if (awo_.block_of[i] != awo_.block_of[j])
          neighbours_[awo_.block_of[i]].insert(awo_.block_of[j]);
    for (std::size_t b = 0; b < nb; ++b) {
      const auto& nodes = awo_.blocks[b];
      open_.push_back(!nodes.is_subset_of(m.nodes_of_kind(OrbitKind::Singular) |
                                          m.nodes_of_kind(OrbitKind::Periodic)));
      alpha_.push_back(m.alpha(nodes));
      omega_.push_back(m.omega(nodes));
    }
  }

  ExtendedResult build() {
    ExtendedResult result;
    const auto cores = minimal_quasi_saddles(result.budget_exhausted);
    const std::size_t nb = awo_.size();

    IndexSet diagram(nb);
    for (const auto& core : cores) {
      const auto seps = separatrices(core);
      diagram |= core;
      diagram |= seps;
      result.quasi_saddles.push_back({ids_of(core), ids_of(seps)});
    }

    // Connections: adjacency components of the diagram, as block unions.
    Partition merged;
    IndexSet seen(nb);
    for (auto start : diagram.members()) {
      if (seen.contains(start)) continue;
      IndexSet comp(nb);
      std::deque<std::size_t> queue{start};
      seen.insert(start);
      while (!queue.empty()) {
        auto b = queue.front();
        queue.pop_front();
        comp.insert(b);
        for (auto c : (neighbours_[b] & diagram).members())
          if (!seen.contains(c)) {
            seen.insert(c);
            queue.push_back(c);
          }
      }
      const auto nodes = nodes_of(comp);
      const bool closed = m_.closure(nodes).is_subset_of(nodes);
      result.connections.push_back(m_.ids(nodes));
      result.connection_closed.push_back(closed);
      if (closed) merged.push_back(comp);
    }

    Partition blocks;
    IndexSet used(nb);
    for (const auto& comp : merged) {
      blocks.push_back(nodes_of(comp));
      used |= comp;
    }
    for (std::size_t b = 0; b < nb; ++b)
      if (!used.contains(b)) blocks.push_back(awo_.blocks[b]);
    result.space = make_quotient(m_, QuotientLevel::Extended, std::move(blocks));
    return result;
  }

 private:
  IndexSet nodes_of(const IndexSet& block_set) const {
    IndexSet s(m_.size());
    for (auto b : block_set.members()) s |= awo_.blocks[b];
    return s;
  }

  IdSet ids_of(const IndexSet& block_set) const { return m_.ids(nodes_of(block_set)); }

  bool is_quasi_saddle(const IndexSet& core) const {
    const auto nodes = nodes_of(core);
    bool alpha_in = false;
    bool omega_in = false;
    for (std::size_t b = 0; b < awo_.size(); ++b) {
      if (core.contains(b) || !open_[b]) continue;
      alpha_in = alpha_in || (!alpha_[b].empty() && alpha_[b].is_subset_of(nodes));
      omega_in = omega_in || (!omega_[b].empty() && omega_[b].is_subset_of(nodes));
    }
    return alpha_in && omega_in;
  }

  IndexSet separatrices(const IndexSet& core) const {
    const auto nodes = nodes_of(core);
    IndexSet out(awo_.size());
    for (std::size_t b = 0; b < awo_.size(); ++b) {
      if (core.contains(b) || !open_[b]) continue;
      if ((!alpha_[b].empty() && alpha_[b].is_subset_of(nodes)) ||
          (!omega_[b].empty() && omega_[b].is_subset_of(nodes)))
        out.insert(b);
    }
    return out;
  }

  // Breadth-first over closed connected block unions, growing by the
  // down-set of an adjacent block. A candidate that is already a
  // quasi-saddle is not grown further, so every recorded core is minimal
  // among the candidates reached through it; a final pass removes the rest.
  std::vector<IndexSet> minimal_quasi_saddles(bool& exhausted) const {
    const std::size_t nb = awo_.size();
    std::set<IndexSet> visited;
    std::deque<IndexSet> queue;
    std::vector<IndexSet> found;
    for (std::size_t b = 0; b < nb; ++b)
      if (visited.insert(down_[b]).second) queue.push_back(down_[b]);
    std::size_t explored = 0;
    while (!queue.empty()) {
      if (explored++ >= budget_) {
        exhausted = true;
        break;
      }
      auto s = std::move(queue.front());
      queue.pop_front();
      if (s.count() == nb) continue;
      if (!m_.is_connected(nodes_of(s))) continue;
      if (is_quasi_saddle(s)) {
        found.push_back(s);
        continue;
      }
      IndexSet frontier(nb);
      for (auto b : s.members()) frontier |= neighbours_[b];
      frontier -= s;
      for (auto c : frontier.members()) {
        auto grown = s | down_[c];
        if (visited.insert(grown).second) queue.push_back(std::move(grown));
      }
    }
    std::vector<IndexSet> minimal;
    for (const auto& s : found) {
      const bool has_smaller = std::any_of(found.begin(), found.end(), [&](const IndexSet& t) {
        return t != s && t.is_subset_of(s);
      });
      if (!has_smaller) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const IndexSet& a, const IndexSet& b) { return a.first() < b.first(); });
    return minimal;
  }

  const IndexedModel& m_;
  QuotientSpace awo_;
  std::size_t budget_;
  std::vector<IndexSet> down_;
  std::vector<IndexSet> neighbours_;
  std::vector<bool> open_;
  std::vector<IndexSet> alpha_;
  std::vector<IndexSet> omega_;
};

}  // namespace

ExtendedResult extended_weak_orbit_space(const IndexedModel& model, std::size_t candidate_budget) {
  return ExtendedBuilder(model, candidate_budget).build();
}

// ---------------------------------------------------------------------------

bool ChainReport::ok() const {
  return std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.holds; });
}

ChainReport refinement_chain_check(const IndexedModel& m) {
  ChainReport report;
  const auto orbit = orbit_space(m);
  const auto weak = weak_orbit_class_space(m);
  const auto cls = orbit_class_space(m);
  const auto awo = abstract_weak_orbit_space(m);
  const auto ao = abstract_orbit_space(m);
  const auto ext = extended_weak_orbit_space(m);
  if (ext.budget_exhausted) report.notes.push_back("extended space: candidate budget exhausted");

  auto step = [&](const QuotientSpace& fine, const QuotientSpace& coarse) {
    report.steps.push_back({fine.level, coarse.level, refines(fine.blocks, coarse.blocks)});
  };
  step(orbit, weak);
  step(weak, cls);
  step(weak, awo);
  step(cls, ao);
  step(awo, ao);
  step(awo, ext.space);
  if (!m.model().flags().compact) {
    report.notes.push_back("MORSE rung skipped: model is not compact");
    return report;
  }
  try {
    step(ao, morse_quotient(m));
  } catch (const ModelInconsistency& e) {
    report.notes.push_back(std::string("MORSE rung failed: ") + e.what());
    report.steps.push_back({QuotientLevel::Ao, QuotientLevel::Morse, false});
  }
  return report;
}

std::string quotient_to_json(const QuotientSpace& q, int indent) {
  detail::Json doc;
  doc["level"] = std::string(to_string(q.level));
  if (q.level == QuotientLevel::AwoK || q.level == QuotientLevel::AoK) doc["k"] = q.k;
  detail::Json blocks = detail::Json::array();
  for (std::size_t b = 0; b < q.size(); ++b)
    blocks.push_back({{"label", q.labels[b]}, {"members", q.members[b]}});
  doc["blocks"] = std::move(blocks);
  detail::Json order = detail::Json::array();
  for (std::size_t b = 0; b < q.size(); ++b) {
    detail::Json row = detail::Json::array();
    for (std::size_t c = 0; c < q.size(); ++c) row.push_back(q.order.leq(b, c) ? 1 : 0);
    order.push_back(std::move(row));
  }
  doc["order"] = std::move(order);
  return doc.dump(indent);
}

}  // namespace orbitspace
