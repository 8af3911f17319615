#include "orbitspace/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "orbitspace/error.hpp"
#include "orbitspace/finite_topology.hpp"
#include "orbitspace/surface.hpp"

namespace orbitspace {

namespace {

struct Signature {
  std::string label;
  std::size_t out_degree = 0;
  std::size_t in_degree = 0;
  bool self = false;
  int height = 0;

  auto key() const { return std::tie(label, out_degree, in_degree, self, height); }
  bool operator<(const Signature& o) const { return key() < o.key(); }
  bool operator==(const Signature& o) const { return key() == o.key(); }
};

std::vector<Signature> signatures(const LabeledPoset& p) {
  std::vector<Signature> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i].label = p.labels[i];
    out[i].self = p.related(i, i);
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i == j) continue;
      if (p.related(i, j)) ++out[i].out_degree;
      if (p.related(j, i)) ++out[i].in_degree;
    }
  }
  const auto h = heights(FinitePreorder::closure_of(p.elements, p.relation));
  for (std::size_t i = 0; i < p.size(); ++i) out[i].height = h[i];
  return out;
}

class Matcher {
 public:
  Matcher(const LabeledPoset& a, const LabeledPoset& b, std::vector<std::vector<std::size_t>> cand,
          std::size_t budget)
      : a_(a), b_(b), candidates_(std::move(cand)), budget_(budget),
        map_(a.size(), kUnset), used_(b.size(), false) {
    order_search();
  }

  IsoResult run() {
    IsoResult r;
    const bool found = extend(0);
    r.steps = steps_;
    if (found) {
      r.verdict = IsoVerdict::Isomorphic;
      r.witness = map_;
    } else {
      r.verdict = exhausted_ ? IsoVerdict::BudgetExceeded : IsoVerdict::NotIsomorphic;
    }
    return r;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Fewest candidates first, then most relations to already placed elements.
  void order_search() {
    const std::size_t n = a_.size();
    std::vector<bool> placed(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = kUnset;
      std::tuple<std::size_t, std::size_t> best_key{};
      for (std::size_t i = 0; i < n; ++i) {
        if (placed[i]) continue;
        std::size_t links = 0;
        for (auto j : order_) links += a_.related(i, j) + a_.related(j, i);
        const std::tuple<std::size_t, std::size_t> key{candidates_[i].size(), n * 2 - links};
        if (best == kUnset || key < best_key) {
          best = i;
          best_key = key;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  bool consistent(std::size_t x, std::size_t y) const {
    for (std::size_t k = 0; k < a_.size(); ++k) {
      const auto l = map_[k];
      if (l == kUnset) continue;
      if (a_.related(x, k) != b_.related(y, l) || a_.related(k, x) != b_.related(l, y)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const auto x = order_[depth];
    for (auto y : candidates_[x]) {
      if (used_[y]) continue;
      if (++steps_ > budget_) {
        exhausted_ = true;
        return false;
      }
      if (!consistent(x, y)) continue;
      map_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) return true;
      map_[x] = kUnset;
      used_[y] = false;
      if (exhausted_) return false;
    }
    return false;
  }

  const LabeledPoset& a_;
  const LabeledPoset& b_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::size_t budget_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
  std::size_t steps_ = 0;
  bool exhausted_ = false;
};

std::string kind_class(const IndexedModel& m, const IndexSet& block) {
  const auto members = block.members();
  const auto k = m.kind(members.front());
  for (auto i : members)
    if (m.kind(i) != k) return "MIXED";
  return std::string(to_string(k));
}

}  // namespace

std::string_view to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic: return "ISOMORPHIC";
    case IsoVerdict::NotIsomorphic: return "NOT_ISOMORPHIC";
    case IsoVerdict::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

LabeledPoset labeled_quotient(const IndexedModel& model, QuotientLevel level,
                              RelationName relation) {
  const auto q = quotient_at_level(model, level);
  const auto r = compute_relation(model, relation, q);

  // Surface type per node, via its AWO block, when the model supports it.
  std::vector<std::string> node_type(model.size(), "-");
  try {
    const auto cls = classify_awos(model);
    const auto awo = abstract_weak_orbit_space(model);
    for (std::size_t i = 0; i < model.size(); ++i) {
      auto it = cls.awo_types.find(awo.labels[awo.block_of[i]]);
      if (it != cls.awo_types.end()) node_type[i] = std::to_string(static_cast<int>(it->second));
    }
  } catch (const PreconditionError&) {
  }

  LabeledPoset out;
  out.elements = q.labels;
  out.relation = r.holds;
  for (std::size_t b = 0; b < q.size(); ++b) {
    const auto members = q.blocks[b].members();
    std::string type = node_type[members.front()];
    for (auto i : members)
      if (node_type[i] != type) type = "MERGED";
    const bool single =
        members.size() == 1 && model.node(members.front()).granularity == Granularity::SingleOrbit;
    out.labels.push_back(kind_class(model, q.blocks[b]) + "|" + type + "|" +
                         (single ? "SINGLE" : "FAMILY"));
  }
  return out;
}

IsoResult are_isomorphic(const LabeledPoset& a, const LabeledPoset& b, std::size_t step_budget) {
  IsoResult result;
  if (a.size() != b.size()) {
    result.reason = "element counts differ (" + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()) + ")";
    return result;
  }
  const auto sa = signatures(a);
  const auto sb = signatures(b);
  auto sorted_a = sa, sorted_b = sb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) {
    result.reason = "label, degree or height profiles differ";
    return result;
  }
  std::vector<std::vector<std::size_t>> candidates(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sa[i] == sb[j]) candidates[i].push_back(j);
  result = Matcher(a, b, std::move(candidates), step_budget).run();
  if (result.verdict == IsoVerdict::NotIsomorphic) result.reason = "no relation-preserving bijection";
  if (result.verdict == IsoVerdict::BudgetExceeded) result.reason = "step budget exhausted";
  return result;
}

bool verify_witness(const LabeledPoset& a, const LabeledPoset& b,
                    const std::vector<std::size_t>& witness) {
  if (a.size() != b.size() || witness.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (auto y : witness) {
    if (y >= b.size() || hit[y]) return false;
    hit[y] = true;
  }
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a.labels[x] != b.labels[witness[x]]) return false;
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.related(x, y) != b.related(witness[x], witness[y])) return false;
  }
  return true;
}

}  // namespace orbitspace
