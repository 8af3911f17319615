#include "orbitspace/relations.hpp"

#include <algorithm>
#include <numeric>

#include "orbitspace/error.hpp"

namespace orbitspace {

namespace {

struct NameEntry {
  RelationName name;
  std::string_view canonical;
  std::string_view cli;
};

constexpr NameEntry kNames[] = {
    {RelationName::LeqV, "LEQ_V", "v"},
    {RelationName::LeqAlpha, "LEQ_ALPHA", "alpha"},
    {RelationName::LeqOmega, "LEQ_OMEGA", "omega"},
    {RelationName::LeqPerp, "LEQ_PERP", "perp"},
    {RelationName::LeqPitchfork, "LEQ_PITCHFORK", "pitchfork"},
    {RelationName::LeqPartial, "LEQ_PARTIAL", "partial"},
};

// Indices sorted by label, for lexicographic witness search.
std::vector<std::size_t> label_order(const std::vector<std::string>& labels) {
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  return order;
}

}  // namespace

std::string_view to_string(RelationName name) {
  for (const auto& e : kNames)
    if (e.name == name) return e.canonical;
  return "?";
}

std::optional<RelationName> parse_relation_name(std::string_view text) {
  for (const auto& e : kNames)
    if (e.canonical == text || e.cli == text) return e.name;
  return std::nullopt;
}

std::size_t RelationMatrix::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == label) return i;
  throw PreconditionError("unknown element '" + std::string(label) + "'");
}

bool RelationMatrix::at(std::string_view a, std::string_view b) const {
  return at(index_of(a), index_of(b));
}

RelationMatrix compute_relation(const IndexedModel& model, RelationName name,
                                const QuotientSpace& q) {
  RelationMatrix r;
  r.name = name;
  r.level = q.level;
  r.elements = q.labels;
  const std::size_t n = q.size();
  r.holds.assign(n, IndexSet(n));
  for (std::size_t c = 0; c < n; ++c) {
    const auto& block = q.blocks[c];
    IndexSet target(model.size());
    switch (name) {
      case RelationName::LeqAlpha: target = model.alpha(block); break;
      case RelationName::LeqOmega: target = model.omega(block); break;
      case RelationName::LeqV: target = model.alpha(block) | model.omega(block); break;
      case RelationName::LeqPerp:
        target = (model.alpha(block) | model.omega(block)) - block;
        break;
      case RelationName::LeqPitchfork:
        if (q.level != QuotientLevel::Class) target = model.transverse(block) - block;
        break;
      case RelationName::LeqPartial: target = model.closure(block); break;
    }
    for (std::size_t b = 0; b < n; ++b)
      if (b == c || q.blocks[b].intersects(target)) r.holds[b].insert(c);
  }
  return r;
}

RelationMatrix compute_relation(const IndexedModel& model, RelationName name,
                                QuotientLevel level) {
  if (level != QuotientLevel::Orbit && level != QuotientLevel::Class &&
      level != QuotientLevel::Awo && level != QuotientLevel::Ao &&
      level != QuotientLevel::Extended)
    throw PreconditionError("relations are not defined at level " +
                            std::string(to_string(level)));
  return compute_relation(model, name, quotient_at_level(model, level));
}

PropertyReport check_properties(const RelationMatrix& r) {
  PropertyReport report;
  const auto order = label_order(r.elements);
  for (auto i : order)
    if (!r.at(i, i)) {
      report.reflexive = false;
      report.reflexive_witness = r.elements[i];
      break;
    }
  for (auto a : order) {
    for (auto b : order) {
      if (!r.at(a, b)) continue;
      if (a != b && r.at(b, a) && !report.antisymmetric_witness &&
          r.elements[a] < r.elements[b]) {
        report.antisymmetric = false;
        report.antisymmetric_witness = std::array<std::string, 2>{r.elements[a], r.elements[b]};
      }
      if (report.transitive_witness) continue;
      for (auto c : order)
        if (r.at(b, c) && !r.at(a, c)) {
          report.transitive = false;
          report.transitive_witness =
              std::array<std::string, 3>{r.elements[a], r.elements[b], r.elements[c]};
          break;
        }
    }
  }
  return report;
}

RelationMatrix relation_union(const RelationMatrix& a, const RelationMatrix& b) {
  if (a.elements != b.elements || a.level != b.level)
    throw PreconditionError("relation union over different element sets");
  RelationMatrix out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.holds[i] |= b.holds[i];
  return out;
}

DecompositionReport relation_decomposition_check(const IndexedModel& model) {
  DecompositionReport report;
  for (const auto& q : {abstract_weak_orbit_space(model), abstract_orbit_space(model)}) {
    const auto alpha = compute_relation(model, RelationName::LeqAlpha, q);
    const auto omega = compute_relation(model, RelationName::LeqOmega, q);
    const auto v = compute_relation(model, RelationName::LeqV, q);
    const auto pitchfork = compute_relation(model, RelationName::LeqPitchfork, q);
    const auto partial = compute_relation(model, RelationName::LeqPartial, q);
    const auto alpha_omega = relation_union(alpha, omega);
    const auto expected_partial = relation_union(alpha_omega, pitchfork);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) {
        const std::string where = std::string(to_string(q.level)) + " (" + q.labels[i] + ", " +
                                  q.labels[j] + ")";
        if (v.at(i, j) != alpha_omega.at(i, j))
          report.violations.push_back("v differs from alpha|omega at " + where);
        if (partial.at(i, j) != expected_partial.at(i, j))
          report.violations.push_back("partial differs from alpha|omega|pitchfork at " + where);
      }
  }
  return report;
}

}  // namespace orbitspace
