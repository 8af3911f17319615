#include "orbitspace/finite_topology.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "json_support.hpp"
#include "orbitspace/error.hpp"

namespace orbitspace {

using detail::Json;

FinitePreorder FinitePreorder::closure_of(std::vector<std::string> labels,
                                          const std::vector<IndexSet>& rows) {
  const std::size_t n = labels.size();
  if (rows.size() != n) throw PreconditionError("relation rows do not match element count");
  FinitePreorder p;
  p.labels_ = std::move(labels);
  p.up_ = rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.up_[i].universe() != n) throw PreconditionError("relation row has wrong universe");
    p.up_[i].insert(i);
  }
  // Warshall: if i <= k then everything above k is above i.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.up_[i].contains(k)) p.up_[i] |= p.up_[k];
  return p;
}

FinitePreorder FinitePreorder::closure_of(
    std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t n = labels.size();
  std::vector<IndexSet> rows(n, IndexSet(n));
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw PreconditionError("relation pair out of range");
    rows[a].insert(b);
  }
  return closure_of(std::move(labels), rows);
}

FinitePreorder FinitePreorder::from_relation(std::vector<std::string> labels,
                                             std::vector<IndexSet> rows) {
  const std::size_t n = labels.size();
  if (rows.size() != n) throw PreconditionError("relation rows do not match element count");
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].contains(i))
      throw PreconditionError("not a preorder: '" + labels[i] + "' is not reflexive");
    for (auto j : rows[i].members())
      if (!rows[j].is_subset_of(rows[i]))
        throw PreconditionError("not a preorder: transitivity fails through '" + labels[j] + "'");
  }
  FinitePreorder p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(rows);
  return p;
}

std::size_t FinitePreorder::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw PreconditionError("unknown element '" + std::string(label) + "'");
}

IndexSet FinitePreorder::down(std::size_t i) const {
  IndexSet s(size());
  for (std::size_t j = 0; j < size(); ++j)
    if (leq(j, i)) s.insert(j);
  return s;
}

IndexSet FinitePreorder::down_closure(const IndexSet& s) const {
  IndexSet out(size());
  for (std::size_t j = 0; j < size(); ++j)
    if (up_[j].intersects(s)) out.insert(j);
  return out;
}

IndexSet FinitePreorder::up_closure(const IndexSet& s) const {
  IndexSet out(size());
  for (auto i : s.members()) out |= up_[i];
  return out;
}

bool FinitePreorder::is_up_closed(const IndexSet& s) const { return up_closure(s) == s; }

bool FinitePreorder::is_antisymmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (auto j : up_[i].members())
      if (j != i && leq(j, i)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePreorder::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : up_[i].members()) {
      if (j == i) continue;
      if (equivalent(i, j)) {
        out.emplace_back(i, j);
        continue;
      }
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (less(i, k) && less(k, j)) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

FinitePreorder FinitePreorder::restrict_to(const IndexSet& keep) const {
  const auto members = keep.members();
  std::vector<std::string> labels;
  for (auto i : members) labels.push_back(labels_[i]);
  std::vector<IndexSet> rows(members.size(), IndexSet(members.size()));
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b)
      if (leq(members[a], members[b])) rows[a].insert(b);
  FinitePreorder p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(rows);
  return p;
}

FinitePoset::FinitePoset(FinitePreorder p) : FinitePreorder(std::move(p)) {
  if (!is_antisymmetric()) throw PreconditionError("relation is not antisymmetric");
}

T0Quotient t0_tify(const FinitePreorder& p) {
  const std::size_t n = p.size();
  T0Quotient q;
  q.class_of.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (q.class_of[i] != n) continue;
    const std::size_t c = q.members.size();
    q.members.emplace_back();
    for (std::size_t j = i; j < n; ++j)
      if (p.equivalent(i, j)) {
        q.class_of[j] = c;
        q.members.back().push_back(j);
      }
  }
  const std::size_t m = q.members.size();
  std::vector<std::string> labels;
  std::vector<IndexSet> rows(m, IndexSet(m));
  for (std::size_t c = 0; c < m; ++c) {
    const auto rep = q.members[c].front();
    labels.push_back(p.label(rep));
    for (auto j : p.up(rep).members()) rows[c].insert(q.class_of[j]);
  }
  q.poset = FinitePoset(FinitePreorder::from_relation(std::move(labels), std::move(rows)));
  return q;
}

std::vector<int> heights(const FinitePreorder& p) {
  const std::size_t n = p.size();
  std::vector<int> h(n, -1);
  std::function<int(std::size_t)> visit = [&](std::size_t i) -> int {
    if (h[i] >= 0) return h[i];
    int best = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (p.less(j, i)) best = std::max(best, visit(j) + 1);
    return h[i] = best;
  };
  for (std::size_t i = 0; i < n; ++i) visit(i);
  return h;
}

int height_of(const FinitePreorder& p, std::string_view label) {
  return heights(p)[p.index_of(label)];
}

int height(const FinitePreorder& p) {
  const auto h = heights(p);
  return h.empty() ? -1 : *std::max_element(h.begin(), h.end());
}

MultigraphResult as_multigraph(const FinitePoset& p) {
  MultigraphResult result;
  const auto h = heights(p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (h[i] > 1) {
      result.rejection = MultigraphRejection{p.label(i), std::string(multigraph_rules::kHeight)};
      return result;
    }
    if (p.down(i).count() > 3) {
      result.rejection = MultigraphRejection{p.label(i), std::string(multigraph_rules::kDownSet)};
      return result;
    }
  }
  AbstractMultigraph g;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (h[i] == 0) {
      g.vertices.push_back(i);
    } else {
      auto ends = p.down(i);
      ends.erase(i);
      g.edges.push_back({i, ends.members()});
    }
  }
  result.graph = std::move(g);
  return result;
}

std::string preorder_to_json(const FinitePreorder& p, PairEncoding encoding, int indent) {
  Json doc;
  doc["elements"] = p.labels();
  doc["relation"] = encoding == PairEncoding::Full ? "full" : "covering";
  Json pairs = Json::array();
  if (encoding == PairEncoding::Full) {
    for (std::size_t i = 0; i < p.size(); ++i)
      for (auto j : p.up(i).members()) pairs.push_back(Json::array({p.label(i), p.label(j)}));
  } else {
    for (auto [i, j] : p.covering_pairs())
      pairs.push_back(Json::array({p.label(i), p.label(j)}));
  }
  doc["pairs"] = std::move(pairs);
  return doc.dump(indent);
}

FinitePreorder parse_preorder_json(std::string_view text) {
  const Json doc = detail::parse_json_text(text);
  detail::require_object(doc, "preorder");
  detail::reject_unknown_keys(doc, {"elements", "relation", "pairs"}, "preorder");
  const auto& elements = detail::require_key(doc, "elements", "preorder");
  if (!elements.is_array()) throw ParseError("preorder.elements: expected an array");
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  for (const auto& e : elements) {
    auto label = detail::get_string(e, "preorder.elements");
    if (!index.emplace(label, labels.size()).second)
      throw ParseError("preorder.elements: duplicate label '" + label + "'");
    labels.push_back(std::move(label));
  }
  const auto relation = detail::get_string(detail::require_key(doc, "relation", "preorder"),
                                           "preorder.relation");
  if (relation != "full" && relation != "covering")
    throw ParseError("preorder.relation: expected 'full' or 'covering'");
  const auto& pairs_json = detail::require_key(doc, "pairs", "preorder");
  if (!pairs_json.is_array()) throw ParseError("preorder.pairs: expected an array");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& pair : pairs_json) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("preorder.pairs: each entry must be a pair");
    auto lookup = [&](const Json& j) {
      auto it = index.find(detail::get_string(j, "preorder.pairs"));
      if (it == index.end()) throw ParseError("preorder.pairs: unknown element");
      return it->second;
    };
    pairs.emplace_back(lookup(pair[0]), lookup(pair[1]));
  }
  return FinitePreorder::closure_of(std::move(labels), pairs);
}

}  // namespace orbitspace
