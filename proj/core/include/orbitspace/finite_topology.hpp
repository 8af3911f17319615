#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitspace/index_set.hpp"

namespace orbitspace {

/// A finite preorder, read as a finite (Alexandroff) topological space via
/// the specialization order: x <= y iff x lies in the closure of {y}.
/// Open sets are exactly the up-closed sets.
///
/// Row i of the matrix is stored as the up-set {j | i <= j}.
class FinitePreorder {
 public:
  FinitePreorder() = default;

  /// Reflexive-transitive closure of an arbitrary relation (O(n^3)).
  /// `rows[i]` lists the j with i R j.
  static FinitePreorder closure_of(std::vector<std::string> labels,
                                   const std::vector<IndexSet>& rows);
  static FinitePreorder closure_of(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  /// Takes the relation as given; throws PreconditionError unless it is
  /// reflexive and transitive.
  static FinitePreorder from_relation(std::vector<std::string> labels,
                                      std::vector<IndexSet> rows);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  /// Throws PreconditionError for unknown labels.
  std::size_t index_of(std::string_view label) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i].contains(j); }
  bool less(std::size_t i, std::size_t j) const { return leq(i, j) && !leq(j, i); }
  bool equivalent(std::size_t i, std::size_t j) const { return leq(i, j) && leq(j, i); }

  const IndexSet& up(std::size_t i) const { return up_[i]; }
  IndexSet down(std::size_t i) const;
  IndexSet down_closure(const IndexSet& s) const;
  IndexSet up_closure(const IndexSet& s) const;
  bool is_up_closed(const IndexSet& s) const;

  bool is_antisymmetric() const;

  /// Covering pairs (i, j): i < j with nothing strictly between, plus
  /// every ordered pair of distinct equivalent elements. Their
  /// reflexive-transitive closure is the preorder again.
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;

  /// Induced sub-preorder on `keep`, in increasing index order.
  FinitePreorder restrict_to(const IndexSet& keep) const;

  bool operator==(const FinitePreorder&) const = default;

 protected:
  std::vector<std::string> labels_;
  std::vector<IndexSet> up_;
};

/// A preorder that is also antisymmetric.
class FinitePoset : public FinitePreorder {
 public:
  FinitePoset() = default;
  /// Throws PreconditionError if `p` is not antisymmetric.
  explicit FinitePoset(FinitePreorder p);
};

struct T0Quotient {
  FinitePoset poset;
  /// class_of[i] = index of the poset element containing element i.
  std::vector<std::size_t> class_of;
  /// Members of each class, in increasing order.
  std::vector<std::vector<std::size_t>> members;
};

/// Kolmogorov quotient. Classes are ordered by smallest member and labelled
/// by that member's label.
T0Quotient t0_tify(const FinitePreorder& p);

/// Longest strict chain ending at each element (chain length minus one).
/// For a preorder this is the height in its T0 quotient.
std::vector<int> heights(const FinitePreorder& p);
int height_of(const FinitePreorder& p, std::string_view label);
/// Maximum element height; -1 for the empty preorder.
int height(const FinitePreorder& p);

struct AbstractMultigraph {
  std::vector<std::size_t> vertices;
  struct Edge {
    std::size_t element;
    /// r(e) = down-set of e minus e itself; one or two vertices.
    std::vector<std::size_t> ends;
  };
  std::vector<Edge> edges;
};

struct MultigraphRejection {
  std::string element;
  std::string rule;
};

struct MultigraphResult {
  std::optional<AbstractMultigraph> graph;
  std::optional<MultigraphRejection> rejection;
  bool accepted() const { return graph.has_value(); }
};

namespace multigraph_rules {
inline constexpr std::string_view kHeight = "height exceeds one";
inline constexpr std::string_view kDownSet = "down-set has more than three elements";
}  // namespace multigraph_rules

/// Recognizes multi-graph-like posets: height <= 1 and |down(x)| <= 3.
MultigraphResult as_multigraph(const FinitePoset& p);

enum class PairEncoding { Full, Covering };

/// {"elements": [...], "relation": "full"|"covering", "pairs": [[a,b],...]}
/// where [a,b] means a <= b.
std::string preorder_to_json(const FinitePreorder& p, PairEncoding encoding, int indent = 2);
/// Reads either encoding; the result is closed reflexively and transitively.
/// Throws ParseError.
FinitePreorder parse_preorder_json(std::string_view text);

}  // namespace orbitspace
