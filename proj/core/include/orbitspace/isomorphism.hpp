#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitspace/index_set.hpp"
#include "orbitspace/model.hpp"
#include "orbitspace/quotients.hpp"
#include "orbitspace/relations.hpp"

namespace orbitspace {

/// Finite set with a binary relation and one label per element.
///
/// The relation is compared as given. It is usually a preorder, but the
/// raw <=_partial matrix of a non-Hausdorff model need not be transitive.
struct LabeledPoset {
  std::vector<std::string> elements;
  std::vector<std::string> labels;
  /// relation[i] = { j | i R j }.
  std::vector<IndexSet> relation;

  std::size_t size() const { return elements.size(); }
  bool related(std::size_t i, std::size_t j) const { return relation[i].contains(j); }
};

/// Label of one block: kind class, surface type class and granularity
/// class, e.g. "NONRECURRENT|2|SINGLE". Embedding data never enters.
/// Blocks mixing kinds get kind class "MIXED"; models without complete
/// surface tags get type class "-".
LabeledPoset labeled_quotient(const IndexedModel& model, QuotientLevel level,
                              RelationName relation);

enum class IsoVerdict { Isomorphic, NotIsomorphic, BudgetExceeded };
std::string_view to_string(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::NotIsomorphic;
  /// witness[i] = element of b matched to element i of a.
  std::optional<std::vector<std::size_t>> witness;
  /// Why the cheap invariants already differ, when they do.
  std::string reason;
  std::size_t steps = 0;
};

/// Backtracking search for a label- and relation-preserving bijection.
/// Candidates are pruned by label, in/out degree, self-relation and height
/// in the generated preorder. `step_budget` bounds the number of tentative
/// assignments.
IsoResult are_isomorphic(const LabeledPoset& a, const LabeledPoset& b,
                         std::size_t step_budget = 5'000'000);

/// x R y iff f(x) R f(y) for all x, y and labels agree.
bool verify_witness(const LabeledPoset& a, const LabeledPoset& b,
                    const std::vector<std::size_t>& witness);

}  // namespace orbitspace
