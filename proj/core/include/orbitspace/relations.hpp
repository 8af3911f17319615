#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitspace/index_set.hpp"
#include "orbitspace/model.hpp"
#include "orbitspace/quotients.hpp"

namespace orbitspace {

enum class RelationName { LeqV, LeqAlpha, LeqOmega, LeqPerp, LeqPitchfork, LeqPartial };

std::string_view to_string(RelationName name);
/// Accepts `LEQ_ALPHA` or the short CLI names `v`, `alpha`, `omega`,
/// `perp`, `pitchfork`, `partial`.
std::optional<RelationName> parse_relation_name(std::string_view text);

/// A relation on the blocks of a quotient (or on nodes at ORBIT level).
/// `holds[i]` is the set of j with element i related to element j.
struct RelationMatrix {
  RelationName name = RelationName::LeqV;
  QuotientLevel level = QuotientLevel::Orbit;
  std::vector<std::string> elements;
  std::vector<IndexSet> holds;

  std::size_t size() const { return elements.size(); }
  bool at(std::size_t i, std::size_t j) const { return holds[i].contains(j); }
  /// Throws PreconditionError for unknown labels.
  bool at(std::string_view a, std::string_view b) const;
  std::size_t index_of(std::string_view label) const;
};

/// Block-level criteria, for blocks B and C:
///   B <=_alpha C  iff B = C or B meets alpha(C); omega dually;
///   v = alpha | omega;  perp uses (alpha(C) | omega(C)) - C;
///   B <=_pitchfork C iff B = C or B meets transverse(C) - C
///   (the identity at CLASS level);
///   B <=_partial C iff B meets the closure of C.
RelationMatrix compute_relation(const IndexedModel& model, RelationName name,
                                const QuotientSpace& quotient);

/// Computes the quotient for `level` first. Supported levels: ORBIT (node
/// level), CLASS, AWO, AO, EXTENDED; others throw PreconditionError.
RelationMatrix compute_relation(const IndexedModel& model, RelationName name,
                                QuotientLevel level);

struct PropertyReport {
  bool reflexive = true;
  std::optional<std::string> reflexive_witness;
  bool transitive = true;
  /// (a, b, c) with a <= b, b <= c and not a <= c.
  std::optional<std::array<std::string, 3>> transitive_witness;
  bool antisymmetric = true;
  /// (a, b) with a != b, a <= b and b <= a.
  std::optional<std::array<std::string, 2>> antisymmetric_witness;

  bool is_preorder() const { return reflexive && transitive; }
  bool is_partial_order() const { return is_preorder() && antisymmetric; }
};

/// Exhaustive O(n^3) check. Witnesses are the lexicographically smallest
/// by element label.
PropertyReport check_properties(const RelationMatrix& r);

/// Entrywise union; both matrices must share level and elements.
RelationMatrix relation_union(const RelationMatrix& a, const RelationMatrix& b);

struct DecompositionReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// At AWO and AO level: partial = alpha | omega | pitchfork and
/// v = alpha | omega, entrywise.
DecompositionReport relation_decomposition_check(const IndexedModel& model);

}  // namespace orbitspace
