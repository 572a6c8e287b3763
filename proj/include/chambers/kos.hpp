#ifndef CHAMBERS_KOS_HPP
#define CHAMBERS_KOS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chambers/diagnostics.hpp"
#include "chambers/grammar.hpp"

namespace chambers {

enum class ConceptKind { Headword, Facet, Instance };

struct Concept {
  std::string id;  // stable within a scheme: "<domain-slug>/<label-slug>[-n]"
  std::string prefLabel;
  std::vector<std::string> altLabels;  // sorted, unique
  std::vector<std::string> domains;    // headwords under which it appears; sorted
  ConceptKind kind = ConceptKind::Instance;
  Origin origin = Origin::Textual;
  bool openEnded = false;
  std::optional<std::string> connective;  // verbatim roman phrase, facets only
  std::vector<std::string> notes;
  bool operator==(const Concept&) const = default;
};

enum class RelationKind { Broader, Narrower, Related };

struct Relation {
  std::string subject;
  std::string object;
  RelationKind kind = RelationKind::Related;
  bool operator==(const Relation&) const = default;
  auto operator<=>(const Relation&) const = default;
};

struct ConceptScheme {
  std::vector<Concept> concepts;        // deterministic build order
  std::vector<Relation> relations;      // reciprocal pairs both stored
  std::vector<std::string> topConcepts; // headword concept ids, build order

  const Concept* find(std::string_view id) const;
  Concept* find(std::string_view id);
  bool hasRelation(std::string_view subject, std::string_view object, RelationKind kind) const;
  /// Broader edges of subject in stored order.
  std::vector<const Relation*> broaderOf(std::string_view subject) const;
  bool operator==(const ConceptScheme&) const = default;
};

/// Entry trees to concept scheme. Entries are ordered by case-folded
/// headword before ids are assigned, so the result does not depend on input
/// order. Throws DiagnosticError(DuplicateHeadword).
ConceptScheme build_scheme(const std::vector<DomainParseTree>& trees);

/// Structural well-formedness: reciprocal pairs, acyclic broader hierarchy,
/// reachability from the top concepts, non-empty labels, referential
/// integrity. Empty result means all hold.
std::vector<Diagnostic> check_scheme(const ConceptScheme& scheme);

struct Occurrence {
  std::string conceptId;
  std::string domain;
  std::vector<std::string> facetPath;  // facet labels from headword down, exclusive
  bool operator==(const Occurrence&) const = default;
};

struct AmbiguityRecord {
  std::string label;  // first-seen spelling of the case-folded group
  std::vector<Occurrence> occurrences;
  bool operator==(const AmbiguityRecord&) const = default;
};

/// Case-folded prefLabel groups with two or more distinct concepts,
/// sorted by label.
std::vector<AmbiguityRecord> find_homonyms(const ConceptScheme& scheme);

/// Facet labels from the owning headword down to the concept's parent.
std::vector<std::string> facet_path(const ConceptScheme& scheme, std::string_view conceptId);

}  // namespace chambers

#endif
