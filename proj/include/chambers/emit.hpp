#ifndef CHAMBERS_EMIT_HPP
#define CHAMBERS_EMIT_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chambers/diagnostics.hpp"
#include "chambers/kos.hpp"
#include "chambers/taxonomy.hpp"

namespace chambers {

struct IriPolicy {
  std::string baseIri = "https://example.org/chambers/";
  /// Throws DiagnosticError(InvalidBaseIri) unless baseIri is an absolute
  /// IRI ending in "/".
  void validate() const;
};

enum class OwlMode { DirectMap, AxiomBased };

/// Mints persistent identifiers: baseIri + slug(domain) + "/" +
/// slug(prefLabel), with "-2", "-3" appended on same-domain collisions in
/// mint order. Mint concepts in scheme order for stable output.
class IriMinter {
 public:
  explicit IriMinter(IriPolicy policy);
  /// Throws DiagnosticError(EmptySlug) when the label slugs to nothing.
  std::string mint(const Concept& c);

 private:
  IriPolicy policy_;
  std::map<std::string, int> used_;
};

/// Single-concept convenience form (fresh minter, no collision history).
std::string mint_iri(const Concept& c, const IriPolicy& policy);

struct SkosOptions {
  // When false, facet concepts are collapsed into annotations: instances
  // hang directly under their headword and carry a "facet: ..." note.
  bool facetsAsConcepts = true;
};

/// Deterministic Turtle: prefix block, then one node per concept sorted
/// lexicographically by IRI. Throws SchemeInvalid when check_scheme fails.
std::string emit_skos(const ConceptScheme& scheme, const IriPolicy& policy,
                      const SkosOptions& options = {});

/// Turtle-serialized OWL 2 classes. DirectMap mirrors the tree with sibling
/// disjointness and refuses (JepdViolationInDirectMap) when validate_jepd
/// reports duplicates; AxiomBased drops disjointness, annotates levels,
/// dividing principles and verbatim connectives, and merges duplicate leaf
/// labels into one polyhierarchical class.
std::string emit_owl(const ConceptScheme& scheme, const TaxonomyTree& tree,
                     OwlMode mode, const IriPolicy& policy);

/// Reads exactly the profile emit_skos writes (prefixed predicates, IRI
/// subjects, no blank nodes) back into a scheme graph-isomorphic to the
/// emitted one. Anything else raises OutsideProfile naming the construct.
ConceptScheme read_turtle_subset(std::string_view turtle);

/// Structural graph equality keyed by minted IRIs; the round-trip oracle.
bool scheme_equivalent(const ConceptScheme& a, const ConceptScheme& b, const IriPolicy& policy);

}  // namespace chambers

#endif
