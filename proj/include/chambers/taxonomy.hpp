#ifndef CHAMBERS_TAXONOMY_HPP
#define CHAMBERS_TAXONOMY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chambers/diagnostics.hpp"
#include "chambers/kos.hpp"

namespace chambers {

struct TaxonNode {
  std::string label;
  std::optional<std::string> dividingPrinciple;  // how the children divide
  std::vector<TaxonNode> children;
  int line = 0;
  bool isLeaf() const { return children.empty(); }
  bool operator==(const TaxonNode&) const = default;
};

struct TaxonomyTree {
  TaxonNode root;  // always labeled "Knowledge"
  // Every leaf with its full path from the root, in outline order.
  std::vector<std::pair<std::string, std::vector<std::string>>> leaves;
  std::map<std::string, std::vector<std::vector<std::string>>> leafIndex;
  bool operator==(const TaxonomyTree&) const = default;
};

/// Parses an indented outline: two spaces per level, one label per line,
/// optional " | principle" suffix. Throws DiagnosticError with EmptyOutline /
/// RootMismatch / MultipleRoots / IndentJump / BadIndent.
TaxonomyTree parse_taxonomy(std::string_view outline, std::string sourceName = "");

struct JepdViolation {
  std::string label;
  std::vector<std::vector<std::string>> paths;  // one per occurrence
  bool operator==(const JepdViolation&) const = default;
};

/// Pairwise-disjointness check: one violation per leaf label occurring two
/// or more times, listing every occurrence's path. Joint exhaustiveness is a
/// modeling claim and is not machine-checked.
std::vector<JepdViolation> validate_jepd(const TaxonomyTree& tree);

struct LeafLink {
  std::string leafLabel;
  std::vector<std::string> leafPath;
  std::string headwordId;
  bool operator==(const LeafLink&) const = default;
};

struct LeafLinkReport {
  std::vector<LeafLink> matched;
  std::vector<std::pair<std::string, std::vector<std::string>>> unmatchedLeaves;
  std::vector<std::string> unmatchedHeadwords;  // concept ids
  bool operator==(const LeafLinkReport&) const = default;
};

/// One-to-one matching of leaf labels to top concepts, exact after case and
/// diacritic folding. No fuzzy matching: the historical exceptions are meant
/// to surface in the report.
LeafLinkReport link_leaves(const TaxonomyTree& tree, const ConceptScheme& scheme);

}  // namespace chambers

#endif
