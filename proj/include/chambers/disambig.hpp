#ifndef CHAMBERS_DISAMBIG_HPP
#define CHAMBERS_DISAMBIG_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chambers/diagnostics.hpp"
#include "chambers/kos.hpp"

namespace chambers {

// Homonym resolution is human judgment recorded as data, never inferred.
// The decisions file is tab-separated:
//
//   label <TAB> action <TAB> target_or_qualifiers <TAB> rationale
//
// action is "merge" (third column: resulting label) or "split" (third
// column: "conceptId=qualifier" pairs joined by ";", or empty to qualify
// every occurrence by its domain). Lines starting with "#" are comments.

enum class DecisionAction { Merge, Split };

struct DecisionEntry {
  std::string label;
  DecisionAction action = DecisionAction::Merge;
  std::string targetLabel;                        // merge
  std::map<std::string, std::string> qualifiers;  // split: concept id -> qualifier
  std::string rationale;
  int line = 0;
  bool operator==(const DecisionEntry&) const = default;
};

struct DecisionSet {
  std::vector<DecisionEntry> entries;
  std::string sourceFile;
  bool operator==(const DecisionSet&) const = default;
};

/// Throws DiagnosticError(BadDecisionFile / DuplicateDecision).
DecisionSet parse_decisions(std::string_view text, std::string sourceFile = "");

enum class DecisionStatus {
  Applied,      // scheme changed
  Ignored,      // already satisfied, nothing to do
  Unmatched,    // label absent from the scheme
  Conflicting,  // would corrupt the hierarchy; not applied
};

const char* to_string(DecisionStatus s);

struct DecisionOutcome {
  std::string label;
  DecisionAction action = DecisionAction::Merge;
  DecisionStatus status = DecisionStatus::Ignored;
  std::string detail;
  bool operator==(const DecisionOutcome&) const = default;
};

struct ApplicationReport {
  std::vector<DecisionOutcome> outcomes;           // decision-file order
  std::vector<AmbiguityRecord> unresolvedHomonyms; // still ambiguous afterwards
  bool operator==(const ApplicationReport&) const = default;
};

/// Returns a new scheme; the input is never mutated. Merges collapse all
/// same-label concepts into the first, re-pointing every relation; splits
/// rename each occurrence to "label (qualifier)". A merge that would create
/// a broader cycle (or would fuse headwords) is rejected and reported as
/// Conflicting. Applying the same set twice makes the second pass a no-op.
std::pair<ConceptScheme, ApplicationReport> apply_decisions(const ConceptScheme& scheme,
                                                            const DecisionSet& decisions);

}  // namespace chambers

#endif
