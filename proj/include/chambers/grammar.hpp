#ifndef CHAMBERS_GRAMMAR_HPP
#define CHAMBERS_GRAMMAR_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chambers/diagnostics.hpp"
#include "chambers/transcript.hpp"

namespace chambers {

/// Tunable word sets for the connective rules. A config file can extend the
/// defaults:
///
///   # key = comma-separated values
///   nesting_cues = their, thereof
///   stop_words = its, their, the
struct GrammarConfig {
  // Connectives beginning with one of these word sequences open a child
  // facet of the current one instead of a sibling at section level.
  std::vector<std::string> nestingCues;
  // Stripped from the front and back of a connective when normalizing it
  // to a facet label.
  std::vector<std::string> stopWords;

  static GrammarConfig defaults();
  /// Parses config text and appends to the defaults. Throws BadGrammarConfig.
  static GrammarConfig load(std::string_view text, std::string sourceName = "");
};

enum class Origin { Textual, Interpolated };

struct InstanceRef {
  std::string label;  // from exactly one italic span
  bool openEnded = false;  // the enclosing list ended in "&c."
  std::optional<std::string> emendation;  // editorial note attached by @note
  SourcePos pos;
  bool operator==(const InstanceRef&) const = default;
};

struct FacetNode {
  std::string connective;   // verbatim roman phrase ("" for an anonymous grouping)
  std::string facetLabel;   // normalized noun head, or verbatim fallback
  std::optional<std::string> altFacetLabel;  // "Fossils or Minerals" keeps "Minerals" here
  std::vector<InstanceRef> instances;
  std::vector<FacetNode> children;
  Origin origin = Origin::Textual;
  std::optional<int> ordinalSection;
  // 0 for a named facet; >= 2 when this is an anonymous regrouping of
  // concepts after a closed list, inheriting the facet label.
  int groupIndex = 0;
  bool aspect = false;       // opened by a small-caps span at entry head
  bool listOpenEnded = false;
  bool labelFallback = false;  // normalization yielded nothing, label is verbatim
  SourcePos pos;
  bool operator==(const FacetNode&) const = default;
};

struct DomainParseTree {
  std::string headword;
  std::optional<std::string> altName;       // "MINEROLOGY, or the History of EARTH"
  std::vector<std::string> scopeAreas;      // "... including ..." small-caps list
  std::vector<std::string> relatedAspects;  // childless entry-head aspects
  std::vector<FacetNode> facets;
  std::vector<SourcePos> topicBreaks;       // long-dash positions, collapsed
  std::vector<std::string> notes;           // entry-level editorial notes
  std::string sourceName;
  SourcePos pos;
  bool operator==(const DomainParseTree&) const = default;
};

/// Parses one validated entry (first token @domain). Warnings such as
/// fallback facet labels or small capitals inside the body are appended to
/// *diagnostics when given. Throws DiagnosticError with DanglingConnective /
/// OrphanInstance on structural dead ends.
DomainParseTree parse_entry(const TranscriptDocument& entry,
                            const GrammarConfig& config = GrammarConfig::defaults(),
                            std::vector<Diagnostic>* diagnostics = nullptr);

/// "Its Parts, as" -> "Parts". Strips punctuation and stop words from both
/// ends; when nothing survives, falls back to the trimmed verbatim
/// connective ("as" -> "as") and *usedFallback is set.
std::string normalize_facet_label(std::string_view connective,
                                  const GrammarConfig& config = GrammarConfig::defaults(),
                                  bool* usedFallback = nullptr);

struct EntryCensus {
  int instanceCount = 0;
  int facetCount = 0;  // every FacetNode, anonymous groupings included
  int openEndedListCount = 0;
  bool operator==(const EntryCensus&) const = default;
};

EntryCensus entry_concept_census(const DomainParseTree& tree);

/// Depth-first instance labels of a facet subtree in reading order.
std::vector<std::string> subtree_instance_labels(const FacetNode& facet);

}  // namespace chambers

#endif
