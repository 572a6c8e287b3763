#ifndef CHAMBERS_PIPELINE_HPP
#define CHAMBERS_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "chambers/diagnostics.hpp"
#include "chambers/disambig.hpp"
#include "chambers/emit.hpp"
#include "chambers/grammar.hpp"
#include "chambers/kos.hpp"
#include "chambers/taxonomy.hpp"

namespace chambers {

enum class OwlChoice { None, Direct, Axiom };

struct PipelineConfig {
  std::vector<std::string> transcriptPaths;  // must be non-empty
  std::optional<std::string> taxonomyPath;
  std::optional<std::string> decisionsPath;
  std::optional<std::string> grammarConfigPath;
  std::string baseIri = "https://example.org/chambers/";
  OwlChoice owlMode = OwlChoice::None;
  std::optional<std::string> outputDir;  // artifacts written only when set
  std::string stem = "chambers";         // artifact file stem
};

struct PipelineResult {
  // 0 clean, 1 warnings only, 2 errors.
  int exitCode = 0;
  std::vector<Diagnostic> diagnostics;
  std::string report;
  std::vector<std::string> artifactsWritten;  // paths, in write order
  // Populated when the corresponding stage completed.
  std::vector<DomainParseTree> trees;
  ConceptScheme scheme;
  std::optional<TaxonomyTree> taxonomy;
  std::optional<ApplicationReport> decisionReport;
  std::optional<LeafLinkReport> leafLinks;
  std::string skosTurtle;
  std::string owlTurtle;
};

/// lex -> parse -> build -> disambiguate -> validate -> emit. Stops at the
/// first stage with a fatal error; whatever completed stays in the result.
PipelineResult run_pipeline(const PipelineConfig& config);

/// One row per ambiguity record, sorted by label; header always present.
std::string report_homonyms_table(const ConceptScheme& scheme);

}  // namespace chambers

#endif
