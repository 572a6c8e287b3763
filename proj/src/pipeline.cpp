#include "chambers/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chambers/textutil.hpp"
#include "chambers/transcript.hpp"

namespace chambers {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DiagnosticError(DiagCode::IoError, "cannot read " + path, {}, path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DiagnosticError(DiagCode::IoError, "cannot write " + path, {}, path);
  }
  out << content;
}

std::string occurrence_context(const Occurrence& occ) {
  std::string out = occ.domain;
  for (const auto& step : occ.facetPath) {
    out += " > " + step;
  }
  return out;
}

struct Stages {
  PipelineResult& result;
  const PipelineConfig& config;
  bool fatal = false;

  void add(Diagnostic d) { result.diagnostics.push_back(std::move(d)); }

  void addError(const DiagnosticError& err) {
    result.diagnostics.push_back(err.diagnostic);
    fatal = true;
  }

  void note(DiagCode code, std::string msg, std::string file = "") {
    add({Severity::Note, code, std::move(msg), std::move(file), {}});
  }
  void warn(DiagCode code, std::string msg, std::string file = "") {
    add({Severity::Warning, code, std::move(msg), std::move(file), {}});
  }
};

}  // namespace

std::string report_homonyms_table(const ConceptScheme& scheme) {
  std::vector<AmbiguityRecord> records = find_homonyms(scheme);
  std::string out = "label\toccurrences\tcontexts\n";
  for (const auto& record : records) {
    std::vector<std::string> contexts;
    for (const auto& occ : record.occurrences) {
      contexts.push_back(occurrence_context(occ) + " [" + occ.conceptId + "]");
    }
    out += record.label + "\t" + std::to_string(record.occurrences.size()) + "\t" +
           join(contexts, "; ") + "\n";
  }
  return out;
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  PipelineResult result;
  Stages stages{result, config};

  if (config.transcriptPaths.empty()) {
    stages.add({Severity::Error, DiagCode::UsageError, "no transcript files given", "", {}});
    result.exitCode = 2;
    return result;
  }

  GrammarConfig grammar = GrammarConfig::defaults();
  if (config.grammarConfigPath) {
    try {
      grammar = GrammarConfig::load(read_file(*config.grammarConfigPath), *config.grammarConfigPath);
    } catch (const DiagnosticError& err) {
      stages.addError(err);
    }
  }

  // Lex, validate, and parse every entry of every transcript.
  if (!stages.fatal) {
    for (const auto& path : config.transcriptPaths) {
      try {
        TranscriptDocument doc = lex(read_file(path), path);
        std::vector<Diagnostic> docDiags = validate_transcript(doc);
        result.diagnostics.insert(result.diagnostics.end(), docDiags.begin(), docDiags.end());
        if (has_errors(docDiags)) {
          stages.fatal = true;
          continue;
        }
        for (const auto& entry : split_entries(doc)) {
          result.trees.push_back(parse_entry(entry, grammar, &result.diagnostics));
        }
      } catch (const DiagnosticError& err) {
        stages.addError(err);
      }
    }
    if (result.trees.empty() && !stages.fatal) {
      stages.add({Severity::Error, DiagCode::UsageError, "transcripts contain no entries", "", {}});
      stages.fatal = true;
    }
  }

  std::vector<AmbiguityRecord> workload;  // homonyms before any decision
  if (!stages.fatal) {
    try {
      result.scheme = build_scheme(result.trees);
      workload = find_homonyms(result.scheme);
    } catch (const DiagnosticError& err) {
      stages.addError(err);
    }
  }

  if (!stages.fatal && config.decisionsPath) {
    try {
      DecisionSet decisions = parse_decisions(read_file(*config.decisionsPath), *config.decisionsPath);
      auto [updated, report] = apply_decisions(result.scheme, decisions);
      result.scheme = std::move(updated);
      result.decisionReport = std::move(report);
      for (const auto& outcome : result.decisionReport->outcomes) {
        std::string msg = "decision \"" + outcome.label + "\": " + outcome.detail;
        switch (outcome.status) {
          case DecisionStatus::Applied:
            stages.note(DiagCode::DecisionApplied, msg, *config.decisionsPath);
            break;
          case DecisionStatus::Ignored:
            stages.note(DiagCode::DecisionSatisfied, msg, *config.decisionsPath);
            break;
          case DecisionStatus::Unmatched:
            stages.warn(DiagCode::UnknownLabel, msg, *config.decisionsPath);
            break;
          case DecisionStatus::Conflicting:
            stages.add({Severity::Error, DiagCode::ConflictingDecision, msg,
                        *config.decisionsPath, {}});
            break;
        }
      }
    } catch (const DiagnosticError& err) {
      stages.addError(err);
    }
  }

  std::vector<AmbiguityRecord> unresolved;
  if (!stages.fatal) {
    unresolved = find_homonyms(result.scheme);
    for (const auto& record : unresolved) {
      std::vector<std::string> contexts;
      for (const auto& occ : record.occurrences) contexts.push_back(occurrence_context(occ));
      stages.warn(DiagCode::UnresolvedHomonym,
                  "label \"" + record.label + "\" is ambiguous: " + join(contexts, "; "));
    }
  }

  std::vector<JepdViolation> jepd;
  if (!stages.fatal && config.taxonomyPath) {
    try {
      result.taxonomy = parse_taxonomy(read_file(*config.taxonomyPath), *config.taxonomyPath);
      jepd = validate_jepd(*result.taxonomy);
      for (const auto& v : jepd) {
        std::vector<std::string> paths;
        for (const auto& p : v.paths) paths.push_back(join(p, "/"));
        stages.warn(DiagCode::JepdViolation,
                    "leaf \"" + v.label + "\" appears under: " + join(paths, "; "),
                    *config.taxonomyPath);
      }
      result.leafLinks = link_leaves(*result.taxonomy, result.scheme);
      for (const auto& [label, path] : result.leafLinks->unmatchedLeaves) {
        stages.warn(DiagCode::UnmatchedLeaf, "taxonomy leaf \"" + label + "\" matches no headword",
                    *config.taxonomyPath);
      }
      for (const auto& id : result.leafLinks->unmatchedHeadwords) {
        stages.warn(DiagCode::UnmatchedHeadword,
                    "headword \"" + id + "\" matches no taxonomy leaf", *config.taxonomyPath);
      }
    } catch (const DiagnosticError& err) {
      stages.addError(err);
    }
  }

  if (!stages.fatal) {
    std::vector<Diagnostic> schemeDiags = check_scheme(result.scheme);
    result.diagnostics.insert(result.diagnostics.end(), schemeDiags.begin(), schemeDiags.end());
    if (has_errors(schemeDiags)) stages.fatal = true;
  }

  IriPolicy policy{config.baseIri};
  if (!stages.fatal) {
    try {
      result.skosTurtle = emit_skos(result.scheme, policy);
    } catch (const DiagnosticError& err) {
      stages.addError(err);
    }
  }
  if (!stages.fatal && config.owlMode != OwlChoice::None) {
    if (!result.taxonomy) {
      stages.warn(DiagCode::UsageError, "OWL emission requested, but no taxonomy was given");
    } else {
      try {
        result.owlTurtle = emit_owl(result.scheme, *result.taxonomy,
                                    config.owlMode == OwlChoice::Direct ? OwlMode::DirectMap
                                                                        : OwlMode::AxiomBased,
                                    policy);
      } catch (const DiagnosticError& err) {
        // A refused direct mapping leaves the thesaurus artifacts intact.
        result.diagnostics.push_back(err.diagnostic);
      }
    }
  }

  // ----- report -------------------------------------------------------
  std::ostringstream report;
  report << "chambers-kos pipeline report\n";
  report << "============================\n\n";

  report << "Entries (" << result.trees.size() << ")\n";
  std::vector<const DomainParseTree*> ordered;
  for (const auto& t : result.trees) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(), [](const DomainParseTree* a, const DomainParseTree* b) {
    return fold_case(a->headword) < fold_case(b->headword);
  });
  for (const DomainParseTree* tree : ordered) {
    EntryCensus census = entry_concept_census(*tree);
    report << "  " << tree->headword << ": instances=" << census.instanceCount
           << " facets=" << census.facetCount
           << " open-ended-lists=" << census.openEndedListCount;
    if (!tree->sourceName.empty()) report << "  (" << tree->sourceName << ")";
    report << "\n";
  }
  report << "\n";

  report << "Homonyms (" << workload.size() << ")\n";
  for (const auto& record : workload) {
    std::vector<std::string> contexts;
    for (const auto& occ : record.occurrences) contexts.push_back(occurrence_context(occ));
    report << "  " << record.label << ": " << join(contexts, "; ") << "\n";
  }
  report << "\n";

  if (result.decisionReport) {
    report << "Decisions (" << result.decisionReport->outcomes.size() << ")\n";
    for (const auto& outcome : result.decisionReport->outcomes) {
      report << "  [" << to_string(outcome.status) << "] " << outcome.label
             << (outcome.action == DecisionAction::Merge ? " merge" : " split") << ": "
             << outcome.detail << "\n";
    }
  } else {
    report << "Decisions\n  (no decisions file)\n";
  }
  report << "\n";

  report << "Unresolved homonyms (" << unresolved.size() << ")\n";
  for (const auto& record : unresolved) {
    std::vector<std::string> contexts;
    for (const auto& occ : record.occurrences) contexts.push_back(occurrence_context(occ));
    report << "  " << record.label << ": " << join(contexts, "; ") << "\n";
  }
  report << "\n";

  if (result.taxonomy) {
    report << "Taxonomy\n";
    report << "  leaves=" << result.taxonomy->leaves.size() << "\n";
    report << "  JEPD violations (" << jepd.size() << ")\n";
    for (const auto& v : jepd) {
      std::vector<std::string> paths;
      for (const auto& p : v.paths) paths.push_back(join(p, "/"));
      report << "    " << v.label << ": " << join(paths, "; ") << "\n";
    }
    if (result.leafLinks) {
      report << "  Leaf links: matched=" << result.leafLinks->matched.size()
             << " unmatched-leaves=" << result.leafLinks->unmatchedLeaves.size()
             << " unmatched-headwords=" << result.leafLinks->unmatchedHeadwords.size() << "\n";
      for (const auto& link : result.leafLinks->matched) {
        report << "    " << link.leafLabel << " = " << link.headwordId << "\n";
      }
      for (const auto& [label, path] : result.leafLinks->unmatchedLeaves) {
        report << "    unmatched leaf: " << join(path, "/") << "\n";
      }
      for (const auto& id : result.leafLinks->unmatchedHeadwords) {
        report << "    unmatched headword: " << id << "\n";
      }
    }
  } else {
    report << "Taxonomy\n  (no taxonomy file)\n";
  }
  report << "\n";

  int errors = 0;
  int warnings = 0;
  int notes = 0;
  for (const auto& d : result.diagnostics) {
    switch (d.severity) {
      case Severity::Error: ++errors; break;
      case Severity::Warning: ++warnings; break;
      case Severity::Note: ++notes; break;
    }
  }
  report << "Diagnostics: errors=" << errors << " warnings=" << warnings << " notes=" << notes
         << "\n";
  result.report = report.str();

  // ----- artifacts ----------------------------------------------------
  if (config.outputDir) {
    try {
      std::filesystem::create_directories(*config.outputDir);
      auto emitArtifact = [&](const std::string& name, std::string_view content) {
        std::string path = (std::filesystem::path(*config.outputDir) / name).string();
        write_file(path, content);
        result.artifactsWritten.push_back(path);
      };
      if (!result.skosTurtle.empty()) {
        emitArtifact(config.stem + ".skos.ttl", result.skosTurtle);
      }
      if (!result.owlTurtle.empty()) {
        emitArtifact(config.stem + ".owl.ttl", result.owlTurtle);
      }
      emitArtifact("report.txt", result.report);
    } catch (const DiagnosticError& err) {
      result.diagnostics.push_back(err.diagnostic);
    } catch (const std::filesystem::filesystem_error& err) {
      result.diagnostics.push_back(
          {Severity::Error, DiagCode::IoError, err.what(), *config.outputDir, {}});
    }
  }

  result.exitCode = has_errors(result.diagnostics)     ? 2
                    : has_warnings(result.diagnostics) ? 1
                                                       : 0;
  return result;
}

}  // namespace chambers
