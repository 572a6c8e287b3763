#include "chambers/diagnostics.hpp"

#include <algorithm>
#include <sstream>

namespace chambers {

const char* to_string(DiagCode code) {
  switch (code) {
    case DiagCode::UnbalancedDelimiter: return "UnbalancedDelimiter";
    case DiagCode::UnknownDirective: return "UnknownDirective";
    case DiagCode::EmptySpan: return "EmptySpan";
    case DiagCode::UnexpectedCharacter: return "UnexpectedCharacter";
    case DiagCode::InvalidOrdinal: return "InvalidOrdinal";
    case DiagCode::TokenBeforeDomain: return "TokenBeforeDomain";
    case DiagCode::NonMonotonicPosition: return "NonMonotonicPosition";
    case DiagCode::MalformedDocument: return "MalformedDocument";
    case DiagCode::DanglingConnective: return "DanglingConnective";
    case DiagCode::OrphanInstance: return "OrphanInstance";
    case DiagCode::NormalizationEmpty: return "NormalizationEmpty";
    case DiagCode::SmallCapsInBody: return "SmallCapsInBody";
    case DiagCode::CollapsedTopicBreak: return "CollapsedTopicBreak";
    case DiagCode::BadGrammarConfig: return "BadGrammarConfig";
    case DiagCode::DuplicateHeadword: return "DuplicateHeadword";
    case DiagCode::DuplicateConceptId: return "DuplicateConceptId";
    case DiagCode::EmptyLabel: return "EmptyLabel";
    case DiagCode::MissingReciprocal: return "MissingReciprocal";
    case DiagCode::AsymmetricRelated: return "AsymmetricRelated";
    case DiagCode::BroaderCycle: return "BroaderCycle";
    case DiagCode::UnreachableConcept: return "UnreachableConcept";
    case DiagCode::DanglingRelation: return "DanglingRelation";
    case DiagCode::BadTopConcept: return "BadTopConcept";
    case DiagCode::UnresolvedHomonym: return "UnresolvedHomonym";
    case DiagCode::EmptyOutline: return "EmptyOutline";
    case DiagCode::RootMismatch: return "RootMismatch";
    case DiagCode::MultipleRoots: return "MultipleRoots";
    case DiagCode::IndentJump: return "IndentJump";
    case DiagCode::BadIndent: return "BadIndent";
    case DiagCode::JepdViolation: return "JepdViolation";
    case DiagCode::UnmatchedLeaf: return "UnmatchedLeaf";
    case DiagCode::UnmatchedHeadword: return "UnmatchedHeadword";
    case DiagCode::BadDecisionFile: return "BadDecisionFile";
    case DiagCode::DuplicateDecision: return "DuplicateDecision";
    case DiagCode::UnknownLabel: return "UnknownLabel";
    case DiagCode::ConflictingDecision: return "ConflictingDecision";
    case DiagCode::DecisionApplied: return "DecisionApplied";
    case DiagCode::DecisionSatisfied: return "DecisionSatisfied";
    case DiagCode::EmptySlug: return "EmptySlug";
    case DiagCode::InvalidBaseIri: return "InvalidBaseIri";
    case DiagCode::SchemeInvalid: return "SchemeInvalid";
    case DiagCode::JepdViolationInDirectMap: return "JepdViolationInDirectMap";
    case DiagCode::OutsideProfile: return "OutsideProfile";
    case DiagCode::UsageError: return "UsageError";
    case DiagCode::IoError: return "IoError";
  }
  return "Unknown";
}

const char* to_string(Severity severity) {
  switch (severity) {
    case Severity::Note: return "NOTE";
    case Severity::Warning: return "WARNING";
    case Severity::Error: return "ERROR";
  }
  return "ERROR";
}

std::string format(const Diagnostic& d) {
  std::ostringstream out;
  out << to_string(d.severity) << ' ';
  if (!d.file.empty()) out << d.file;
  if (d.pos.line > 0) {
    out << (d.file.empty() ? "<input>" : "") << ':' << d.pos.line << ':' << d.pos.col;
  }
  if (!d.file.empty() || d.pos.line > 0) out << ' ';
  out << '[' << to_string(d.code) << "] " << d.message;
  return out.str();
}

bool has_errors(const std::vector<Diagnostic>& ds) {
  return std::any_of(ds.begin(), ds.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

bool has_warnings(const std::vector<Diagnostic>& ds) {
  return std::any_of(ds.begin(), ds.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Warning; });
}

}  // namespace chambers
