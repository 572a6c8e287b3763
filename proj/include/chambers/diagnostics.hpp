#ifndef CHAMBERS_DIAGNOSTICS_HPP
#define CHAMBERS_DIAGNOSTICS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace chambers {

enum class Severity { Note, Warning, Error };

enum class DiagCode {
  // transcript
  UnbalancedDelimiter,
  UnknownDirective,
  EmptySpan,
  UnexpectedCharacter,
  InvalidOrdinal,
  TokenBeforeDomain,
  NonMonotonicPosition,
  MalformedDocument,
  // grammar
  DanglingConnective,
  OrphanInstance,
  NormalizationEmpty,
  SmallCapsInBody,
  CollapsedTopicBreak,
  BadGrammarConfig,
  // concept scheme
  DuplicateHeadword,
  DuplicateConceptId,
  EmptyLabel,
  MissingReciprocal,
  AsymmetricRelated,
  BroaderCycle,
  UnreachableConcept,
  DanglingRelation,
  BadTopConcept,
  UnresolvedHomonym,
  // taxonomy
  EmptyOutline,
  RootMismatch,
  MultipleRoots,
  IndentJump,
  BadIndent,
  JepdViolation,
  UnmatchedLeaf,
  UnmatchedHeadword,
  // decisions
  BadDecisionFile,
  DuplicateDecision,
  UnknownLabel,
  ConflictingDecision,
  DecisionApplied,
  DecisionSatisfied,
  // emission
  EmptySlug,
  InvalidBaseIri,
  SchemeInvalid,
  JepdViolationInDirectMap,
  OutsideProfile,
  // driver
  UsageError,
  IoError,
};

const char* to_string(DiagCode code);
const char* to_string(Severity severity);

/// 1-based source position; {0,0} means "no position".
struct SourcePos {
  int line = 0;
  int col = 0;
  bool operator==(const SourcePos&) const = default;
  auto operator<=>(const SourcePos&) const = default;
};

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagCode code = DiagCode::MalformedDocument;
  std::string message;
  std::string file;
  SourcePos pos;
  bool operator==(const Diagnostic&) const = default;
};

/// "ERROR file:line:col message", omitting the location parts that are unset.
std::string format(const Diagnostic& d);

bool has_errors(const std::vector<Diagnostic>& ds);
bool has_warnings(const std::vector<Diagnostic>& ds);

/// Thrown by operations whose contract makes the condition fatal.
class DiagnosticError : public std::runtime_error {
 public:
  explicit DiagnosticError(Diagnostic d) : std::runtime_error(format(d)), diagnostic(std::move(d)) {}
  DiagnosticError(DiagCode code, std::string message, SourcePos pos = {}, std::string file = "")
      : DiagnosticError(Diagnostic{Severity::Error, code, std::move(message), std::move(file), pos}) {}
  Diagnostic diagnostic;
};

}  // namespace chambers

#endif
