#ifndef CHAMBERS_TRANSCRIPT_HPP
#define CHAMBERS_TRANSCRIPT_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chambers/diagnostics.hpp"

namespace chambers {

// Transcription markup for the printed "Preface" vocabulary. One token per
// typographic feature of the source:
//
//   @domain{NAME}    entry start, NAME as printed (small capitals implied)
//   roman{...}       connective phrase in roman type
//   italic{...}      concept term in italic type
//   sc{...}          small capitals (entry-head aspects, scope areas)
//   , ; .            bare punctuation between spans
//   —                the long dash marking a definitive topic shift (U+2014)
//   &c.              the open-list terminator, exactly as printed
//   @ord{N}          printed ordinal ("1°" is transcribed @ord{1})
//   @interp{LABEL}   transcriber-supplied heading (never authorial text)
//   @note{...}       free-text editorial note
//
// Nesting of braced constructs is forbidden; braces cannot appear inside.

enum class SpanStyle { Roman, Italic, SmallCaps };

struct StyledSpan {
  SpanStyle style = SpanStyle::Roman;
  std::string text;  // verbatim content between the braces
  SourcePos pos;
  bool operator==(const StyledSpan&) const = default;
};

enum class PunctKind { Comma, Semicolon, Period, LongDash, EtCetera, OrdinalMarker };

struct PunctToken {
  PunctKind kind = PunctKind::Comma;
  int ordinal = 0;  // OrdinalMarker only
  SourcePos pos;
  bool operator==(const PunctToken&) const = default;
};

enum class DirectiveKind { DomainStart, Interpolate, Note };

struct Directive {
  DirectiveKind kind = DirectiveKind::Note;
  std::string text;  // verbatim content between the braces
  SourcePos pos;
  bool operator==(const Directive&) const = default;
};

using Token = std::variant<StyledSpan, PunctToken, Directive>;

SourcePos token_pos(const Token& t);

struct TranscriptDocument {
  std::string sourceName;
  std::vector<Token> tokens;
  // Inter-token whitespace, verbatim: gaps[i] precedes tokens[i] and
  // gaps[tokens.size()] trails the document. Kept so render() is exact.
  std::vector<std::string> gaps;
  bool operator==(const TranscriptDocument&) const = default;
};

/// Lexes markup into a token stream. Throws DiagnosticError with
/// UnbalancedDelimiter / UnknownDirective / EmptySpan / UnexpectedCharacter /
/// InvalidOrdinal on the first malformed construct.
TranscriptDocument lex(std::string_view source, std::string sourceName = "");

/// Re-emits the markup. render(lex(s)) == s for every s that lex accepts.
std::string render(const TranscriptDocument& doc);

/// Structural checks: every token belongs to an entry opened by @domain,
/// positions are nondecreasing, spans and directive labels are non-empty.
std::vector<Diagnostic> validate_transcript(const TranscriptDocument& doc);

/// Splits a validated document at @domain boundaries, one document per entry.
std::vector<TranscriptDocument> split_entries(const TranscriptDocument& doc);

}  // namespace chambers

#endif
