#include "chambers/transcript.hpp"

#include <sstream>

#include "chambers/textutil.hpp"

namespace chambers {

namespace {

constexpr std::string_view kLongDash = "—";

struct Cursor {
  std::string_view src;
  std::string file;
  size_t i = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return i >= src.size(); }
  char peek() const { return src[i]; }
  bool startsWith(std::string_view prefix) const { return src.substr(i).starts_with(prefix); }

  // Columns count code points, so the long dash occupies one column.
  void advance() {
    char c = src[i];
    ++i;
    while (i < src.size() && (static_cast<unsigned char>(src[i]) & 0xC0) == 0x80) ++i;
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }

  SourcePos pos() const { return {line, col}; }

  [[noreturn]] void fail(DiagCode code, std::string message, SourcePos at) const {
    throw DiagnosticError(code, std::move(message), at, file);
  }
};

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string read_ident(Cursor& cur) {
  std::string ident;
  while (!cur.eof()) {
    char c = cur.peek();
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      ident += c;
      cur.advance();
    } else {
      break;
    }
  }
  return ident;
}

// Reads "{...}" with the cursor on the brace. Verbatim content; no nesting.
std::string read_braced(Cursor& cur, SourcePos opener, std::string_view what) {
  if (cur.eof() || cur.peek() != '{') {
    cur.fail(DiagCode::UnexpectedCharacter,
             std::string("expected '{' after ").append(what), cur.pos());
  }
  cur.advance();
  size_t start = cur.i;
  while (!cur.eof()) {
    char c = cur.peek();
    if (c == '}') {
      std::string content(cur.src.substr(start, cur.i - start));
      cur.advance();
      return content;
    }
    if (c == '{') {
      cur.fail(DiagCode::UnbalancedDelimiter,
               std::string("nested '{' inside ").append(what), cur.pos());
    }
    cur.advance();
  }
  cur.fail(DiagCode::UnbalancedDelimiter,
           std::string(what) + " opened here is never closed", opener);
}

void lex_directive(Cursor& cur, std::vector<Token>& tokens) {
  SourcePos at = cur.pos();
  cur.advance();  // '@'
  std::string name = read_ident(cur);
  if (name == "domain" || name == "interp" || name == "note") {
    std::string content = read_braced(cur, at, "@" + name + "{");
    if (is_all_whitespace(content)) {
      cur.fail(DiagCode::EmptySpan, "@" + name + " has empty content", at);
    }
    DirectiveKind kind = name == "domain"   ? DirectiveKind::DomainStart
                         : name == "interp" ? DirectiveKind::Interpolate
                                            : DirectiveKind::Note;
    tokens.push_back(Directive{kind, std::move(content), at});
    return;
  }
  if (name == "ord") {
    std::string content = read_braced(cur, at, "@ord{");
    if (content.empty() || content.find_first_not_of("0123456789") != std::string::npos ||
        content[0] == '0') {
      cur.fail(DiagCode::InvalidOrdinal,
               "@ord expects a positive integer without leading zeros, got \"" + content + "\"", at);
    }
    long value = std::stol(content);
    if (value <= 0 || value > 1000000) {
      cur.fail(DiagCode::InvalidOrdinal, "ordinal out of range: " + content, at);
    }
    tokens.push_back(PunctToken{PunctKind::OrdinalMarker, static_cast<int>(value), at});
    return;
  }
  cur.fail(DiagCode::UnknownDirective, "unknown directive @" + name, at);
}

void lex_span(Cursor& cur, std::vector<Token>& tokens) {
  SourcePos at = cur.pos();
  std::string name = read_ident(cur);
  SpanStyle style;
  if (name == "italic") {
    style = SpanStyle::Italic;
  } else if (name == "roman") {
    style = SpanStyle::Roman;
  } else if (name == "sc") {
    style = SpanStyle::SmallCaps;
  } else {
    cur.fail(DiagCode::UnexpectedCharacter,
             "bare text \"" + name + "\" outside a styled span", at);
  }
  std::string content = read_braced(cur, at, name + "{");
  if (is_all_whitespace(content)) {
    cur.fail(DiagCode::EmptySpan, name + " span is empty", at);
  }
  tokens.push_back(StyledSpan{style, std::move(content), at});
}

const char* canonical_style(SpanStyle s) {
  switch (s) {
    case SpanStyle::Roman: return "roman";
    case SpanStyle::Italic: return "italic";
    case SpanStyle::SmallCaps: return "sc";
  }
  return "roman";
}

}  // namespace

SourcePos token_pos(const Token& t) {
  return std::visit([](const auto& tok) { return tok.pos; }, t);
}

TranscriptDocument lex(std::string_view source, std::string sourceName) {
  Cursor cur{source, sourceName};
  TranscriptDocument doc;
  doc.sourceName = std::move(sourceName);

  std::string gap;
  while (true) {
    while (!cur.eof() && is_ws(cur.peek())) {
      gap += cur.peek();
      cur.advance();
    }
    if (cur.eof()) break;

    doc.gaps.push_back(gap);
    gap.clear();

    char c = cur.peek();
    SourcePos at = cur.pos();
    if (c == '@') {
      lex_directive(cur, doc.tokens);
    } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      lex_span(cur, doc.tokens);
    } else if (c == ',') {
      doc.tokens.push_back(PunctToken{PunctKind::Comma, 0, at});
      cur.advance();
    } else if (c == ';') {
      doc.tokens.push_back(PunctToken{PunctKind::Semicolon, 0, at});
      cur.advance();
    } else if (c == '.') {
      doc.tokens.push_back(PunctToken{PunctKind::Period, 0, at});
      cur.advance();
    } else if (c == '&') {
      if (!cur.startsWith("&c.")) {
        cur.fail(DiagCode::UnexpectedCharacter, "expected \"&c.\" after '&'", at);
      }
      cur.advance();
      cur.advance();
      cur.advance();
      doc.tokens.push_back(PunctToken{PunctKind::EtCetera, 0, at});
    } else if (cur.startsWith(kLongDash)) {
      cur.advance();
      doc.tokens.push_back(PunctToken{PunctKind::LongDash, 0, at});
    } else if (c == '}') {
      cur.fail(DiagCode::UnbalancedDelimiter, "'}' without a matching opener", at);
    } else if (c == '{') {
      cur.fail(DiagCode::UnbalancedDelimiter, "'{' outside a span or directive", at);
    } else {
      std::ostringstream msg;
      size_t k = cur.i;
      char32_t cp = decode_utf8(cur.src, k);
      msg << "unexpected character U+" << std::hex << std::uppercase
          << static_cast<uint32_t>(cp);
      cur.fail(DiagCode::UnexpectedCharacter, msg.str(), at);
    }
  }
  doc.gaps.push_back(gap);
  return doc;
}

std::string render(const TranscriptDocument& doc) {
  std::string out;
  auto gapAt = [&doc](size_t i) -> std::string_view {
    if (i < doc.gaps.size()) return doc.gaps[i];
    // Hand-built documents without gap info still render readably.
    return i == 0 || i > doc.tokens.size() ? std::string_view{} : std::string_view{" "};
  };
  out += gapAt(0);
  for (size_t i = 0; i < doc.tokens.size(); ++i) {
    const Token& t = doc.tokens[i];
    if (const auto* span = std::get_if<StyledSpan>(&t)) {
      out += canonical_style(span->style);
      out += '{';
      out += span->text;
      out += '}';
    } else if (const auto* punct = std::get_if<PunctToken>(&t)) {
      switch (punct->kind) {
        case PunctKind::Comma: out += ','; break;
        case PunctKind::Semicolon: out += ';'; break;
        case PunctKind::Period: out += '.'; break;
        case PunctKind::LongDash: out += kLongDash; break;
        case PunctKind::EtCetera: out += "&c."; break;
        case PunctKind::OrdinalMarker:
          out += "@ord{" + std::to_string(punct->ordinal) + "}";
          break;
      }
    } else {
      const auto& dir = std::get<Directive>(t);
      switch (dir.kind) {
        case DirectiveKind::DomainStart: out += "@domain{"; break;
        case DirectiveKind::Interpolate: out += "@interp{"; break;
        case DirectiveKind::Note: out += "@note{"; break;
      }
      out += dir.text;
      out += '}';
    }
    out += gapAt(i + 1);
  }
  return out;
}

std::vector<Diagnostic> validate_transcript(const TranscriptDocument& doc) {
  std::vector<Diagnostic> diags;
  auto report = [&](DiagCode code, std::string msg, SourcePos pos) {
    diags.push_back({Severity::Error, code, std::move(msg), doc.sourceName, pos});
  };

  if (!doc.gaps.empty() && doc.gaps.size() != doc.tokens.size() + 1) {
    report(DiagCode::MalformedDocument, "gap count does not match token count", {});
  }

  bool sawDomain = false;
  SourcePos prev{0, 0};
  for (const Token& t : doc.tokens) {
    SourcePos at = token_pos(t);
    if (at < prev) {
      report(DiagCode::NonMonotonicPosition, "token positions run backwards", at);
    }
    prev = at;

    if (const auto* dir = std::get_if<Directive>(&t)) {
      if (dir->kind == DirectiveKind::DomainStart) sawDomain = true;
      if (is_all_whitespace(dir->text)) {
        report(DiagCode::EmptySpan, "directive with empty content", at);
      }
      continue;
    }
    if (const auto* span = std::get_if<StyledSpan>(&t)) {
      if (is_all_whitespace(span->text)) {
        report(DiagCode::EmptySpan, "span with empty text", at);
      } else if (span->text.find_first_of("{}") != std::string::npos) {
        report(DiagCode::MalformedDocument, "span text contains a delimiter", at);
      }
    }
    if (const auto* punct = std::get_if<PunctToken>(&t)) {
      if (punct->kind == PunctKind::OrdinalMarker && punct->ordinal <= 0) {
        report(DiagCode::InvalidOrdinal, "ordinal marker must be positive", at);
      }
    }
    if (!sawDomain) {
      report(DiagCode::TokenBeforeDomain, "token appears before any @domain directive", at);
      sawDomain = true;  // one report per document is enough
    }
  }
  return diags;
}

std::vector<TranscriptDocument> split_entries(const TranscriptDocument& doc) {
  std::vector<TranscriptDocument> entries;
  const bool hasGaps = doc.gaps.size() == doc.tokens.size() + 1;
  for (size_t i = 0; i < doc.tokens.size(); ++i) {
    const auto* dir = std::get_if<Directive>(&doc.tokens[i]);
    bool startsEntry = dir && dir->kind == DirectiveKind::DomainStart;
    if (startsEntry || entries.empty()) {
      // The gap before a non-first entry already trails the previous one.
      bool first = entries.empty();
      entries.emplace_back();
      entries.back().sourceName = doc.sourceName;
      if (hasGaps) entries.back().gaps.push_back(first ? doc.gaps[i] : std::string());
    }
    entries.back().tokens.push_back(doc.tokens[i]);
    if (hasGaps) entries.back().gaps.push_back(doc.gaps[i + 1]);
  }
  return entries;
}

}  // namespace chambers
