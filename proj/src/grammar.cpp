#include "chambers/grammar.hpp"

#include <memory>

#include "chambers/textutil.hpp"

namespace chambers {

namespace {

std::vector<std::string> parse_word_list(std::string_view value) {
  std::vector<std::string> out;
  std::string current;
  for (char c : value) {
    if (c == ',') {
      std::string w = trim(current);
      if (!w.empty()) out.push_back(fold_case(w));
      current.clear();
    } else {
      current += c;
    }
  }
  std::string w = trim(current);
  if (!w.empty()) out.push_back(fold_case(w));
  return out;
}

}  // namespace

GrammarConfig GrammarConfig::defaults() {
  GrammarConfig cfg;
  // Anaphoric openings that subordinate the new facet to the current one,
  // e.g. "and their Phænomena, as" after the Parts list.
  cfg.nestingCues = {"their", "thereof", "with operations relating to 'em",
                     "whence", "and their"};
  // Connective filler stripped when deriving a facet label. The closed set
  // covers the figure transcriptions shipped with the project; a grammar
  // config file can extend it.
  cfg.stopWords = {"its", "their", "the", "a", "an", "and", "as", "with",
                   "whence", "in", "to", "relating", "'em", "thereof"};
  return cfg;
}

GrammarConfig GrammarConfig::load(std::string_view text, std::string sourceName) {
  GrammarConfig cfg = defaults();
  int lineNo = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line = trim(text.substr(start, end - start));
    start = end + 1;
    ++lineNo;
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw DiagnosticError(DiagCode::BadGrammarConfig,
                            "expected 'key = value': " + line, {lineNo, 1}, sourceName);
    }
    std::string key = trim(line.substr(0, eq));
    std::vector<std::string> values = parse_word_list(line.substr(eq + 1));
    if (key == "nesting_cues") {
      cfg.nestingCues.insert(cfg.nestingCues.end(), values.begin(), values.end());
    } else if (key == "stop_words") {
      cfg.stopWords.insert(cfg.stopWords.end(), values.begin(), values.end());
    } else {
      throw DiagnosticError(DiagCode::BadGrammarConfig, "unknown key: " + key,
                            {lineNo, 1}, sourceName);
    }
  }
  return cfg;
}

namespace {

bool is_stop_word(const GrammarConfig& cfg, const std::string& word) {
  std::string folded = fold_case(word);
  for (const auto& s : cfg.stopWords) {
    if (folded == s) return true;
  }
  return false;
}

bool begins_with_cue(const GrammarConfig& cfg, std::string_view connective) {
  for (const auto& cue : cfg.nestingCues) {
    if (starts_with_words(connective, split_words(cue))) return true;
  }
  return false;
}

struct NormalizedConnective {
  std::string label;
  std::optional<std::string> altLabel;
  bool fallback = false;
};

NormalizedConnective normalize_connective(std::string_view connective, const GrammarConfig& cfg) {
  std::vector<std::string> words = split_words(connective);
  size_t b = 0;
  size_t e = words.size();
  while (b < e && is_stop_word(cfg, words[b])) ++b;
  while (e > b && is_stop_word(cfg, words[e - 1])) --e;

  NormalizedConnective out;
  if (b == e) {
    out.fallback = true;
    // Verbatim fallback, shorn of surrounding punctuation and whitespace.
    std::vector<std::string> all = split_words(connective);
    out.label = all.empty() ? trim(connective) : join(all, " ");
    if (out.label.empty()) out.label = trim(connective);
    return out;
  }
  // "Fossils or Minerals" names one facet twice; keep the second name as an
  // alternate label rather than opening another facet.
  for (size_t k = b + 1; k + 1 <= e - 1; ++k) {
    if (fold_case(words[k]) == "or") {
      std::vector<std::string> left(words.begin() + b, words.begin() + k);
      std::vector<std::string> right(words.begin() + k + 1, words.begin() + e);
      if (!left.empty() && !right.empty()) {
        out.label = join(left, " ");
        out.altLabel = join(right, " ");
        return out;
      }
    }
  }
  out.label = join(std::vector<std::string>(words.begin() + b, words.begin() + e), " ");
  return out;
}

// Mutable parse node; frozen into FacetNode values once the entry is done.
struct BuildNode {
  FacetNode node;
  std::vector<std::unique_ptr<BuildNode>> kids;
  BuildNode* parent = nullptr;
  int nextGroupIndex = 2;
  bool listOpen = true;  // still accepting comma-separated instances
};

struct EntryParser {
  const TranscriptDocument& doc;
  const GrammarConfig& cfg;
  std::vector<Diagnostic>* diags;

  DomainParseTree tree;
  BuildNode root;            // sentinel; kids are the entry-level facets
  BuildNode* curr = &root;   // deepest open node
  std::optional<int> ordinal;

  enum class Phase { Head, Aspects, Body } phase = Phase::Head;
  bool awaitingAltName = false;
  SourcePos altConnectivePos;
  bool scopeMode = false;
  // A @note directly after a concept term is an emendation of that term;
  // anywhere else it is an entry-level note.
  BuildNode* lastInstanceNode = nullptr;
  size_t lastInstanceIndex = 0;
  bool noteAdjacent = false;
  bool lastWasDash = false;

  explicit EntryParser(const TranscriptDocument& d, const GrammarConfig& c,
                       std::vector<Diagnostic>* out)
      : doc(d), cfg(c), diags(out) {}

  void warn(DiagCode code, std::string msg, SourcePos pos) {
    if (diags) diags->push_back({Severity::Warning, code, std::move(msg), doc.sourceName, pos});
  }
  void info(DiagCode code, std::string msg, SourcePos pos) {
    if (diags) diags->push_back({Severity::Note, code, std::move(msg), doc.sourceName, pos});
  }
  [[noreturn]] void fail(DiagCode code, std::string msg, SourcePos pos) {
    throw DiagnosticError(code, std::move(msg), pos, doc.sourceName);
  }

  // Closing an empty aspect demotes it to a related term of the headword;
  // an empty roman connective has nothing to govern and is an error.
  void finalize(BuildNode* n) {
    if (!n->node.instances.empty() || !n->kids.empty()) return;
    if (n->node.aspect) {
      tree.relatedAspects.push_back(n->node.facetLabel);
      auto& siblings = n->parent->kids;
      for (auto it = siblings.begin(); it != siblings.end(); ++it) {
        if (it->get() == n) {
          siblings.erase(it);
          break;
        }
      }
      return;
    }
    fail(DiagCode::DanglingConnective,
         "connective \"" + n->node.connective + "\" governs no instances", n->node.pos);
  }

  void close_to_root() {
    while (curr != &root) {
      BuildNode* parent = curr->parent;
      finalize(curr);
      curr = parent;
    }
  }

  BuildNode* open_node(BuildNode* parent, FacetNode proto) {
    proto.ordinalSection = ordinal;
    auto owned = std::make_unique<BuildNode>();
    owned->node = std::move(proto);
    owned->parent = parent;
    BuildNode* raw = owned.get();
    parent->kids.push_back(std::move(owned));
    curr = raw;
    return raw;
  }

  void open_grouping(const std::string& connective, SourcePos pos) {
    BuildNode* parent = curr;
    FacetNode proto;
    proto.connective = connective;
    proto.facetLabel = parent->node.facetLabel;
    proto.groupIndex = parent->nextGroupIndex++;
    proto.pos = pos;  // origin stays Textual: only @interp makes Interpolated nodes
    open_node(parent, std::move(proto));
  }

  void close_list(bool openEnded) {
    if (curr == &root || !curr->listOpen) return;
    if (curr->node.instances.empty()) return;  // idle separator, list not begun
    curr->listOpen = false;
    curr->node.listOpenEnded = openEnded;
    if (openEnded) {
      for (auto& inst : curr->node.instances) inst.openEnded = true;
    }
  }

  void add_instance(const StyledSpan& span) {
    if (curr == &root) {
      fail(DiagCode::OrphanInstance,
           "concept term \"" + span.text + "\" appears outside any facet", span.pos);
    }
    if (!curr->listOpen) {
      // A closed list followed by more concept terms starts a separate
      // grouping within the same facet.
      open_grouping("", span.pos);
    }
    curr->node.instances.push_back({trim(span.text), false, std::nullopt, span.pos});
    lastInstanceNode = curr;
    lastInstanceIndex = curr->node.instances.size() - 1;
    noteAdjacent = true;
  }

  void handle_roman(const StyledSpan& span, const Token* next) {
    std::vector<std::string> words = split_words(span.text);
    std::string firstWord = words.empty() ? "" : fold_case(words.front());

    if (phase == Phase::Head && !tree.altName && tree.scopeAreas.empty() &&
        root.kids.empty()) {
      if (firstWord == "or") {
        const auto* nextSpan = next ? std::get_if<StyledSpan>(next) : nullptr;
        if (nextSpan && nextSpan->style == SpanStyle::Italic) {
          awaitingAltName = true;
          altConnectivePos = span.pos;
          return;
        }
      } else if (firstWord == "including") {
        const auto* nextSpan = next ? std::get_if<StyledSpan>(next) : nullptr;
        if (nextSpan && nextSpan->style == SpanStyle::SmallCaps) {
          scopeMode = true;
          return;
        }
      }
    }

    NormalizedConnective norm = normalize_connective(span.text, cfg);
    bool cue = begins_with_cue(cfg, span.text);

    if (cue && curr != &root) {
      if (norm.fallback) {
        warn(DiagCode::NormalizationEmpty,
             "facet label falls back to verbatim \"" + norm.label + "\"", span.pos);
      }
      FacetNode proto;
      proto.connective = span.text;
      proto.facetLabel = norm.label;
      proto.altFacetLabel = norm.altLabel;
      proto.labelFallback = norm.fallback;
      proto.pos = span.pos;
      open_node(curr, std::move(proto));
      phase = Phase::Body;
      return;
    }

    if (norm.fallback && curr != &root) {
      if (curr->node.instances.empty() && curr->kids.empty()) {
        // Pure transition ("", as") right after a facet or aspect opened:
        // extend its connective instead of opening anything.
        curr->node.connective += curr->node.connective.empty() ? span.text : " " + span.text;
        return;
      }
      // "as Eleusinia, Saturnalia" after a closed list regroups concepts
      // under the same facet.
      close_list(false);
      open_grouping(span.text, span.pos);
      phase = Phase::Body;
      return;
    }

    if (norm.fallback) {
      warn(DiagCode::NormalizationEmpty,
           "facet label falls back to verbatim \"" + norm.label + "\"", span.pos);
    }
    close_to_root();
    FacetNode proto;
    proto.connective = span.text;
    proto.facetLabel = norm.label;
    proto.altFacetLabel = norm.altLabel;
    proto.labelFallback = norm.fallback;
    proto.pos = span.pos;
    open_node(&root, std::move(proto));
    phase = Phase::Body;
  }

  void handle_small_caps(const StyledSpan& span) {
    if (scopeMode) {
      tree.scopeAreas.push_back(trim(span.text));
      return;
    }
    if (phase != Phase::Body) {
      // Entry-head aspect: collects instances if any follow, otherwise it
      // is demoted to a related term when it closes. The small-caps text is
      // the label, not a connective phrase.
      close_to_root();
      FacetNode proto;
      proto.facetLabel = trim(span.text);
      proto.aspect = true;
      proto.pos = span.pos;
      open_node(&root, std::move(proto));
      phase = Phase::Aspects;
      return;
    }
    warn(DiagCode::SmallCapsInBody,
         "small capitals inside an entry body; treating \"" + span.text + "\" as an instance",
         span.pos);
    add_instance(span);
  }

  void handle_punct(const PunctToken& punct) {
    switch (punct.kind) {
      case PunctKind::Comma:
        return;  // list separator or head filler
      case PunctKind::Semicolon:
      case PunctKind::Period:
        if (scopeMode) scopeMode = false;
        close_list(false);
        return;
      case PunctKind::EtCetera:
        if (scopeMode) scopeMode = false;
        close_list(true);
        return;
      case PunctKind::LongDash:
        if (lastWasDash) {
          info(DiagCode::CollapsedTopicBreak,
               "consecutive long dashes collapsed into one topic break", punct.pos);
          return;
        }
        scopeMode = false;
        close_to_root();
        tree.topicBreaks.push_back(punct.pos);
        phase = Phase::Body;
        return;
      case PunctKind::OrdinalMarker:
        scopeMode = false;
        close_to_root();
        ordinal = punct.ordinal;
        phase = Phase::Body;
        return;
    }
  }

  void handle_directive(const Directive& dir) {
    switch (dir.kind) {
      case DirectiveKind::DomainStart:
        fail(DiagCode::MalformedDocument,
             "second @domain inside one entry; split entries first", dir.pos);
      case DirectiveKind::Interpolate: {
        scopeMode = false;
        close_to_root();
        FacetNode proto;
        proto.facetLabel = trim(dir.text);
        proto.origin = Origin::Interpolated;
        proto.pos = dir.pos;
        open_node(&root, std::move(proto));
        phase = Phase::Body;
        return;
      }
      case DirectiveKind::Note: {
        std::string text = trim(dir.text);
        if (noteAdjacent && lastInstanceNode) {
          auto& inst = lastInstanceNode->node.instances[lastInstanceIndex];
          inst.emendation = inst.emendation ? *inst.emendation + "; " + text : text;
        } else {
          tree.notes.push_back(text);
        }
        return;
      }
    }
  }

  void freeze(BuildNode* n, FacetNode& out) {
    out = std::move(n->node);
    for (auto& kid : n->kids) {
      out.children.emplace_back();
      freeze(kid.get(), out.children.back());
    }
  }

  DomainParseTree run() {
    if (doc.tokens.empty()) {
      fail(DiagCode::MalformedDocument, "entry has no tokens", {});
    }
    const auto* start = std::get_if<Directive>(&doc.tokens.front());
    if (!start || start->kind != DirectiveKind::DomainStart) {
      fail(DiagCode::TokenBeforeDomain, "entry must begin with @domain",
           token_pos(doc.tokens.front()));
    }
    tree.headword = trim(start->text);
    tree.sourceName = doc.sourceName;
    tree.pos = start->pos;

    for (size_t i = 1; i < doc.tokens.size(); ++i) {
      const Token& t = doc.tokens[i];
      const Token* next = i + 1 < doc.tokens.size() ? &doc.tokens[i + 1] : nullptr;

      // A note never interrupts the surrounding structure.
      bool isNote = false;
      if (const auto* dir = std::get_if<Directive>(&t)) {
        isNote = dir->kind == DirectiveKind::Note;
      }
      if (!isNote) {
        noteAdjacent = false;
        if (awaitingAltName) {
          const auto* span = std::get_if<StyledSpan>(&t);
          if (!span || span->style != SpanStyle::Italic) {
            fail(DiagCode::DanglingConnective, "\"or\" connective is not followed by a name",
                 altConnectivePos);
          }
          tree.altName = trim(span->text);
          awaitingAltName = false;
          lastWasDash = false;
          continue;
        }
      }

      if (const auto* span = std::get_if<StyledSpan>(&t)) {
        lastWasDash = false;
        switch (span->style) {
          case SpanStyle::Roman: handle_roman(*span, next); break;
          case SpanStyle::Italic:
            if (scopeMode) scopeMode = false;
            if (phase == Phase::Head && root.kids.empty()) {
              fail(DiagCode::OrphanInstance,
                   "concept term \"" + span->text + "\" before any connective", span->pos);
            }
            add_instance(*span);
            break;
          case SpanStyle::SmallCaps: handle_small_caps(*span); break;
        }
      } else if (const auto* punct = std::get_if<PunctToken>(&t)) {
        handle_punct(*punct);
        lastWasDash = punct->kind == PunctKind::LongDash;
      } else {
        handle_directive(std::get<Directive>(t));
        lastWasDash = false;
      }
    }

    if (awaitingAltName) {
      fail(DiagCode::DanglingConnective, "\"or\" connective is not followed by a name",
           altConnectivePos);
    }
    close_to_root();

    for (auto& kid : root.kids) {
      tree.facets.emplace_back();
      freeze(kid.get(), tree.facets.back());
    }
    return std::move(tree);
  }
};

}  // namespace

DomainParseTree parse_entry(const TranscriptDocument& entry, const GrammarConfig& config,
                            std::vector<Diagnostic>* diagnostics) {
  EntryParser parser(entry, config, diagnostics);
  return parser.run();
}

std::string normalize_facet_label(std::string_view connective, const GrammarConfig& config,
                                  bool* usedFallback) {
  NormalizedConnective norm = normalize_connective(connective, config);
  if (usedFallback) *usedFallback = norm.fallback;
  return norm.label;
}

namespace {

void census_walk(const FacetNode& node, EntryCensus& census) {
  census.facetCount += 1;
  census.instanceCount += static_cast<int>(node.instances.size());
  if (node.listOpenEnded) census.openEndedListCount += 1;
  for (const auto& child : node.children) census_walk(child, census);
}

void collect_labels(const FacetNode& node, std::vector<std::string>& out) {
  for (const auto& inst : node.instances) out.push_back(inst.label);
  for (const auto& child : node.children) collect_labels(child, out);
}

}  // namespace

EntryCensus entry_concept_census(const DomainParseTree& tree) {
  EntryCensus census;
  for (const auto& facet : tree.facets) census_walk(facet, census);
  return census;
}

std::vector<std::string> subtree_instance_labels(const FacetNode& facet) {
  std::vector<std::string> labels;
  collect_labels(facet, labels);
  return labels;
}

}  // namespace chambers
