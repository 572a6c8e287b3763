#include "chambers/emit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "chambers/textutil.hpp"

namespace chambers {

namespace {

constexpr std::string_view kSkosNs = "http://www.w3.org/2004/02/skos/core#";
constexpr std::string_view kCkvNs = "https://w3id.org/chambers-kos/vocab#";
constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

std::string esc_literal(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string lit_en(std::string_view s) { return "\"" + esc_literal(s) + "\"@en"; }
std::string lit_plain(std::string_view s) { return "\"" + esc_literal(s) + "\""; }
std::string iri_ref(std::string_view iri) { return "<" + std::string(iri) + ">"; }

// One subject block: properties joined with " ;", terminated with " ."
struct NodeBlock {
  std::string iri;
  std::vector<std::string> properties;

  std::string text() const {
    std::string out = iri_ref(iri) + " " + properties.front();
    for (size_t i = 1; i < properties.size(); ++i) {
      out += " ;\n    " + properties[i];
    }
    out += " .\n";
    return out;
  }
};

std::string render_blocks(const std::string& prefixBlock, std::vector<NodeBlock> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const NodeBlock& a, const NodeBlock& b) { return a.iri < b.iri; });
  std::string out = prefixBlock;
  for (const auto& block : blocks) {
    out += '\n';
    out += block.text();
  }
  return out;
}

// Collapses facet concepts into annotations on their instances.
ConceptScheme collapse_facets(const ConceptScheme& scheme) {
  ConceptScheme out;
  out.topConcepts = scheme.topConcepts;
  std::set<std::string> facetIds;
  for (const auto& c : scheme.concepts) {
    if (c.kind == ConceptKind::Facet) facetIds.insert(c.id);
  }
  auto resolve = [&](const std::string& id) {
    std::string current = id;
    std::set<std::string> seen;
    while (facetIds.count(current) && seen.insert(current).second) {
      auto ups = scheme.broaderOf(current);
      if (ups.empty()) break;
      current = ups.front()->object;
    }
    return current;
  };
  for (const auto& c : scheme.concepts) {
    if (c.kind == ConceptKind::Facet) continue;
    Concept copy = c;
    if (c.kind == ConceptKind::Instance) {
      std::vector<std::string> path = facet_path(scheme, c.id);
      if (!path.empty()) copy.notes.push_back("facet: " + join(path, " > "));
    }
    out.concepts.push_back(std::move(copy));
  }
  std::set<Relation> seen;
  for (Relation r : scheme.relations) {
    if (r.kind == RelationKind::Broader && facetIds.count(r.object)) {
      r.object = resolve(r.object);
    } else if (r.kind == RelationKind::Narrower && facetIds.count(r.subject)) {
      r.subject = resolve(r.subject);
    }
    if (facetIds.count(r.subject) || facetIds.count(r.object)) continue;
    if (r.subject == r.object) continue;
    if (seen.insert(r).second) out.relations.push_back(std::move(r));
  }
  return out;
}

}  // namespace

void IriPolicy::validate() const {
  auto fail = [this](const std::string& why) {
    throw DiagnosticError(DiagCode::InvalidBaseIri, "base IRI \"" + baseIri + "\" " + why);
  };
  if (baseIri.empty()) fail("is empty");
  if (baseIri.back() != '/') fail("must end in '/'");
  size_t colon = baseIri.find(':');
  if (colon == std::string::npos || colon == 0) fail("must be absolute (scheme missing)");
  if (!std::isalpha(static_cast<unsigned char>(baseIri[0]))) fail("must start with a scheme letter");
  for (size_t i = 1; i < colon; ++i) {
    char c = baseIri[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
      fail("has an invalid scheme");
    }
  }
  if (colon + 1 >= baseIri.size()) fail("has no path after the scheme");
  for (char c : baseIri) {
    if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`') {
      fail("contains a character that cannot appear in an IRI");
    }
  }
}

IriMinter::IriMinter(IriPolicy policy) : policy_(std::move(policy)) {
  policy_.validate();
}

std::string IriMinter::mint(const Concept& c) {
  if (c.domains.empty()) {
    throw DiagnosticError(DiagCode::EmptySlug,
                          "concept \"" + c.prefLabel + "\" belongs to no domain");
  }
  std::string domainSlug = slug(c.domains.front());
  std::string labelSlug = slug(c.prefLabel);
  if (domainSlug.empty() || labelSlug.empty()) {
    throw DiagnosticError(DiagCode::EmptySlug,
                          "label \"" + c.prefLabel + "\" reduces to an empty slug");
  }
  std::string key = domainSlug + "/" + labelSlug;
  int n = ++used_[key];
  return policy_.baseIri + (n == 1 ? key : key + "-" + std::to_string(n));
}

std::string mint_iri(const Concept& c, const IriPolicy& policy) {
  IriMinter minter(policy);
  return minter.mint(c);
}

std::string emit_skos(const ConceptScheme& scheme, const IriPolicy& policy,
                      const SkosOptions& options) {
  policy.validate();
  std::vector<Diagnostic> problems = check_scheme(scheme);
  if (!problems.empty()) {
    throw DiagnosticError(DiagCode::SchemeInvalid,
                          "scheme fails " + std::to_string(problems.size()) +
                              " structural check(s); first: " + problems.front().message);
  }
  if (!options.facetsAsConcepts) {
    ConceptScheme collapsed = collapse_facets(scheme);
    return emit_skos(collapsed, policy, SkosOptions{true});
  }

  IriMinter minter(policy);
  std::map<std::string, std::string> iriOf;
  for (const auto& c : scheme.concepts) {
    iriOf[c.id] = minter.mint(c);
  }
  std::set<std::string> tops(scheme.topConcepts.begin(), scheme.topConcepts.end());

  std::string prefixes;
  prefixes += "@prefix skos: " + iri_ref(kSkosNs) + " .\n";
  prefixes += "@prefix ckv: " + iri_ref(kCkvNs) + " .\n";

  std::vector<NodeBlock> blocks;
  blocks.push_back({policy.baseIri, {"a skos:ConceptScheme"}});

  for (const auto& c : scheme.concepts) {
    NodeBlock block;
    block.iri = iriOf.at(c.id);
    block.properties.push_back("a skos:Concept");
    block.properties.push_back("skos:prefLabel " + lit_en(c.prefLabel));
    for (const auto& alt : c.altLabels) {
      block.properties.push_back("skos:altLabel " + lit_en(alt));
    }
    switch (c.kind) {
      case ConceptKind::Headword: block.properties.push_back("ckv:kind \"headword\""); break;
      case ConceptKind::Facet: block.properties.push_back("ckv:kind \"facet\""); break;
      case ConceptKind::Instance: block.properties.push_back("ckv:kind \"instance\""); break;
    }
    if (c.connective) {
      block.properties.push_back("ckv:connective " + lit_plain(*c.connective));
    }
    if (c.origin == Origin::Interpolated) {
      block.properties.push_back("ckv:origin \"interpolated\"");
    }
    if (c.openEnded) {
      block.properties.push_back("ckv:openEnded true");
    }
    block.properties.push_back("skos:inScheme " + iri_ref(policy.baseIri));
    if (tops.count(c.id)) {
      block.properties.push_back("skos:topConceptOf " + iri_ref(policy.baseIri));
    }
    for (RelationKind kind :
         {RelationKind::Broader, RelationKind::Narrower, RelationKind::Related}) {
      std::vector<std::string> objects;
      for (const auto& r : scheme.relations) {
        if (r.kind == kind && r.subject == c.id) objects.push_back(iriOf.at(r.object));
      }
      std::sort(objects.begin(), objects.end());
      const char* pred = kind == RelationKind::Broader    ? "skos:broader "
                         : kind == RelationKind::Narrower ? "skos:narrower "
                                                          : "skos:related ";
      for (const auto& obj : objects) {
        block.properties.push_back(pred + iri_ref(obj));
      }
    }
    for (const auto& note : c.notes) {
      block.properties.push_back("skos:editorialNote " + lit_en(note));
    }
    blocks.push_back(std::move(block));
  }
  return render_blocks(prefixes, std::move(blocks));
}

namespace {

struct TaxonClass {
  std::string label;
  std::string iri;
  std::set<std::string> parentIris;
  std::set<int> depths;
  std::set<std::string> principles;
  std::set<std::string> disjointWith;  // smaller IRI carries the pair
  std::set<std::string> seeAlso;
  std::optional<std::string> headword;  // matched headword prefLabel
  bool isRoot = false;
};

struct TaxonIndex {
  std::map<std::string, std::string> iriByLabel;  // node label -> class IRI
  std::map<std::string, TaxonClass> classes;      // keyed by IRI
  std::string rootIri;
};

void index_taxon(TaxonIndex& index, const IriPolicy& policy, const TaxonNode& node,
                 const std::string& parentIri, int depth, std::map<std::string, int>& slugUse) {
  std::string iri;
  auto known = index.iriByLabel.find(node.label);
  if (known != index.iriByLabel.end()) {
    iri = known->second;
  } else {
    std::string s = slug(node.label);
    if (s.empty()) {
      throw DiagnosticError(DiagCode::EmptySlug,
                            "taxonomy label \"" + node.label + "\" reduces to an empty slug");
    }
    int n = ++slugUse[s];
    iri = policy.baseIri + "taxon/" + (n == 1 ? s : s + "-" + std::to_string(n));
    index.iriByLabel[node.label] = iri;
  }
  TaxonClass& cls = index.classes[iri];
  cls.label = node.label;
  cls.iri = iri;
  cls.depths.insert(depth);
  if (node.dividingPrinciple) cls.principles.insert(*node.dividingPrinciple);
  if (parentIri.empty()) {
    cls.isRoot = true;
    index.rootIri = iri;
  } else {
    cls.parentIris.insert(parentIri);
  }
  for (const auto& child : node.children) {
    index_taxon(index, policy, child, iri, depth + 1, slugUse);
  }
}

}  // namespace

std::string emit_owl(const ConceptScheme& scheme, const TaxonomyTree& tree, OwlMode mode,
                     const IriPolicy& policy) {
  policy.validate();
  std::vector<Diagnostic> problems = check_scheme(scheme);
  if (!problems.empty()) {
    throw DiagnosticError(DiagCode::SchemeInvalid,
                          "scheme fails " + std::to_string(problems.size()) +
                              " structural check(s); first: " + problems.front().message);
  }
  if (mode == OwlMode::DirectMap) {
    // Sibling disjointness over duplicated leaves would make those classes
    // unsatisfiable, so the direct mapping refuses outright.
    std::vector<JepdViolation> violations = validate_jepd(tree);
    if (!violations.empty()) {
      std::ostringstream msg;
      msg << "direct mapping refused: " << violations.size()
          << " leaf label(s) violate pairwise disjointness:";
      for (const auto& v : violations) {
        msg << " \"" << v.label << "\" (";
        for (size_t i = 0; i < v.paths.size(); ++i) {
          if (i) msg << "; ";
          msg << join(v.paths[i], "/");
        }
        msg << ")";
      }
      throw DiagnosticError(DiagCode::JepdViolationInDirectMap, msg.str());
    }
  }

  TaxonIndex index;
  std::map<std::string, int> slugUse;
  index_taxon(index, policy, tree.root, "", 0, slugUse);

  if (mode == OwlMode::DirectMap) {
    // Pairwise disjointness among each node's children, recorded once per
    // unordered pair on the lexicographically smaller IRI.
    auto walk = [&](auto&& self, const TaxonNode& node) -> void {
      std::set<std::string> childIris;
      for (const auto& child : node.children) {
        childIris.insert(index.iriByLabel.at(child.label));
      }
      for (auto a = childIris.begin(); a != childIris.end(); ++a) {
        for (auto b = std::next(a); b != childIris.end(); ++b) {
          index.classes.at(*a).disjointWith.insert(*b);
        }
      }
      for (const auto& child : node.children) self(self, child);
    };
    walk(walk, tree.root);
  }

  LeafLinkReport links = link_leaves(tree, scheme);
  std::map<std::string, std::string> taxonIriOfHeadword;  // headword concept id -> leaf IRI
  for (const auto& link : links.matched) {
    std::string leafIri = index.iriByLabel.at(link.leafLabel);
    taxonIriOfHeadword[link.headwordId] = leafIri;
    const Concept* hw = scheme.find(link.headwordId);
    if (hw) index.classes.at(leafIri).headword = hw->prefLabel;
  }

  IriMinter minter(policy);
  std::map<std::string, std::string> conceptIri;
  for (const auto& c : scheme.concepts) {
    conceptIri[c.id] = minter.mint(c);
  }
  // A matched headword is represented by its leaf class, so edges that
  // touch it rewrite to the taxonomy side.
  auto classIriOf = [&](const std::string& conceptId) {
    auto it = taxonIriOfHeadword.find(conceptId);
    return it != taxonIriOfHeadword.end() ? it->second : conceptIri.at(conceptId);
  };

  std::string prefixes;
  prefixes += "@prefix owl: " + iri_ref(kOwlNs) + " .\n";
  prefixes += "@prefix rdfs: " + iri_ref(kRdfsNs) + " .\n";
  prefixes += "@prefix ckv: " + iri_ref(kCkvNs) + " .\n";

  std::vector<NodeBlock> blocks;
  blocks.push_back({policy.baseIri, {"a owl:Ontology"}});

  // Related edges surface as rdfs:seeAlso annotations on both sides.
  for (const auto& r : scheme.relations) {
    if (r.kind != RelationKind::Related) continue;
    auto it = taxonIriOfHeadword.find(r.subject);
    if (it != taxonIriOfHeadword.end()) {
      index.classes.at(it->second).seeAlso.insert(classIriOf(r.object));
    }
  }

  for (const auto& [iri, cls] : index.classes) {
    NodeBlock block;
    block.iri = iri;
    block.properties.push_back("a owl:Class");
    block.properties.push_back("rdfs:label " + lit_en(cls.label));
    if (cls.isRoot && mode == OwlMode::DirectMap) {
      block.properties.push_back("owl:equivalentClass owl:Thing");
    }
    for (const auto& parent : cls.parentIris) {
      block.properties.push_back("rdfs:subClassOf " + iri_ref(parent));
    }
    if (mode == OwlMode::DirectMap) {
      for (const auto& other : cls.disjointWith) {
        block.properties.push_back("owl:disjointWith " + iri_ref(other));
      }
    }
    if (mode == OwlMode::AxiomBased) {
      for (int depth : cls.depths) {
        block.properties.push_back("ckv:level " + std::to_string(depth));
      }
      for (const auto& principle : cls.principles) {
        block.properties.push_back("ckv:dividingPrinciple " + lit_plain(principle));
      }
    }
    if (cls.headword) {
      block.properties.push_back("ckv:headword " + lit_plain(*cls.headword));
    }
    for (const auto& other : cls.seeAlso) {
      block.properties.push_back("rdfs:seeAlso " + iri_ref(other));
    }
    blocks.push_back(std::move(block));
  }

  for (const auto& c : scheme.concepts) {
    if (c.kind == ConceptKind::Headword && taxonIriOfHeadword.count(c.id)) {
      continue;  // the leaf class stands in for it
    }
    NodeBlock block;
    block.iri = conceptIri.at(c.id);
    block.properties.push_back("a owl:Class");
    block.properties.push_back("rdfs:label " + lit_en(c.prefLabel));

    std::vector<std::string> supers;
    std::vector<std::string> seeAlso;
    for (const auto& r : scheme.relations) {
      if (r.subject != c.id) continue;
      if (r.kind == RelationKind::Broader) supers.push_back(classIriOf(r.object));
      if (r.kind == RelationKind::Related) seeAlso.push_back(classIriOf(r.object));
    }
    if (supers.empty() && c.kind == ConceptKind::Headword) {
      supers.push_back(index.rootIri);  // unmatched headword hangs off the root
    }
    std::sort(supers.begin(), supers.end());
    supers.erase(std::unique(supers.begin(), supers.end()), supers.end());
    std::sort(seeAlso.begin(), seeAlso.end());
    seeAlso.erase(std::unique(seeAlso.begin(), seeAlso.end()), seeAlso.end());
    for (const auto& s : supers) block.properties.push_back("rdfs:subClassOf " + iri_ref(s));
    if (mode == OwlMode::AxiomBased && c.connective) {
      block.properties.push_back("ckv:connective " + lit_plain(*c.connective));
    }
    for (const auto& s : seeAlso) block.properties.push_back("rdfs:seeAlso " + iri_ref(s));
    blocks.push_back(std::move(block));
  }
  return render_blocks(prefixes, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Reader for the emitter's own profile.

namespace {

struct TtlToken {
  enum Kind { Iri, PName, Literal, Boolean, Keyword, Punct, End } kind = End;
  std::string text;   // IRI body, "prefix:local", literal value, keyword, punct char
  std::string lang;   // literal language tag, "" when absent
  int line = 1;
};

class TtlLexer {
 public:
  explicit TtlLexer(std::string_view src) : src_(src) {}

  TtlToken next() {
    skip_ws();
    TtlToken tok;
    tok.line = line_;
    if (i_ >= src_.size()) return tok;
    char c = src_[i_];
    if (c == '<') {
      size_t close = src_.find('>', i_);
      if (close == std::string_view::npos) fail("unterminated IRI reference");
      tok.kind = TtlToken::Iri;
      tok.text = std::string(src_.substr(i_ + 1, close - i_ - 1));
      i_ = close + 1;
      return tok;
    }
    if (c == '"') {
      tok.kind = TtlToken::Literal;
      ++i_;
      while (i_ < src_.size() && src_[i_] != '"') {
        if (src_[i_] == '\\') {
          ++i_;
          if (i_ >= src_.size()) fail("dangling escape in literal");
          switch (src_[i_]) {
            case 'n': tok.text += '\n'; break;
            case 'r': tok.text += '\r'; break;
            case 't': tok.text += '\t'; break;
            case '"': tok.text += '"'; break;
            case '\\': tok.text += '\\'; break;
            default: fail("unsupported escape in literal");
          }
          ++i_;
        } else {
          if (src_[i_] == '\n') ++line_;
          tok.text += src_[i_++];
        }
      }
      if (i_ >= src_.size()) fail("unterminated literal");
      ++i_;  // closing quote
      if (i_ < src_.size() && src_[i_] == '@') {
        ++i_;
        while (i_ < src_.size() &&
               (std::isalpha(static_cast<unsigned char>(src_[i_])) || src_[i_] == '-')) {
          tok.lang += src_[i_++];
        }
        if (tok.lang.empty()) fail("empty language tag");
      }
      if (i_ < src_.size() && src_[i_] == '^') fail("typed literals are outside the profile");
      return tok;
    }
    if (c == ';' || c == '.' || c == ',') {
      tok.kind = TtlToken::Punct;
      tok.text = std::string(1, c);
      ++i_;
      return tok;
    }
    if (c == '[' || c == ']' || c == '(' || c == ')') {
      fail(std::string("blank nodes and collections are outside the profile ('") + c + "')");
    }
    if (c == '_') fail("blank node labels are outside the profile");
    if (c == '@') {
      ++i_;
      std::string word;
      while (i_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[i_]))) {
        word += src_[i_++];
      }
      if (word != "prefix") fail("unsupported directive @" + word);
      tok.kind = TtlToken::Keyword;
      tok.text = "@prefix";
      return tok;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (i_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == ':' ||
              src_[i_] == '-' || src_[i_] == '_' || src_[i_] == '/')) {
        word += src_[i_++];
      }
      if (word == "a" || word == "true" || word == "false") {
        tok.kind = word == "a" ? TtlToken::Keyword : TtlToken::Boolean;
        tok.text = word;
        return tok;
      }
      if (word.find(':') == std::string::npos) fail("bare word \"" + word + "\"");
      tok.kind = TtlToken::PName;
      tok.text = word;
      return tok;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw DiagnosticError(DiagCode::OutsideProfile, why + " (line " + std::to_string(line_) + ")");
  }

 private:
  void skip_ws() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '\n') {
        ++line_;
        ++i_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++i_;
      } else if (c == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  size_t i_ = 0;
  int line_ = 1;
};

struct TtlObject {
  enum Kind { Iri, Literal, Boolean } kind = Iri;
  std::string text;
  std::string lang;
};

using PropertyList = std::vector<std::pair<std::string, TtlObject>>;  // predicate IRI, object

}  // namespace

ConceptScheme read_turtle_subset(std::string_view turtle) {
  TtlLexer lexer(turtle);
  std::map<std::string, std::string> prefixes;
  // Subjects in document order with their predicate/object pairs.
  std::vector<std::pair<std::string, PropertyList>> subjects;

  auto resolve = [&](const TtlToken& tok) -> std::string {
    if (tok.kind == TtlToken::Iri) return tok.text;
    size_t colon = tok.text.find(':');
    std::string prefix = tok.text.substr(0, colon);
    auto it = prefixes.find(prefix);
    if (it == prefixes.end()) {
      throw DiagnosticError(DiagCode::OutsideProfile, "undeclared prefix \"" + prefix + ":\"");
    }
    return it->second + tok.text.substr(colon + 1);
  };

  TtlToken tok = lexer.next();
  while (tok.kind != TtlToken::End) {
    if (tok.kind == TtlToken::Keyword && tok.text == "@prefix") {
      TtlToken name = lexer.next();
      if (name.kind != TtlToken::PName || name.text.back() != ':') {
        lexer.fail("@prefix expects a name ending in ':'");
      }
      TtlToken iri = lexer.next();
      if (iri.kind != TtlToken::Iri) lexer.fail("@prefix expects an IRI");
      TtlToken dot = lexer.next();
      if (dot.kind != TtlToken::Punct || dot.text != ".") lexer.fail("@prefix must end with '.'");
      prefixes[name.text.substr(0, name.text.size() - 1)] = iri.text;
      tok = lexer.next();
      continue;
    }
    if (tok.kind != TtlToken::Iri) {
      lexer.fail("subjects must be IRI references in this profile");
    }
    std::string subject = tok.text;
    PropertyList props;
    while (true) {
      TtlToken predTok = lexer.next();
      std::string predicate;
      if (predTok.kind == TtlToken::Keyword && predTok.text == "a") {
        predicate = std::string(kRdfType);
      } else if (predTok.kind == TtlToken::PName || predTok.kind == TtlToken::Iri) {
        predicate = resolve(predTok);
      } else {
        lexer.fail("expected a predicate");
      }
      TtlToken objTok = lexer.next();
      TtlObject obj;
      if (objTok.kind == TtlToken::Iri || objTok.kind == TtlToken::PName) {
        obj.kind = TtlObject::Iri;
        obj.text = resolve(objTok);
      } else if (objTok.kind == TtlToken::Literal) {
        obj.kind = TtlObject::Literal;
        obj.text = objTok.text;
        obj.lang = objTok.lang;
      } else if (objTok.kind == TtlToken::Boolean) {
        obj.kind = TtlObject::Boolean;
        obj.text = objTok.text;
      } else {
        lexer.fail("expected an object");
      }
      props.emplace_back(predicate, obj);
      TtlToken sep = lexer.next();
      if (sep.kind == TtlToken::Punct && sep.text == ";") continue;
      if (sep.kind == TtlToken::Punct && sep.text == ".") break;
      if (sep.kind == TtlToken::Punct && sep.text == ",") {
        lexer.fail("object lists with ',' are outside the profile");
      }
      lexer.fail("expected ';' or '.' after an object");
    }
    subjects.emplace_back(std::move(subject), std::move(props));
    tok = lexer.next();
  }

  const std::string skos(kSkosNs);
  const std::string ckv(kCkvNs);
  auto outside = [](const std::string& why) -> void {
    throw DiagnosticError(DiagCode::OutsideProfile, why);
  };

  std::string schemeIri;
  for (const auto& [subject, props] : subjects) {
    for (const auto& [pred, obj] : props) {
      if (pred == kRdfType && obj.kind == TtlObject::Iri && obj.text == skos + "ConceptScheme") {
        if (!schemeIri.empty()) outside("more than one skos:ConceptScheme node");
        schemeIri = subject;
      }
    }
  }
  if (schemeIri.empty()) outside("no skos:ConceptScheme node found");

  auto strip_base = [&](const std::string& iri) {
    return iri.rfind(schemeIri, 0) == 0 ? iri.substr(schemeIri.size()) : iri;
  };

  ConceptScheme scheme;
  std::set<Relation> seenRelations;
  for (const auto& [subject, props] : subjects) {
    if (subject == schemeIri) {
      for (const auto& [pred, obj] : props) {
        if (pred != kRdfType) outside("unknown scheme predicate <" + pred + ">");
      }
      continue;
    }
    Concept c;
    c.id = strip_base(subject);
    bool isConcept = false;
    bool isTop = false;
    std::string kind;
    for (const auto& [pred, obj] : props) {
      if (pred == kRdfType) {
        if (obj.kind != TtlObject::Iri || obj.text != skos + "Concept") {
          outside("unexpected type for <" + subject + ">");
        }
        isConcept = true;
      } else if (pred == skos + "prefLabel") {
        if (obj.lang != "en") outside("prefLabel must carry @en");
        c.prefLabel = obj.text;
      } else if (pred == skos + "altLabel") {
        c.altLabels.push_back(obj.text);
      } else if (pred == skos + "editorialNote") {
        c.notes.push_back(obj.text);
      } else if (pred == skos + "inScheme") {
        if (obj.text != schemeIri) outside("inScheme points outside this scheme");
      } else if (pred == skos + "topConceptOf") {
        isTop = true;
      } else if (pred == skos + "broader" || pred == skos + "narrower" ||
                 pred == skos + "related") {
        if (obj.kind != TtlObject::Iri) outside("relation object must be an IRI");
        RelationKind rk = pred == skos + "broader"    ? RelationKind::Broader
                          : pred == skos + "narrower" ? RelationKind::Narrower
                                                      : RelationKind::Related;
        Relation r{c.id, strip_base(obj.text), rk};
        if (seenRelations.insert(r).second) scheme.relations.push_back(std::move(r));
      } else if (pred == ckv + "kind") {
        kind = obj.text;
      } else if (pred == ckv + "origin") {
        if (obj.text != "interpolated") outside("unknown origin \"" + obj.text + "\"");
        c.origin = Origin::Interpolated;
      } else if (pred == ckv + "openEnded") {
        if (obj.kind != TtlObject::Boolean) outside("openEnded must be a boolean");
        c.openEnded = obj.text == "true";
      } else if (pred == ckv + "connective") {
        c.connective = obj.text;
      } else {
        outside("unknown predicate <" + pred + ">");
      }
    }
    if (!isConcept) outside("subject <" + subject + "> is not typed skos:Concept");
    if (c.prefLabel.empty()) outside("subject <" + subject + "> has no skos:prefLabel");
    if (kind == "headword") {
      c.kind = ConceptKind::Headword;
    } else if (kind == "facet") {
      c.kind = ConceptKind::Facet;
    } else if (kind == "instance") {
      c.kind = ConceptKind::Instance;
    } else {
      outside("subject <" + subject + "> has no recognizable ckv:kind");
    }
    std::sort(c.altLabels.begin(), c.altLabels.end());
    if (isTop) scheme.topConcepts.push_back(c.id);
    scheme.concepts.push_back(std::move(c));
  }

  // Domains are derivable: walk broader edges up to headwords, falling back
  // to directly related headwords for the related-only concepts.
  std::map<std::string, const Concept*> byId;
  for (const auto& c : scheme.concepts) byId[c.id] = &c;
  for (auto& c : scheme.concepts) {
    if (c.kind == ConceptKind::Headword) {
      c.domains = {c.prefLabel};
      continue;
    }
    std::set<std::string> domains;
    std::set<std::string> visited;
    std::vector<std::string> frontier{c.id};
    while (!frontier.empty()) {
      std::string id = std::move(frontier.back());
      frontier.pop_back();
      if (!visited.insert(id).second) continue;
      auto it = byId.find(id);
      if (it != byId.end() && it->second->kind == ConceptKind::Headword) {
        domains.insert(it->second->prefLabel);
        continue;
      }
      for (const auto& r : scheme.relations) {
        if (r.kind == RelationKind::Broader && r.subject == id) frontier.push_back(r.object);
      }
    }
    if (domains.empty()) {
      for (const auto& r : scheme.relations) {
        if (r.kind != RelationKind::Related || r.subject != c.id) continue;
        auto it = byId.find(r.object);
        if (it != byId.end() && it->second->kind == ConceptKind::Headword) {
          domains.insert(it->second->prefLabel);
        }
      }
    }
    c.domains.assign(domains.begin(), domains.end());
  }
  return scheme;
}

namespace {

struct ConceptSignature {
  std::string prefLabel;
  std::vector<std::string> altLabels;
  std::vector<std::string> domains;
  ConceptKind kind = ConceptKind::Instance;
  Origin origin = Origin::Textual;
  bool openEnded = false;
  std::string connective;
  std::vector<std::string> notes;
  bool isTop = false;
  bool operator==(const ConceptSignature&) const = default;
};

std::map<std::string, ConceptSignature> signature_map(const ConceptScheme& scheme,
                                                      const IriPolicy& policy,
                                                      std::map<std::string, std::string>& iriOf) {
  IriMinter minter(policy);
  std::map<std::string, ConceptSignature> out;
  std::set<std::string> tops(scheme.topConcepts.begin(), scheme.topConcepts.end());
  for (const auto& c : scheme.concepts) {
    std::string iri = minter.mint(c);
    iriOf[c.id] = iri;
    ConceptSignature sig;
    sig.prefLabel = c.prefLabel;
    sig.altLabels = c.altLabels;
    std::sort(sig.altLabels.begin(), sig.altLabels.end());
    sig.domains = c.domains;
    std::sort(sig.domains.begin(), sig.domains.end());
    sig.kind = c.kind;
    sig.origin = c.origin;
    sig.openEnded = c.openEnded;
    sig.connective = c.connective.value_or("");
    sig.notes = c.notes;
    std::sort(sig.notes.begin(), sig.notes.end());
    sig.isTop = tops.count(c.id) > 0;
    out[iri] = std::move(sig);
  }
  return out;
}

}  // namespace

bool scheme_equivalent(const ConceptScheme& a, const ConceptScheme& b, const IriPolicy& policy) {
  std::map<std::string, std::string> iriA;
  std::map<std::string, std::string> iriB;
  if (signature_map(a, policy, iriA) != signature_map(b, policy, iriB)) return false;

  auto relationSet = [](const ConceptScheme& s, std::map<std::string, std::string>& iriOf) {
    std::set<std::tuple<int, std::string, std::string>> out;
    for (const auto& r : s.relations) {
      auto si = iriOf.find(r.subject);
      auto oi = iriOf.find(r.object);
      if (si == iriOf.end() || oi == iriOf.end()) {
        out.emplace(-1, r.subject, r.object);  // dangling edges compare unequal by content
        continue;
      }
      out.emplace(static_cast<int>(r.kind), si->second, oi->second);
    }
    return out;
  };
  return relationSet(a, iriA) == relationSet(b, iriB);
}

}  // namespace chambers
