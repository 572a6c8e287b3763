#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chambers/pipeline.hpp"
#include "chambers/textutil.hpp"
#include "chambers/transcript.hpp"

namespace {

using namespace chambers;

std::string read_file_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DiagnosticError(DiagCode::IoError, "cannot read " + path, {}, path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_diagnostics(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) std::cerr << format(d) << "\n";
}

int severity_exit(const std::vector<Diagnostic>& diags) {
  if (has_errors(diags)) return 2;
  if (has_warnings(diags)) return 1;
  return 0;
}

const char* style_name(SpanStyle s) {
  switch (s) {
    case SpanStyle::Roman: return "roman";
    case SpanStyle::Italic: return "italic";
    case SpanStyle::SmallCaps: return "sc";
  }
  return "roman";
}

void dump_tokens(const TranscriptDocument& doc, std::ostream& out) {
  for (const auto& token : doc.tokens) {
    SourcePos pos = token_pos(token);
    out << pos.line << ":" << pos.col << "  ";
    if (const auto* span = std::get_if<StyledSpan>(&token)) {
      out << style_name(span->style) << " \"" << span->text << "\"";
    } else if (const auto* punct = std::get_if<PunctToken>(&token)) {
      switch (punct->kind) {
        case PunctKind::Comma: out << "comma"; break;
        case PunctKind::Semicolon: out << "semicolon"; break;
        case PunctKind::Period: out << "period"; break;
        case PunctKind::LongDash: out << "long-dash"; break;
        case PunctKind::EtCetera: out << "et-cetera"; break;
        case PunctKind::OrdinalMarker: out << "ordinal " << punct->ordinal; break;
      }
    } else {
      const auto& dir = std::get<Directive>(token);
      switch (dir.kind) {
        case DirectiveKind::DomainStart: out << "@domain \"" << dir.text << "\""; break;
        case DirectiveKind::Interpolate: out << "@interp \"" << dir.text << "\""; break;
        case DirectiveKind::Note: out << "@note \"" << dir.text << "\""; break;
      }
    }
    out << "\n";
  }
}

void dump_facet(const FacetNode& facet, int depth, std::ostream& out) {
  std::string indent(static_cast<size_t>(depth) * 2, ' ');
  out << indent << "facet \"" << facet.facetLabel << "\"";
  if (facet.altFacetLabel) out << " or \"" << *facet.altFacetLabel << "\"";
  if (facet.groupIndex >= 2) out << " (grouping " << facet.groupIndex << ")";
  if (facet.origin == Origin::Interpolated) out << " (interpolated)";
  if (facet.aspect) out << " (aspect)";
  if (facet.ordinalSection) out << " (section " << *facet.ordinalSection << ")";
  if (facet.listOpenEnded) out << " open-ended";
  out << "\n";
  for (const auto& inst : facet.instances) {
    out << indent << "  - " << inst.label;
    if (inst.openEnded) out << " &c.";
    if (inst.emendation) out << "  [note: " << *inst.emendation << "]";
    out << "\n";
  }
  for (const auto& child : facet.children) dump_facet(child, depth + 1, out);
}

struct CommonOptions {
  std::vector<std::string> transcripts;
  std::string baseIri = "https://example.org/chambers/";
  std::string taxonomyPath;
  std::string decisionsPath;
  std::string grammarConfigPath;
  std::string owl = "none";
  std::string outDir;

  PipelineConfig toConfig() const {
    PipelineConfig config;
    config.transcriptPaths = transcripts;
    config.baseIri = baseIri;
    if (!taxonomyPath.empty()) config.taxonomyPath = taxonomyPath;
    if (!decisionsPath.empty()) config.decisionsPath = decisionsPath;
    if (!grammarConfigPath.empty()) config.grammarConfigPath = grammarConfigPath;
    if (!outDir.empty()) config.outputDir = outDir;
    config.owlMode = owl == "direct" ? OwlChoice::Direct
                     : owl == "axiom" ? OwlChoice::Axiom
                                      : OwlChoice::None;
    return config;
  }
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool withEmitFlags) {
  cmd->add_option("files", opts.transcripts, "transcript files")->required()->expected(-1);
  cmd->add_option("--grammar-config", opts.grammarConfigPath, "grammar word-set config file");
  if (withEmitFlags) {
    cmd->add_option("--base-iri", opts.baseIri, "base IRI for minted identifiers");
    cmd->add_option("--taxonomy", opts.taxonomyPath, "taxonomy outline file");
    cmd->add_option("--decisions", opts.decisionsPath, "disambiguation decisions file");
    cmd->add_option("--owl", opts.owl, "OWL strategy: direct, axiom, or none")
        ->check(CLI::IsMember({"direct", "axiom", "none"}));
    cmd->add_option("--out", opts.outDir, "output directory for artifacts");
  }
}

// Shared front half: lex + validate + parse all entries.
int load_trees(const CommonOptions& opts, std::vector<DomainParseTree>& trees,
               std::vector<Diagnostic>& diags) {
  GrammarConfig grammar = GrammarConfig::defaults();
  if (!opts.grammarConfigPath.empty()) {
    grammar = GrammarConfig::load(read_file_or_throw(opts.grammarConfigPath),
                                  opts.grammarConfigPath);
  }
  for (const auto& path : opts.transcripts) {
    TranscriptDocument doc = lex(read_file_or_throw(path), path);
    std::vector<Diagnostic> docDiags = validate_transcript(doc);
    diags.insert(diags.end(), docDiags.begin(), docDiags.end());
    if (has_errors(docDiags)) return 2;
    for (const auto& entry : split_entries(doc)) {
      trees.push_back(parse_entry(entry, grammar, &diags));
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compiles annotated transcriptions of the 1728 Cyclopaedia Preface "
               "vocabulary into a SKOS thesaurus and an OWL ontology"};
  app.require_subcommand(1);

  CommonOptions opts;

  CLI::App* lexCmd = app.add_subcommand("lex", "tokenize transcripts and print the stream");
  add_common(lexCmd, opts, false);

  CLI::App* parseCmd = app.add_subcommand("parse", "parse entries and print their facet trees");
  add_common(parseCmd, opts, false);

  CLI::App* buildCmd = app.add_subcommand("build", "build the concept scheme and report homonyms");
  add_common(buildCmd, opts, false);

  CLI::App* validateCmd =
      app.add_subcommand("validate", "check scheme well-formedness and the taxonomy");
  add_common(validateCmd, opts, true);

  CLI::App* emitCmd = app.add_subcommand("emit", "write SKOS/OWL artifacts");
  add_common(emitCmd, opts, true);

  CLI::App* runCmd = app.add_subcommand("run", "full pipeline with report");
  add_common(runCmd, opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (lexCmd->parsed()) {
      std::vector<Diagnostic> diags;
      for (const auto& path : opts.transcripts) {
        TranscriptDocument doc = lex(read_file_or_throw(path), path);
        std::vector<Diagnostic> docDiags = validate_transcript(doc);
        diags.insert(diags.end(), docDiags.begin(), docDiags.end());
        dump_tokens(doc, std::cout);
      }
      print_diagnostics(diags);
      return severity_exit(diags);
    }

    if (parseCmd->parsed()) {
      std::vector<DomainParseTree> trees;
      std::vector<Diagnostic> diags;
      int rc = load_trees(opts, trees, diags);
      if (rc == 0) {
        for (const auto& tree : trees) {
          EntryCensus census = entry_concept_census(tree);
          std::cout << "entry " << tree.headword;
          if (tree.altName) std::cout << ", or " << *tree.altName;
          std::cout << "\n";
          for (const auto& area : tree.scopeAreas) std::cout << "  scope: " << area << "\n";
          for (const auto& aspect : tree.relatedAspects) {
            std::cout << "  related aspect: " << aspect << "\n";
          }
          for (const auto& facet : tree.facets) dump_facet(facet, 1, std::cout);
          std::cout << "  census: instances=" << census.instanceCount
                    << " facets=" << census.facetCount
                    << " open-ended-lists=" << census.openEndedListCount << "\n";
        }
      }
      print_diagnostics(diags);
      return rc != 0 ? rc : severity_exit(diags);
    }

    if (buildCmd->parsed()) {
      std::vector<DomainParseTree> trees;
      std::vector<Diagnostic> diags;
      int rc = load_trees(opts, trees, diags);
      if (rc == 0) {
        ConceptScheme scheme = build_scheme(trees);
        std::cout << "concepts: " << scheme.concepts.size()
                  << "  relations: " << scheme.relations.size()
                  << "  top concepts: " << scheme.topConcepts.size() << "\n";
        std::cout << report_homonyms_table(scheme);
      }
      print_diagnostics(diags);
      return rc != 0 ? rc : severity_exit(diags);
    }

    if (validateCmd->parsed()) {
      std::vector<DomainParseTree> trees;
      std::vector<Diagnostic> diags;
      int rc = load_trees(opts, trees, diags);
      if (rc == 0) {
        ConceptScheme scheme = build_scheme(trees);
        std::vector<Diagnostic> schemeDiags = check_scheme(scheme);
        diags.insert(diags.end(), schemeDiags.begin(), schemeDiags.end());
        std::cout << "scheme checks: " << (schemeDiags.empty() ? "ok" : "failed") << "\n";
        if (!opts.taxonomyPath.empty()) {
          TaxonomyTree tree = parse_taxonomy(read_file_or_throw(opts.taxonomyPath),
                                             opts.taxonomyPath);
          std::vector<JepdViolation> jepd = validate_jepd(tree);
          std::cout << "JEPD violations: " << jepd.size() << "\n";
          for (const auto& v : jepd) {
            std::vector<std::string> paths;
            for (const auto& p : v.paths) paths.push_back(join(p, "/"));
            std::cout << "  " << v.label << ": " << join(paths, "; ") << "\n";
          }
          LeafLinkReport links = link_leaves(tree, scheme);
          std::cout << "leaf links: matched=" << links.matched.size()
                    << " unmatched-leaves=" << links.unmatchedLeaves.size()
                    << " unmatched-headwords=" << links.unmatchedHeadwords.size() << "\n";
        }
      }
      print_diagnostics(diags);
      return rc != 0 ? rc : severity_exit(diags);
    }

    if (emitCmd->parsed() || runCmd->parsed()) {
      if (runCmd->parsed() && opts.outDir.empty()) {
        std::cerr << format({Severity::Error, DiagCode::UsageError,
                             "run requires --out DIR for its artifacts", "", {}})
                  << "\n";
        return 2;
      }
      if (emitCmd->parsed() && opts.outDir.empty() && opts.owl != "none") {
        std::cerr << format({Severity::Error, DiagCode::UsageError,
                             "emit --owl requires --out DIR", "", {}})
                  << "\n";
        return 2;
      }
      PipelineResult result = run_pipeline(opts.toConfig());
      print_diagnostics(result.diagnostics);
      if (opts.outDir.empty()) {
        std::cout << result.skosTurtle;  // emit to stdout when no directory given
      } else if (runCmd->parsed()) {
        std::cout << result.report;
      }
      return result.exitCode;
    }
  } catch (const DiagnosticError& err) {
    std::cerr << format(err.diagnostic) << "\n";
    return 2;
  }
  return 2;
}
