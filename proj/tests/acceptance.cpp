// Acceptance suite: one line per criterion, PASS or FAIL, nonzero exit on
// any failure. Each criterion states its expectation against fixtures or
// independent oracles, never against the implementation path it checks.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "chambers/disambig.hpp"
#include "chambers/emit.hpp"
#include "chambers/pipeline.hpp"
#include "chambers/transcript.hpp"
#include "fixtures.hpp"

using namespace chambers;
namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string what;
};

void expect(bool condition, const std::string& what) {
  if (!condition) throw Failure{what};
}

DomainParseTree parse_fixture(const char* text) {
  return parse_entry(lex(text));
}

ConceptScheme scheme_from(std::initializer_list<const char*> sources) {
  std::vector<DomainParseTree> trees;
  for (const char* source : sources) {
    for (const auto& entry : split_entries(lex(source))) {
      trees.push_back(parse_entry(entry));
    }
  }
  return build_scheme(trees);
}

const FacetNode* find_facet(const std::vector<FacetNode>& facets, std::string_view label) {
  for (const auto& f : facets) {
    if (f.facetLabel == label) return &f;
    if (const FacetNode* hit = find_facet(f.children, label)) return hit;
  }
  return nullptr;
}

const IriPolicy kPolicy{"https://example.org/chambers/"};

// --- criterion 1 -----------------------------------------------------------

void minerology_fixture() {
  auto started = std::chrono::steady_clock::now();
  DomainParseTree tree = parse_fixture(fixtures::kMinerology);
  auto elapsed = std::chrono::steady_clock::now() - started;

  expect(tree.headword == "MINEROLOGY", "headword is MINEROLOGY");
  expect(tree.altName.has_value() && *tree.altName == "History of EARTH",
         "alternate name is History of EARTH");

  const FacetNode* parts = find_facet(tree.facets, "Parts");
  expect(parts != nullptr, "Parts facet exists");
  expect(parts->instances.size() == 5, "Parts has exactly 5 instances");
  const char* expected[] = {"Mountain", "Mine", "Moss", "Bog", "Grotto"};
  for (size_t i = 0; i < 5; ++i) {
    expect(parts->instances[i].label == expected[i], "Parts instance order");
    expect(!parts->instances[i].openEnded, "Parts list is closed");
  }
  expect(!parts->listOpenEnded, "Parts list is closed");

  const FacetNode* phaenomena = find_facet(tree.facets, "Phænomena");
  expect(phaenomena != nullptr, "Phaenomena facet exists");
  expect(phaenomena->listOpenEnded, "Phaenomena list ends \"&c.\"");

  const FacetNode* strata = find_facet(tree.facets, "Strata");
  expect(strata != nullptr, "Strata facet exists");
  expect(strata->instances.size() == 3, "Strata has Clay/Bole/Sand");
  expect(strata->instances[0].label == "Clay" && strata->instances[1].label == "Bole" &&
             strata->instances[2].label == "Sand",
         "Strata instance labels");
  expect(strata->listOpenEnded, "Strata list is open-ended");

  const FacetNode* fossils = find_facet(tree.facets, "Fossils");
  expect(fossils != nullptr, "Fossils facet exists");
  expect(fossils->ordinalSection.has_value() && *fossils->ordinalSection == 2,
         "ordinal section boundary at 2");
  expect(parts->ordinalSection.has_value() && *parts->ordinalSection == 1,
         "Parts sits in section 1");
  expect(fossils->altFacetLabel.has_value() && *fossils->altFacetLabel == "Minerals",
         "Minerals is an alternate facet label");

  expect(elapsed < std::chrono::seconds(1), "parse completes in under one second");
}

// --- criterion 2 -----------------------------------------------------------

void law_fixture() {
  DomainParseTree tree = parse_fixture(fixtures::kLaw);
  expect(tree.facets.size() == 1, "exactly one facet");
  const FacetNode& facet = tree.facets[0];
  expect(facet.instances.size() == 8, "exactly eight instances");
  for (const auto& inst : facet.instances) {
    expect(inst.openEnded, "every instance is open-ended");
  }
}

// --- criterion 3 -----------------------------------------------------------

int count_interpolated(const std::vector<FacetNode>& facets) {
  int n = 0;
  for (const auto& f : facets) {
    if (f.origin == Origin::Interpolated) ++n;
    n += count_interpolated(f.children);
  }
  return n;
}

void heathen_fixture() {
  DomainParseTree tree = parse_fixture(fixtures::kHeathen);

  const FacetNode* gods = find_facet(tree.facets, "Gods");
  expect(gods != nullptr, "Gods facet exists");
  std::vector<std::string> godsTerms = subtree_instance_labels(*gods);
  expect(!godsTerms.empty() && godsTerms.back() == "Genius",
         "the Gods facet's last instance is Genius");

  const FacetNode* rites = find_facet(tree.facets, "Rites");
  expect(rites != nullptr, "Rites facet exists");
  expect(rites->origin == Origin::Interpolated, "Rites is interpolated");
  std::vector<std::string> riteTerms = subtree_instance_labels(*rites);
  expect(riteTerms.size() >= 4, "Rites holds at least four terms");
  expect(riteTerms[0] == "Apotheosis" && riteTerms[1] == "Sacrifice" &&
             riteTerms[2] == "Feast" && riteTerms[3] == "Lustration",
         "Rites holds Apotheosis, Sacrifice, Feast, Lustration");

  std::string stripped = fixtures::kHeathen;
  size_t at = stripped.find("@interp{Rites} ");
  expect(at != std::string::npos, "fixture contains the directive");
  stripped.erase(at, std::string("@interp{Rites} ").size());
  DomainParseTree plain = parse_entry(lex(stripped));
  expect(count_interpolated(plain.facets) == 0,
         "removing the directive leaves zero interpolated nodes");
}

// --- criterion 4 -----------------------------------------------------------

struct GeneratedEntry {
  std::string markup;
  int italics = 0;
};

GeneratedEntry generate_entry(std::mt19937_64& rng) {
  auto pick = [&rng](int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); };
  const char* labels[] = {"Mountain", "Feast", "Oracle", "Allum", "Coal", "Slate",
                          "Opal", "Crystal", "Spar", "Phænomena", "Sibyl", "Borax"};
  auto label = [&] { return std::string(labels[pick(12)]); };

  GeneratedEntry out;
  out.markup = "@domain{DOMAIN" + std::to_string(pick(1000)) + "}";
  int headKind = pick(3);
  if (headKind == 1) {
    out.markup += " roman{, or the} italic{" + label() + " of Things};";
    out.italics += 1;
  } else if (headKind == 2) {
    out.markup += " roman{, including} sc{" + label() + "}, sc{" + label() + "};";
  }
  int aspects = pick(3);
  for (int i = 0; i < aspects; ++i) {
    out.markup += " sc{Aspect" + std::to_string(i) + "}";
    if (pick(2) == 0) {
      int n = 1 + pick(3);
      for (int k = 0; k < n; ++k) {
        out.markup += (k ? ", italic{" : " italic{") + label() + "}";
        out.italics += 1;
      }
      out.markup += pick(2) ? ", &c." : ".";
    } else {
      out.markup += pick(2) ? "," : ".";
    }
  }
  int sections = 1 + pick(2);
  for (int s = 0; s < sections; ++s) {
    if (sections > 1) out.markup += " @ord{" + std::to_string(s + 1) + "}";
    int facets = 1 + pick(3);
    bool facetOpen = false;  // @interp only where a facet is already open
    for (int f = 0; f < facets; ++f) {
      const char* names[] = {"Parts", "Strata", "Salts", "Gems", "Rites", "Forms"};
      std::string name = names[pick(6)];
      switch (facetOpen ? pick(4) : pick(3)) {
        case 0: out.markup += " roman{Its " + name + ", as}"; break;
        case 1: out.markup += " roman{and their " + name + ", as}"; break;
        case 2: out.markup += " roman{" + name + " ;}"; break;
        default: out.markup += " @interp{Heading" + std::to_string(f) + "}"; break;
      }
      facetOpen = true;
      int lists = 1 + pick(2);
      for (int g = 0; g < lists; ++g) {
        int n = 1 + pick(4);
        for (int k = 0; k < n; ++k) {
          out.markup += (k ? ", italic{" : " italic{") + label() + "}";
          out.italics += 1;
          if (pick(10) == 0) out.markup += " @note{editorial remark}";
        }
        out.markup += pick(2) ? ", &c." : ".";
      }
      if (pick(6) == 0) {
        out.markup += " —";
        facetOpen = false;
      }
    }
  }
  return out;
}

void span_conservation() {
  std::mt19937_64 rng(20260810);
  for (int round = 0; round < 120; ++round) {
    GeneratedEntry gen = generate_entry(rng);
    TranscriptDocument doc = lex(gen.markup);
    int italics = 0;
    for (const auto& t : doc.tokens) {
      const auto* span = std::get_if<StyledSpan>(&t);
      if (span && span->style == SpanStyle::Italic) ++italics;
    }
    expect(italics == gen.italics, "generator italic bookkeeping agrees with the lexer");
    DomainParseTree tree = parse_entry(doc);
    int conserved = entry_concept_census(tree).instanceCount + (tree.altName ? 1 : 0);
    expect(italics == conserved,
           "italic spans == instances + alternate name (round " + std::to_string(round) + ")");
  }
}

// --- criterion 5 -----------------------------------------------------------

bool brute_force_reciprocal(const ConceptScheme& s) {
  for (const auto& r : s.relations) {
    RelationKind mirror = r.kind == RelationKind::Broader    ? RelationKind::Narrower
                          : r.kind == RelationKind::Narrower ? RelationKind::Broader
                                                             : RelationKind::Related;
    bool found = false;
    for (const auto& q : s.relations) {
      if (q.kind == mirror && q.subject == r.object && q.object == r.subject) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool brute_force_acyclic(const ConceptScheme& s) {
  std::vector<std::string> ids;
  for (const auto& c : s.concepts) ids.push_back(c.id);
  size_t n = ids.size();
  auto indexOf = [&](const std::string& id) {
    return static_cast<size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& r : s.relations) {
    if (r.kind == RelationKind::Broader) reach[indexOf(r.subject)][indexOf(r.object)] = true;
  }
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      }
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (reach[i][i]) return false;
  }
  return true;
}

void scheme_well_formedness() {
  std::vector<std::vector<const char*>> corpora = {
      {fixtures::kLaw},
      {fixtures::kTheology, fixtures::kLaw},
      {fixtures::kHeathen, fixtures::kChristianity},
      {fixtures::kMinerology},
      {fixtures::kMinerology, fixtures::kHeathen, fixtures::kChristianity, fixtures::kLaw}};
  for (const auto& corpus : corpora) {
    std::vector<DomainParseTree> trees;
    for (const char* source : corpus) {
      for (const auto& entry : split_entries(lex(source))) {
        trees.push_back(parse_entry(entry));
      }
    }
    ConceptScheme scheme = build_scheme(trees);
    expect(check_scheme(scheme).empty(), "check_scheme is empty on built schemes");
    if (scheme.concepts.size() <= 50) {
      expect(brute_force_reciprocal(scheme), "brute-force reciprocity agrees");
      expect(brute_force_acyclic(scheme), "brute-force acyclicity agrees");
    }
  }
}

// --- criterion 6 -----------------------------------------------------------

struct RandomTree {
  std::string outline;
  std::vector<std::string> leafLabels;
};

void grow(std::mt19937_64& rng, RandomTree& out, int depth, int maxDepth, int& leafBudget,
          int& nextLabel, std::vector<std::string>& used) {
  auto pick = [&rng](int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); };
  int children = depth >= maxDepth ? 0 : pick(4);
  if (depth == 0 && children == 0) children = 1;
  for (int i = 0; i < children && leafBudget > 0; ++i) {
    bool leaf = depth + 1 >= maxDepth || pick(3) == 0;
    if (leaf) {
      std::string label;
      if (!used.empty() && pick(3) == 0) {
        label = used[static_cast<size_t>(pick(static_cast<int>(used.size())))];
      } else {
        label = "Leaf" + std::to_string(nextLabel++);
      }
      --leafBudget;
      used.push_back(label);
      out.leafLabels.push_back(label);
      out.outline += std::string(static_cast<size_t>(depth + 1) * 2, ' ') + label + "\n";
    } else {
      std::string label = "Node" + std::to_string(nextLabel++);
      out.outline += std::string(static_cast<size_t>(depth + 1) * 2, ' ') + label + "\n";
      size_t before = out.leafLabels.size();
      grow(rng, out, depth + 1, maxDepth, leafBudget, nextLabel, used);
      if (out.leafLabels.size() == before) {
        out.leafLabels.push_back(label);
        used.push_back(label);
      }
    }
  }
}

void jepd_oracle_equivalence() {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    RandomTree gen;
    gen.outline = "Knowledge\n";
    int leafBudget = 1 + static_cast<int>(rng() % 99);
    int nextLabel = 0;
    std::vector<std::string> used;
    grow(rng, gen, 0, 5, leafBudget, nextLabel, used);
    if (gen.leafLabels.empty()) gen.leafLabels.push_back("Knowledge");

    std::map<std::string, int> counts;
    for (const auto& label : gen.leafLabels) counts[label]++;
    std::set<std::string> expectedLabels;
    for (const auto& [label, n] : counts) {
      if (n >= 2) expectedLabels.insert(label);
    }

    TaxonomyTree tree = parse_taxonomy(gen.outline);
    expect(tree.leaves.size() == gen.leafLabels.size() && tree.leaves.size() <= 100,
           "generated tree stays within the leaf bound");
    std::set<std::string> gotLabels;
    for (const auto& v : validate_jepd(tree)) gotLabels.insert(v.label);
    expect(gotLabels == expectedLabels,
           "validate_jepd matches the flat duplicate scan (round " + std::to_string(round) + ")");
  }
}

// --- criterion 7 -----------------------------------------------------------

void disambiguation() {
  ConceptScheme before = scheme_from({fixtures::kHeathen, fixtures::kChristianity});
  DecisionSet merge = parse_decisions("Feast\tmerge\tFeast\tsame sense\n");

  std::set<Relation> expected;
  for (Relation r : before.relations) {
    if (r.subject == "heathen/feast") r.subject = "christianity/feast";
    if (r.object == "heathen/feast") r.object = "christianity/feast";
    expected.insert(r);
  }

  auto [after, report] = apply_decisions(before, merge);
  expect(report.outcomes.size() == 1 && report.outcomes[0].status == DecisionStatus::Applied,
         "merge decision applies");
  expect(after.concepts.size() == before.concepts.size() - 1,
         "merge reduces the concept count by exactly one");
  std::set<Relation> got(after.relations.begin(), after.relations.end());
  expect(got == expected, "relations match the brute-force rewrite oracle");
  expect(check_scheme(after).empty(), "merged scheme stays well-formed");

  auto [again, secondReport] = apply_decisions(after, merge);
  expect(again == after, "second application is a no-op");
  expect(secondReport.outcomes.size() == 1 &&
             secondReport.outcomes[0].status == DecisionStatus::Ignored,
         "second application reports already satisfied");
}

// --- criterion 8 -----------------------------------------------------------

void skos_round_trip() {
  std::vector<std::vector<const char*>> corpora = {
      {fixtures::kLaw},
      {fixtures::kMinerology},
      {fixtures::kHeathen, fixtures::kChristianity},
      {fixtures::kTheology, fixtures::kLaw}};
  for (const auto& corpus : corpora) {
    std::vector<DomainParseTree> trees;
    for (const char* source : corpus) {
      for (const auto& entry : split_entries(lex(source))) {
        trees.push_back(parse_entry(entry));
      }
    }
    ConceptScheme scheme = build_scheme(trees);
    std::string once = emit_skos(scheme, kPolicy);
    std::string twice = emit_skos(scheme, kPolicy);
    expect(once == twice, "emission is byte-deterministic across two runs");
    ConceptScheme back = read_turtle_subset(once);
    expect(scheme_equivalent(scheme, back, kPolicy),
           "read_turtle_subset(emit_skos(S)) is graph-isomorphic to S");
  }
}

// --- criterion 9 -----------------------------------------------------------

void owl_strategies() {
  ConceptScheme scheme = scheme_from({fixtures::kTheology, fixtures::kLaw});
  TaxonomyTree clean = parse_taxonomy(fixtures::kTaxonomyClean);
  std::string direct = emit_owl(scheme, clean, OwlMode::DirectMap, kPolicy);
  expect(direct.find("owl:disjointWith") != std::string::npos,
         "direct mapping emits pairwise sibling disjointness");

  TaxonomyTree duplicated = parse_taxonomy(fixtures::kTaxonomyDuplicated);
  bool refused = false;
  try {
    emit_owl(scheme, duplicated, OwlMode::DirectMap, kPolicy);
  } catch (const DiagnosticError& e) {
    refused = e.diagnostic.code == DiagCode::JepdViolationInDirectMap;
  }
  expect(refused, "direct mapping refuses a duplicated leaf with the distinct error");

  std::string axioms = emit_owl(scheme, duplicated, OwlMode::AxiomBased, kPolicy);
  size_t at = axioms.find("<https://example.org/chambers/taxon/optics> a owl:Class");
  expect(at != std::string::npos, "axiom mode accepts the duplicated leaf");
  std::string block = axioms.substr(at, axioms.find(" .\n", at) - at);
  size_t supers = 0;
  size_t pos = 0;
  while ((pos = block.find("rdfs:subClassOf", pos)) != std::string::npos) {
    ++supers;
    pos += 1;
  }
  expect(supers == 2, "the duplicated leaf class has two superclasses");
}

// --- criterion 10 ----------------------------------------------------------

void leaf_linking() {
  ConceptScheme scheme = scheme_from({fixtures::kMinerology, fixtures::kTheology});
  TaxonomyTree tree = parse_taxonomy(fixtures::kTaxonomySample);
  LeafLinkReport report = link_leaves(tree, scheme);
  expect(report.matched.size() == 2, "exactly two matches");
  expect(report.unmatchedLeaves.size() == 1 && report.unmatchedLeaves[0].first == "Optics",
         "exactly one unmatched leaf");
  expect(report.unmatchedHeadwords.empty(), "no unmatched headwords");
}

// --- criterion 11 ----------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void full_run_determinism() {
  fs::path dir = fs::temp_directory_path() / "chambers_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream out(dir / name, std::ios::binary);
    out << content;
    return (dir / name).string();
  };

  PipelineConfig config;
  config.transcriptPaths = {write("law.txt", fixtures::kLaw),
                            write("theology.txt", fixtures::kTheology)};
  config.taxonomyPath = write("taxonomy.txt", fixtures::kTaxonomyClean);
  config.owlMode = OwlChoice::Direct;

  config.outputDir = (dir / "one").string();
  PipelineResult first = run_pipeline(config);
  config.outputDir = (dir / "two").string();
  PipelineResult second = run_pipeline(config);

  expect(first.exitCode == 0, "clean corpus exits 0");
  expect(first.artifactsWritten.size() == 3, "three artifacts written");
  for (size_t i = 0; i < first.artifactsWritten.size(); ++i) {
    expect(slurp(first.artifactsWritten[i]) == slurp(second.artifactsWritten[i]),
           "artifact " + std::to_string(i) + " is byte-identical across runs");
  }
  expect(first.report == second.report, "reports are byte-identical");
  fs::remove_all(dir);
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void()> run;
  };
  std::vector<Criterion> criteria = {
      {"Minerology fixture: head, facets, ordinal boundary, under 1 s", minerology_fixture},
      {"Law fixture: one facet, eight open-ended instances", law_fixture},
      {"Heathen fixture: Gods ends at Genius, interpolated Rites", heathen_fixture},
      {"Span conservation over randomized transcriptions", span_conservation},
      {"Thesaurus well-formedness with brute-force graph checks", scheme_well_formedness},
      {"JEPD oracle equivalence on 200 random trees", jepd_oracle_equivalence},
      {"Disambiguation: merge oracle and idempotence", disambiguation},
      {"SKOS round-trip isomorphism and byte-determinism", skos_round_trip},
      {"OWL strategies: disjointness, refusal, polyhierarchy", owl_strategies},
      {"Leaf linking partition on the sample taxonomy", leaf_linking},
      {"Full-run determinism with byte-identical artifacts", full_run_determinism},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string verdict = "PASS";
    std::string detail;
    try {
      criteria[i].run();
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.what;
      ++failures;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    std::cout << verdict << "  [" << (i + 1) << "] " << criteria[i].name;
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all " << criteria.size() << " criteria passed\n";
  return 0;
}
