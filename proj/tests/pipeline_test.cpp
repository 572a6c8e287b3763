#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chambers/pipeline.hpp"
#include "fixtures.hpp"

using namespace chambers;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) {
    path = fs::temp_directory_path() / ("chambers_test_" + name);
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  std::string write(const std::string& name, const std::string& content) {
    fs::path file = path / name;
    std::ofstream out(file, std::ios::binary);
    out << content;
    return file.string();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("empty transcript list is a usage error") {
  PipelineResult result = run_pipeline(PipelineConfig{});
  CHECK(result.exitCode == 2);
  REQUIRE_FALSE(result.diagnostics.empty());
  CHECK(result.diagnostics[0].code == DiagCode::UsageError);
}

TEST_CASE("figure transcriptions alone exit with warnings and a skos artifact") {
  TempDir dir("figs");
  PipelineConfig config;
  config.transcriptPaths = {dir.write("minerology.txt", fixtures::kMinerology),
                            dir.write("heathen.txt", fixtures::kHeathen)};
  config.outputDir = (dir.path / "out").string();
  PipelineResult result = run_pipeline(config);

  CHECK(result.exitCode == 1);  // fallback facet labels warn
  REQUIRE(result.artifactsWritten.size() == 2);  // skos + report
  CHECK(result.artifactsWritten[0].find("chambers.skos.ttl") != std::string::npos);
  CHECK(slurp(result.artifactsWritten[0]) == result.skosTurtle);
  CHECK_FALSE(result.skosTurtle.empty());
  CHECK(result.owlTurtle.empty());
  CHECK(result.report.find("Entries (2)") != std::string::npos);
}

TEST_CASE("clean corpus with taxonomy and direct owl exits zero with three artifacts") {
  TempDir dir("clean");
  PipelineConfig config;
  config.transcriptPaths = {dir.write("law.txt", fixtures::kLaw),
                            dir.write("theology.txt", fixtures::kTheology)};
  config.taxonomyPath = dir.write("taxonomy.txt", fixtures::kTaxonomyClean);
  config.owlMode = OwlChoice::Direct;
  config.outputDir = (dir.path / "out").string();
  PipelineResult result = run_pipeline(config);

  for (const auto& d : result.diagnostics) {
    CAPTURE(format(d));
    CHECK(d.severity == Severity::Note);
  }
  CHECK(result.exitCode == 0);
  REQUIRE(result.artifactsWritten.size() == 3);
  CHECK(result.artifactsWritten[0].find(".skos.ttl") != std::string::npos);
  CHECK(result.artifactsWritten[1].find(".owl.ttl") != std::string::npos);
  CHECK(result.artifactsWritten[2].find("report.txt") != std::string::npos);
  CHECK(result.leafLinks.has_value());
  CHECK(result.leafLinks->unmatchedLeaves.empty());
  CHECK(result.leafLinks->unmatchedHeadwords.empty());
}

TEST_CASE("decisions resolve the homonym workload") {
  TempDir dir("decisions");
  PipelineConfig config;
  config.transcriptPaths = {dir.write("heathen.txt", fixtures::kHeathen),
                            dir.write("christianity.txt", fixtures::kChristianity)};
  config.decisionsPath = dir.write("decisions.tsv", fixtures::kDecisions);
  PipelineResult result = run_pipeline(config);

  REQUIRE(result.decisionReport.has_value());
  CHECK(result.decisionReport->unresolvedHomonyms.empty());
  bool homonymWarning = false;
  for (const auto& d : result.diagnostics) {
    homonymWarning |= d.code == DiagCode::UnresolvedHomonym;
  }
  CHECK_FALSE(homonymWarning);
  CHECK(result.report.find("[applied] Feast merge") != std::string::npos);
  CHECK(result.report.find("[applied] Rites split") != std::string::npos);
}

TEST_CASE("rerunning identical inputs produces byte-identical artifacts") {
  TempDir dir("determinism");
  PipelineConfig config;
  config.transcriptPaths = {dir.write("minerology.txt", fixtures::kMinerology),
                            dir.write("heathen.txt", fixtures::kHeathen),
                            dir.write("christianity.txt", fixtures::kChristianity)};
  config.taxonomyPath = dir.write("taxonomy.txt", fixtures::kTaxonomySample);
  config.decisionsPath = dir.write("decisions.tsv", fixtures::kDecisions);
  config.owlMode = OwlChoice::Axiom;

  config.outputDir = (dir.path / "one").string();
  PipelineResult first = run_pipeline(config);
  config.outputDir = (dir.path / "two").string();
  PipelineResult second = run_pipeline(config);

  REQUIRE(first.artifactsWritten.size() == 3);
  REQUIRE(second.artifactsWritten.size() == 3);
  for (size_t i = 0; i < first.artifactsWritten.size(); ++i) {
    CHECK(slurp(first.artifactsWritten[i]) == slurp(second.artifactsWritten[i]));
  }
  CHECK(first.report == second.report);
}

TEST_CASE("direct owl on a jepd-violating taxonomy is an error but keeps skos") {
  TempDir dir("refusal");
  PipelineConfig config;
  config.transcriptPaths = {dir.write("minerology.txt", fixtures::kMinerology)};
  config.taxonomyPath = dir.write("taxonomy.txt", fixtures::kTaxonomyDuplicated);
  config.owlMode = OwlChoice::Direct;
  config.outputDir = (dir.path / "out").string();
  PipelineResult result = run_pipeline(config);

  CHECK(result.exitCode == 2);
  bool refused = false;
  for (const auto& d : result.diagnostics) {
    refused |= d.code == DiagCode::JepdViolationInDirectMap;
  }
  CHECK(refused);
  CHECK_FALSE(result.skosTurtle.empty());
  CHECK(result.owlTurtle.empty());
}

TEST_CASE("missing files surface as io errors") {
  PipelineConfig config;
  config.transcriptPaths = {"/nonexistent/chambers.txt"};
  PipelineResult result = run_pipeline(config);
  CHECK(result.exitCode == 2);
  REQUIRE_FALSE(result.diagnostics.empty());
  CHECK(result.diagnostics[0].code == DiagCode::IoError);
}

TEST_CASE("homonym table is deterministic and header-always") {
  CHECK(report_homonyms_table(ConceptScheme{}) == "label\toccurrences\tcontexts\n");

  TempDir dir("table");
  PipelineConfig config;
  config.transcriptPaths = {dir.write("heathen.txt", fixtures::kHeathen),
                            dir.write("christianity.txt", fixtures::kChristianity)};
  PipelineResult result = run_pipeline(config);
  std::string table = report_homonyms_table(result.scheme);
  size_t rows = 0;
  for (char c : table) rows += c == '\n';
  CHECK(rows == 1 + find_homonyms(result.scheme).size());
  CHECK(table.find("Feast\t2\t") != std::string::npos);
}
