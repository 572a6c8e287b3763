#include "chambers/taxonomy.hpp"


#include "chambers/textutil.hpp"

namespace chambers {

namespace {

struct OutlineLine {
  int depth = 0;
  std::string label;
  std::optional<std::string> principle;
  int lineNo = 0;
};

void collect_leaves(const TaxonNode& node, std::vector<std::string>& path,
                    std::vector<std::pair<std::string, std::vector<std::string>>>& leaves) {
  path.push_back(node.label);
  if (node.isLeaf()) {
    leaves.emplace_back(node.label, path);
  } else {
    for (const auto& child : node.children) collect_leaves(child, path, leaves);
  }
  path.pop_back();
}

}  // namespace

TaxonomyTree parse_taxonomy(std::string_view outline, std::string sourceName) {
  std::vector<OutlineLine> lines;
  int lineNo = 0;
  size_t start = 0;
  while (start <= outline.size()) {
    size_t end = outline.find('\n', start);
    if (end == std::string_view::npos) end = outline.size();
    std::string_view raw = outline.substr(start, end - start);
    bool last = end == outline.size();
    start = end + 1;
    ++lineNo;
    if (is_all_whitespace(raw)) {
      if (last) break;
      continue;
    }
    size_t indent = 0;
    while (indent < raw.size() && raw[indent] == ' ') ++indent;
    if (indent < raw.size() && raw[indent] == '\t') {
      throw DiagnosticError(DiagCode::BadIndent, "tabs are not allowed in the outline indent",
                            {lineNo, static_cast<int>(indent) + 1}, sourceName);
    }
    if (indent % 2 != 0) {
      throw DiagnosticError(DiagCode::BadIndent, "indentation must be two spaces per level",
                            {lineNo, 1}, sourceName);
    }
    OutlineLine line;
    line.depth = static_cast<int>(indent / 2);
    line.lineNo = lineNo;
    std::string content = trim(raw.substr(indent));
    size_t bar = content.find(" | ");
    if (bar != std::string::npos) {
      line.label = trim(content.substr(0, bar));
      std::string principle = trim(content.substr(bar + 3));
      if (!principle.empty()) line.principle = principle;
    } else {
      line.label = content;
    }
    lines.push_back(std::move(line));
    if (last) break;
  }

  if (lines.empty()) {
    throw DiagnosticError(DiagCode::EmptyOutline, "the taxonomy outline is empty", {1, 1},
                          sourceName);
  }
  if (lines.front().depth != 0 || lines.front().label != "Knowledge") {
    throw DiagnosticError(DiagCode::RootMismatch,
                          "the outline must start with \"Knowledge\" at depth 0",
                          {lines.front().lineNo, 1}, sourceName);
  }

  TaxonomyTree tree;
  tree.root.label = lines.front().label;
  tree.root.dividingPrinciple = lines.front().principle;
  tree.root.line = lines.front().lineNo;

  std::vector<TaxonNode*> stack{&tree.root};  // stack[d] = open node at depth d
  for (size_t i = 1; i < lines.size(); ++i) {
    const OutlineLine& line = lines[i];
    if (line.depth == 0) {
      throw DiagnosticError(DiagCode::MultipleRoots,
                            "second depth-0 node \"" + line.label + "\"", {line.lineNo, 1},
                            sourceName);
    }
    int maxDepth = static_cast<int>(stack.size());
    if (line.depth > maxDepth) {
      throw DiagnosticError(DiagCode::IndentJump,
                            "indentation jumps more than one level at \"" + line.label + "\"",
                            {line.lineNo, 1}, sourceName);
    }
    stack.resize(line.depth);
    TaxonNode node;
    node.label = line.label;
    node.dividingPrinciple = line.principle;
    node.line = line.lineNo;
    TaxonNode* parent = stack.back();
    parent->children.push_back(std::move(node));
    stack.push_back(&parent->children.back());
  }

  std::vector<std::string> path;
  collect_leaves(tree.root, path, tree.leaves);
  for (const auto& [label, leafPath] : tree.leaves) {
    tree.leafIndex[label].push_back(leafPath);
  }
  return tree;
}

std::vector<JepdViolation> validate_jepd(const TaxonomyTree& tree) {
  std::vector<JepdViolation> violations;
  for (const auto& [label, paths] : tree.leafIndex) {
    if (paths.size() < 2) continue;
    violations.push_back({label, paths});
  }
  return violations;  // leafIndex is a map, so output is sorted by label
}

LeafLinkReport link_leaves(const TaxonomyTree& tree, const ConceptScheme& scheme) {
  LeafLinkReport report;
  // One-to-one greedy matching in document order keeps the partition exact
  // even when a leaf label is duplicated.
  std::vector<std::pair<std::string, std::string>> headwords;  // folded label, id
  for (const auto& id : scheme.topConcepts) {
    const Concept* c = scheme.find(id);
    if (c) headwords.emplace_back(fold_label(c->prefLabel), c->id);
  }
  std::vector<bool> taken(headwords.size(), false);

  for (const auto& [label, path] : tree.leaves) {
    std::string folded = fold_label(label);
    bool matched = false;
    for (size_t i = 0; i < headwords.size(); ++i) {
      if (!taken[i] && headwords[i].first == folded) {
        taken[i] = true;
        report.matched.push_back({label, path, headwords[i].second});
        matched = true;
        break;
      }
    }
    if (!matched) report.unmatchedLeaves.emplace_back(label, path);
  }
  for (size_t i = 0; i < headwords.size(); ++i) {
    if (!taken[i]) report.unmatchedHeadwords.push_back(headwords[i].second);
  }
  return report;
}

}  // namespace chambers
