#include "chambers/disambig.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chambers/textutil.hpp"

namespace chambers {

const char* to_string(DecisionStatus s) {
  switch (s) {
    case DecisionStatus::Applied: return "applied";
    case DecisionStatus::Ignored: return "ignored";
    case DecisionStatus::Unmatched: return "unmatched";
    case DecisionStatus::Conflicting: return "conflicting";
  }
  return "ignored";
}

namespace {

std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

DecisionSet parse_decisions(std::string_view text, std::string sourceFile) {
  DecisionSet set;
  set.sourceFile = sourceFile;
  std::set<std::string> seenLabels;
  int lineNo = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    bool last = end == std::string_view::npos;
    if (last) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++lineNo;
    std::string line(raw);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_all_whitespace(line) || line[0] == '#') {
      if (last) break;
      continue;
    }
    std::vector<std::string> cols = split_on(line, '\t');
    if (cols.size() != 4) {
      throw DiagnosticError(DiagCode::BadDecisionFile,
                            "expected 4 tab-separated columns, got " +
                                std::to_string(cols.size()),
                            {lineNo, 1}, sourceFile);
    }
    DecisionEntry entry;
    entry.label = trim(cols[0]);
    entry.rationale = trim(cols[3]);
    entry.line = lineNo;
    if (entry.label.empty()) {
      throw DiagnosticError(DiagCode::BadDecisionFile, "decision has an empty label",
                            {lineNo, 1}, sourceFile);
    }
    std::string action = fold_case(trim(cols[1]));
    if (action == "merge") {
      entry.action = DecisionAction::Merge;
      entry.targetLabel = trim(cols[2]);
      if (entry.targetLabel.empty()) {
        throw DiagnosticError(DiagCode::BadDecisionFile,
                              "merge decision for \"" + entry.label + "\" needs a target label",
                              {lineNo, 1}, sourceFile);
      }
    } else if (action == "split") {
      entry.action = DecisionAction::Split;
      std::string qualifiers = trim(cols[2]);
      if (!qualifiers.empty()) {
        for (const std::string& pair : split_on(qualifiers, ';')) {
          std::string trimmed = trim(pair);
          if (trimmed.empty()) continue;
          size_t eq = trimmed.find('=');
          if (eq == std::string::npos || eq == 0 || eq + 1 == trimmed.size()) {
            throw DiagnosticError(DiagCode::BadDecisionFile,
                                  "split qualifier must be conceptId=qualifier: " + trimmed,
                                  {lineNo, 1}, sourceFile);
          }
          entry.qualifiers[trim(trimmed.substr(0, eq))] = trim(trimmed.substr(eq + 1));
        }
      }
    } else {
      throw DiagnosticError(DiagCode::BadDecisionFile,
                            "action must be merge or split, got \"" + cols[1] + "\"",
                            {lineNo, 1}, sourceFile);
    }
    if (!seenLabels.insert(fold_case(entry.label)).second) {
      throw DiagnosticError(DiagCode::DuplicateDecision,
                            "more than one decision for label \"" + entry.label + "\"",
                            {lineNo, 1}, sourceFile);
    }
    set.entries.push_back(std::move(entry));
    if (last) break;
  }
  return set;
}

namespace {

std::vector<size_t> occurrences_of(const ConceptScheme& scheme, const std::string& foldedLabel) {
  std::vector<size_t> hits;
  for (size_t i = 0; i < scheme.concepts.size(); ++i) {
    if (fold_case(scheme.concepts[i].prefLabel) == foldedLabel) hits.push_back(i);
  }
  return hits;
}

bool label_present(const ConceptScheme& scheme, const std::string& foldedLabel) {
  return !occurrences_of(scheme, foldedLabel).empty();
}

bool split_form_present(const ConceptScheme& scheme, const std::string& foldedLabel) {
  std::string prefix = foldedLabel + " (";
  for (const auto& c : scheme.concepts) {
    if (fold_case(c.prefLabel).rfind(prefix, 0) == 0) return true;
  }
  return false;
}

bool broader_has_cycle(const std::vector<Relation>& relations) {
  std::map<std::string, std::vector<std::string>> up;
  for (const auto& r : relations) {
    if (r.kind == RelationKind::Broader) up[r.subject].push_back(r.object);
  }
  std::map<std::string, int> color;
  auto dfs = [&](auto&& self, const std::string& id) -> bool {
    int& c = color[id];
    if (c == 1) return true;
    if (c == 2) return false;
    c = 1;
    for (const auto& next : up[id]) {
      if (self(self, next)) return true;
    }
    c = 2;
    return false;
  };
  for (const auto& [id, _] : up) {
    if (dfs(dfs, id)) return true;
  }
  return false;
}

void merge_string_sets(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& v : from) {
    auto it = std::lower_bound(into.begin(), into.end(), v);
    if (it == into.end() || *it != v) into.insert(it, v);
  }
}

DecisionOutcome apply_merge(ConceptScheme& scheme, const DecisionEntry& entry) {
  DecisionOutcome outcome{entry.label, DecisionAction::Merge, DecisionStatus::Ignored, ""};
  std::string folded = fold_case(entry.label);
  std::vector<size_t> hits = occurrences_of(scheme, folded);

  if (hits.empty()) {
    if (label_present(scheme, fold_case(entry.targetLabel))) {
      outcome.detail = "target label already present; nothing to merge";
      return outcome;
    }
    outcome.status = DecisionStatus::Unmatched;
    outcome.detail = "no concept carries this label";
    return outcome;
  }
  if (hits.size() == 1) {
    Concept& only = scheme.concepts[hits.front()];
    if (fold_case(only.prefLabel) == fold_case(entry.targetLabel)) {
      outcome.detail = "a single concept already carries the label";
      return outcome;
    }
    merge_string_sets(only.altLabels, {only.prefLabel});
    only.prefLabel = entry.targetLabel;
    outcome.status = DecisionStatus::Applied;
    outcome.detail = "renamed " + only.id + " to \"" + entry.targetLabel + "\"";
    return outcome;
  }
  for (size_t idx : hits) {
    if (scheme.concepts[idx].kind == ConceptKind::Headword) {
      outcome.status = DecisionStatus::Conflicting;
      outcome.detail = "cannot merge headword concept " + scheme.concepts[idx].id;
      return outcome;
    }
  }

  const std::string survivorId = scheme.concepts[hits.front()].id;
  std::set<std::string> absorbedIds;
  for (size_t k = 1; k < hits.size(); ++k) absorbedIds.insert(scheme.concepts[hits[k]].id);

  // Rewrite relations against a copy first; a merge that closes a loop in
  // the hierarchy is rejected without touching the scheme.
  std::vector<Relation> rewritten;
  std::set<Relation> seen;
  for (Relation r : scheme.relations) {
    if (absorbedIds.count(r.subject)) r.subject = survivorId;
    if (absorbedIds.count(r.object)) r.object = survivorId;
    if (r.subject == r.object) continue;
    if (seen.insert(r).second) rewritten.push_back(std::move(r));
  }
  if (broader_has_cycle(rewritten)) {
    outcome.status = DecisionStatus::Conflicting;
    outcome.detail = "merge would create a broader-term cycle";
    return outcome;
  }

  Concept& survivor = scheme.concepts[hits.front()];
  for (size_t k = 1; k < hits.size(); ++k) {
    const Concept& absorbed = scheme.concepts[hits[k]];
    merge_string_sets(survivor.altLabels, absorbed.altLabels);
    if (fold_case(absorbed.prefLabel) != fold_case(entry.targetLabel)) {
      merge_string_sets(survivor.altLabels, {absorbed.prefLabel});
    }
    merge_string_sets(survivor.domains, absorbed.domains);
    for (const auto& note : absorbed.notes) {
      if (std::find(survivor.notes.begin(), survivor.notes.end(), note) == survivor.notes.end()) {
        survivor.notes.push_back(note);
      }
    }
    survivor.openEnded = survivor.openEnded || absorbed.openEnded;
    if (!survivor.connective && absorbed.connective) survivor.connective = absorbed.connective;
  }
  if (fold_case(survivor.prefLabel) != fold_case(entry.targetLabel)) {
    merge_string_sets(survivor.altLabels, {survivor.prefLabel});
  }
  survivor.prefLabel = entry.targetLabel;
  // Drop the target label from altLabels if an earlier union put it there.
  survivor.altLabels.erase(
      std::remove_if(survivor.altLabels.begin(), survivor.altLabels.end(),
                     [&](const std::string& alt) {
                       return fold_case(alt) == fold_case(entry.targetLabel);
                     }),
      survivor.altLabels.end());

  scheme.relations = std::move(rewritten);
  std::vector<Concept> kept;
  kept.reserve(scheme.concepts.size());
  for (auto& c : scheme.concepts) {
    if (!absorbedIds.count(c.id)) kept.push_back(std::move(c));
  }
  scheme.concepts = std::move(kept);

  outcome.status = DecisionStatus::Applied;
  outcome.detail = "merged " + std::to_string(hits.size()) + " concepts into " + survivorId;
  return outcome;
}

DecisionOutcome apply_split(ConceptScheme& scheme, const DecisionEntry& entry) {
  DecisionOutcome outcome{entry.label, DecisionAction::Split, DecisionStatus::Ignored, ""};
  std::string folded = fold_case(entry.label);
  std::vector<size_t> hits = occurrences_of(scheme, folded);

  if (hits.empty()) {
    if (split_form_present(scheme, folded)) {
      outcome.detail = "qualified forms already present";
      return outcome;
    }
    outcome.status = DecisionStatus::Unmatched;
    outcome.detail = "no concept carries this label";
    return outcome;
  }
  if (hits.size() == 1 && entry.qualifiers.empty()) {
    outcome.detail = "only one occurrence; nothing ambiguous";
    return outcome;
  }
  if (!entry.qualifiers.empty()) {
    std::set<std::string> hitIds;
    for (size_t idx : hits) hitIds.insert(scheme.concepts[idx].id);
    for (size_t idx : hits) {
      if (!entry.qualifiers.count(scheme.concepts[idx].id)) {
        outcome.status = DecisionStatus::Conflicting;
        outcome.detail = "no qualifier given for concept " + scheme.concepts[idx].id;
        return outcome;
      }
    }
    for (const auto& [id, _] : entry.qualifiers) {
      if (!hitIds.count(id)) {
        outcome.status = DecisionStatus::Conflicting;
        outcome.detail = "qualifier names unknown concept " + id;
        return outcome;
      }
    }
  }

  for (size_t idx : hits) {
    Concept& c = scheme.concepts[idx];
    std::string qualifier;
    auto it = entry.qualifiers.find(c.id);
    if (it != entry.qualifiers.end()) {
      qualifier = it->second;
    } else {
      // The printed context is the domain, so that is the default.
      qualifier = c.domains.empty() ? "unknown" : display_case(c.domains.front());
    }
    merge_string_sets(c.altLabels, {c.prefLabel});
    c.prefLabel = c.prefLabel + " (" + qualifier + ")";
  }
  outcome.status = DecisionStatus::Applied;
  outcome.detail = "qualified " + std::to_string(hits.size()) + " occurrences";
  return outcome;
}

}  // namespace

std::pair<ConceptScheme, ApplicationReport> apply_decisions(const ConceptScheme& scheme,
                                                            const DecisionSet& decisions) {
  ConceptScheme result = scheme;
  ApplicationReport report;
  for (const auto& entry : decisions.entries) {
    switch (entry.action) {
      case DecisionAction::Merge:
        report.outcomes.push_back(apply_merge(result, entry));
        break;
      case DecisionAction::Split:
        report.outcomes.push_back(apply_split(result, entry));
        break;
    }
  }
  report.unresolvedHomonyms = find_homonyms(result);
  return {std::move(result), std::move(report)};
}

}  // namespace chambers
