#include "chambers/kos.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chambers/textutil.hpp"

namespace chambers {

const Concept* ConceptScheme::find(std::string_view id) const {
  for (const auto& c : concepts) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

Concept* ConceptScheme::find(std::string_view id) {
  for (auto& c : concepts) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

bool ConceptScheme::hasRelation(std::string_view subject, std::string_view object,
                                RelationKind kind) const {
  for (const auto& r : relations) {
    if (r.kind == kind && r.subject == subject && r.object == object) return true;
  }
  return false;
}

std::vector<const Relation*> ConceptScheme::broaderOf(std::string_view subject) const {
  std::vector<const Relation*> out;
  for (const auto& r : relations) {
    if (r.kind == RelationKind::Broader && r.subject == subject) out.push_back(&r);
  }
  return out;
}

namespace {

void sorted_insert(std::vector<std::string>& values, const std::string& value) {
  auto it = std::lower_bound(values.begin(), values.end(), value);
  if (it == values.end() || *it != value) values.insert(it, value);
}

class SchemeBuilder {
 public:
  explicit SchemeBuilder(ConceptScheme& scheme) : scheme_(scheme) {}

  std::string addConcept(const std::string& domain, Concept entry, SourcePos pos,
                         const std::string& sourceName) {
    std::string domainSlug = slug(domain);
    std::string labelSlug = slug(entry.prefLabel);
    if (domainSlug.empty() || labelSlug.empty()) {
      throw DiagnosticError(DiagCode::EmptySlug,
                            "label \"" + entry.prefLabel + "\" reduces to an empty identifier",
                            pos, sourceName);
    }
    std::string key = domainSlug + "/" + labelSlug;
    int n = ++used_[key];
    entry.id = n == 1 ? key : key + "-" + std::to_string(n);
    sorted_insert(entry.domains, domain);
    scheme_.concepts.push_back(std::move(entry));
    return scheme_.concepts.back().id;
  }

  void addBroader(const std::string& child, const std::string& parent) {
    addRelation({child, parent, RelationKind::Broader});
    addRelation({parent, child, RelationKind::Narrower});
  }

  void addRelated(const std::string& a, const std::string& b) {
    addRelation({a, b, RelationKind::Related});
    addRelation({b, a, RelationKind::Related});
  }

 private:
  void addRelation(Relation r) {
    if (seen_.insert(r).second) scheme_.relations.push_back(std::move(r));
  }

  ConceptScheme& scheme_;
  std::map<std::string, int> used_;
  std::set<Relation> seen_;
};

// Anonymous groupings collapse into the owning facet concept: their
// instances hang directly under it and their open-list flag folds into it.
bool walk_facet(SchemeBuilder& builder, ConceptScheme& scheme, const DomainParseTree& tree,
                const FacetNode& node, const std::string& parentId);

bool walk_grouping(SchemeBuilder& builder, ConceptScheme& scheme, const DomainParseTree& tree,
                   const FacetNode& node, const std::string& ownerId) {
  bool openEnded = node.listOpenEnded;
  for (const auto& inst : node.instances) {
    Concept c;
    c.prefLabel = inst.label;
    c.kind = ConceptKind::Instance;
    c.openEnded = inst.openEnded;
    if (inst.emendation) c.notes.push_back(*inst.emendation);
    std::string id = builder.addConcept(tree.headword, std::move(c), inst.pos, tree.sourceName);
    builder.addBroader(id, ownerId);
  }
  for (const auto& child : node.children) {
    if (child.groupIndex >= 2) {
      openEnded = walk_grouping(builder, scheme, tree, child, ownerId) || openEnded;
    } else {
      walk_facet(builder, scheme, tree, child, ownerId);
    }
  }
  return openEnded;
}

bool walk_facet(SchemeBuilder& builder, ConceptScheme& scheme, const DomainParseTree& tree,
                const FacetNode& node, const std::string& parentId) {
  Concept facet;
  facet.prefLabel = node.facetLabel;
  facet.kind = ConceptKind::Facet;
  facet.origin = node.origin;
  if (!node.connective.empty()) facet.connective = node.connective;
  if (node.altFacetLabel) sorted_insert(facet.altLabels, *node.altFacetLabel);
  if (node.aspect) facet.notes.push_back("entry-head aspect in small capitals");
  if (node.origin == Origin::Interpolated) {
    facet.notes.push_back("interpolated heading supplied by the transcriber");
  }
  if (node.ordinalSection) {
    facet.notes.push_back("ordinal section " + std::to_string(*node.ordinalSection));
  }
  std::string id = builder.addConcept(tree.headword, std::move(facet), node.pos, tree.sourceName);
  builder.addBroader(id, parentId);

  bool openEnded = node.listOpenEnded;
  for (const auto& inst : node.instances) {
    Concept c;
    c.prefLabel = inst.label;
    c.kind = ConceptKind::Instance;
    c.openEnded = inst.openEnded;
    if (inst.emendation) c.notes.push_back(*inst.emendation);
    std::string instId = builder.addConcept(tree.headword, std::move(c), inst.pos, tree.sourceName);
    builder.addBroader(instId, id);
  }
  for (const auto& child : node.children) {
    if (child.groupIndex >= 2) {
      openEnded = walk_grouping(builder, scheme, tree, child, id) || openEnded;
    } else {
      walk_facet(builder, scheme, tree, child, id);
    }
  }
  if (Concept* self = scheme.find(id)) {
    self->openEnded = openEnded;
    if (openEnded) self->notes.push_back("list open-ended: \"&c.\"");
  }
  return false;
}

}  // namespace

ConceptScheme build_scheme(const std::vector<DomainParseTree>& trees) {
  // Ids are assigned in headword order so the result is independent of the
  // order entries were read in.
  std::vector<const DomainParseTree*> ordered;
  ordered.reserve(trees.size());
  for (const auto& t : trees) ordered.push_back(&t);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const DomainParseTree* a, const DomainParseTree* b) {
                     std::string fa = fold_case(a->headword);
                     std::string fb = fold_case(b->headword);
                     return std::tie(fa, a->headword) < std::tie(fb, b->headword);
                   });
  for (size_t i = 1; i < ordered.size(); ++i) {
    if (fold_case(ordered[i]->headword) == fold_case(ordered[i - 1]->headword)) {
      throw DiagnosticError(DiagCode::DuplicateHeadword,
                            "two entries share the headword \"" + ordered[i]->headword + "\"",
                            ordered[i]->pos, ordered[i]->sourceName);
    }
  }

  ConceptScheme scheme;
  SchemeBuilder builder(scheme);
  for (const DomainParseTree* tree : ordered) {
    Concept hw;
    hw.prefLabel = tree->headword;
    hw.kind = ConceptKind::Headword;
    if (tree->altName) sorted_insert(hw.altLabels, *tree->altName);
    hw.notes = tree->notes;
    std::string hwId = builder.addConcept(tree->headword, std::move(hw), tree->pos, tree->sourceName);
    scheme.topConcepts.push_back(hwId);

    for (const auto& area : tree->scopeAreas) {
      Concept c;
      c.prefLabel = area;
      c.kind = ConceptKind::Instance;
      c.notes.push_back("area of study introduced by \"including\"");
      std::string id = builder.addConcept(tree->headword, std::move(c), tree->pos, tree->sourceName);
      builder.addRelated(id, hwId);
    }
    for (const auto& aspect : tree->relatedAspects) {
      Concept c;
      c.prefLabel = aspect;
      c.kind = ConceptKind::Instance;
      c.notes.push_back("standalone entry-head aspect in small capitals");
      std::string id = builder.addConcept(tree->headword, std::move(c), tree->pos, tree->sourceName);
      builder.addRelated(id, hwId);
    }
    for (const auto& facet : tree->facets) {
      walk_facet(builder, scheme, *tree, facet, hwId);
    }
  }
  return scheme;
}

std::vector<Diagnostic> check_scheme(const ConceptScheme& scheme) {
  std::vector<Diagnostic> diags;
  auto report = [&](DiagCode code, std::string msg) {
    diags.push_back({Severity::Error, code, std::move(msg), "", {}});
  };

  std::set<std::string> ids;
  for (const auto& c : scheme.concepts) {
    if (c.prefLabel.empty()) report(DiagCode::EmptyLabel, "concept \"" + c.id + "\" has no label");
    if (!ids.insert(c.id).second) {
      report(DiagCode::DuplicateConceptId, "duplicate concept id \"" + c.id + "\"");
    }
    if (c.kind == ConceptKind::Headword &&
        (c.domains.size() != 1 || c.domains.front() != c.prefLabel)) {
      report(DiagCode::BadTopConcept,
             "headword \"" + c.id + "\" must belong to exactly its own domain");
    }
  }

  std::set<Relation> relationSet(scheme.relations.begin(), scheme.relations.end());
  for (const auto& r : scheme.relations) {
    if (!ids.count(r.subject) || !ids.count(r.object)) {
      report(DiagCode::DanglingRelation,
             "relation endpoint missing: " + r.subject + " -> " + r.object);
      continue;
    }
    switch (r.kind) {
      case RelationKind::Broader:
        if (!relationSet.count({r.object, r.subject, RelationKind::Narrower})) {
          report(DiagCode::MissingReciprocal,
                 "broader(" + r.subject + ", " + r.object + ") lacks its narrower mirror");
        }
        break;
      case RelationKind::Narrower:
        if (!relationSet.count({r.object, r.subject, RelationKind::Broader})) {
          report(DiagCode::MissingReciprocal,
                 "narrower(" + r.subject + ", " + r.object + ") lacks its broader mirror");
        }
        break;
      case RelationKind::Related:
        if (!relationSet.count({r.object, r.subject, RelationKind::Related})) {
          report(DiagCode::AsymmetricRelated,
                 "related(" + r.subject + ", " + r.object + ") is not symmetric");
        }
        break;
    }
  }

  // Broader edges must form a DAG.
  std::map<std::string, std::vector<std::string>> broader;
  for (const auto& r : scheme.relations) {
    if (r.kind == RelationKind::Broader) broader[r.subject].push_back(r.object);
  }
  std::map<std::string, int> color;  // 0 new, 1 active, 2 done
  std::vector<std::string> cycleIds;
  auto dfs = [&](auto&& self, const std::string& id) -> bool {
    int& c = color[id];
    if (c == 1) {
      cycleIds.push_back(id);
      return true;
    }
    if (c == 2) return false;
    c = 1;
    for (const auto& up : broader[id]) {
      if (self(self, up)) return true;
    }
    c = 2;
    return false;
  };
  for (const auto& c : scheme.concepts) {
    if (dfs(dfs, c.id)) {
      report(DiagCode::BroaderCycle, "broader hierarchy contains a cycle through \"" +
                                         cycleIds.front() + "\"");
      break;
    }
  }

  for (const auto& id : scheme.topConcepts) {
    const Concept* c = scheme.find(id);
    if (!c) {
      report(DiagCode::BadTopConcept, "top concept \"" + std::string(id) + "\" does not exist");
    } else if (c->kind != ConceptKind::Headword) {
      report(DiagCode::BadTopConcept, "top concept \"" + std::string(id) + "\" is not a headword");
    }
  }

  // Reachability: every concept either descends from a top concept through
  // narrower edges or touches a headword through a related edge.
  std::set<std::string> reachable(scheme.topConcepts.begin(), scheme.topConcepts.end());
  std::map<std::string, std::vector<std::string>> narrower;
  for (const auto& r : scheme.relations) {
    if (r.kind == RelationKind::Narrower) narrower[r.subject].push_back(r.object);
  }
  std::vector<std::string> frontier(reachable.begin(), reachable.end());
  while (!frontier.empty()) {
    std::string id = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& down : narrower[id]) {
      if (reachable.insert(down).second) frontier.push_back(down);
    }
  }
  std::set<std::string> headwords;
  for (const auto& c : scheme.concepts) {
    if (c.kind == ConceptKind::Headword) headwords.insert(c.id);
  }
  for (const auto& c : scheme.concepts) {
    if (reachable.count(c.id)) continue;
    bool attached = false;
    for (const auto& r : scheme.relations) {
      if (r.kind == RelationKind::Related && r.subject == c.id && headwords.count(r.object)) {
        attached = true;
        break;
      }
    }
    if (!attached) {
      report(DiagCode::UnreachableConcept,
             "concept \"" + c.id + "\" is not reachable from any top concept");
    }
  }
  return diags;
}

std::vector<std::string> facet_path(const ConceptScheme& scheme, std::string_view conceptId) {
  std::vector<std::string> path;
  std::string current(conceptId);
  std::set<std::string> seen;
  while (seen.insert(current).second) {
    auto ups = scheme.broaderOf(current);
    if (ups.empty()) break;
    const Concept* parent = scheme.find(ups.front()->object);
    if (!parent || parent->kind == ConceptKind::Headword) break;
    path.push_back(parent->prefLabel);
    current = parent->id;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<AmbiguityRecord> find_homonyms(const ConceptScheme& scheme) {
  std::map<std::string, std::vector<const Concept*>> groups;
  for (const auto& c : scheme.concepts) {
    groups[fold_case(c.prefLabel)].push_back(&c);
  }
  std::vector<AmbiguityRecord> records;
  for (const auto& [folded, members] : groups) {
    if (members.size() < 2) continue;
    AmbiguityRecord record;
    record.label = members.front()->prefLabel;
    for (const Concept* c : members) {
      Occurrence occ;
      occ.conceptId = c->id;
      occ.domain = c->domains.empty() ? "" : c->domains.front();
      occ.facetPath = facet_path(scheme, c->id);
      record.occurrences.push_back(std::move(occ));
    }
    records.push_back(std::move(record));
  }
  // std::map already ordered the groups by folded label.
  return records;
}

}  // namespace chambers
