#include "dolc/model.hpp"

#include <set>

namespace dolc {

OntologyExpression make_reference(Iri iri) { return OntologyExpression{expr::Reference{std::move(iri)}, {}}; }

OntologyExpression make_inline(BasicOntologyBlock block) {
  SourceSpan span = block.span;
  return OntologyExpression{expr::Inline{std::move(block)}, span};
}

OntologyExpression make_extension(OntologyExpression base, OntologyExpression ext) {
  return OntologyExpression{expr::Extension{std::move(base), std::move(ext)}, {}};
}

OntologyExpression make_union(OntologyExpression left, OntologyExpression right) {
  return OntologyExpression{expr::Union{std::move(left), std::move(right)}, {}};
}

OntologyExpression make_translation(OntologyExpression base, std::optional<Iri> mapping,
                                    std::vector<SymbolRename> renames) {
  return OntologyExpression{expr::Translation{std::move(base), std::move(mapping), std::move(renames)}, {}};
}

OntologyExpression make_projection(OntologyExpression base, Iri mapping) {
  return OntologyExpression{expr::Projection{std::move(base), std::move(mapping)}, {}};
}

OntologyExpression make_context_shift(LogicDeclaration decl, OntologyExpression inner) {
  return OntologyExpression{expr::ContextShift{std::move(decl), std::move(inner)}, {}};
}

std::string_view to_string(LinkKind k) {
  switch (k) {
    case LinkKind::interpretation: return "interpretation";
    case LinkKind::alignment: return "alignment";
    case LinkKind::import: return "import";
    case LinkKind::conservative_extension_claim: return "conservative-extension-claim";
    case LinkKind::definitional_extension_claim: return "definitional-extension-claim";
  }
  return "interpretation";
}

std::string_view to_string(CorrespondenceRelation r) {
  switch (r) {
    case CorrespondenceRelation::equivalence: return "equivalence";
    case CorrespondenceRelation::subsumes: return "subsumes";
    case CorrespondenceRelation::subsumed_by: return "subsumed-by";
  }
  return "equivalence";
}

std::string_view to_string(PartKind k) {
  switch (k) {
    case PartKind::distributed_ontology: return "distributed-ontology";
    case PartKind::ontology: return "ontology";
    case PartKind::link: return "link";
    case PartKind::entity: return "entity";
    case PartKind::sentence: return "sentence";
  }
  return "entity";
}

SourceSpan item_span(const Item& item) {
  return std::visit([](const auto& i) { return i.span; }, item);
}

const OntologyDefinition* DistributedOntology::find_definition(const Iri& iri) const {
  for (const auto& item : items)
    if (auto* d = std::get_if<OntologyDefinition>(&item); d && d->iri == iri) return d;
  return nullptr;
}

const Link* DistributedOntology::find_link(const Iri& iri) const {
  for (const auto& item : items)
    if (auto* l = std::get_if<Link>(&item); l && l->iri == iri) return l;
  return nullptr;
}

Iri sentence_iri(const Iri& ontology, std::size_t index) {
  return Iri::parse(ontology.str() + "//sentence/" + std::to_string(index));
}

OntologyParts ontology_parts(const OntologyDefinition& def) {
  OntologyParts parts;
  parts.self = PartRow{def.iri, PartKind::ontology, std::nullopt, {}};
  if (!def.flattened) return parts;
  for (const auto& e : def.flattened->entities)
    parts.entities.push_back(PartRow{e.iri, PartKind::entity, e.kind, def.iri});
  for (std::size_t i = 0; i < def.flattened->sentences.size(); ++i)
    parts.sentences.push_back(PartRow{sentence_iri(def.iri, i + 1), PartKind::sentence, std::nullopt, def.iri});
  return parts;
}

OntologyParts ontology_parts(const DistributedOntology& d) {
  OntologyParts parts;
  Iri self = d.iri.value_or(Iri{});
  parts.self = PartRow{self, PartKind::distributed_ontology, std::nullopt, {}};
  for (const auto& item : d.items) {
    if (auto* def = std::get_if<OntologyDefinition>(&item))
      parts.entities.push_back(PartRow{def->iri, PartKind::ontology, std::nullopt, self});
    else if (auto* link = std::get_if<Link>(&item))
      parts.sentences.push_back(PartRow{link->iri, PartKind::link, std::nullopt, self});
  }
  return parts;
}

namespace {

void append_unique(std::vector<PartRow>& out, std::set<Iri>& seen, const PartRow& row) {
  if (row.iri.empty() || !seen.insert(row.iri).second) return;
  out.push_back(row);
}

}  // namespace

std::vector<PartRow> collect_parts(const OntologyDefinition& def) {
  std::vector<PartRow> out;
  std::set<Iri> seen;
  auto parts = ontology_parts(def);
  append_unique(out, seen, parts.self);
  for (const auto& r : parts.entities) append_unique(out, seen, r);
  for (const auto& r : parts.sentences) append_unique(out, seen, r);
  return out;
}

std::vector<PartRow> collect_parts(const DistributedOntology& d) {
  std::vector<PartRow> out;
  std::set<Iri> seen;
  auto doc = ontology_parts(d);
  append_unique(out, seen, doc.self);
  for (const auto& item : d.items) {
    if (auto* def = std::get_if<OntologyDefinition>(&item)) {
      auto parts = ontology_parts(*def);
      parts.self.owner = doc.self.iri;
      append_unique(out, seen, parts.self);
      for (const auto& r : parts.entities) append_unique(out, seen, r);
      for (const auto& r : parts.sentences) append_unique(out, seen, r);
    } else if (auto* link = std::get_if<Link>(&item)) {
      append_unique(out, seen, PartRow{link->iri, PartKind::link, std::nullopt, doc.self.iri});
    }
  }
  return out;
}

}  // namespace dolc
