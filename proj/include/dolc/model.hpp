#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dolc/declaration.hpp"
#include "dolc/diagnostics.hpp"
#include "dolc/iri.hpp"
#include "dolc/sentences.hpp"

namespace dolc {

// Owning pointer with value semantics (deep copy, deep equality), used to
// build the recursive expression tree.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT: implicit by design of the tree builders
  Box(const Box& o) : ptr_(std::make_unique<T>(*o.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& o) {
    if (this != &o) ptr_ = std::make_unique<T>(*o.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  bool operator==(const Box& o) const { return *ptr_ == *o.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

struct SymbolRename {
  Iri from;
  Iri to;

  bool operator==(const SymbolRename&) const = default;
};

struct BasicOntologyBlock {
  LogicDeclaration decl;  // effective declaration where the block occurs
  std::string text;       // verbatim source
  SourceSpan span;        // of `text` within the document
  std::optional<SignatureAndSentences> extracted;

  // Structural identity: declaration and text.
  bool operator==(const BasicOntologyBlock& o) const { return decl == o.decl && text == o.text; }
};

struct OntologyExpression;

namespace expr {

struct Reference {
  Iri iri;
  bool operator==(const Reference&) const = default;
};

struct Inline {
  BasicOntologyBlock block;
  bool operator==(const Inline&) const = default;
};

// `base then ext`
struct Extension {
  Box<OntologyExpression> base;
  Box<OntologyExpression> ext;
  bool operator==(const Extension&) const = default;
};

// `left and right`
struct Union {
  Box<OntologyExpression> left;
  Box<OntologyExpression> right;
  bool operator==(const Union&) const = default;
};

// `base translate with [mapping][, a ↦ b ...]`
struct Translation {
  Box<OntologyExpression> base;
  std::optional<Iri> mapping;
  std::vector<SymbolRename> renames;
  bool operator==(const Translation&) const = default;
};

// `base project with mapping`
struct Projection {
  Box<OntologyExpression> base;
  Iri mapping;
  bool operator==(const Projection&) const = default;
};

// `then language L logic G syntax S : inner` (the shift part only)
struct ContextShift {
  LogicDeclaration decl;
  Box<OntologyExpression> inner;
  bool operator==(const ContextShift&) const = default;
};

}  // namespace expr

struct OntologyExpression {
  using Node = std::variant<expr::Reference, expr::Inline, expr::Extension, expr::Union,
                            expr::Translation, expr::Projection, expr::ContextShift>;
  Node node;
  SourceSpan span;

  bool operator==(const OntologyExpression& o) const { return node == o.node; }
};

OntologyExpression make_reference(Iri iri);
OntologyExpression make_inline(BasicOntologyBlock block);
OntologyExpression make_extension(OntologyExpression base, OntologyExpression ext);
OntologyExpression make_union(OntologyExpression left, OntologyExpression right);
OntologyExpression make_translation(OntologyExpression base, std::optional<Iri> mapping,
                                    std::vector<SymbolRename> renames = {});
OntologyExpression make_projection(OntologyExpression base, Iri mapping);
OntologyExpression make_context_shift(LogicDeclaration decl, OntologyExpression inner);

struct OntologyDefinition {
  Iri iri;
  OntologyExpression body;
  LogicDeclaration context;  // top-level declaration in force at the definition
  SourceSpan span;
  std::optional<SignatureAndSentences> flattened;  // set by the analyzer

  bool operator==(const OntologyDefinition& o) const {
    return iri == o.iri && body == o.body && context == o.context;
  }
};

enum class LinkKind {
  interpretation,
  alignment,
  import,
  conservative_extension_claim,
  definitional_extension_claim,
};

std::string_view to_string(LinkKind k);

struct SymbolMap {
  std::optional<Iri> translation;
  std::vector<SymbolRename> renames;

  bool operator==(const SymbolMap&) const = default;
};

enum class CorrespondenceRelation { equivalence, subsumes, subsumed_by };

std::string_view to_string(CorrespondenceRelation r);

struct Correspondence {
  Iri left;
  CorrespondenceRelation relation = CorrespondenceRelation::equivalence;
  ClassExpr right;

  bool operator==(const Correspondence&) const = default;
};

struct CorrespondenceList {
  std::vector<Correspondence> entries;

  bool operator==(const CorrespondenceList&) const = default;
};

struct Link {
  Iri iri;
  LinkKind kind = LinkKind::interpretation;
  OntologyExpression source;
  OntologyExpression target;
  std::variant<SymbolMap, CorrespondenceList> payload;
  LogicDeclaration context;
  SourceSpan span;

  bool operator==(const Link& o) const {
    return iri == o.iri && kind == o.kind && source == o.source && target == o.target &&
           payload == o.payload && context == o.context;
  }
};

struct LogicDeclarationItem {
  LogicDeclaration decl;
  SourceSpan span;

  bool operator==(const LogicDeclarationItem& o) const { return decl == o.decl; }
};

using Item = std::variant<OntologyDefinition, Link, LogicDeclarationItem>;

SourceSpan item_span(const Item& item);

struct DistributedOntology {
  std::optional<Iri> iri;
  PrefixMap prefixes;
  std::vector<Item> items;
  bool analyzed = false;  // set once the analyzer has run; not part of identity

  const OntologyDefinition* find_definition(const Iri& iri) const;
  const Link* find_link(const Iri& iri) const;

  bool operator==(const DistributedOntology& o) const {
    return iri == o.iri && prefixes == o.prefixes && items == o.items;
  }
};

// ---------------------------------------------------------------------------
// Part enumeration. Basic ontologies and distributed ontologies share one
// view: a distributed ontology's entities are its ontologies and its
// sentences are its links.

enum class PartKind { distributed_ontology, ontology, link, entity, sentence };

std::string_view to_string(PartKind k);

struct PartRow {
  Iri iri;
  PartKind kind = PartKind::entity;
  std::optional<EntityKind> entity_kind;
  Iri owner;  // containing ontology; empty for the document row

  bool operator==(const PartRow&) const = default;
};

struct OntologyParts {
  PartRow self;
  std::vector<PartRow> entities;
  std::vector<PartRow> sentences;
};

// `<ontology-iri>//sentence/<n>`, n counted from 1.
Iri sentence_iri(const Iri& ontology, std::size_t index);

OntologyParts ontology_parts(const OntologyDefinition& def);
OntologyParts ontology_parts(const DistributedOntology& d);

// One row per document, ontology definition, link, entity and sentence, with
// pairwise distinct IRIs (the first row for an IRI wins).
std::vector<PartRow> collect_parts(const DistributedOntology& d);
std::vector<PartRow> collect_parts(const OntologyDefinition& def);

}  // namespace dolc
