#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dolc/iri.hpp"

namespace dolc {

enum class EntityKind {
  proposition,
  class_,
  object_property,
  individual,
  cl_name,
  cl_sequence_marker,
  rdf_resource,
};

std::string_view to_string(EntityKind k);
std::optional<EntityKind> entity_kind_from_string(std::string_view s);

struct Entity {
  Iri iri;
  EntityKind kind = EntityKind::class_;
  bool declared = false;

  bool operator==(const Entity&) const = default;
};

struct ByteRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const ByteRange&) const = default;
};

// ---------------------------------------------------------------------------
// Propositional logic

struct PropFormula {
  enum class Op { atom, negation, conjunction, disjunction, implication, equivalence, bottom, top };

  Op op = Op::bottom;
  Iri atom;                     // Op::atom only
  std::vector<PropFormula> args;

  static PropFormula make_atom(Iri a);
  static PropFormula make_bottom() { return PropFormula{Op::bottom, {}, {}}; }
  static PropFormula make_top() { return PropFormula{Op::top, {}, {}}; }
  static PropFormula make(Op op, std::vector<PropFormula> args);

  bool operator==(const PropFormula&) const = default;
};

// ---------------------------------------------------------------------------
// OWL 2 (Manchester subset)

struct PropertyExpr {
  Iri property;
  bool inverse = false;

  bool operator==(const PropertyExpr&) const = default;
};

struct ClassExpr {
  enum class Kind { named, thing, nothing, intersection, union_of, complement, some, only, exactly };

  Kind kind = Kind::thing;
  Iri name;                // named
  PropertyExpr property;   // some, only, exactly
  unsigned cardinality = 0;
  // intersection/union_of: operands; complement: one operand;
  // some/only: the filler; exactly: optional filler.
  std::vector<ClassExpr> args;

  static ClassExpr named_class(Iri name);
  static ClassExpr thing() { return ClassExpr{Kind::thing, {}, {}, 0, {}}; }
  static ClassExpr nothing() { return ClassExpr{Kind::nothing, {}, {}, 0, {}}; }
  static ClassExpr combine(Kind k, std::vector<ClassExpr> operands);
  static ClassExpr complement_of(ClassExpr c);
  static ClassExpr restriction(Kind k, PropertyExpr p, std::optional<ClassExpr> filler,
                               unsigned cardinality = 0);

  bool operator==(const ClassExpr&) const = default;
};

// A named individual (an IRI) or an anonymous one (`_:label`).
struct IndividualRef {
  std::string name;
  bool anonymous = false;

  bool operator==(const IndividualRef&) const = default;
};

enum class PropertyCharacteristic { transitive, asymmetric };

struct ManchesterAxiom {
  enum class Kind { sub_class_of, equivalent_to, disjoint_union_of, characteristic,
                    sub_property_of, types, fact };

  Kind kind = Kind::sub_class_of;
  // sub_class_of: {sub, super}; equivalent_to: {lhs, rhs};
  // disjoint_union_of: {defined, part...}; types: {type}.
  std::vector<ClassExpr> classes;
  Iri property;        // characteristic, sub_property_of (sub), fact
  Iri super_property;  // sub_property_of
  PropertyCharacteristic characteristic = PropertyCharacteristic::transitive;
  IndividualRef subject;  // types, fact
  IndividualRef object;   // fact

  bool operator==(const ManchesterAxiom&) const = default;
};

// ---------------------------------------------------------------------------
// Common Logic (CLIF subset)

struct ClifTerm {
  // Expanded IRI for names; the written identifier for variables.
  std::string name;
  bool variable = false;
  bool sequence_marker = false;
  bool application = false;    // functional term `(name args...)`
  std::vector<ClifTerm> args;

  static ClifTerm make_name(std::string iri) { return ClifTerm{std::move(iri), false, false, false, {}}; }
  static ClifTerm make_variable(std::string v) { return ClifTerm{std::move(v), true, false, false, {}}; }

  bool operator==(const ClifTerm&) const = default;
};

struct ClifSentence {
  enum class Kind { atom, equal, negation, conjunction, disjunction, implication,
                    biconditional, forall, exists };

  Kind kind = Kind::atom;
  ClifTerm predicate;               // atom
  std::vector<ClifTerm> terms;      // atom arguments; equal: exactly two
  std::vector<std::string> variables;  // forall, exists
  std::vector<ClifSentence> parts;

  static ClifSentence make_atom(ClifTerm predicate, std::vector<ClifTerm> args);
  static ClifSentence make_equal(ClifTerm a, ClifTerm b);
  static ClifSentence make(Kind k, std::vector<ClifSentence> parts);
  static ClifSentence make_quantifier(Kind k, std::vector<std::string> vars, ClifSentence body);

  bool operator==(const ClifSentence&) const = default;
};

// Maximum number of nested quantifiers on any path.
int quantifier_depth(const ClifSentence& s);

// ---------------------------------------------------------------------------
// RDF

struct RdfNode {
  enum class Kind { iri, blank, literal };

  Kind kind = Kind::iri;
  std::string value;     // IRI, blank label (without `_:`), or lexical form
  std::string datatype;  // literal only; empty means plain
  std::string language;  // literal only

  static RdfNode iri_node(std::string iri) { return RdfNode{Kind::iri, std::move(iri), {}, {}}; }
  static RdfNode blank(std::string label) { return RdfNode{Kind::blank, std::move(label), {}, {}}; }
  static RdfNode literal(std::string lexical, std::string datatype = {}, std::string language = {}) {
    return RdfNode{Kind::literal, std::move(lexical), std::move(datatype), std::move(language)};
  }

  // Total order used for deterministic output: kind, then value, datatype, language.
  auto operator<=>(const RdfNode&) const = default;
  bool operator==(const RdfNode&) const = default;
};

struct RdfTriple {
  RdfNode subject;
  RdfNode predicate;
  RdfNode object;

  auto operator<=>(const RdfTriple&) const = default;
  bool operator==(const RdfTriple&) const = default;
};

// ---------------------------------------------------------------------------

using SentenceForm = std::variant<PropFormula, ManchesterAxiom, ClifSentence, RdfTriple>;

struct Sentence {
  Iri logic;
  SentenceForm form;
  ByteRange span;  // relative to the embedding block

  // Identity is logic + form; spans are provenance only.
  bool operator==(const Sentence& o) const { return logic == o.logic && form == o.form; }
};

// Entities a sentence mentions, with kinds implied by their positions.
// Throws DolError("kind-clash") when one IRI is used in incompatible positions.
std::vector<Entity> mentioned_entities(const Sentence& s);

struct SignatureAndSentences {
  Iri logic;
  std::vector<Entity> entities;    // first-occurrence order, unique by IRI
  std::vector<Sentence> sentences;
  std::vector<Iri> imports;

  const Entity* find(const Iri& iri) const;

  // Identifies same-IRI entities of equal kind (declared flags are or-ed);
  // throws DolError("kind-clash") on a kind mismatch.
  void add_entity(const Entity& e);
  // Skips sentences structurally equal to one already present.
  void add_sentence(Sentence s);
  void add_import(const Iri& iri);

  // Adds entities for every symbol mentioned by the sentences.
  void complete_signature();

  bool operator==(const SignatureAndSentences&) const = default;
};

// Union of two same-logic signatures and sentence sets (`into` first).
void merge_into(SignatureAndSentences& into, const SignatureAndSentences& from);

}  // namespace dolc
