#include "dolc/sentences.hpp"

#include <algorithm>

#include "dolc/error.hpp"
#include "dolc/vocab.hpp"

namespace dolc {

namespace {

constexpr std::pair<EntityKind, std::string_view> kind_names[] = {
    {EntityKind::proposition, "proposition"},
    {EntityKind::class_, "class"},
    {EntityKind::object_property, "object-property"},
    {EntityKind::individual, "individual"},
    {EntityKind::cl_name, "cl-name"},
    {EntityKind::cl_sequence_marker, "cl-sequence-marker"},
    {EntityKind::rdf_resource, "rdf-resource"},
};

class EntityCollector {
 public:
  void add(const std::string& iri, EntityKind kind) {
    auto parsed = Iri::try_parse(iri);
    if (!parsed) return;
    add(*parsed, kind);
  }

  void add(const Iri& iri, EntityKind kind) {
    for (const auto& e : out_) {
      if (e.iri != iri) continue;
      if (e.kind != kind)
        throw DolError("kind-clash", "'" + iri.str() + "' used both as " + std::string(to_string(e.kind)) +
                                         " and as " + std::string(to_string(kind)));
      return;
    }
    out_.push_back(Entity{iri, kind, false});
  }

  void prop(const PropFormula& f) {
    if (f.op == PropFormula::Op::atom) add(f.atom, EntityKind::proposition);
    for (const auto& a : f.args) prop(a);
  }

  void cls(const ClassExpr& c) {
    switch (c.kind) {
      case ClassExpr::Kind::named: add(c.name, EntityKind::class_); break;
      case ClassExpr::Kind::some:
      case ClassExpr::Kind::only:
      case ClassExpr::Kind::exactly: add(c.property.property, EntityKind::object_property); break;
      default: break;
    }
    for (const auto& a : c.args) cls(a);
  }

  void individual(const IndividualRef& i) {
    if (!i.anonymous) add(i.name, EntityKind::individual);
  }

  void axiom(const ManchesterAxiom& a) {
    using K = ManchesterAxiom::Kind;
    switch (a.kind) {
      case K::sub_class_of:
      case K::equivalent_to:
      case K::disjoint_union_of:
        for (const auto& c : a.classes) cls(c);
        break;
      case K::characteristic: add(a.property, EntityKind::object_property); break;
      case K::sub_property_of:
        add(a.property, EntityKind::object_property);
        add(a.super_property, EntityKind::object_property);
        break;
      case K::types:
        individual(a.subject);
        for (const auto& c : a.classes) cls(c);
        break;
      case K::fact:
        individual(a.subject);
        add(a.property, EntityKind::object_property);
        individual(a.object);
        break;
    }
  }

  void term(const ClifTerm& t) {
    if (!t.variable) add(t.name, t.sequence_marker ? EntityKind::cl_sequence_marker : EntityKind::cl_name);
    for (const auto& a : t.args) term(a);
  }

  void clif(const ClifSentence& s) {
    if (s.kind == ClifSentence::Kind::atom) term(s.predicate);
    for (const auto& t : s.terms) term(t);
    for (const auto& p : s.parts) clif(p);
  }

  void triple(const RdfTriple& t) {
    for (const RdfNode* n : {&t.subject, &t.predicate, &t.object})
      if (n->kind == RdfNode::Kind::iri) add(n->value, EntityKind::rdf_resource);
  }

  std::vector<Entity> take() { return std::move(out_); }

 private:
  std::vector<Entity> out_;
};

}  // namespace

std::string_view to_string(EntityKind k) {
  for (const auto& [kind, name] : kind_names)
    if (kind == k) return name;
  return "class";
}

std::optional<EntityKind> entity_kind_from_string(std::string_view s) {
  for (const auto& [kind, name] : kind_names)
    if (name == s) return kind;
  return std::nullopt;
}

PropFormula PropFormula::make_atom(Iri a) { return PropFormula{Op::atom, std::move(a), {}}; }

PropFormula PropFormula::make(Op op, std::vector<PropFormula> args) {
  return PropFormula{op, {}, std::move(args)};
}

ClassExpr ClassExpr::named_class(Iri name) {
  if (name.str() == vocab::owl_thing) return thing();
  if (name.str() == vocab::owl_nothing) return nothing();
  return ClassExpr{Kind::named, std::move(name), {}, 0, {}};
}

ClassExpr ClassExpr::combine(Kind k, std::vector<ClassExpr> operands) {
  return ClassExpr{k, {}, {}, 0, std::move(operands)};
}

ClassExpr ClassExpr::complement_of(ClassExpr c) { return ClassExpr{Kind::complement, {}, {}, 0, {std::move(c)}}; }

ClassExpr ClassExpr::restriction(Kind k, PropertyExpr p, std::optional<ClassExpr> filler, unsigned cardinality) {
  ClassExpr out{k, {}, std::move(p), cardinality, {}};
  if (filler) out.args.push_back(std::move(*filler));
  return out;
}

ClifSentence ClifSentence::make_atom(ClifTerm predicate, std::vector<ClifTerm> args) {
  ClifSentence s;
  s.kind = Kind::atom;
  s.predicate = std::move(predicate);
  s.terms = std::move(args);
  return s;
}

ClifSentence ClifSentence::make_equal(ClifTerm a, ClifTerm b) {
  ClifSentence s;
  s.kind = Kind::equal;
  s.terms = {std::move(a), std::move(b)};
  return s;
}

ClifSentence ClifSentence::make(Kind k, std::vector<ClifSentence> parts) {
  ClifSentence s;
  s.kind = k;
  s.parts = std::move(parts);
  return s;
}

ClifSentence ClifSentence::make_quantifier(Kind k, std::vector<std::string> vars, ClifSentence body) {
  ClifSentence s;
  s.kind = k;
  s.variables = std::move(vars);
  s.parts = {std::move(body)};
  return s;
}

int quantifier_depth(const ClifSentence& s) {
  int inner = 0;
  for (const auto& p : s.parts) inner = std::max(inner, quantifier_depth(p));
  bool quant = s.kind == ClifSentence::Kind::forall || s.kind == ClifSentence::Kind::exists;
  return inner + (quant ? 1 : 0);
}

std::vector<Entity> mentioned_entities(const Sentence& s) {
  EntityCollector c;
  std::visit(
      [&](const auto& form) {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, PropFormula>) c.prop(form);
        else if constexpr (std::is_same_v<T, ManchesterAxiom>) c.axiom(form);
        else if constexpr (std::is_same_v<T, ClifSentence>) c.clif(form);
        else c.triple(form);
      },
      s.form);
  return c.take();
}

const Entity* SignatureAndSentences::find(const Iri& iri) const {
  for (const auto& e : entities)
    if (e.iri == iri) return &e;
  return nullptr;
}

void SignatureAndSentences::add_entity(const Entity& e) {
  for (auto& mine : entities) {
    if (mine.iri != e.iri) continue;
    if (mine.kind != e.kind)
      throw DolError("kind-clash", "'" + e.iri.str() + "' is a " + std::string(to_string(mine.kind)) +
                                       " here but a " + std::string(to_string(e.kind)) + " elsewhere");
    mine.declared = mine.declared || e.declared;
    return;
  }
  entities.push_back(e);
}

void SignatureAndSentences::add_sentence(Sentence s) {
  if (std::find(sentences.begin(), sentences.end(), s) != sentences.end()) return;
  sentences.push_back(std::move(s));
}

void SignatureAndSentences::add_import(const Iri& iri) {
  if (std::find(imports.begin(), imports.end(), iri) == imports.end()) imports.push_back(iri);
}

void SignatureAndSentences::complete_signature() {
  for (const auto& s : sentences)
    for (const auto& e : mentioned_entities(s)) add_entity(e);
}

void merge_into(SignatureAndSentences& into, const SignatureAndSentences& from) {
  if (into.logic.empty()) into.logic = from.logic;
  for (const auto& e : from.entities) into.add_entity(e);
  for (const auto& s : from.sentences) into.add_sentence(s);
  for (const auto& i : from.imports) into.add_import(i);
}

}  // namespace dolc
