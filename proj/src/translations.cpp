#include "dolc/translations.hpp"

#include <map>

#include "dolc/error.hpp"
#include "dolc/vocab.hpp"

namespace dolc {

namespace {

using Op = PropFormula::Op;
using CK = ClassExpr::Kind;
using AK = ManchesterAxiom::Kind;
using SK = ClifSentence::Kind;

[[noreturn]] void untranslatable(const std::string& construct, const Iri& mapping) {
  throw DolError("untranslatable", construct + " cannot be translated by " + mapping.str());
}

// ---------------------------------------------------------------------------
// Propositional -> SROIQ: atoms become classes, connectives class constructors.

ClassExpr prop_class(const PropFormula& f) {
  std::vector<ClassExpr> args;
  for (const auto& a : f.args) args.push_back(prop_class(a));
  switch (f.op) {
    case Op::atom: return ClassExpr::named_class(f.atom);
    case Op::top: return ClassExpr::thing();
    case Op::bottom: return ClassExpr::nothing();
    case Op::negation: return ClassExpr::complement_of(std::move(args.at(0)));
    case Op::conjunction: return ClassExpr::combine(CK::intersection, std::move(args));
    case Op::disjunction: return ClassExpr::combine(CK::union_of, std::move(args));
    case Op::implication:
      return ClassExpr::combine(CK::union_of, {ClassExpr::complement_of(std::move(args.at(0))), std::move(args.at(1))});
    case Op::equivalence: {
      ClassExpr a = args.at(0), b = args.at(1);
      return ClassExpr::combine(CK::intersection,
                                {ClassExpr::combine(CK::union_of, {ClassExpr::complement_of(a), b}),
                                 ClassExpr::combine(CK::union_of, {ClassExpr::complement_of(b), a})});
    }
  }
  return ClassExpr::thing();
}

ManchesterAxiom prop_axiom(const PropFormula& f) {
  ManchesterAxiom a;
  if (f.op == Op::implication) {
    a.kind = AK::sub_class_of;
    a.classes = {prop_class(f.args.at(0)), prop_class(f.args.at(1))};
  } else if (f.op == Op::equivalence) {
    a.kind = AK::equivalent_to;
    a.classes = {prop_class(f.args.at(0)), prop_class(f.args.at(1))};
  } else {
    a.kind = AK::sub_class_of;
    a.classes = {ClassExpr::thing(), prop_class(f)};
  }
  return a;
}

// ---------------------------------------------------------------------------
// SROIQ -> Common Logic: the relational (standard) translation.

class ClTranslator {
 public:
  explicit ClTranslator(const Iri& mapping) : mapping_(mapping) {}

  std::string fresh() {
    static const char* const base[] = {"x", "y", "z", "u", "v", "w"};
    std::size_t n = next_++;
    if (n < 6) return base[n];
    return "x" + std::to_string(n - 5);
  }

  static ClifTerm var(const std::string& v) { return ClifTerm::make_variable(v); }
  static ClifSentence unary(const Iri& p, ClifTerm t) {
    return ClifSentence::make_atom(ClifTerm::make_name(p.str()), {std::move(t)});
  }
  static ClifSentence binary(const PropertyExpr& p, ClifTerm a, ClifTerm b) {
    if (p.inverse) std::swap(a, b);
    return ClifSentence::make_atom(ClifTerm::make_name(p.property.str()), {std::move(a), std::move(b)});
  }
  static ClifSentence conj(std::vector<ClifSentence> parts) {
    if (parts.size() == 1) return std::move(parts.front());
    return ClifSentence::make(SK::conjunction, std::move(parts));
  }
  static ClifSentence neg(ClifSentence s) { return ClifSentence::make(SK::negation, {std::move(s)}); }

  ClifSentence class_formula(const ClassExpr& c, const ClifTerm& t) {
    switch (c.kind) {
      case CK::named: return unary(c.name, t);
      case CK::thing: return ClifSentence::make_equal(t, t);
      case CK::nothing: return neg(ClifSentence::make_equal(t, t));
      case CK::intersection:
      case CK::union_of: {
        std::vector<ClifSentence> parts;
        for (const auto& a : c.args) parts.push_back(class_formula(a, t));
        return ClifSentence::make(c.kind == CK::intersection ? SK::conjunction : SK::disjunction, std::move(parts));
      }
      case CK::complement: return neg(class_formula(c.args.at(0), t));
      case CK::some: {
        std::string y = fresh();
        return ClifSentence::make_quantifier(
            SK::exists, {y}, conj({binary(c.property, t, var(y)), class_formula(c.args.at(0), var(y))}));
      }
      case CK::only: {
        std::string y = fresh();
        return ClifSentence::make_quantifier(
            SK::forall, {y},
            ClifSentence::make(SK::implication, {binary(c.property, t, var(y)), class_formula(c.args.at(0), var(y))}));
      }
      case CK::exactly: {
        // At least n distinct successors, and no n+1 distinct ones.
        ClifSentence at_least = successors(c, t, c.cardinality);
        ClifSentence more = neg(successors(c, t, c.cardinality + 1));
        if (c.cardinality == 0) return more;
        return conj({std::move(at_least), std::move(more)});
      }
    }
    untranslatable("class expression", mapping_);
  }

  // (exists (y1 .. yn) (and distinct(yi) (R t yi) (C yi)))
  ClifSentence successors(const ClassExpr& c, const ClifTerm& t, unsigned n) {
    std::vector<std::string> vs;
    for (unsigned i = 0; i < n; ++i) vs.push_back(fresh());
    std::vector<ClifSentence> parts;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) parts.push_back(neg(ClifSentence::make_equal(var(vs[i]), var(vs[j]))));
    for (const auto& v : vs) {
      parts.push_back(binary(c.property, t, var(v)));
      if (!c.args.empty()) parts.push_back(class_formula(c.args.front(), var(v)));
    }
    return ClifSentence::make_quantifier(SK::exists, vs, conj(std::move(parts)));
  }

  static ClifTerm individual(const IndividualRef& i) {
    if (i.anonymous) return ClifTerm::make_name("urn:dolc:skolem:" + i.name);
    return ClifTerm::make_name(i.name);
  }

  ClifSentence axiom(const ManchesterAxiom& a) {
    switch (a.kind) {
      case AK::sub_class_of:
      case AK::equivalent_to: {
        std::string x = fresh();
        auto body = ClifSentence::make(a.kind == AK::sub_class_of ? SK::implication : SK::biconditional,
                                       {class_formula(a.classes.at(0), var(x)), class_formula(a.classes.at(1), var(x))});
        return ClifSentence::make_quantifier(SK::forall, {x}, std::move(body));
      }
      case AK::disjoint_union_of: {
        std::string x = fresh();
        std::vector<ClifSentence> parts_of;
        for (std::size_t i = 1; i < a.classes.size(); ++i) parts_of.push_back(class_formula(a.classes[i], var(x)));
        std::vector<ClifSentence> parts;
        parts.push_back(ClifSentence::make(
            SK::biconditional, {class_formula(a.classes.at(0), var(x)), ClifSentence::make(SK::disjunction, parts_of)}));
        for (std::size_t i = 0; i < parts_of.size(); ++i)
          for (std::size_t j = i + 1; j < parts_of.size(); ++j)
            parts.push_back(neg(ClifSentence::make(SK::conjunction, {parts_of[i], parts_of[j]})));
        return ClifSentence::make_quantifier(SK::forall, {x}, conj(std::move(parts)));
      }
      case AK::characteristic: {
        PropertyExpr r{a.property, false};
        if (a.characteristic == PropertyCharacteristic::transitive) {
          std::string x = fresh(), y = fresh(), z = fresh();
          return ClifSentence::make_quantifier(
              SK::forall, {x, y, z},
              ClifSentence::make(SK::implication,
                                 {ClifSentence::make(SK::conjunction, {binary(r, var(x), var(y)), binary(r, var(y), var(z))}),
                                  binary(r, var(x), var(z))}));
        }
        std::string x = fresh(), y = fresh();
        return ClifSentence::make_quantifier(
            SK::forall, {x, y},
            ClifSentence::make(SK::implication, {binary(r, var(x), var(y)), neg(binary(r, var(y), var(x)))}));
      }
      case AK::sub_property_of: {
        std::string x = fresh(), y = fresh();
        return ClifSentence::make_quantifier(
            SK::forall, {x, y},
            ClifSentence::make(SK::implication, {binary(PropertyExpr{a.property, false}, var(x), var(y)),
                                                 binary(PropertyExpr{a.super_property, false}, var(x), var(y))}));
      }
      case AK::types: return class_formula(a.classes.at(0), individual(a.subject));
      case AK::fact: return binary(PropertyExpr{a.property, false}, individual(a.subject), individual(a.object));
    }
    untranslatable("axiom", mapping_);
  }

 private:
  const Iri& mapping_;
  std::size_t next_ = 0;
};

// ---------------------------------------------------------------------------
// RDF -> SROIQ

IndividualRef rdf_individual(const RdfNode& n, const Iri& mapping) {
  if (n.kind == RdfNode::Kind::blank) return IndividualRef{n.value, true};
  if (n.kind == RdfNode::Kind::iri) return IndividualRef{n.value, false};
  untranslatable("literal \"" + n.value + "\"", mapping);
}

ManchesterAxiom rdf_axiom(const RdfTriple& t, const Iri& mapping) {
  ManchesterAxiom a;
  a.subject = rdf_individual(t.subject, mapping);
  if (t.predicate.value == vocab::rdf_type) {
    if (t.object.kind != RdfNode::Kind::iri) untranslatable("rdf:type with a non-IRI class", mapping);
    a.kind = AK::types;
    a.classes = {ClassExpr::named_class(Iri::parse(t.object.value))};
    return a;
  }
  a.kind = AK::fact;
  a.property = Iri::parse(t.predicate.value);
  a.object = rdf_individual(t.object, mapping);
  return a;
}

// ---------------------------------------------------------------------------

TranslationImpl make_impl(std::string_view mapping, std::string_view from, std::string_view to,
                          std::function<std::optional<Entity>(const Entity&)> entity,
                          std::function<SentenceForm(const SentenceForm&, const Iri&)> form) {
  TranslationImpl t;
  t.mapping = Iri::parse(mapping);
  t.source_logic = Iri::parse(from);
  t.target_logic = Iri::parse(to);
  t.map_entity = std::move(entity);
  Iri target = t.target_logic;
  Iri m = t.mapping;
  t.map_sentence = [form = std::move(form), target, m](const Sentence& s) {
    return Sentence{target, form(s.form, m), s.span};
  };
  t.steps = {t.mapping};
  return t;
}

const std::map<Iri, TranslationImpl>& impls() {
  static const std::map<Iri, TranslationImpl> table = [] {
    std::map<Iri, TranslationImpl> m;
    auto add = [&](TranslationImpl t) { m.emplace(t.mapping, std::move(t)); };
    add(make_impl(
        vocab::trans_prop_to_sroiq, vocab::logic_propositional, vocab::logic_sroiq,
        [](const Entity& e) -> std::optional<Entity> { return Entity{e.iri, EntityKind::class_, e.declared}; },
        [](const SentenceForm& f, const Iri& mapping) -> SentenceForm {
          if (auto* p = std::get_if<PropFormula>(&f)) return prop_axiom(*p);
          untranslatable("non-propositional sentence", mapping);
        }));
    add(make_impl(
        vocab::trans_sroiq_to_cl, vocab::logic_sroiq, vocab::logic_common_logic,
        [](const Entity& e) -> std::optional<Entity> { return Entity{e.iri, EntityKind::cl_name, e.declared}; },
        [](const SentenceForm& f, const Iri& mapping) -> SentenceForm {
          if (auto* a = std::get_if<ManchesterAxiom>(&f)) return ClTranslator(mapping).axiom(*a);
          untranslatable("non-OWL sentence", mapping);
        }));
    add(make_impl(
        vocab::trans_rdf_to_sroiq, vocab::logic_rdf, vocab::logic_sroiq,
        // Kinds of RDF resources depend on their positions; the sentences
        // re-introduce them.
        [](const Entity&) -> std::optional<Entity> { return std::nullopt; },
        [](const SentenceForm& f, const Iri& mapping) -> SentenceForm {
          if (auto* t = std::get_if<RdfTriple>(&f)) return rdf_axiom(*t, mapping);
          untranslatable("non-RDF sentence", mapping);
        }));
    return m;
  }();
  return table;
}

}  // namespace

const TranslationImpl& translation_impl(const Iri& mapping) {
  auto it = impls().find(mapping);
  if (it == impls().end()) throw DolError("unknown-translation", "no built-in translation " + mapping.str());
  return it->second;
}

bool has_translation_impl(const Iri& mapping) { return impls().count(mapping) != 0; }

SignatureAndSentences apply_translation(const TranslationImpl& t, const SignatureAndSentences& s) {
  if (t.is_identity()) return s;
  if (s.logic != t.source_logic)
    throw DolError("source-logic-mismatch", t.mapping.str() + " expects logic " + t.source_logic.str() + ", got " +
                                                (s.logic.empty() ? std::string("(none)") : s.logic.str()));
  SignatureAndSentences out;
  out.logic = t.target_logic;
  for (const auto& e : s.entities)
    if (auto m = t.map_entity(e)) out.add_entity(*m);
  for (const auto& sen : s.sentences) out.add_sentence(t.map_sentence(sen));
  for (const auto& i : s.imports) out.add_import(i);
  out.complete_signature();
  return out;
}

TranslationImpl compose(const std::vector<TranslationImpl>& ts) {
  if (ts.empty()) {
    TranslationImpl id;
    id.map_entity = [](const Entity& e) -> std::optional<Entity> { return e; };
    id.map_sentence = [](const Sentence& s) { return s; };
    return id;
  }
  if (ts.size() == 1) return ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (!ts[i].is_identity() && !ts[i - 1].is_identity() && ts[i - 1].target_logic != ts[i].source_logic)
      throw DolError("endpoint-mismatch", ts[i - 1].mapping.str() + " ends in " + ts[i - 1].target_logic.str() +
                                              " but " + ts[i].mapping.str() + " starts from " +
                                              ts[i].source_logic.str());
  std::vector<TranslationImpl> parts;
  for (const auto& t : ts)
    if (!t.is_identity()) parts.push_back(t);
  if (parts.size() <= 1) return compose(parts);
  TranslationImpl c;
  c.mapping = parts.front().mapping;
  c.source_logic = parts.front().source_logic;
  c.target_logic = parts.back().target_logic;
  for (const auto& t : parts) c.steps.insert(c.steps.end(), t.steps.begin(), t.steps.end());
  c.map_entity = [parts](const Entity& e) -> std::optional<Entity> {
    std::optional<Entity> cur = e;
    for (const auto& t : parts) {
      if (!cur) break;
      cur = t.map_entity(*cur);
    }
    return cur;
  };
  c.map_sentence = [parts](const Sentence& s) {
    Sentence cur = s;
    for (const auto& t : parts) cur = t.map_sentence(cur);
    return cur;
  };
  return c;
}

// ---------------------------------------------------------------------------

bool has_projection_impl(const Iri& mapping) { return mapping.str() == vocab::proj_sroiq_to_rdf; }

ProjectionResult apply_projection(const Iri& mapping, const SignatureAndSentences& s, bool lossy) {
  if (!has_projection_impl(mapping)) throw DolError("unknown-projection", "no built-in projection " + mapping.str());
  if (s.logic.str() != vocab::logic_sroiq)
    throw DolError("source-logic-mismatch", mapping.str() + " expects logic " + std::string(vocab::logic_sroiq) +
                                                ", got " + (s.logic.empty() ? std::string("(none)") : s.logic.str()));
  ProjectionResult r;
  r.result.logic = Iri::parse(vocab::logic_rdf);
  auto node = [](const IndividualRef& i) {
    return i.anonymous ? RdfNode::blank(i.name) : RdfNode::iri_node(i.name);
  };
  for (const auto& sen : s.sentences) {
    const auto& a = std::get<ManchesterAxiom>(sen.form);
    std::optional<RdfTriple> t;
    if (a.kind == AK::types && a.classes.at(0).kind == CK::named) {
      t = RdfTriple{node(a.subject), RdfNode::iri_node(std::string(vocab::rdf_type)),
                    RdfNode::iri_node(a.classes[0].name.str())};
    } else if (a.kind == AK::fact) {
      t = RdfTriple{node(a.subject), RdfNode::iri_node(a.property.str()), node(a.object)};
    } else if (a.kind == AK::types) {
      if (!lossy) untranslatable("class assertion with a complex class", mapping);
      r.dropped.push_back({sen, "class assertion with a complex class has no RDF counterpart"});
      continue;
    } else {
      r.dropped.push_back({sen, "terminological axiom has no RDF counterpart"});
      continue;
    }
    r.result.add_sentence(Sentence{r.result.logic, *t, sen.span});
  }
  for (const auto& i : s.imports) r.result.add_import(i);
  r.result.complete_signature();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

class Renamer {
 public:
  explicit Renamer(const std::vector<SymbolRename>& rs) {
    for (const auto& r : rs) map_[r.from.str()] = r.to.str();
  }

  std::string str(const std::string& s) const {
    auto it = map_.find(s);
    return it == map_.end() ? s : it->second;
  }
  Iri iri(const Iri& i) const { return i.empty() ? i : Iri::parse(str(i.str())); }

  void apply(PropFormula& f) const {
    if (f.op == Op::atom) f.atom = iri(f.atom);
    for (auto& a : f.args) apply(a);
  }
  void apply(ClassExpr& c) const {
    if (c.kind == CK::named) c.name = iri(c.name);
    if (c.kind == CK::some || c.kind == CK::only || c.kind == CK::exactly) c.property.property = iri(c.property.property);
    for (auto& a : c.args) apply(a);
  }
  void apply(IndividualRef& i) const {
    if (!i.anonymous) i.name = str(i.name);
  }
  void apply(ManchesterAxiom& a) const {
    for (auto& c : a.classes) apply(c);
    a.property = iri(a.property);
    a.super_property = iri(a.super_property);
    apply(a.subject);
    apply(a.object);
  }
  void apply(ClifTerm& t) const {
    if (!t.variable) t.name = str(t.name);
    for (auto& a : t.args) apply(a);
  }
  void apply(ClifSentence& s) const {
    if (s.kind == SK::atom) apply(s.predicate);
    for (auto& t : s.terms) apply(t);
    for (auto& p : s.parts) apply(p);
  }
  void apply(RdfNode& n) const {
    if (n.kind == RdfNode::Kind::iri) n.value = str(n.value);
  }
  void apply(RdfTriple& t) const {
    apply(t.subject);
    apply(t.predicate);
    apply(t.object);
  }

 private:
  std::map<std::string, std::string> map_;
};

}  // namespace

SignatureAndSentences rename_symbols(const SignatureAndSentences& s, const std::vector<SymbolRename>& renames) {
  if (renames.empty()) return s;
  Renamer r(renames);
  SignatureAndSentences out;
  out.logic = s.logic;
  for (const auto& e : s.entities) out.add_entity(Entity{r.iri(e.iri), e.kind, e.declared});
  for (const auto& sen : s.sentences) {
    Sentence copy = sen;
    std::visit([&](auto& f) { r.apply(f); }, copy.form);
    out.add_sentence(std::move(copy));
  }
  out.imports = s.imports;
  out.complete_signature();
  return out;
}

}  // namespace dolc
