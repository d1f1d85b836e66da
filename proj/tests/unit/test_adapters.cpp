#include <doctest.h>

#include <set>

#include "dolc/adapters.hpp"
#include "dolc/clif.hpp"
#include "dolc/error.hpp"
#include "dolc/manchester.hpp"
#include "dolc/names.hpp"
#include "dolc/propositional.hpp"
#include "dolc/rdf.hpp"
#include "dolc/vocab.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dolc;
using fixture::iri;
using CK = ClassExpr::Kind;
using AK = ManchesterAxiom::Kind;

namespace {

const std::string m = fixture::mereology;
const PrefixMap mereology_prefixes{{"", m}, {"owl", std::string(vocab::owl_ns)}};

const char* const taxonomy_text =
    "props PT, T, S, AR, PD\n"
    ". S ∨ T ∨ AR ∨ PD ⟶ PT\n"
    ". S ∧ T ⟶ ⊥\n"
    ". T ∧ AR ⟶ ⊥\n";

const char* const parthood_text =
    "Class: ParticularCategory SubClassOf: Particular\n"
    "  DisjointUnionOf: SpaceRegion, TimeInterval, AbstractRegion, Perdurant\n"
    "ObjectProperty: isPartOf        Characteristics: Transitive\n"
    "ObjectProperty: isProperPartOf  Characteristics: Asymmetric  SubPropertyOf: isPartOf\n"
    "Class: Atom EquivalentTo: inverse isProperPartOf only owl:Nothing\n";

std::string code_of(auto&& f) {
  try {
    f();
  } catch (const DolError& e) {
    return e.code();
  }
  return "";
}

PropFormula atom(const std::string& n) { return PropFormula::make_atom(iri(m + n)); }

}  // namespace

TEST_SUITE("adapters") {
  TEST_CASE("propositional: Taxonomy") {
    auto s = prop::parse_block(taxonomy_text, mereology_prefixes);
    CHECK(s.logic.str() == vocab::logic_propositional);
    REQUIRE(s.entities.size() == 5);
    for (const auto& e : s.entities) {
      CHECK(e.kind == EntityKind::proposition);
      CHECK(e.declared);
    }
    CHECK(s.entities[0].iri.str() == m + "PT");
    REQUIRE(s.sentences.size() == 3);
    using Op = PropFormula::Op;
    auto expected = PropFormula::make(
        Op::implication,
        {PropFormula::make(Op::disjunction, {atom("S"), atom("T"), atom("AR"), atom("PD")}), atom("PT")});
    auto& first = std::get<PropFormula>(s.sentences[0].form);
    // Either flat or left-nested disjunction denotes the same formula; compare
    // truth tables rather than trees.
    oracle::for_each_valuation(oracle::atoms({expected}), [&](const oracle::Valuation& v) {
      CHECK(oracle::truth(first, v) == oracle::truth(expected, v));
      return true;
    });
    std::string text = taxonomy_text;
    CHECK(text.substr(s.sentences[1].span.begin, s.sentences[1].span.end - s.sentences[1].span.begin)
              .find("S ∧ T ⟶ ⊥") != std::string::npos);
  }

  TEST_CASE("propositional: Taxonomy has 11 models") {
    // Of the 16 valuations of S, T, AR, PD, six make S∧T or T∧AR true. The
    // all-false one leaves PT free; the other nine force PT.
    auto s = prop::parse_block(taxonomy_text, mereology_prefixes);
    std::vector<PropFormula> fs;
    for (const auto& x : s.sentences) fs.push_back(std::get<PropFormula>(x.form));
    CHECK(oracle::count_models(fs) == 11);
    std::size_t n = 0;
    oracle::for_each_valuation(oracle::atoms(fs), [&](const oracle::Valuation& v) {
      bool all = true;
      for (const auto& f : fs) all = all && eval_prop(f, v);
      n += all;
      return true;
    });
    CHECK(n == 11);
  }

  TEST_CASE("propositional: ASCII aliases") {
    auto a = prop::parse_formula("S ∧ ¬T ⟶ PT ∨ ⊥", mereology_prefixes);
    CHECK(prop::parse_formula("S /\\ not T => PT \\/ false", mereology_prefixes) == a);
    CHECK(prop::parse_formula("S /\\ ~T --> PT \\/ false", mereology_prefixes) == a);
    CHECK(prop::parse_formula("(S <=> T) → ⊤", mereology_prefixes) ==
          prop::parse_formula("(S ⟷ T) ⟶ true", mereology_prefixes));
  }

  TEST_CASE("propositional: errors") {
    CHECK(code_of([] { prop::parse_block("props p\n. p ∧ q", mereology_prefixes); }) == "undeclared-proposition");
    CHECK(code_of([] { prop::parse_block("props p\n. p ∧", mereology_prefixes); }) == "prop-syntax");
    CHECK(code_of([] { eval_prop(atom("S"), {}); }) == "unassigned-atom");
  }

  TEST_CASE("eval_prop examples") {
    auto f = prop::parse_formula("S ∧ T ⟶ ⊥", mereology_prefixes);
    CHECK(eval_prop(f, {{iri(m + "S"), true}, {iri(m + "T"), false}}));
    CHECK_FALSE(eval_prop(f, {{iri(m + "S"), true}, {iri(m + "T"), true}}));
    auto g = prop::parse_formula("S ⟷ ¬T", mereology_prefixes);
    CHECK(eval_prop(g, {{iri(m + "S"), false}, {iri(m + "T"), true}}));
    CHECK_FALSE(eval_prop(g, {{iri(m + "S"), true}, {iri(m + "T"), true}}));
  }

  TEST_CASE("eval_prop agrees with the truth-table oracle") {
    gen::Rng rng(3);
    auto atoms = gen::names("a", 4);
    for (int round = 0; round < 300; ++round) {
      auto f = gen::prop_formula(rng, atoms, 4);
      oracle::Valuation v;
      for (const auto& a : atoms) v[a] = gen::coin(rng);
      CHECK(eval_prop(f, v) == oracle::truth(f, v));
    }
  }

  TEST_CASE("propositional print re-parses") {
    gen::Rng rng(5);
    auto atoms = gen::names("a", 4);
    PrefixMap p{{"g", "http://gen.example/"}};
    for (int round = 0; round < 300; ++round) {
      auto f = gen::prop_formula(rng, atoms, 4);
      std::string printed = prop::print(f, curie_names(p));
      CAPTURE(printed);
      auto back = prop::parse_formula(printed, p);
      oracle::for_each_valuation(oracle::atoms({f}), [&](const oracle::Valuation& v) {
        CHECK(oracle::truth(back, v) == oracle::truth(f, v));
        return true;
      });
      CHECK(prop::print(back, curie_names(p)) == printed);
    }
  }

  TEST_CASE("manchester: BasicParthood") {
    auto s = owl::parse_block(parthood_text, mereology_prefixes);
    CHECK(s.logic.str() == vocab::logic_sroiq);
    auto axioms = fixture::forms<ManchesterAxiom>(s);
    REQUIRE(axioms.size() == 6);
    CHECK(axioms[0].kind == AK::sub_class_of);
    CHECK(axioms[0].classes == std::vector<ClassExpr>{ClassExpr::named_class(iri(m + "ParticularCategory")),
                                                      ClassExpr::named_class(iri(m + "Particular"))});
    CHECK(axioms[1].kind == AK::disjoint_union_of);
    CHECK(axioms[1].classes.size() == 5);
    CHECK(axioms[2].kind == AK::characteristic);
    CHECK(axioms[2].characteristic == PropertyCharacteristic::transitive);
    CHECK(axioms[3].characteristic == PropertyCharacteristic::asymmetric);
    CHECK(axioms[4].kind == AK::sub_property_of);
    CHECK(axioms[4].property.str() == m + "isProperPartOf");
    CHECK(axioms[4].super_property.str() == m + "isPartOf");
    CHECK(axioms[5].kind == AK::equivalent_to);
    auto only = ClassExpr::restriction(CK::only, PropertyExpr{iri(m + "isProperPartOf"), true}, ClassExpr::nothing());
    CHECK(axioms[5].classes[1] == only);

    auto* atom_entity = s.find(iri(m + "Atom"));
    REQUIRE(atom_entity);
    CHECK(atom_entity->kind == EntityKind::class_);
    auto* part = s.find(iri(m + "isPartOf"));
    REQUIRE(part);
    CHECK(part->kind == EntityKind::object_property);
  }

  TEST_CASE("manchester: DL glyphs") {
    PrefixMap p{{"", "http://x.example/#"}};
    CHECK(owl::parse_class_expression("∃r.A ⊓ ¬B", p) == owl::parse_class_expression("r some A and not B", p));
    CHECK(owl::parse_class_expression("∀r.(A ⊔ ⊥)", p) == owl::parse_class_expression("r only (A or owl:Nothing)",
                                                                                       PrefixMap{{"", "http://x.example/#"},
                                                                                                 {"owl", std::string(vocab::owl_ns)}}));
  }

  TEST_CASE("manchester: unsupported constructs") {
    PrefixMap p{{"", "http://x.example/#"}};
    CHECK(code_of([&] { owl::parse_block("Class: A DisjointWith: B", p); }) == "unsupported-construct");
    CHECK(code_of([&] { owl::parse_block("Class: A SubClassOf: r min 2 B", p); }) == "unsupported-construct");
    CHECK(code_of([&] { owl::parse_block("Class: A SubClassOf: (B and", p); }) == "manchester-syntax");
  }

  TEST_CASE("manchester: exactly with and without filler") {
    PrefixMap p{{"", "http://x.example/#"}};
    auto c = owl::parse_class_expression("r exactly 2", p);
    CHECK(c.kind == CK::exactly);
    CHECK(c.cardinality == 2);
    CHECK(c.args.empty());
    auto d = owl::parse_class_expression("r exactly 3 B", p);
    REQUIRE(d.args.size() == 1);
    CHECK(d.args[0] == ClassExpr::named_class(iri("http://x.example/#B")));
  }

  TEST_CASE("manchester print re-parses to an equal tree") {
    gen::Rng rng(7);
    auto classes = gen::names("C", 3);
    PrefixMap p{{"g", "http://gen.example/"}, {"owl", std::string(vocab::owl_ns)}};
    auto role = PropertyExpr{iri("http://gen.example/r"), false};
    for (int round = 0; round < 300; ++round) {
      ClassExpr c = gen::taxonomic_class(rng, classes, 3);
      switch (gen::pick(rng, 0, 3)) {
        case 0: c = ClassExpr::restriction(CK::some, role, c); break;
        case 1: c = ClassExpr::restriction(CK::only, PropertyExpr{role.property, true}, c); break;
        case 2: c = ClassExpr::restriction(CK::exactly, role, std::nullopt, unsigned(gen::pick(rng, 0, 3))); break;
        default: break;
      }
      std::string printed = owl::print(c, curie_names(p));
      CAPTURE(printed);
      CHECK(owl::parse_class_expression(printed, p) == c);
    }
  }

  TEST_CASE("manchester general class axioms") {
    PrefixMap p{{"", "http://x.example/#"}, {"owl", std::string(vocab::owl_ns)}};
    auto s = owl::parse_block("(A and B) SubClassOf owl:Nothing\nnot A EquivalentTo B or C\nClass: D", p);
    auto axioms = fixture::forms<ManchesterAxiom>(s);
    REQUIRE(axioms.size() == 2);
    CHECK(axioms[0].kind == AK::sub_class_of);
    CHECK(axioms[0].classes[1] == ClassExpr::nothing());
    CHECK(axioms[1].kind == AK::equivalent_to);
    for (const auto& a : axioms) {
      std::string printed = owl::print(a, curie_names(p, true));
      CAPTURE(printed);
      CHECK(fixture::forms<ManchesterAxiom>(owl::parse_block(printed, p)).at(0) == a);
    }
    CHECK(code_of([&] { owl::parse_block("A B", p); }) == "manchester-syntax");
  }

  TEST_CASE("manchester taxonomic fragment") {
    PrefixMap p{{"", "http://x.example/#"}};
    CHECK(owl::is_taxonomic(owl::parse_class_expression("A and not (B or C)", p)));
    CHECK_FALSE(owl::is_taxonomic(owl::parse_class_expression("A and r some B", p)));
  }

  TEST_CASE("clif: extensional parthood block") {
    std::string block = fixture::golden("listing1.dol");
    auto open = block.find("(forall (X)");
    auto close = block.rfind('}');
    auto s = clif::parse_block(std::string_view(block).substr(open, close - open), mereology_prefixes);
    auto sentences = fixture::forms<ClifSentence>(s);
    REQUIRE(sentences.size() == 1);
    CHECK(oracle::nesting(sentences[0]) == 3);
    CHECK(quantifier_depth(sentences[0]) == oracle::nesting(sentences[0]));
    auto* sum = s.find(iri(m + "sum"));
    REQUIRE(sum);
    CHECK(sum->kind == EntityKind::cl_name);
    CHECK_FALSE(s.find(iri(m + "X")));
  }

  TEST_CASE("clif: imports and comments") {
    PrefixMap p{{"ord", "http://o.example/"}};
    auto s = clif::parse_block("(cl-imports ord:partial_ordering)\n(cl-comment \"x\")\n(forall (x) (ord:leq x x))", p);
    REQUIRE(s.imports.size() == 1);
    CHECK(s.imports[0].str() == "http://o.example/partial_ordering");
    CHECK(s.sentences.size() == 1);
    CHECK(code_of([&] { clif::parse_block("(forall (x) (ord:leq x x)", p); }) == "clif-syntax");
  }

  TEST_CASE("clif print re-parses") {
    PrefixMap p{{"", "http://x.example/#"}};
    for (const char* text : {"(forall (x y) (if (and (P x) (R x y)) (exists (z) (= z x))))",
                             "(iff (not (P c)) (or (Q c) (R c (f c))))", "(forall (X x) (if (X x) (X x)))"}) {
      auto s = clif::parse_block(text, p);
      auto sentence = fixture::forms<ClifSentence>(s).at(0);
      std::string printed = clif::print(sentence, curie_names(p, true));
      CAPTURE(printed);
      CHECK(fixture::forms<ClifSentence>(clif::parse_block(printed, p)).at(0) == sentence);
    }
  }

  TEST_CASE("turtle: Listing 4 blank nodes") {
    const char* text =
        "productdb:4001724819806 pizza:hasTopping\n"
        "  [ a pizza:TomatoTopping ], [ a pizza:MozzarellaTopping ] .\n";
    PrefixMap p{{"pizza", "http://www.co-ode.org/ontologies/pizza/pizza.owl#"}, {"productdb", "http://productdb.org/ean/"}};
    rdf::BlankNodeScope scope;
    auto t = rdf::read_turtle(text, p, scope);
    REQUIRE(t.triples.size() == 4);
    std::set<std::string> blanks;
    for (const auto& x : t.triples)
      if (x.object.kind == RdfNode::Kind::blank) blanks.insert(x.object.value);
    CHECK(blanks.size() == 2);
    std::vector<RdfTriple> expected{
        {RdfNode::iri_node("http://productdb.org/ean/4001724819806"),
         RdfNode::iri_node("http://www.co-ode.org/ontologies/pizza/pizza.owl#hasTopping"), RdfNode::blank("x")},
        {RdfNode::blank("x"), RdfNode::iri_node(std::string(vocab::rdf_type)),
         RdfNode::iri_node("http://www.co-ode.org/ontologies/pizza/pizza.owl#TomatoTopping")},
        {RdfNode::iri_node("http://productdb.org/ean/4001724819806"),
         RdfNode::iri_node("http://www.co-ode.org/ontologies/pizza/pizza.owl#hasTopping"), RdfNode::blank("y")},
        {RdfNode::blank("y"), RdfNode::iri_node(std::string(vocab::rdf_type)),
         RdfNode::iri_node("http://www.co-ode.org/ontologies/pizza/pizza.owl#MozzarellaTopping")}};
    CHECK(oracle::isomorphic(t.triples, expected));

    // A second block in the same scope gets fresh labels.
    auto again = rdf::read_turtle(text, p, scope);
    for (const auto& x : again.triples)
      if (x.object.kind == RdfNode::Kind::blank) CHECK(blanks.count(x.object.value) == 0);
  }

  TEST_CASE("turtle: literals, prefixes and errors") {
    rdf::BlankNodeScope scope;
    auto t = rdf::read_turtle(
        "@prefix e: <http://e.example/> .\n"
        "e:s e:p \"hi\"@en, 42, true ; e:q \"x\"^^e:T . # comment\n",
        {}, scope);
    REQUIRE(t.triples.size() == 4);
    CHECK(t.triples[0].object == RdfNode::literal("hi", "", "en"));
    CHECK(t.triples[1].object == RdfNode::literal("42", std::string(vocab::xsd_integer)));
    CHECK(t.triples[2].object == RdfNode::literal("true", std::string(vocab::xsd_boolean)));
    CHECK(t.triples[3].object == RdfNode::literal("x", "http://e.example/T"));
    REQUIRE(t.prefixes.lookup("e"));
    CHECK(*t.prefixes.lookup("e") == "http://e.example/");
    CHECK(code_of([&] { rdf::read_turtle("<a> <b> .", {}, scope); }) == "turtle-syntax");
  }

  TEST_CASE("adapter registry") {
    const auto& a = builtin_adapters();
    CHECK(a.find(iri(std::string(vocab::logic_propositional)), iri(std::string(vocab::ser_prop_hets))));
    CHECK(a.find(iri(std::string(vocab::logic_sroiq)), iri(std::string(vocab::ser_manchester))));
    CHECK(a.find(iri(std::string(vocab::logic_common_logic)), iri(std::string(vocab::ser_clif))));
    CHECK(a.find(iri(std::string(vocab::logic_rdf)), iri(std::string(vocab::ser_turtle))));
    CHECK_FALSE(a.find(iri(std::string(vocab::logic_rdf)), iri(std::string(vocab::ser_clif))));

    BasicOntologyBlock b;
    b.text = "props p";
    b.decl.logic = iri(std::string(vocab::logic_propositional));
    b.decl.serialization = iri(std::string(vocab::ser_prop_hets));
    ExtractionContext ctx{mereology_prefixes};
    CHECK(extract(b, a, ctx).sentences.empty());
    b.decl.serialization = iri(std::string(vocab::ser_clif));
    CHECK(code_of([&] { extract(b, a, ctx); }) == "unregistered-adapter");
  }
}
