#include <doctest.h>

#include <set>

#include "dolc/error.hpp"
#include "dolc/model.hpp"
#include "dolc/vocab.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dolc;
using fixture::iri;

TEST_SUITE("model") {
  TEST_CASE("Taxonomy parts: five propositions and three sentences") {
    auto a = fixture::analyze_golden("listing1");
    const auto& tax = fixture::definition(a.document, std::string(fixture::mereology) + "Taxonomy");
    auto rows = collect_parts(tax);
    int entities = 0, sentences = 0;
    std::set<std::string> names;
    for (const auto& r : rows) {
      if (r.kind == PartKind::entity) {
        ++entities;
        CHECK(r.entity_kind == EntityKind::proposition);
        names.insert(r.iri.str().substr(std::string(fixture::mereology).size()));
      }
      if (r.kind == PartKind::sentence) ++sentences;
    }
    CHECK(entities == 5);
    CHECK(sentences == 3);
    CHECK(names == std::set<std::string>{"PT", "T", "S", "AR", "PD"});
    CHECK(rows.back().iri.str() == std::string(fixture::mereology) + "Taxonomy//sentence/3");
  }

  TEST_CASE("document parts include isAtomicPartOf") {
    auto a = fixture::analyze_golden("listing1");
    auto rows = collect_parts(a.document);
    bool found = false;
    for (const auto& r : rows)
      if (r.iri.str() == "http://www.example.org/mereology#isAtomicPartOf") found = true;
    CHECK(found);
    CHECK(rows.front().kind == PartKind::distributed_ontology);
  }

  TEST_CASE("empty distributed ontology has only its own row") {
    DistributedOntology d;
    d.iri = iri("http://x.example/Empty");
    auto rows = collect_parts(d);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].iri.str() == "http://x.example/Empty");
  }

  TEST_CASE("part IRIs are pairwise distinct on every golden file") {
    for (const auto& name : fixture::all_golden()) {
      CAPTURE(name);
      auto parsed = parse_document(fixture::golden(name + ".dol"));
      auto a = analyze(std::move(parsed.document), fixture::options());
      auto rows = collect_parts(a.document);
      std::set<Iri> seen;
      for (const auto& r : rows) CHECK(seen.insert(r.iri).second);
    }
  }

  TEST_CASE("distributed ontologies share the part view") {
    auto parsed = parse_document(fixture::golden("listing1.dol"));
    auto parts = ontology_parts(parsed.document);
    CHECK(parts.entities.size() == 3);
    CHECK(parts.sentences.size() == 1);
    CHECK(parts.sentences[0].kind == PartKind::link);
  }

  TEST_CASE("same-IRI entities are identified only when kinds agree") {
    SignatureAndSentences s;
    s.add_entity(Entity{iri("http://x.example/A"), EntityKind::class_, false});
    s.add_entity(Entity{iri("http://x.example/A"), EntityKind::class_, true});
    REQUIRE(s.entities.size() == 1);
    CHECK(s.entities[0].declared);
    CHECK_THROWS_AS(s.add_entity(Entity{iri("http://x.example/A"), EntityKind::object_property, true}), DolError);
  }

  TEST_CASE("mentioned entities follow positions") {
    ManchesterAxiom a;
    a.kind = ManchesterAxiom::Kind::sub_class_of;
    a.classes = {ClassExpr::named_class(iri("http://x.example/A")),
                 ClassExpr::restriction(ClassExpr::Kind::some, PropertyExpr{iri("http://x.example/r"), false},
                                        ClassExpr::named_class(iri("http://x.example/B")))};
    auto es = mentioned_entities(Sentence{iri(vocab::logic_sroiq.data()), a, {}});
    std::map<std::string, EntityKind> kinds;
    for (const auto& e : es) kinds[e.iri.str()] = e.kind;
    CHECK(kinds.at("http://x.example/A") == EntityKind::class_);
    CHECK(kinds.at("http://x.example/B") == EntityKind::class_);
    CHECK(kinds.at("http://x.example/r") == EntityKind::object_property);

    ManchesterAxiom clash;
    clash.kind = ManchesterAxiom::Kind::sub_class_of;
    clash.classes = {ClassExpr::named_class(iri("http://x.example/r")), a.classes[1]};
    CHECK_THROWS_AS(mentioned_entities(Sentence{iri(vocab::logic_sroiq.data()), clash, {}}), DolError);
  }

  TEST_CASE("quantifier depth agrees with the oracle") {
    auto a = fixture::analyze_golden("listing1");
    const auto& cep = fixture::definition(a.document, std::string(fixture::mereology) + "ClassicalExtensionalParthood");
    REQUIRE(cep.flattened);
    for (const auto& s : fixture::forms<ClifSentence>(*cep.flattened)) CHECK(quantifier_depth(s) == oracle::nesting(s));
  }

  TEST_CASE("merging skips duplicate sentences and imports") {
    SignatureAndSentences a, b;
    a.logic = b.logic = iri(vocab::logic_propositional.data());
    auto f = PropFormula::make_atom(iri("http://x.example/p"));
    a.add_sentence(Sentence{a.logic, f, {0, 1}});
    b.add_sentence(Sentence{b.logic, f, {5, 9}});
    b.add_import(iri("http://x.example/I"));
    b.add_import(iri("http://x.example/I"));
    merge_into(a, b);
    CHECK(a.sentences.size() == 1);
    CHECK(a.imports.size() == 1);
  }

  TEST_CASE("declaration shifts") {
    LogicDeclaration outer{iri("http://purl.net/dol/languages/OWL2/DL"), iri(vocab::logic_sroiq.data()), std::nullopt};
    LogicDeclaration syntax_only{std::nullopt, std::nullopt, iri(vocab::ser_manchester.data())};
    auto s = shift_declaration(outer, syntax_only);
    CHECK(s.language == outer.language);
    CHECK(s.logic == outer.logic);
    CHECK(s.serialization == syntax_only.serialization);
    LogicDeclaration fresh{iri("http://purl.net/dol/languages/RDF"), std::nullopt, iri(vocab::ser_turtle.data())};
    CHECK(shift_declaration(outer, fresh) == fresh);
  }
}
