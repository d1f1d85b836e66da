#include <doctest.h>

#include <algorithm>

#include "dolc/error.hpp"
#include "dolc/manchester.hpp"
#include "dolc/propositional.hpp"
#include "dolc/translations.hpp"
#include "dolc/vocab.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dolc;
using fixture::iri;
using CK = ClassExpr::Kind;
using AK = ManchesterAxiom::Kind;

namespace {

const Iri prop_to_sroiq = Iri::parse(vocab::trans_prop_to_sroiq);
const Iri sroiq_to_cl = Iri::parse(vocab::trans_sroiq_to_cl);
const Iri rdf_to_sroiq = Iri::parse(vocab::trans_rdf_to_sroiq);
const Iri sroiq_to_rdf = Iri::parse(vocab::proj_sroiq_to_rdf);

const PrefixMap x_prefixes{{"", "http://x.example/#"}, {"owl", std::string(vocab::owl_ns)}};

std::string code_of(auto&& f) {
  try {
    f();
  } catch (const DolError& e) {
    return e.code();
  }
  return "";
}

ClassExpr named(const std::string& n) { return ClassExpr::named_class(iri("http://x.example/#" + n)); }

ManchesterAxiom translated_prop(const std::string& formula) {
  SignatureAndSentences s = prop::parse_block("props p, q, r\n. " + formula, x_prefixes);
  auto out = apply_translation(translation_impl(prop_to_sroiq), s);
  REQUIRE(out.sentences.size() == 1);
  return std::get<ManchesterAxiom>(out.sentences[0].form);
}

// A random interpretation over {0..size-1} of the given vocabulary, and the
// first-order structure that reads the same relations.
struct Paired {
  oracle::DlInterpretation dl;
  oracle::ClStructure cl;
};

Paired random_structures(gen::Rng& rng, const std::vector<Iri>& classes, const std::vector<Iri>& roles,
                         const std::vector<IndividualRef>& individuals) {
  Paired p;
  int n = gen::pick(rng, 1, 3);
  p.dl.size = p.cl.size = n;
  for (const auto& c : classes) {
    std::vector<bool> ext(n);
    for (int i = 0; i < n; ++i) ext[i] = gen::coin(rng);
    p.dl.classes[c] = ext;
    p.cl.unary[c.str()] = ext;
  }
  for (const auto& r : roles) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rel[i][j] = gen::coin(rng);
    p.dl.roles[r] = rel;
    p.cl.binary[r.str()] = rel;
  }
  for (const auto& i : individuals) {
    int v = gen::pick(rng, 0, n - 1);
    p.dl.individuals[i.anonymous ? "_:" + i.name : i.name] = v;
    p.cl.constants[i.anonymous ? "urn:dolc:skolem:" + i.name : i.name] = v;
  }
  return p;
}

ClassExpr random_class(gen::Rng& rng, const std::vector<Iri>& classes, const std::vector<Iri>& roles, int depth) {
  if (depth <= 0 || gen::coin(rng, 0.3)) return gen::taxonomic_class(rng, classes, 0);
  PropertyExpr r{roles[gen::pick(rng, 0, int(roles.size()) - 1)], gen::coin(rng, 0.3)};
  switch (gen::pick(rng, 0, 5)) {
    case 0: return ClassExpr::restriction(CK::some, r, random_class(rng, classes, roles, depth - 1));
    case 1: return ClassExpr::restriction(CK::only, r, random_class(rng, classes, roles, depth - 1));
    case 2: {
      std::optional<ClassExpr> filler;
      if (gen::coin(rng)) filler = random_class(rng, classes, roles, depth - 1);
      return ClassExpr::restriction(CK::exactly, r, filler, unsigned(gen::pick(rng, 0, 2)));
    }
    case 3: return ClassExpr::complement_of(random_class(rng, classes, roles, depth - 1));
    default:
      return ClassExpr::combine(gen::coin(rng) ? CK::intersection : CK::union_of,
                                {random_class(rng, classes, roles, depth - 1), random_class(rng, classes, roles, depth - 1)});
  }
}

ManchesterAxiom random_axiom(gen::Rng& rng, const std::vector<Iri>& classes, const std::vector<Iri>& roles,
                             const std::vector<IndividualRef>& individuals) {
  ManchesterAxiom a;
  auto role = [&] { return roles[gen::pick(rng, 0, int(roles.size()) - 1)]; };
  auto ind = [&] { return individuals[gen::pick(rng, 0, int(individuals.size()) - 1)]; };
  switch (gen::pick(rng, 0, 7)) {
    case 0:
      a.kind = AK::sub_class_of;
      a.classes = {random_class(rng, classes, roles, 2), random_class(rng, classes, roles, 2)};
      break;
    case 1:
      a.kind = AK::equivalent_to;
      a.classes = {random_class(rng, classes, roles, 1), random_class(rng, classes, roles, 2)};
      break;
    case 2:
      a.kind = AK::disjoint_union_of;
      a.classes = {random_class(rng, classes, roles, 1), random_class(rng, classes, roles, 1),
                   random_class(rng, classes, roles, 1)};
      break;
    case 3:
      a.kind = AK::characteristic;
      a.property = role();
      a.characteristic = gen::coin(rng) ? PropertyCharacteristic::transitive : PropertyCharacteristic::asymmetric;
      break;
    case 4:
      a.kind = AK::sub_property_of;
      a.property = role();
      a.super_property = role();
      break;
    case 5:
      a.kind = AK::fact;
      a.subject = ind();
      a.property = role();
      a.object = ind();
      break;
    default:
      a.kind = AK::types;
      a.subject = ind();
      a.classes = {random_class(rng, classes, roles, 2)};
  }
  return a;
}

// The translated set is the de-duplicated images, in first-occurrence order.
bool same_sentences(const std::vector<Sentence>& got, const std::vector<Sentence>& images) {
  std::vector<Sentence> distinct;
  for (const auto& s : images)
    if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) distinct.push_back(s);
  return got == distinct;
}

}  // namespace

TEST_SUITE("translations") {
  TEST_CASE("Prop to SROIQ: top-level connective decides the axiom") {
    auto a = translated_prop("p ∧ q ⟶ ⊥");
    CHECK(a.kind == AK::sub_class_of);
    CHECK(a.classes[0] == ClassExpr::combine(CK::intersection, {named("p"), named("q")}));
    CHECK(a.classes[1] == ClassExpr::nothing());

    auto b = translated_prop("p ⟷ ¬q");
    CHECK(b.kind == AK::equivalent_to);
    CHECK(b.classes[0] == named("p"));
    CHECK(b.classes[1] == ClassExpr::complement_of(named("q")));

    auto c = translated_prop("p ∨ r");
    CHECK(c.kind == AK::sub_class_of);
    CHECK(c.classes[0] == ClassExpr::thing());
    CHECK(c.classes[1] == ClassExpr::combine(CK::union_of, {named("p"), named("r")}));

    auto d = translated_prop("⊤");
    CHECK(d.kind == AK::sub_class_of);
    CHECK(d.classes[1] == ClassExpr::thing());
  }

  TEST_CASE("Prop to SROIQ: propositions become classes") {
    SignatureAndSentences s = prop::parse_block("props p, q\n. p ⟶ q", x_prefixes);
    auto out = apply_translation(translation_impl(prop_to_sroiq), s);
    CHECK(out.logic.str() == vocab::logic_sroiq);
    REQUIRE(out.entities.size() == 2);
    for (const auto& e : out.entities) {
      CHECK(e.kind == EntityKind::class_);
      CHECK(e.declared);
    }
  }

  TEST_CASE("Prop to SROIQ preserves models pointwise") {
    // A valuation is a one-element interpretation: each sentence holds under
    // v exactly when its translation holds in the matching interpretation.
    gen::Rng rng(21);
    auto atoms = gen::names("a", 4);
    const auto& t = translation_impl(prop_to_sroiq);
    for (int round = 0; round < 200; ++round) {
      auto s = gen::prop_ontology(rng, atoms, 5);
      auto out = apply_translation(t, s);
      std::vector<Sentence> images;
      for (const auto& x : s.sentences) images.push_back(t.map_sentence(x));
      CHECK(same_sentences(out.sentences, images));
      oracle::for_each_valuation(std::set<Iri>(atoms.begin(), atoms.end()), [&](const oracle::Valuation& v) {
        for (std::size_t i = 0; i < s.sentences.size(); ++i)
          CHECK(oracle::truth(std::get<PropFormula>(s.sentences[i].form), v) ==
                oracle::point_holds(std::get<ManchesterAxiom>(images[i].form), v));
        return true;
      });
    }
  }

  TEST_CASE("SROIQ to CL: special classes and variable naming") {
    SignatureAndSentences s = owl::parse_block("Class: A SubClassOf: owl:Thing\nClass: B SubClassOf: owl:Nothing", x_prefixes);
    auto out = apply_translation(translation_impl(sroiq_to_cl), s);
    auto sentences = fixture::forms<ClifSentence>(out);
    REQUIRE(sentences.size() == 2);
    const auto& first = sentences[0];
    CHECK(first.kind == ClifSentence::Kind::forall);
    CHECK(first.variables == std::vector<std::string>{"x"});
    auto x = ClifTerm::make_variable("x");
    CHECK(first.parts[0].parts[1] == ClifSentence::make_equal(x, x));
    CHECK(sentences[1].parts[0].parts[1] == ClifSentence::make(ClifSentence::Kind::negation, {ClifSentence::make_equal(x, x)}));
  }

  TEST_CASE("SROIQ to CL: variables run x..w then x1, x2") {
    SignatureAndSentences s = owl::parse_block(
        "ObjectProperty: r\nClass: A SubClassOf: r some (r some (r some (r some (r some (r some (r some A))))))", x_prefixes);
    auto out = apply_translation(translation_impl(sroiq_to_cl), s);
    auto sentence = fixture::forms<ClifSentence>(out).at(0);
    std::vector<std::string> seen;
    std::function<void(const ClifSentence&)> walk = [&](const ClifSentence& c) {
      for (const auto& v : c.variables) seen.push_back(v);
      for (const auto& p : c.parts) walk(p);
    };
    walk(sentence);
    CHECK(seen == std::vector<std::string>{"x", "y", "z", "u", "v", "w", "x1", "x2"});
  }

  TEST_CASE("SROIQ to CL: anonymous individuals are skolemized") {
    SignatureAndSentences s;
    s.logic = iri(std::string(vocab::logic_sroiq));
    ManchesterAxiom a;
    a.kind = AK::types;
    a.subject = IndividualRef{"b1", true};
    a.classes = {named("A")};
    s.add_sentence(Sentence{s.logic, a, {}});
    s.complete_signature();
    auto out = apply_translation(translation_impl(sroiq_to_cl), s);
    auto sentence = fixture::forms<ClifSentence>(out).at(0);
    CHECK(sentence == ClifSentence::make_atom(ClifTerm::make_name("http://x.example/#A"),
                                              {ClifTerm::make_name("urn:dolc:skolem:b1")}));
  }

  TEST_CASE("SROIQ to CL agrees with the DL semantics axiom by axiom") {
    gen::Rng rng(34);
    auto classes = gen::names("C", 3);
    auto roles = gen::names("R", 2);
    std::vector<IndividualRef> individuals{{"http://gen.example/i0", false}, {"http://gen.example/i1", false}, {"b1", true}};
    const auto& t = translation_impl(sroiq_to_cl);
    for (int round = 0; round < 300; ++round) {
      SignatureAndSentences s;
      s.logic = iri(std::string(vocab::logic_sroiq));
      int n = gen::pick(rng, 1, 4);
      for (int i = 0; i < n; ++i) s.sentences.push_back(Sentence{s.logic, random_axiom(rng, classes, roles, individuals), {}});
      auto out = apply_translation(t, s);
      std::vector<Sentence> images;
      for (const auto& x : s.sentences) images.push_back(t.map_sentence(x));
      CHECK(same_sentences(out.sentences, images));
      for (int k = 0; k < 4; ++k) {
        auto p = random_structures(rng, classes, roles, individuals);
        for (std::size_t i = 0; i < s.sentences.size(); ++i) {
          CAPTURE(owl::print(std::get<ManchesterAxiom>(s.sentences[i].form), angle_bracket_names()));
          CHECK(oracle::holds(std::get<ManchesterAxiom>(s.sentences[i].form), p.dl) ==
                oracle::holds(std::get<ClifSentence>(images[i].form), p.cl));
        }
      }
    }
  }

  TEST_CASE("translations reject sentences of other logics") {
    SignatureAndSentences s = prop::parse_block("props p\n. p", x_prefixes);
    CHECK(code_of([&] { apply_translation(translation_impl(sroiq_to_cl), s); }) == "source-logic-mismatch");
    CHECK(code_of([&] { translation_impl(iri("http://x.example/#nope")); }) == "unknown-translation");
  }

  TEST_CASE("composition") {
    auto c = compose({translation_impl(prop_to_sroiq), translation_impl(sroiq_to_cl)});
    CHECK(c.steps == std::vector<Iri>{prop_to_sroiq, sroiq_to_cl});
    CHECK(c.source_logic.str() == vocab::logic_propositional);
    CHECK(c.target_logic.str() == vocab::logic_common_logic);
    CHECK(code_of([&] { compose({translation_impl(sroiq_to_cl), translation_impl(prop_to_sroiq)}); }) ==
          "endpoint-mismatch");

    gen::Rng rng(8);
    auto atoms = gen::names("a", 3);
    for (int round = 0; round < 50; ++round) {
      auto s = gen::prop_ontology(rng, atoms, 4);
      auto stepwise = apply_translation(translation_impl(sroiq_to_cl), apply_translation(translation_impl(prop_to_sroiq), s));
      CHECK(apply_translation(c, s) == stepwise);
    }
    CHECK(compose({}).is_identity());
  }

  TEST_CASE("RDF to SROIQ") {
    SignatureAndSentences s;
    s.logic = iri(std::string(vocab::logic_rdf));
    s.add_sentence(Sentence{s.logic,
                            RdfTriple{RdfNode::iri_node("http://x.example/#a"), RdfNode::iri_node(std::string(vocab::rdf_type)),
                                      RdfNode::iri_node("http://x.example/#A")},
                            {}});
    s.add_sentence(Sentence{s.logic,
                            RdfTriple{RdfNode::iri_node("http://x.example/#a"), RdfNode::iri_node("http://x.example/#r"),
                                      RdfNode::blank("b1")},
                            {}});
    s.complete_signature();
    auto out = apply_translation(translation_impl(rdf_to_sroiq), s);
    auto axioms = fixture::forms<ManchesterAxiom>(out);
    REQUIRE(axioms.size() == 2);
    CHECK(axioms[0].kind == AK::types);
    CHECK(axioms[0].classes[0] == named("A"));
    CHECK(axioms[1].kind == AK::fact);
    CHECK(axioms[1].object == IndividualRef{"b1", true});

    s.add_sentence(Sentence{s.logic,
                            RdfTriple{RdfNode::iri_node("http://x.example/#a"), RdfNode::iri_node("http://x.example/#label"),
                                      RdfNode::literal("x")},
                            {}});
    CHECK(code_of([&] { apply_translation(translation_impl(rdf_to_sroiq), s); }) == "untranslatable");
  }

  TEST_CASE("SROIQ to RDF projection keeps assertions and reports the rest") {
    SignatureAndSentences s = owl::parse_block(
        "Class: A SubClassOf: B\n"
        "ObjectProperty: r Characteristics: Transitive\n"
        "Individual: a Types: A Facts: r b\n",
        x_prefixes);
    auto p = apply_projection(sroiq_to_rdf, s);
    auto triples = fixture::forms<RdfTriple>(p.result);
    CHECK(triples.size() == 2);
    CHECK(p.result.logic.str() == vocab::logic_rdf);
    REQUIRE(p.dropped.size() == 2);
    for (const auto& d : p.dropped) CHECK_FALSE(d.reason.empty());
    CHECK(p.dropped.size() + triples.size() == s.sentences.size());

    SignatureAndSentences complex = owl::parse_block("Individual: a Types: r some A", x_prefixes);
    CHECK(code_of([&] { apply_projection(sroiq_to_rdf, complex); }) == "untranslatable");
    auto lossy = apply_projection(sroiq_to_rdf, complex, true);
    CHECK(lossy.result.sentences.empty());
    CHECK(lossy.dropped.size() == 1);
    CHECK(code_of([&] { apply_projection(iri("http://x.example/#p"), s); }) == "unknown-projection");
  }

  TEST_CASE("Listing 1 BasicParthood translates sentence for sentence") {
    auto a = fixture::analyze_golden("listing1");
    const auto& def = fixture::definition(a.document, std::string(fixture::mereology) + "BasicParthood");
    REQUIRE(def.flattened);
    auto out = apply_translation(translation_impl(sroiq_to_cl), *def.flattened);
    CHECK(out.sentences.size() == def.flattened->sentences.size());
    CHECK(out.logic.str() == vocab::logic_common_logic);
  }

  TEST_CASE("symbol renaming") {
    SignatureAndSentences s = prop::parse_block("props p, q\n. p ⟶ q", x_prefixes);
    auto out = rename_symbols(s, {SymbolRename{iri("http://x.example/#p"), iri("http://x.example/#r")}});
    CHECK(out.find(iri("http://x.example/#r")));
    CHECK_FALSE(out.find(iri("http://x.example/#p")));
    CHECK(std::get<PropFormula>(out.sentences[0].form) ==
          prop::parse_formula("r ⟶ q", x_prefixes));
  }
}
