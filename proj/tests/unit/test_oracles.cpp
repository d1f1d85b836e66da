#include <doctest.h>

#include "dolc/vocab.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dolc;
using fixture::iri;
using Op = PropFormula::Op;
using CK = ClassExpr::Kind;
using AK = ManchesterAxiom::Kind;
using SK = ClifSentence::Kind;

// Hand-checked micro cases for the reference evaluators the other suites rely on.

namespace {

PropFormula a(const char* n) { return PropFormula::make_atom(iri(std::string("http://o.example/") + n)); }
ClassExpr c(const char* n) { return ClassExpr::named_class(iri(std::string("http://o.example/") + n)); }

ManchesterAxiom sub(ClassExpr l, ClassExpr r) {
  ManchesterAxiom x;
  x.kind = AK::sub_class_of;
  x.classes = {std::move(l), std::move(r)};
  return x;
}

ManchesterAxiom types(const char* ind, ClassExpr cl) {
  ManchesterAxiom x;
  x.kind = AK::types;
  x.subject = IndividualRef{std::string("http://o.example/") + ind, false};
  x.classes = {std::move(cl)};
  return x;
}

ClifTerm name(const char* n) { return ClifTerm::make_name(std::string("http://o.example/") + n); }

}  // namespace

TEST_SUITE("oracles") {
  TEST_CASE("truth tables") {
    CHECK(oracle::count_models({a("p")}) == 1);
    CHECK(oracle::count_models({PropFormula::make(Op::disjunction, {a("p"), a("q")})}) == 3);
    CHECK(oracle::satisfiable({PropFormula::make(Op::implication, {a("p"), PropFormula::make_bottom()})}));
    CHECK_FALSE(oracle::satisfiable({a("p"), PropFormula::make(Op::negation, {a("p")})}));
    CHECK(oracle::entails({a("p"), PropFormula::make(Op::implication, {a("p"), a("q")})}, a("q")));
    CHECK_FALSE(oracle::entails({PropFormula::make(Op::implication, {a("p"), a("q")})}, a("q")));
    CHECK(oracle::entails({}, PropFormula::make(Op::disjunction, {a("p"), PropFormula::make(Op::negation, {a("p")})})));
  }

  TEST_CASE("pointwise description logic") {
    std::vector<ManchesterAxiom> t{sub(c("A"), c("B")), sub(c("B"), ClassExpr::nothing())};
    CHECK(oracle::point_satisfiable(t));  // everything empty
    CHECK(oracle::taxonomic(t[0]));
    CHECK_FALSE(oracle::taxonomic(ClassExpr::restriction(CK::some, PropertyExpr{iri("http://o.example/r"), false}, c("A"))));
  }

  TEST_CASE("finite description logic") {
    // An individual in A, with A below Nothing, has no model.
    CHECK_FALSE(oracle::finitely_satisfiable({types("i", c("A")), sub(c("A"), ClassExpr::nothing())}));
    CHECK(oracle::finitely_satisfiable({types("i", c("A")), types("j", ClassExpr::complement_of(c("A")))}));

    oracle::DlInterpretation I;
    I.size = 2;
    I.classes[iri("http://o.example/A")] = {true, false};
    I.roles[iri("http://o.example/r")] = {{false, true}, {false, false}};
    auto r = PropertyExpr{iri("http://o.example/r"), false};
    auto some_a = ClassExpr::restriction(CK::some, r, c("A"));
    auto some_not_a = ClassExpr::restriction(CK::some, r, ClassExpr::complement_of(c("A")));
    CHECK(oracle::extension(some_a, I) == std::vector<bool>{false, false});
    CHECK(oracle::extension(some_not_a, I) == std::vector<bool>{true, false});
    auto inv = ClassExpr::restriction(CK::some, PropertyExpr{r.property, true}, c("A"));
    CHECK(oracle::extension(inv, I) == std::vector<bool>{false, true});
    auto only_a = ClassExpr::restriction(CK::only, r, c("A"));
    CHECK(oracle::extension(only_a, I) == std::vector<bool>{false, true});
    CHECK(oracle::extension(ClassExpr::restriction(CK::exactly, r, std::nullopt, 1), I) == std::vector<bool>{true, false});
    CHECK(oracle::extension(ClassExpr::restriction(CK::exactly, r, std::nullopt, 0), I) == std::vector<bool>{false, true});
  }

  TEST_CASE("finite common logic") {
    auto x = ClifTerm::make_variable("x");
    auto p = [&](ClifTerm t) { return ClifSentence::make_atom(name("P"), {std::move(t)}); };
    auto all_p = ClifSentence::make_quantifier(SK::forall, {"x"}, p(x));
    auto not_pc = ClifSentence::make(SK::negation, {p(name("c"))});
    CHECK(oracle::finitely_satisfiable({all_p}));
    CHECK_FALSE(oracle::finitely_satisfiable({all_p, not_pc}));
    // Two distinct elements need a domain of size two.
    auto distinct = ClifSentence::make(SK::negation, {ClifSentence::make_equal(name("c"), name("d"))});
    CHECK(oracle::finitely_satisfiable({distinct}));
    CHECK_FALSE(oracle::finitely_satisfiable({distinct}, 1));
    CHECK(oracle::nesting(all_p) == 1);
    CHECK(oracle::nesting(ClifSentence::make_quantifier(SK::exists, {"y"}, all_p)) == 2);
    CHECK(oracle::nesting(not_pc) == 0);
  }

  TEST_CASE("graph isomorphism") {
    auto p = RdfNode::iri_node("http://o.example/p");
    std::vector<RdfTriple> g{{RdfNode::blank("a"), p, RdfNode::blank("b")}, {RdfNode::blank("b"), p, RdfNode::blank("a")}};
    std::vector<RdfTriple> h{{RdfNode::blank("y"), p, RdfNode::blank("x")}, {RdfNode::blank("x"), p, RdfNode::blank("y")}};
    std::vector<RdfTriple> loop{{RdfNode::blank("a"), p, RdfNode::blank("a")}, {RdfNode::blank("b"), p, RdfNode::blank("b")}};
    CHECK(oracle::isomorphic(g, h));
    CHECK_FALSE(oracle::isomorphic(g, loop));
    CHECK_FALSE(oracle::isomorphic(g, {g[0]}));
  }

  TEST_CASE("schema validation") {
    const char* xsd =
        "<xs:schema xmlns:xs=\"http://www.w3.org/2001/XMLSchema\">"
        "<xs:element name=\"R\"><xs:complexType><xs:sequence>"
        "<xs:element name=\"A\" minOccurs=\"1\" maxOccurs=\"2\"><xs:complexType>"
        "<xs:attribute name=\"k\" type=\"xs:string\" use=\"required\"/></xs:complexType></xs:element>"
        "</xs:sequence></xs:complexType></xs:element></xs:schema>";
    CHECK(oracle::validate("<R><A k=\"1\"/></R>", xsd).ok);
    CHECK(oracle::validate("<R><A k=\"1\"/><A k=\"2\"/></R>", xsd).ok);
    CHECK_FALSE(oracle::validate("<R/>", xsd).ok);
    CHECK_FALSE(oracle::validate("<R><A k=\"1\"/><A k=\"2\"/><A k=\"3\"/></R>", xsd).ok);
    CHECK_FALSE(oracle::validate("<R><A/></R>", xsd).ok);
    CHECK_FALSE(oracle::validate("<R><A k=\"1\" z=\"2\"/></R>", xsd).ok);
    CHECK_FALSE(oracle::validate("<S/>", xsd).ok);
  }
}
