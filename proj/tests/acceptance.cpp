// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "dolc/analyzer.hpp"
#include "dolc/iri.hpp"
#include "dolc/parser.hpp"
#include "dolc/propositional.hpp"
#include "dolc/rdf.hpp"
#include "dolc/registry.hpp"
#include "dolc/serializer.hpp"
#include "dolc/translations.hpp"
#include "dolc/vocab.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dolc;
using fixture::iri;
using Clock = std::chrono::steady_clock;

namespace {

const std::string m = fixture::mereology;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

double ms_since(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

bool has_error(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds)
    if (d.severity == Severity::error) return true;
  return false;
}

const expr::Inline* find_inline(const OntologyExpression& e) {
  return std::visit(
      [](const auto& n) -> const expr::Inline* {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Inline>) return &n;
        else if constexpr (std::is_same_v<T, expr::Extension>) {
          auto* b = find_inline(*n.base);
          return b ? b : find_inline(*n.ext);
        } else if constexpr (std::is_same_v<T, expr::Union>) {
          auto* b = find_inline(*n.left);
          return b ? b : find_inline(*n.right);
        } else if constexpr (std::is_same_v<T, expr::Reference>) return nullptr;
        else if constexpr (std::is_same_v<T, expr::ContextShift>) return find_inline(*n.inner);
        else return find_inline(*n.base);
      },
      e.node);
}

void golden_parsing(Outcome& o) {
  auto start = Clock::now();
  for (const auto& name : fixture::listings()) {
    auto r = parse_document(fixture::golden(name + ".dol"));
    o.require(!has_errors(r.diagnostics), name + " has parse errors");
    o.require(dump_ast(r.document) == fixture::golden(name + ".ast"), name + " AST differs from the golden tree");
  }
  double ms = ms_since(start);
  o.require(ms < 1000, "took over 1 s");
  o.detail << "4 listings, " << ms << " ms";
}

void iri_expansion(Outcome& o) {
  auto r = parse_document(fixture::golden("listing1.dol"));
  auto curie = parse_curie(":Mereology");
  std::string expanded = curie ? expand(*curie, r.document.prefixes).str() : "";
  o.require(expanded == "http://www.example.org/mereology#Mereology", ":Mereology expanded to '" + expanded + "'");
  o.require(r.document.iri && r.document.iri->str() == "http://www.example.org/mereology#Mereology",
            "document IRI differs");

  auto a = fixture::analyze_golden("listing1");
  EmissionOptions ld;
  ld.format = Format::linked_data;
  bool found = false;
  for (const auto& t : rdf::read_structural_rdf(emit(a.document, ld)))
    found = found || (t.subject.kind == RdfNode::Kind::iri && t.subject.value == m + "isAtomicPartOf");
  o.require(found, "no linked-data subject for isAtomicPartOf");
  o.detail << expanded;
}

void extraction_counts(Outcome& o) {
  auto a = fixture::analyze_golden("listing1");
  const auto& tax = *fixture::definition(a.document, m + "Taxonomy").flattened;
  int props = 0;
  for (const auto& e : tax.entities) props += e.kind == EntityKind::proposition;
  o.require(props == 5, "Taxonomy has " + std::to_string(props) + " propositions");
  o.require(tax.sentences.size() == 3, "Taxonomy has " + std::to_string(tax.sentences.size()) + " sentences");

  const auto& basic = *fixture::definition(a.document, m + "BasicParthood").flattened;
  int object_props = 0, transitive = 0, asymmetric = 0;
  for (const auto& e : basic.entities) object_props += e.kind == EntityKind::object_property && e.declared;
  for (const auto& x : fixture::forms<ManchesterAxiom>(basic))
    if (x.kind == ManchesterAxiom::Kind::characteristic) {
      transitive += x.characteristic == PropertyCharacteristic::transitive;
      asymmetric += x.characteristic == PropertyCharacteristic::asymmetric;
    }
  o.require(object_props >= 2, "BasicParthood declares " + std::to_string(object_props) + " object properties");
  o.require(transitive == 1 && asymmetric == 1, "characteristics differ");

  const auto* block = find_inline(fixture::definition(a.document, m + "ClassicalExtensionalParthood").body);
  o.require(block && block->block.extracted, "CL block was not extracted");
  int depth = 0;
  std::size_t cl = 0;
  if (block && block->block.extracted) {
    auto sentences = fixture::forms<ClifSentence>(*block->block.extracted);
    cl = sentences.size();
    for (const auto& s : sentences) depth = std::max(depth, oracle::nesting(s));
  }
  o.require(cl >= 1, "CL block has no sentences");
  o.require(depth >= 3, "CL nesting depth " + std::to_string(depth));
  o.detail << props << " propositions, " << tax.sentences.size() << " sentences; " << object_props
           << " object properties; CL " << cl << " sentence(s), depth " << depth;
}

void interpretation(Outcome& o) {
  auto parsed = parse_document(fixture::golden("listing1.dol"));
  Analyzer an(parsed.document, fixture::options());
  const Link* link = an.document().find_link(iri(m + "TaxonomyToParthood"));
  o.require(link, "no TaxonomyToParthood link");
  if (!link) return;
  auto start = Clock::now();
  CheckReport r = an.check_interpretation(*link);
  double ms = ms_since(start);
  o.require(r.verdict == Verdict::verified, "verdict " + std::string(to_string(r.verdict)));
  o.require(ms < 10, "took " + std::to_string(ms) + " ms");

  // The truth-table search ranges over the atoms of the taxonomic premises
  // and the translated axioms.
  std::set<Iri> atoms;
  const auto basic = an.graph().node(an.flatten_reference(iri(m + "BasicParthood"), {})).content;
  for (const auto& s : basic.sentences)
    if (auto f = taxonomic_formula(s)) prop::collect_atoms(*f, atoms);
  const auto tax = an.graph().node(an.flatten_reference(iri(m + "Taxonomy"), {})).content;
  auto translated = rename_symbols(apply_translation(translation_impl(iri(std::string(vocab::trans_prop_to_sroiq))), tax),
                                   std::get<SymbolMap>(link->payload).renames);
  for (const auto& s : translated.sentences)
    if (auto f = taxonomic_formula(s)) prop::collect_atoms(*f, atoms);
  o.require(atoms.size() <= 6, std::to_string(atoms.size()) + " atoms");

  std::string text = fixture::golden("listing1.dol");
  auto at = text.find("S ↦ SpaceRegion");
  text.replace(at, std::string("S ↦ SpaceRegion").size(), "S ↦ Atom");
  auto mutated = fixture::analyze_text(text);
  bool refuted = mutated.reports.size() == 1 && mutated.reports[0].verdict == Verdict::refuted &&
                 mutated.reports[0].counter_assignment;
  o.require(refuted, "mutated map was not refuted with a counter-assignment");
  if (refuted) {
    // Independent check: the counter-assignment satisfies the taxonomic part
    // of the target and falsifies a translated axiom.
    oracle::Valuation v(mutated.reports[0].counter_assignment->begin(), mutated.reports[0].counter_assignment->end());
    for (const auto& s : basic.sentences)
      if (auto f = taxonomic_formula(s)) o.require(oracle::truth(*f, v), "counter-assignment violates the target");
    auto axiom = prop::parse_formula("Atom ∨ TimeInterval ∨ AbstractRegion ∨ Perdurant ⟶ Particular", PrefixMap{{"", m}});
    o.require(!oracle::truth(axiom, v), "counter-assignment satisfies the mutated axiom");
    o.detail << "verified in " << ms << " ms over " << atoms.size() << " atoms; mutant refuted under "
             << format_assignment(*mutated.reports[0].counter_assignment, curie_names(PrefixMap{{"", m}}, true));
  }
}

std::vector<std::vector<Iri>> translation_paths(const RegistryGraph& g, const Iri& from, const Iri& to, int max_len) {
  std::vector<std::vector<Iri>> out;
  std::vector<Iri> path;
  std::function<void(const Iri&)> walk = [&](const Iri& at) {
    if (at == to && !path.empty()) out.push_back(path);
    if (int(path.size()) == max_len) return;
    for (const auto& mapping : g.mappings()) {
      if (mapping.kind != MappingKind::translation || mapping.level != MappingLevel::logic || !mapping.is_default ||
          mapping.source != at)
        continue;
      path.push_back(mapping.iri);
      walk(mapping.target);
      path.pop_back();
    }
  };
  walk(from);
  return out;
}

void registry_inference(Outcome& o) {
  const auto& g = builtin_registry();
  auto lang = [](const char* s) { return iri(std::string(vocab::languages_ns) + s); };
  auto ser = [](const char* s) { return iri(std::string(vocab::serializations_ns) + s); };
  auto logic = [](const char* s) { return iri(std::string(vocab::logics_ns) + s); };

  LogicDeclaration owl;
  owl.language = lang("OWL2/DL");
  owl.serialization = ser("OWL2/Manchester");
  auto t1 = infer_triple(owl, g);
  o.require(t1.logic == logic("SROIQ"), "OWL2/DL + Manchester did not give SROIQ");

  LogicDeclaration prop;
  prop.logic = logic("Propositional");
  prop.serialization = ser("Prop/Hets");
  auto t2 = infer_triple(prop, g);
  o.require(t2.language == lang("Propositional"), "Propositional + Prop/Hets did not give language Propositional");

  auto d1 = default_translation(logic("Propositional"), logic("SROIQ"), g);
  o.require(d1.size() == 1 && d1[0].iri.str() == vocab::trans_prop_to_sroiq, "Propositional to SROIQ is not one edge");

  auto d2 = default_translation(logic("Propositional"), logic("CommonLogic"), g);
  std::vector<Iri> got;
  for (const auto& x : d2) got.push_back(x.iri);
  std::vector<Iri> expected{iri(std::string(vocab::trans_prop_to_sroiq)), iri(std::string(vocab::trans_sroiq_to_cl))};
  o.require(got == expected, "Propositional to CommonLogic is not the two-edge path");

  auto paths = translation_paths(g, logic("Propositional"), logic("CommonLogic"), 3);
  std::size_t shortest = SIZE_MAX;
  for (const auto& p : paths) shortest = std::min(shortest, p.size());
  int count = 0;
  for (const auto& p : paths) count += p.size() == shortest;
  o.require(count == 1 && shortest == 2, "shortest path is not unique");
  o.detail << paths.size() << " default paths up to length 3, " << count << " of length " << shortest;
}

void translation_soundness(Outcome& o) {
  auto start = Clock::now();
  gen::Rng rng(20240);
  int agree = 0, sat = 0;
  const auto& to_sroiq = translation_impl(iri(std::string(vocab::trans_prop_to_sroiq)));
  for (int round = 0; round < 100; ++round) {
    auto atoms = gen::names("a", gen::pick(rng, 1, 5));
    auto s = gen::prop_ontology(rng, atoms, 6);
    std::vector<PropFormula> fs;
    for (const auto& x : s.sentences) fs.push_back(std::get<PropFormula>(x.form));
    auto axioms = fixture::forms<ManchesterAxiom>(apply_translation(to_sroiq, s));
    bool before = oracle::satisfiable(fs);
    agree += before == oracle::point_satisfiable(axioms);
    sat += before;
  }
  o.require(agree == 100, std::to_string(agree) + "/100 propositional verdicts agree");

  int agree_cl = 0, sat_cl = 0;
  const auto& to_cl = translation_impl(iri(std::string(vocab::trans_sroiq_to_cl)));
  for (int round = 0; round < 50; ++round) {
    auto classes = gen::names("C", gen::pick(rng, 1, 3));
    auto s = gen::role_free_ontology(rng, classes, 4);
    bool before = oracle::finitely_satisfiable(fixture::forms<ManchesterAxiom>(s), 3);
    bool after = oracle::finitely_satisfiable(fixture::forms<ClifSentence>(apply_translation(to_cl, s)), 3);
    agree_cl += before == after;
    sat_cl += before;
  }
  o.require(agree_cl == 50, std::to_string(agree_cl) + "/50 description logic verdicts agree");
  double ms = ms_since(start);
  o.require(ms < 30000, "took over 30 s");
  o.detail << agree << "/100 (" << sat << " satisfiable), " << agree_cl << "/50 (" << sat_cl << " satisfiable), " << ms
           << " ms";
}

void round_trips(Outcome& o) {
  for (const auto& name : fixture::all_golden()) {
    auto first = parse_document(fixture::golden(name + ".dol"));
    auto second = parse_document(emit_text(first.document));
    o.require(!has_errors(second.diagnostics) && second.document == first.document, name + " text round trip differs");
    o.require(emit_text(second.document) == emit_text(first.document), name + " text is not a fixpoint");
  }

  auto exported = rdf::read_structural_rdf(export_registry_rdf(builtin_registry()));
  auto re_exported = rdf::read_structural_rdf(export_registry_rdf(registry_from_statements(exported)));
  o.require(oracle::isomorphic(exported, re_exported), "registry RDF round trip is not isomorphic");

  auto p = RdfNode::iri_node("http://example.org/p");
  auto q = RdfNode::iri_node("http://example.org/q");
  auto x = RdfNode::iri_node("http://example.org/x");
  using B = RdfNode;
  std::vector<RdfTriple> g1{{x, p, B::blank("a")}, {B::blank("a"), q, B::blank("b")}, {B::blank("b"), p, x}};
  std::vector<RdfTriple> g1_renamed{{B::blank("k"), p, x}, {x, p, B::blank("j")}, {B::blank("j"), q, B::blank("k")}};
  std::vector<RdfTriple> g1_swapped{{x, p, B::blank("a")}, {B::blank("a"), p, B::blank("b")}, {B::blank("b"), q, x}};
  std::vector<RdfTriple> shared{{x, p, B::blank("a")}, {x, q, B::blank("a")}};
  std::vector<RdfTriple> split{{x, p, B::blank("a")}, {x, q, B::blank("b")}};
  o.require(oracle::isomorphic(g1, g1_renamed), "renamed graph not isomorphic");
  o.require(!oracle::isomorphic(g1, g1_swapped), "predicate swap judged isomorphic");
  o.require(!oracle::isomorphic(shared, split), "blank sharing ignored");
  o.require(oracle::isomorphic(split, {{x, q, B::blank("c")}, {x, p, B::blank("d")}}), "split graph not isomorphic");

  // The writer's own blank node labels must not matter.
  rdf::BlankNodeScope scope("z");
  auto parsed = rdf::read_turtle(rdf::write_turtle(g1, {}), {}, scope).triples;
  o.require(oracle::isomorphic(parsed, g1), "Turtle write/read changes the graph");
  o.detail << fixture::all_golden().size() << " text fixpoints, registry " << exported.size()
           << " statements, 5 isomorphism pairs";
}

void lints(Outcome& o) {
  auto l1 = fixture::analyze_golden("listing1");
  o.require(!has_error(l1.diagnostics), "Listing 1 has errors");

  auto undeclared = fixture::analyze_golden("undeclared");
  bool inferred = false;
  for (const auto& d : undeclared.diagnostics)
    inferred = inferred || (d.severity == Severity::warning && d.message.find("inferred, not declared") != std::string::npos);
  o.require(inferred, "no 'inferred, not declared' warning");

  auto parsed = parse_document(fixture::golden("cyclic.dol"));
  auto cyclic = analyze(parsed.document, fixture::options());
  std::string trace;
  for (const auto& d : cyclic.diagnostics)
    if (d.severity == Severity::error && d.code == "cycle") trace = d.message;
  o.require(trace.find("A -> B -> C -> A") != std::string::npos, "no cycle trace");
  o.detail << "cycle: " << trace;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {"C1 golden-file parsing", golden_parsing},     {"C2 IRI expansion", iri_expansion},
      {"C3 extraction counts", extraction_counts},    {"C4 interpretation verification", interpretation},
      {"C5 registry inference", registry_inference},  {"C6 translation soundness", translation_soundness},
      {"C7 round trips", round_trips},                {"C8 lint and conformance", lints},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.name << ": ";
    if (o.ok) {
      std::cout << o.detail.str();
    } else {
      for (std::size_t i = 0; i < o.failures.size(); ++i) std::cout << (i ? "; " : "") << o.failures[i];
      ++failed;
    }
    std::cout << "\n";
  }
  return failed ? 1 : 0;
}
