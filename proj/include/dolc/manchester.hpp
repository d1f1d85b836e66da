#pragma once

#include <set>
#include <string>
#include <string_view>

#include "dolc/iri.hpp"
#include "dolc/names.hpp"
#include "dolc/sentences.hpp"

// OWL 2 Manchester syntax, restricted to:
//   frames      Class:, ObjectProperty:, Individual:, Prefix:
//   sections    SubClassOf:, EquivalentTo:, DisjointUnionOf:, Characteristics:
//               (Transitive, Asymmetric), SubPropertyOf:, Types:, Facts:
//   axioms      `C SubClassOf D` and `C EquivalentTo D` outside frames
//               (general class axioms, as produced by translations)
//   classes     names, owl:Thing, owl:Nothing, and, or, not, some, only,
//               exactly n, inverse, parentheses
// Everything else is rejected with DolError("unsupported-construct").
// Class expressions additionally accept DL glyphs: ∃R.C, ∀R.C, ⊓, ⊔, ¬, ⊤, ⊥.
namespace dolc::owl {

SignatureAndSentences parse_block(std::string_view text, const PrefixMap& prefixes);
ClassExpr parse_class_expression(std::string_view text, const PrefixMap& prefixes);

// Manchester keyword rendering; re-parses to an equal tree.
std::string print(const ClassExpr& c, const NamePrinter& names);
std::string print(const ManchesterAxiom& a, const NamePrinter& names);

// Class names, booleans, owl:Thing and owl:Nothing only.
bool is_taxonomic(const ClassExpr& c);
// SubClassOf / EquivalentTo / DisjointUnionOf over taxonomic expressions.
bool is_taxonomic(const ManchesterAxiom& a);

void collect_class_names(const ClassExpr& c, std::set<Iri>& out);
void collect_property_names(const ClassExpr& c, std::set<Iri>& out);

}  // namespace dolc::owl
