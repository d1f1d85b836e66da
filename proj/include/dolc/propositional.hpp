#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "dolc/iri.hpp"
#include "dolc/names.hpp"
#include "dolc/sentences.hpp"

// Propositional logic in the Hets text syntax:
//   props p, q, r
//   . p ∧ q ⟶ r
// Connectives accept Unicode glyphs and ASCII aliases: ¬/not/~, ∧//\,
// ∨/\/, ⟶/→/=>/-->, ⟷/↔/<=>, ⊥/false, ⊤/true.
namespace dolc::prop {

SignatureAndSentences parse_block(std::string_view text, const PrefixMap& prefixes);
PropFormula parse_formula(std::string_view text, const PrefixMap& prefixes);

std::string print(const PropFormula& f, const NamePrinter& names);

void collect_atoms(const PropFormula& f, std::set<Iri>& out);

}  // namespace dolc::prop

namespace dolc {

using Assignment = std::map<Iri, bool>;

// Classical truth value. Throws DolError("unassigned-atom").
bool eval_prop(const PropFormula& f, const Assignment& assignment);

}  // namespace dolc
