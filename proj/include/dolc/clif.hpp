#pragma once

#include <string>
#include <string_view>

#include "dolc/iri.hpp"
#include "dolc/names.hpp"
#include "dolc/sentences.hpp"

// Common Logic Interchange Format subset: forall, exists, if, iff, and, or,
// not, =, atomic sentences with functional terms, cl-imports, cl-comment.
// Variables may occur in predicate position.
namespace dolc::clif {

SignatureAndSentences parse_block(std::string_view text, const PrefixMap& prefixes);

std::string print(const ClifSentence& s, const NamePrinter& names);

}  // namespace dolc::clif
