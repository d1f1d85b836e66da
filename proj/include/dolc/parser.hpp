#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dolc/declaration.hpp"
#include "dolc/diagnostics.hpp"
#include "dolc/model.hpp"

namespace dolc {

struct ParseResult {
  DistributedOntology document;
  std::vector<Diagnostic> diagnostics;
};

// Parses DOL Text. Malformed items are reported and skipped; parsing resumes
// at the next top-level keyword. The grammar is described in
// docs/GRAMMAR-DEVIATIONS.md.
ParseResult parse_document(std::string_view text);

// One ontology expression on its own. Throws DolError on any error.
OntologyExpression parse_ontology_expression(std::string_view text, const PrefixMap& prefixes = {},
                                             const LogicDeclaration& context = {});

// Stable indented tree rendering used by `dolc parse --dump-ast` and the
// golden tests (docs/ast-dump-format.md).
std::string dump_ast(const DistributedOntology& d);
std::string dump_expression(const OntologyExpression& e, int indent = 0);

}  // namespace dolc
