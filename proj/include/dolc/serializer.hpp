#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dolc/model.hpp"
#include "dolc/sentences.hpp"

namespace dolc {

enum class Format { dol_text, dol_xml, dol_rdf, linked_data };

// `text`, `xml`, `rdf`, `ld`.
std::optional<Format> format_from_string(std::string_view s);

struct EmissionOptions {
  Format format = Format::dol_text;
  std::optional<Iri> base_iri;
  bool pretty = true;  // indentation in XML output
};

// Deterministic output for every format. Errors: unanalyzed (linked-data
// output of a document the analyzer has not run on),
// unsupported-link-kind (DOL Text has no syntax for claim and import links).
std::string emit(const DistributedOntology& d, const EmissionOptions& options = {});

std::string emit_text(const DistributedOntology& d);
std::string emit_xml(const DistributedOntology& d, bool pretty = true);

// Abstract syntax as RDF (docs/rdf-vocabulary.md); expression trees become
// blank-node structures.
std::vector<RdfTriple> dol_rdf_statements(const DistributedOntology& d);

// One description per row of collect_parts.
std::vector<RdfTriple> linked_data_statements(const DistributedOntology& d);

// DOL Text for a single expression.
std::string print_expression(const OntologyExpression& e, const PrefixMap& prefixes);

}  // namespace dolc
