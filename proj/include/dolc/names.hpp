#pragma once

#include <functional>
#include <string>

#include "dolc/iri.hpp"

namespace dolc {

// Renders an IRI (or blank label) inside a concrete syntax.
using NamePrinter = std::function<std::string(const std::string& iri)>;

// `<iri>` everywhere.
NamePrinter angle_bracket_names();

// CURIE when `prefixes` can abbreviate the IRI with a reference made of
// `[A-Za-z0-9_.:/-]` characters, `<iri>` otherwise. Bare names are used for
// the empty prefix when `bare_default` is set.
NamePrinter curie_names(PrefixMap prefixes, bool bare_default = false);

}  // namespace dolc
