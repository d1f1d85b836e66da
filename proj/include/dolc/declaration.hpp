#pragma once

#include <optional>

#include "dolc/iri.hpp"

namespace dolc {

// `language L logic G syntax S`; any subset may be written.
struct LogicDeclaration {
  std::optional<Iri> language;
  std::optional<Iri> logic;
  std::optional<Iri> serialization;

  bool empty() const { return !language && !logic && !serialization; }
  bool complete() const { return language && logic && serialization; }
  int given_count() const { return int(bool(language)) + int(bool(logic)) + int(bool(serialization)); }

  bool operator==(const LogicDeclaration&) const = default;
};

// Applies a context shift written as `shift` inside context `outer`: a shift
// naming only a serialization keeps the outer language and logic; any shift
// naming a language or logic starts afresh.
LogicDeclaration shift_declaration(const LogicDeclaration& outer, const LogicDeclaration& shift);

}  // namespace dolc
