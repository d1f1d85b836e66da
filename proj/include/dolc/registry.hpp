#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dolc/declaration.hpp"
#include "dolc/iri.hpp"
#include "dolc/sentences.hpp"

namespace dolc {

struct LanguageDesc {
  Iri iri;
  std::optional<Iri> logic;  // nullopt: expressivity not known
  std::vector<Iri> serializations;
  std::optional<Iri> sublanguage_of;

  bool operator==(const LanguageDesc&) const = default;
};

struct LogicDesc {
  Iri iri;
  std::string description;

  bool operator==(const LogicDesc&) const = default;
};

struct SerializationDesc {
  Iri iri;
  bool supports_iris = true;

  bool operator==(const SerializationDesc&) const = default;
};

enum class MappingKind { translation, projection };
enum class MappingLevel { logic, language };

std::string_view to_string(MappingKind k);
std::string_view to_string(MappingLevel l);

struct MappingDesc {
  Iri iri;
  MappingKind kind = MappingKind::translation;
  MappingLevel level = MappingLevel::logic;
  Iri source;
  Iri target;
  bool is_default = false;
  std::optional<Iri> adjoint_of;
  std::optional<Iri> backed_by;

  bool operator==(const MappingDesc&) const = default;
};

// Languages, logics, serializations and the mappings between them. Immutable
// once loaded; every constructor path validates the invariants.
class RegistryGraph {
 public:
  RegistryGraph() = default;

  // Validates and builds. Errors: duplicate-iri, dangling-reference,
  // duplicate-default, sublanguage-cycle, invalid-adjoint, invalid-backing.
  static RegistryGraph build(std::vector<LogicDesc> logics, std::vector<LanguageDesc> languages,
                             std::vector<SerializationDesc> serializations,
                             std::vector<MappingDesc> mappings);

  const std::vector<LogicDesc>& logics() const noexcept { return logics_; }
  const std::vector<LanguageDesc>& languages() const noexcept { return languages_; }
  const std::vector<SerializationDesc>& serializations() const noexcept { return serializations_; }
  const std::vector<MappingDesc>& mappings() const noexcept { return mappings_; }

  const LogicDesc* logic(const Iri& iri) const;
  const LanguageDesc* language(const Iri& iri) const;
  const SerializationDesc* serialization(const Iri& iri) const;
  const MappingDesc* mapping(const Iri& iri) const;

  bool empty() const {
    return logics_.empty() && languages_.empty() && serializations_.empty() && mappings_.empty();
  }

  // Order-insensitive structural equality.
  bool operator==(const RegistryGraph& o) const;

 private:
  std::vector<LogicDesc> logics_;
  std::vector<LanguageDesc> languages_;
  std::vector<SerializationDesc> serializations_;
  std::vector<MappingDesc> mappings_;
};

// Parses the JSON registry format (docs/registry-format.md).
RegistryGraph load_registry(std::string_view json_text);

// The registry compiled into the library from data/seed-registry.json.
const RegistryGraph& builtin_registry();
std::string_view builtin_registry_json();

// Completes a partial declaration. Errors: ambiguous, inconsistent,
// logic-unknown, unknown-language/-logic/-serialization, empty-declaration.
LogicDeclaration infer_triple(const LogicDeclaration& given, const RegistryGraph& g);

// Ordered logic-level default translations from `source` to `target`; empty
// when the logics coincide. Errors: unknown-logic, no-path, ambiguous-path.
std::vector<MappingDesc> default_translation(const Iri& source, const Iri& target,
                                             const RegistryGraph& g);

// Canonical logic-level mapping for a logic- or language-level mapping IRI.
// Errors: unknown-mapping.
const MappingDesc& resolve_mapping_iri(const Iri& iri, const RegistryGraph& g);

// RDF statements describing every registry entry with the DOL vocabulary.
std::vector<RdfTriple> registry_statements(const RegistryGraph& g);
// Inverse of registry_statements.
RegistryGraph registry_from_statements(const std::vector<RdfTriple>& statements);

// Turtle rendering of registry_statements.
std::string export_registry_rdf(const RegistryGraph& g);

// Prefixes used when printing registry IRIs: log, lang, ser, trans, proj.
const PrefixMap& registry_prefixes();

}  // namespace dolc
