#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dolc {

// Syntactic check for an absolute IRI: a scheme, a colon, and no whitespace
// or characters excluded by RFC 3987.
bool is_absolute_iri(std::string_view text);

class Iri {
 public:
  Iri() = default;

  // Throws DolError("invalid-iri") unless `text` is an absolute IRI.
  static Iri parse(std::string_view text);
  static std::optional<Iri> try_parse(std::string_view text);

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  auto operator<=>(const Iri&) const = default;
  bool operator==(const Iri&) const = default;

 private:
  explicit Iri(std::string value) : value_(std::move(value)) {}
  std::string value_;
};

// Prefix label to namespace bindings in declaration order. The empty label is
// the default namespace for bare names.
class PrefixMap {
 public:
  using Binding = std::pair<std::string, std::string>;

  PrefixMap() = default;
  PrefixMap(std::initializer_list<Binding> bindings);

  // Rebinding an existing label replaces it in place.
  void bind(std::string label, std::string ns);
  const std::string* lookup(std::string_view label) const;
  bool contains(std::string_view label) const { return lookup(label) != nullptr; }

  // A nested scope: `inner` bindings shadow ours.
  PrefixMap overlay(const PrefixMap& inner) const;

  const std::vector<Binding>& bindings() const noexcept { return bindings_; }
  bool empty() const noexcept { return bindings_.empty(); }

  bool operator==(const PrefixMap&) const = default;

 private:
  std::vector<Binding> bindings_;
};

struct Curie {
  std::optional<std::string> prefix;  // nullopt: bare name
  std::string reference;

  std::string to_string() const;
  bool operator==(const Curie&) const = default;
};

// NCName-like label rule used for prefixes.
bool is_prefix_label(std::string_view label);

// Accepts `p:ref`, `:ref`, `p:`, bare names and RDFa safe CURIEs `[p:ref]`.
std::optional<Curie> parse_curie(std::string_view text);

// Errors: unknown-prefix, unresolved-name (bare name without an empty-prefix
// binding), invalid-iri.
Iri expand(const Curie& c, const PrefixMap& prefixes);

// Longest-namespace match; the bound IRI itself when nothing matches.
std::variant<Curie, Iri> compact(const Iri& iri, const PrefixMap& prefixes);

// Resolves a name as written in DOL Text: `<absolute>`, a CURIE, or a bare
// name against the empty prefix.
Iri resolve_name(std::string_view token, const PrefixMap& prefixes);

// The IRI of a distributed ontology named `name`.
Iri document_iri_of(std::string_view name, const PrefixMap& prefixes);

}  // namespace dolc
