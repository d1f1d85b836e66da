#include "dolc/iri.hpp"

#include <algorithm>
#include <cctype>

#include "dolc/error.hpp"

namespace dolc {

namespace {

bool ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool ascii_digit(char c) { return c >= '0' && c <= '9'; }

bool excluded_iri_char(unsigned char c) {
  if (c <= 0x20 || c == 0x7F) return true;
  switch (c) {
    case '<': case '>': case '"': case '{': case '}': case '|': case '\\': case '^': case '`':
      return true;
    default:
      return false;
  }
}

}  // namespace

bool is_absolute_iri(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!ascii_alpha(text[0])) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = text[i];
    if (!ascii_alpha(c) && !ascii_digit(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return std::none_of(text.begin(), text.end(),
                      [](char c) { return excluded_iri_char(static_cast<unsigned char>(c)); });
}

Iri Iri::parse(std::string_view text) {
  if (!is_absolute_iri(text))
    throw DolError("invalid-iri", "not an absolute IRI: " + std::string(text));
  return Iri(std::string(text));
}

std::optional<Iri> Iri::try_parse(std::string_view text) {
  if (!is_absolute_iri(text)) return std::nullopt;
  return Iri(std::string(text));
}

PrefixMap::PrefixMap(std::initializer_list<Binding> bindings) {
  for (const auto& [label, ns] : bindings) bind(label, ns);
}

void PrefixMap::bind(std::string label, std::string ns) {
  for (auto& b : bindings_) {
    if (b.first == label) {
      b.second = std::move(ns);
      return;
    }
  }
  bindings_.emplace_back(std::move(label), std::move(ns));
}

const std::string* PrefixMap::lookup(std::string_view label) const {
  for (const auto& b : bindings_)
    if (b.first == label) return &b.second;
  return nullptr;
}

PrefixMap PrefixMap::overlay(const PrefixMap& inner) const {
  PrefixMap out = *this;
  for (const auto& [label, ns] : inner.bindings_) out.bind(label, ns);
  return out;
}

std::string Curie::to_string() const {
  if (!prefix) return reference;
  return *prefix + ":" + reference;
}

bool is_prefix_label(std::string_view label) {
  if (label.empty()) return false;
  auto start_ok = [](unsigned char c) { return ascii_alpha(char(c)) || c == '_' || c >= 0x80; };
  if (!start_ok(static_cast<unsigned char>(label[0]))) return false;
  for (unsigned char c : label.substr(1)) {
    if (!start_ok(c) && !ascii_digit(char(c)) && c != '-' && c != '.') return false;
  }
  return label.back() != '.';
}

std::optional<Curie> parse_curie(std::string_view text) {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  if (text.empty() || text.front() == '<') return std::nullopt;
  if (std::any_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return Curie{std::nullopt, std::string(text)};
  std::string_view prefix = text.substr(0, colon);
  if (!prefix.empty() && !is_prefix_label(prefix)) return std::nullopt;
  return Curie{std::string(prefix), std::string(text.substr(colon + 1))};
}

Iri expand(const Curie& c, const PrefixMap& prefixes) {
  const std::string* ns = nullptr;
  if (!c.prefix) {
    ns = prefixes.lookup("");
    if (!ns) throw DolError("unresolved-name", "no empty-prefix binding for bare name '" + c.reference + "'");
  } else {
    ns = prefixes.lookup(*c.prefix);
    if (!ns) throw DolError("unknown-prefix", "unknown prefix '" + *c.prefix + ":' in '" + c.to_string() + "'");
  }
  return Iri::parse(*ns + c.reference);
}

std::variant<Curie, Iri> compact(const Iri& iri, const PrefixMap& prefixes) {
  const PrefixMap::Binding* best = nullptr;
  for (const auto& b : prefixes.bindings()) {
    if (b.second.empty() || iri.str().compare(0, b.second.size(), b.second) != 0) continue;
    if (!best || b.second.size() > best->second.size() ||
        (b.second.size() == best->second.size() && b.first < best->first))
      best = &b;
  }
  if (!best) return iri;
  return Curie{best->first, iri.str().substr(best->second.size())};
}

Iri resolve_name(std::string_view token, const PrefixMap& prefixes) {
  if (token.size() >= 2 && token.front() == '<' && token.back() == '>')
    return Iri::parse(token.substr(1, token.size() - 2));
  auto c = parse_curie(token);
  if (!c) throw DolError("invalid-name", "not a name: '" + std::string(token) + "'");
  // An unbound prefix followed by `//` is an IRI written without brackets.
  if (c->prefix && !c->prefix->empty() && !prefixes.contains(*c->prefix) &&
      c->reference.rfind("//", 0) == 0 && is_absolute_iri(token))
    return Iri::parse(token);
  return expand(*c, prefixes);
}

Iri document_iri_of(std::string_view name, const PrefixMap& prefixes) { return resolve_name(name, prefixes); }

}  // namespace dolc
