#include "dolc/registry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

#include "dolc/error.hpp"
#include "dolc/rdf.hpp"
#include "dolc/vocab.hpp"

namespace dolc {

namespace {

using json = nlohmann::json;

Iri iri_field(const json& obj, const char* key, const char* where) {
  if (!obj.contains(key) || !obj[key].is_string())
    throw DolError("registry-format", std::string(where) + ": missing string field '" + key + "'");
  return Iri::parse(obj[key].get<std::string>());
}

std::optional<Iri> optional_iri(const json& obj, const char* key) {
  if (!obj.contains(key) || obj[key].is_null()) return std::nullopt;
  if (!obj[key].is_string()) throw DolError("registry-format", std::string("field '") + key + "' must be a string");
  return Iri::parse(obj[key].get<std::string>());
}

const json& array_field(const json& doc, const char* key) {
  static const json empty = json::array();
  if (!doc.contains(key)) return empty;
  if (!doc[key].is_array()) throw DolError("registry-format", std::string("'") + key + "' must be an array");
  return doc[key];
}

template <typename T>
const T* by_iri(const std::vector<T>& xs, const Iri& iri) {
  for (const auto& x : xs)
    if (x.iri == iri) return &x;
  return nullptr;
}

std::string describe(const std::vector<MappingDesc>& path) {
  std::string out;
  for (const auto& m : path) {
    if (!out.empty()) out += " ; ";
    out += m.iri.str();
  }
  return out;
}

}  // namespace

std::string_view to_string(MappingKind k) { return k == MappingKind::translation ? "translation" : "projection"; }
std::string_view to_string(MappingLevel l) { return l == MappingLevel::logic ? "logic" : "language"; }

RegistryGraph RegistryGraph::build(std::vector<LogicDesc> logics, std::vector<LanguageDesc> languages,
                                   std::vector<SerializationDesc> serializations,
                                   std::vector<MappingDesc> mappings) {
  std::set<Iri> seen;
  auto unique = [&](const Iri& iri) {
    if (!seen.insert(iri).second) throw DolError("duplicate-iri", "registry entry defined twice: " + iri.str());
  };
  for (const auto& x : logics) unique(x.iri);
  for (const auto& x : languages) unique(x.iri);
  for (const auto& x : serializations) unique(x.iri);
  for (const auto& x : mappings) unique(x.iri);

  auto dangling = [](const std::string& what, const Iri& iri) {
    throw DolError("dangling-reference", what + " refers to unknown entry " + iri.str());
  };
  std::set<Iri> used_serializations;
  for (const auto& l : languages) {
    if (l.logic && !by_iri(logics, *l.logic)) dangling("language " + l.iri.str(), *l.logic);
    for (const auto& s : l.serializations) {
      if (!by_iri(serializations, s)) dangling("language " + l.iri.str(), s);
      used_serializations.insert(s);
    }
    if (l.sublanguage_of && !by_iri(languages, *l.sublanguage_of)) dangling("language " + l.iri.str(), *l.sublanguage_of);
  }
  for (const auto& s : serializations)
    if (!used_serializations.count(s.iri))
      throw DolError("orphan-serialization", "serialization " + s.iri.str() + " is not supported by any language");

  for (const auto& l : languages) {
    std::set<Iri> chain{l.iri};
    const LanguageDesc* cur = &l;
    while (cur->sublanguage_of) {
      if (!chain.insert(*cur->sublanguage_of).second)
        throw DolError("sublanguage-cycle", "sublanguage relation is cyclic at " + l.iri.str());
      cur = by_iri(languages, *cur->sublanguage_of);
    }
  }

  std::set<std::tuple<MappingKind, MappingLevel, Iri, Iri>> defaults;
  for (const auto& m : mappings) {
    if (m.level == MappingLevel::logic) {
      if (!by_iri(logics, m.source)) dangling("mapping " + m.iri.str(), m.source);
      if (!by_iri(logics, m.target)) dangling("mapping " + m.iri.str(), m.target);
    } else {
      if (!by_iri(languages, m.source)) dangling("mapping " + m.iri.str(), m.source);
      if (!by_iri(languages, m.target)) dangling("mapping " + m.iri.str(), m.target);
    }
    if (m.is_default && !defaults.insert({m.kind, m.level, m.source, m.target}).second)
      throw DolError("duplicate-default", "two default " + std::string(to_string(m.kind)) + "s from " +
                                              m.source.str() + " to " + m.target.str());
  }
  for (const auto& m : mappings) {
    if (m.adjoint_of) {
      const MappingDesc* t = by_iri(mappings, *m.adjoint_of);
      if (!t) dangling("mapping " + m.iri.str(), *m.adjoint_of);
      if (m.kind != MappingKind::projection || t->kind != MappingKind::translation || t->source != m.target ||
          t->target != m.source || t->level != m.level)
        throw DolError("invalid-adjoint", m.iri.str() + " is not a projection adjoint to " + t->iri.str());
    }
    if (m.backed_by) {
      const MappingDesc* b = by_iri(mappings, *m.backed_by);
      if (!b) dangling("mapping " + m.iri.str(), *m.backed_by);
      if (m.level != MappingLevel::language || b->level != MappingLevel::logic || b->kind != m.kind)
        throw DolError("invalid-backing", m.iri.str() + " cannot be backed by " + b->iri.str());
      const LanguageDesc* src = by_iri(languages, m.source);
      const LanguageDesc* tgt = by_iri(languages, m.target);
      if (src->logic != std::optional<Iri>(b->source) || tgt->logic != std::optional<Iri>(b->target))
        throw DolError("invalid-backing", "logics of " + m.iri.str() + " do not match " + b->iri.str());
    }
  }

  RegistryGraph g;
  g.logics_ = std::move(logics);
  g.languages_ = std::move(languages);
  g.serializations_ = std::move(serializations);
  g.mappings_ = std::move(mappings);
  return g;
}

const LogicDesc* RegistryGraph::logic(const Iri& iri) const { return by_iri(logics_, iri); }
const LanguageDesc* RegistryGraph::language(const Iri& iri) const { return by_iri(languages_, iri); }
const SerializationDesc* RegistryGraph::serialization(const Iri& iri) const { return by_iri(serializations_, iri); }
const MappingDesc* RegistryGraph::mapping(const Iri& iri) const { return by_iri(mappings_, iri); }

bool RegistryGraph::operator==(const RegistryGraph& o) const {
  auto sorted = [](auto v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.iri < b.iri; });
    return v;
  };
  auto norm_langs = [&](std::vector<LanguageDesc> v) {
    for (auto& l : v) std::sort(l.serializations.begin(), l.serializations.end());
    return sorted(std::move(v));
  };
  return sorted(logics_) == sorted(o.logics_) && norm_langs(languages_) == norm_langs(o.languages_) &&
         sorted(serializations_) == sorted(o.serializations_) && sorted(mappings_) == sorted(o.mappings_);
}

RegistryGraph load_registry(std::string_view json_text) {
  if (std::all_of(json_text.begin(), json_text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
    return {};
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DolError("registry-syntax", std::string("registry is not valid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw DolError("registry-format", "registry must be a JSON object");

  std::vector<LogicDesc> logics;
  for (const auto& x : array_field(doc, "logics"))
    logics.push_back(LogicDesc{iri_field(x, "iri", "logic"), x.value("description", std::string{})});

  std::vector<LanguageDesc> languages;
  for (const auto& x : array_field(doc, "languages")) {
    LanguageDesc l{iri_field(x, "iri", "language"), optional_iri(x, "logic"), {}, optional_iri(x, "sublanguage_of")};
    if (x.contains("serializations")) {
      for (const auto& s : x["serializations"]) {
        if (!s.is_string()) throw DolError("registry-format", "serializations must be IRI strings");
        l.serializations.push_back(Iri::parse(s.get<std::string>()));
      }
    }
    languages.push_back(std::move(l));
  }

  std::vector<SerializationDesc> serializations;
  for (const auto& x : array_field(doc, "serializations"))
    serializations.push_back(SerializationDesc{iri_field(x, "iri", "serialization"), x.value("supports_iris", true)});

  std::vector<MappingDesc> mappings;
  for (const auto& x : array_field(doc, "mappings")) {
    MappingDesc m;
    m.iri = iri_field(x, "iri", "mapping");
    std::string kind = x.value("kind", std::string("translation"));
    if (kind == "translation") m.kind = MappingKind::translation;
    else if (kind == "projection") m.kind = MappingKind::projection;
    else throw DolError("registry-format", "unknown mapping kind '" + kind + "'");
    std::string level = x.value("level", std::string("logic"));
    if (level == "logic") m.level = MappingLevel::logic;
    else if (level == "language") m.level = MappingLevel::language;
    else throw DolError("registry-format", "unknown mapping level '" + level + "'");
    m.source = iri_field(x, "source", "mapping");
    m.target = iri_field(x, "target", "mapping");
    m.is_default = x.value("default", false);
    m.adjoint_of = optional_iri(x, "adjoint_of");
    m.backed_by = optional_iri(x, "backed_by");
    mappings.push_back(std::move(m));
  }
  return RegistryGraph::build(std::move(logics), std::move(languages), std::move(serializations), std::move(mappings));
}

extern const char* const seed_registry_json;

std::string_view builtin_registry_json() { return seed_registry_json; }

const RegistryGraph& builtin_registry() {
  static const RegistryGraph g = load_registry(builtin_registry_json());
  return g;
}

LogicDeclaration infer_triple(const LogicDeclaration& given, const RegistryGraph& g) {
  if (given.empty()) throw DolError("empty-declaration", "a declaration needs a language, logic or serialization");
  if (given.language && !g.language(*given.language))
    throw DolError("unknown-language", "language not in registry: " + given.language->str());
  if (given.logic && !g.logic(*given.logic))
    throw DolError("unknown-logic", "logic not in registry: " + given.logic->str());
  if (given.serialization && !g.serialization(*given.serialization))
    throw DolError("unknown-serialization", "serialization not in registry: " + given.serialization->str());

  std::vector<LogicDeclaration> candidates;
  bool unknown_logic_match = false;
  for (const auto& l : g.languages()) {
    if (given.language && l.iri != *given.language) continue;
    if (given.serialization &&
        std::find(l.serializations.begin(), l.serializations.end(), *given.serialization) == l.serializations.end())
      continue;
    if (given.logic && l.logic != given.logic) {
      if (!l.logic) unknown_logic_match = true;
      continue;
    }
    if (given.serialization) {
      candidates.push_back(LogicDeclaration{l.iri, l.logic, given.serialization});
    } else {
      for (const auto& s : l.serializations) candidates.push_back(LogicDeclaration{l.iri, l.logic, s});
    }
  }

  if (candidates.empty()) {
    if (unknown_logic_match)
      throw DolError("logic-unknown", "the logic of the declared language is not known to the registry");
    throw DolError("inconsistent", "no registered language matches the declared language/logic/serialization");
  }
  if (candidates.size() > 1) {
    std::string msg = "declaration admits " + std::to_string(candidates.size()) + " completions:";
    for (const auto& c : candidates)
      msg += " (" + c.language->str() + ", " + (c.logic ? c.logic->str() : "?") + ", " + c.serialization->str() + ")";
    throw DolError("ambiguous", msg);
  }
  if (!candidates[0].logic)
    throw DolError("logic-unknown", "language " + candidates[0].language->str() +
                                        " has no known logic; its logic cannot be inferred");
  return candidates[0];
}

std::vector<MappingDesc> default_translation(const Iri& source, const Iri& target, const RegistryGraph& g) {
  if (!g.logic(source)) throw DolError("unknown-logic", "logic not in registry: " + source.str());
  if (!g.logic(target)) throw DolError("unknown-logic", "logic not in registry: " + target.str());
  if (source == target) return {};

  std::map<Iri, std::vector<const MappingDesc*>> out_edges;
  for (const auto& m : g.mappings())
    if (m.kind == MappingKind::translation && m.level == MappingLevel::logic && m.is_default)
      out_edges[m.source].push_back(&m);

  // BFS layer by layer, counting shortest paths and remembering one
  // predecessor edge for reconstruction.
  std::map<Iri, int> dist{{source, 0}};
  std::map<Iri, unsigned long> count{{source, 1}};
  std::map<Iri, const MappingDesc*> via;
  std::deque<Iri> queue{source};
  while (!queue.empty()) {
    Iri u = queue.front();
    queue.pop_front();
    for (const MappingDesc* m : out_edges[u]) {
      auto it = dist.find(m->target);
      if (it == dist.end()) {
        dist[m->target] = dist[u] + 1;
        count[m->target] = count[u];
        via[m->target] = m;
        queue.push_back(m->target);
      } else if (it->second == dist[u] + 1) {
        count[m->target] += count[u];
      }
    }
  }
  if (!dist.count(target))
    throw DolError("no-path", "no default translation from " + source.str() + " to " + target.str());

  std::vector<MappingDesc> path;
  for (Iri cur = target; cur != source; cur = via[cur]->source) path.push_back(*via[cur]);
  std::reverse(path.begin(), path.end());
  if (count[target] > 1)
    throw DolError("ambiguous-path", std::to_string(count[target]) + " shortest default translation paths from " +
                                         source.str() + " to " + target.str() + ", e.g. " + describe(path));
  return path;
}

const MappingDesc& resolve_mapping_iri(const Iri& iri, const RegistryGraph& g) {
  const MappingDesc* m = g.mapping(iri);
  if (!m) throw DolError("unknown-mapping", "mapping not in registry: " + iri.str());
  if (m->level == MappingLevel::logic) return *m;
  if (!m->backed_by) throw DolError("unknown-mapping", "language-level mapping " + iri.str() + " has no logic-level backing");
  return *g.mapping(*m->backed_by);
}

namespace {

std::string dol(std::string_view term) { return std::string(vocab::dol_ns) + std::string(term); }

RdfNode node(const Iri& iri) { return RdfNode::iri_node(iri.str()); }
RdfNode dol_node(std::string_view term) { return RdfNode::iri_node(dol(term)); }
RdfNode boolean(bool b) { return RdfNode::literal(b ? "true" : "false", std::string(vocab::xsd_boolean)); }

const RdfNode& type_predicate() {
  static const RdfNode p = RdfNode::iri_node(std::string(vocab::rdf_type));
  return p;
}

std::string rdfs_comment() { return std::string(vocab::rdfs_ns) + "comment"; }

}  // namespace

std::vector<RdfTriple> registry_statements(const RegistryGraph& g) {
  std::vector<RdfTriple> out;
  auto add = [&](const Iri& s, RdfNode p, RdfNode o) { out.push_back(RdfTriple{node(s), std::move(p), std::move(o)}); };
  for (const auto& l : g.logics()) {
    add(l.iri, type_predicate(), dol_node("Logic"));
    if (!l.description.empty()) add(l.iri, RdfNode::iri_node(rdfs_comment()), RdfNode::literal(l.description));
  }
  for (const auto& l : g.languages()) {
    add(l.iri, type_predicate(), dol_node("OntologyLanguage"));
    if (l.logic) add(l.iri, dol_node("hasLogic"), node(*l.logic));
    for (const auto& s : l.serializations) add(l.iri, dol_node("supportsSerialization"), node(s));
    if (l.sublanguage_of) add(l.iri, dol_node("sublanguageOf"), node(*l.sublanguage_of));
  }
  for (const auto& s : g.serializations()) {
    add(s.iri, type_predicate(), dol_node("Serialization"));
    add(s.iri, dol_node("supportsIRIs"), boolean(s.supports_iris));
  }
  for (const auto& m : g.mappings()) {
    add(m.iri, type_predicate(), dol_node(m.kind == MappingKind::translation ? "Translation" : "Projection"));
    add(m.iri, dol_node("mappingLevel"), dol_node(m.level == MappingLevel::logic ? "LogicLevel" : "LanguageLevel"));
    add(m.iri, dol_node("source"), node(m.source));
    add(m.iri, dol_node("target"), node(m.target));
    add(m.iri, dol_node("isDefault"), boolean(m.is_default));
    if (m.adjoint_of) add(m.iri, dol_node("adjointOf"), node(*m.adjoint_of));
    if (m.backed_by) add(m.iri, dol_node("backedBy"), node(*m.backed_by));
  }
  rdf::sort_statements(out);
  return out;
}

RegistryGraph registry_from_statements(const std::vector<RdfTriple>& statements) {
  std::map<std::string, std::multimap<std::string, RdfNode>> by_subject;
  for (const auto& t : statements) {
    if (t.subject.kind != RdfNode::Kind::iri)
      throw DolError("registry-format", "registry descriptions have IRI subjects");
    by_subject[t.subject.value].emplace(t.predicate.value, t.object);
  }
  auto one = [](const std::multimap<std::string, RdfNode>& props, const std::string& p) -> const RdfNode* {
    auto it = props.find(p);
    return it == props.end() ? nullptr : &it->second;
  };
  auto iri_of = [&](const std::multimap<std::string, RdfNode>& props, const std::string& p) -> std::optional<Iri> {
    const RdfNode* n = one(props, p);
    if (!n) return std::nullopt;
    return Iri::parse(n->value);
  };

  std::vector<LogicDesc> logics;
  std::vector<LanguageDesc> languages;
  std::vector<SerializationDesc> serializations;
  std::vector<MappingDesc> mappings;
  for (const auto& [subject, props] : by_subject) {
    const RdfNode* type = one(props, std::string(vocab::rdf_type));
    if (!type) continue;
    Iri iri = Iri::parse(subject);
    if (type->value == dol("Logic")) {
      const RdfNode* c = one(props, rdfs_comment());
      logics.push_back(LogicDesc{iri, c ? c->value : std::string{}});
    } else if (type->value == dol("OntologyLanguage")) {
      LanguageDesc l{iri, iri_of(props, dol("hasLogic")), {}, iri_of(props, dol("sublanguageOf"))};
      auto [b, e] = props.equal_range(dol("supportsSerialization"));
      for (auto it = b; it != e; ++it) l.serializations.push_back(Iri::parse(it->second.value));
      languages.push_back(std::move(l));
    } else if (type->value == dol("Serialization")) {
      const RdfNode* s = one(props, dol("supportsIRIs"));
      serializations.push_back(SerializationDesc{iri, !s || s->value == "true"});
    } else if (type->value == dol("Translation") || type->value == dol("Projection")) {
      MappingDesc m;
      m.iri = iri;
      m.kind = type->value == dol("Translation") ? MappingKind::translation : MappingKind::projection;
      const RdfNode* level = one(props, dol("mappingLevel"));
      m.level = level && level->value == dol("LanguageLevel") ? MappingLevel::language : MappingLevel::logic;
      auto src = iri_of(props, dol("source"));
      auto tgt = iri_of(props, dol("target"));
      if (!src || !tgt) throw DolError("registry-format", "mapping " + subject + " lacks source or target");
      m.source = *src;
      m.target = *tgt;
      const RdfNode* d = one(props, dol("isDefault"));
      m.is_default = d && d->value == "true";
      m.adjoint_of = iri_of(props, dol("adjointOf"));
      m.backed_by = iri_of(props, dol("backedBy"));
      mappings.push_back(std::move(m));
    }
  }
  return RegistryGraph::build(std::move(logics), std::move(languages), std::move(serializations), std::move(mappings));
}

const PrefixMap& registry_prefixes() {
  static const PrefixMap p{
      {"lang", std::string(vocab::languages_ns)},
      {"log", std::string(vocab::logics_ns)},
      {"proj", std::string(vocab::projections_ns)},
      {"ser", std::string(vocab::serializations_ns)},
      {"trans", std::string(vocab::translations_ns)},
  };
  return p;
}

std::string export_registry_rdf(const RegistryGraph& g) {
  PrefixMap prefixes = registry_prefixes();
  prefixes.bind("dol", std::string(vocab::dol_ns));
  prefixes.bind("rdfs", std::string(vocab::rdfs_ns));
  prefixes.bind("xsd", std::string(vocab::xsd_ns));
  return rdf::write_turtle(registry_statements(g), prefixes);
}

}  // namespace dolc
