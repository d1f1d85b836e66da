#include "dolc/analyzer.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "dolc/error.hpp"
#include "dolc/manchester.hpp"
#include "dolc/names.hpp"
#include "dolc/translations.hpp"
#include "dolc/vocab.hpp"

namespace dolc {

std::string_view to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::import: return "import";
    case EdgeKind::extension: return "extension";
    case EdgeKind::union_inclusion: return "union-inclusion";
    case EdgeKind::translation: return "translation";
    case EdgeKind::projection: return "projection";
    case EdgeKind::interpretation: return "interpretation";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    case Verdict::structurally_ok: return "structurally-ok";
    case Verdict::refuted_structurally: return "refuted-structurally";
    case Verdict::unsupported: return "unsupported";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// DevGraph

std::size_t DevGraph::add_node(std::string label, SignatureAndSentences content) {
  std::size_t id = nodes_.size();
  nodes_.push_back(DevNode{id, std::move(label), std::move(content)});
  return id;
}

void DevGraph::add_edge(DevEdge e) { edges_.push_back(std::move(e)); }

void DevGraph::set_label(std::size_t id, std::string label) { nodes_.at(id).label = std::move(label); }

const DevNode* DevGraph::find(std::string_view label) const {
  for (const auto& n : nodes_)
    if (n.label == label) return &n;
  return nullptr;
}

std::vector<std::string> DevGraph::find_cycle() const {
  std::vector<std::vector<std::size_t>> succ(nodes_.size());
  for (const auto& e : edges_)
    if (e.kind == EdgeKind::import || e.kind == EdgeKind::extension) succ.at(e.from).push_back(e.to);

  enum Color { white, grey, black };
  std::vector<Color> color(nodes_.size(), white);
  std::vector<std::size_t> path;
  std::vector<std::string> cycle;

  std::function<bool(std::size_t)> visit = [&](std::size_t u) {
    color[u] = grey;
    path.push_back(u);
    for (std::size_t v : succ[u]) {
      if (color[v] == grey) {
        auto from = std::find(path.begin(), path.end(), v);
        for (auto it = from; it != path.end(); ++it) cycle.push_back(nodes_[*it].label);
        cycle.push_back(nodes_[v].label);
        return true;
      }
      if (color[v] == white && visit(v)) return true;
    }
    path.pop_back();
    color[u] = black;
    return false;
  };
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (color[i] == white && visit(i)) break;
  return cycle;
}

// ---------------------------------------------------------------------------
// Taxonomic fragment

namespace {

using Op = PropFormula::Op;

std::optional<PropFormula> class_formula(const ClassExpr& c) {
  std::vector<PropFormula> args;
  for (const auto& a : c.args) {
    auto f = class_formula(a);
    if (!f) return std::nullopt;
    args.push_back(std::move(*f));
  }
  switch (c.kind) {
    case ClassExpr::Kind::named: return PropFormula::make_atom(c.name);
    case ClassExpr::Kind::thing: return PropFormula::make_top();
    case ClassExpr::Kind::nothing: return PropFormula::make_bottom();
    case ClassExpr::Kind::intersection: return PropFormula::make(Op::conjunction, std::move(args));
    case ClassExpr::Kind::union_of: return PropFormula::make(Op::disjunction, std::move(args));
    case ClassExpr::Kind::complement: return PropFormula::make(Op::negation, std::move(args));
    default: return std::nullopt;
  }
}

}  // namespace

std::optional<PropFormula> taxonomic_formula(const Sentence& s) {
  if (auto* p = std::get_if<PropFormula>(&s.form)) return *p;
  auto* a = std::get_if<ManchesterAxiom>(&s.form);
  if (!a || !owl::is_taxonomic(*a)) return std::nullopt;
  std::vector<PropFormula> cs;
  for (const auto& c : a->classes) {
    auto f = class_formula(c);
    if (!f) return std::nullopt;
    cs.push_back(std::move(*f));
  }
  switch (a->kind) {
    case ManchesterAxiom::Kind::sub_class_of: return PropFormula::make(Op::implication, {cs.at(0), cs.at(1)});
    case ManchesterAxiom::Kind::equivalent_to: return PropFormula::make(Op::equivalence, {cs.at(0), cs.at(1)});
    case ManchesterAxiom::Kind::disjoint_union_of: {
      std::vector<PropFormula> parts(cs.begin() + 1, cs.end());
      PropFormula covered = parts.size() == 1 ? parts.front() : PropFormula::make(Op::disjunction, parts);
      std::vector<PropFormula> all{PropFormula::make(Op::equivalence, {cs.at(0), covered})};
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          all.push_back(PropFormula::make(Op::negation, {PropFormula::make(Op::conjunction, {parts[i], parts[j]})}));
      return all.size() == 1 ? all.front() : PropFormula::make(Op::conjunction, std::move(all));
    }
    default: return std::nullopt;
  }
}

std::optional<Assignment> find_countermodel(const std::vector<PropFormula>& premises, const PropFormula& conclusion) {
  std::set<Iri> atom_set;
  for (const auto& p : premises) prop::collect_atoms(p, atom_set);
  prop::collect_atoms(conclusion, atom_set);
  if (atom_set.size() > 20)
    throw DolError("too-many-atoms", std::to_string(atom_set.size()) + " atoms exceed the brute-force limit of 20");
  std::vector<Iri> atoms(atom_set.begin(), atom_set.end());
  Assignment a;
  for (unsigned long mask = 0; mask < (1UL << atoms.size()); ++mask) {
    for (std::size_t i = 0; i < atoms.size(); ++i) a[atoms[i]] = (mask >> i) & 1U;
    bool premises_hold = std::all_of(premises.begin(), premises.end(), [&](const PropFormula& p) { return eval_prop(p, a); });
    if (premises_hold && !eval_prop(conclusion, a)) return a;
  }
  return std::nullopt;
}

namespace {

bool point_value(const ClassExpr& c, const Assignment& a) {
  using K = ClassExpr::Kind;
  switch (c.kind) {
    case K::named: return a.at(c.name);
    case K::thing: return true;
    case K::nothing: return false;
    case K::intersection:
      return std::all_of(c.args.begin(), c.args.end(), [&](const ClassExpr& x) { return point_value(x, a); });
    case K::union_of:
      return std::any_of(c.args.begin(), c.args.end(), [&](const ClassExpr& x) { return point_value(x, a); });
    case K::complement: return !point_value(c.args.at(0), a);
    case K::some: return a.at(c.property.property) && point_value(c.args.at(0), a);
    case K::only: return !a.at(c.property.property) || point_value(c.args.at(0), a);
    case K::exactly: {
      unsigned successors = a.at(c.property.property) && (c.args.empty() || point_value(c.args[0], a)) ? 1 : 0;
      return successors == c.cardinality;
    }
  }
  return false;
}

bool point_holds(const ManchesterAxiom& x, const Assignment& a) {
  using K = ManchesterAxiom::Kind;
  switch (x.kind) {
    case K::sub_class_of: return !point_value(x.classes.at(0), a) || point_value(x.classes.at(1), a);
    case K::equivalent_to: return point_value(x.classes.at(0), a) == point_value(x.classes.at(1), a);
    case K::disjoint_union_of: {
      int parts = 0;
      for (std::size_t i = 1; i < x.classes.size(); ++i) parts += point_value(x.classes[i], a);
      return parts <= 1 && point_value(x.classes.at(0), a) == (parts == 1);
    }
    case K::characteristic:
      return x.characteristic == PropertyCharacteristic::transitive || !a.at(x.property);
    case K::sub_property_of: return !a.at(x.property) || a.at(x.super_property);
    case K::types: return point_value(x.classes.at(0), a);
    case K::fact: return a.at(x.property);
  }
  return false;
}

void collect_names(const ManchesterAxiom& x, std::set<Iri>& out) {
  for (const auto& c : x.classes) {
    owl::collect_class_names(c, out);
    owl::collect_property_names(c, out);
  }
  if (!x.property.empty()) out.insert(x.property);
  if (!x.super_property.empty()) out.insert(x.super_property);
}

}  // namespace

std::optional<Assignment> find_point_countermodel(const std::vector<Sentence>& premises, const PropFormula& conclusion) {
  std::set<Iri> atom_set;
  for (const auto& s : premises) {
    if (auto* f = std::get_if<PropFormula>(&s.form)) prop::collect_atoms(*f, atom_set);
    else if (auto* x = std::get_if<ManchesterAxiom>(&s.form)) collect_names(*x, atom_set);
    else return std::nullopt;
  }
  prop::collect_atoms(conclusion, atom_set);
  atom_set.erase(Iri::parse(vocab::owl_thing));
  atom_set.erase(Iri::parse(vocab::owl_nothing));
  if (atom_set.size() > 20)
    throw DolError("too-many-atoms", std::to_string(atom_set.size()) + " atoms exceed the brute-force limit of 20");
  std::vector<Iri> atoms(atom_set.begin(), atom_set.end());
  Assignment a;
  for (unsigned long mask = 0; mask < (1UL << atoms.size()); ++mask) {
    for (std::size_t i = 0; i < atoms.size(); ++i) a[atoms[i]] = (mask >> i) & 1U;
    if (eval_prop(conclusion, a)) continue;
    bool premises_hold = std::all_of(premises.begin(), premises.end(), [&](const Sentence& s) {
      if (auto* f = std::get_if<PropFormula>(&s.form)) return eval_prop(*f, a);
      return point_holds(std::get<ManchesterAxiom>(s.form), a);
    });
    if (premises_hold) return a;
  }
  return std::nullopt;
}

std::string format_assignment(const Assignment& a, const NamePrinter& names) {
  std::string out;
  for (const auto& [atom, value] : a) {
    if (!out.empty()) out += ' ';
    out += names(atom.str()) + "=" + (value ? "1" : "0");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Declaration lints

namespace {

void collect_blocks(const OntologyExpression& e, std::vector<const BasicOntologyBlock*>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Inline>) {
          out.push_back(&n.block);
        } else if constexpr (std::is_same_v<T, expr::Extension>) {
          collect_blocks(*n.base, out);
          collect_blocks(*n.ext, out);
        } else if constexpr (std::is_same_v<T, expr::Union>) {
          collect_blocks(*n.left, out);
          collect_blocks(*n.right, out);
        } else if constexpr (std::is_same_v<T, expr::Translation> || std::is_same_v<T, expr::Projection>) {
          collect_blocks(*n.base, out);
        } else if constexpr (std::is_same_v<T, expr::ContextShift>) {
          collect_blocks(*n.inner, out);
        }
      },
      e.node);
}

std::vector<const BasicOntologyBlock*> all_blocks(const DistributedOntology& d) {
  std::vector<const BasicOntologyBlock*> out;
  for (const auto& item : d.items) {
    if (auto* def = std::get_if<OntologyDefinition>(&item)) collect_blocks(def->body, out);
    if (auto* l = std::get_if<Link>(&item)) {
      collect_blocks(l->source, out);
      collect_blocks(l->target, out);
    }
  }
  return out;
}

NamePrinter message_names(const DistributedOntology& d) {
  return curie_names(registry_prefixes().overlay(d.prefixes), true);
}

Diagnostic make_diag(Severity s, std::string code, std::string msg, SourceSpan span) {
  Diagnostic d;
  d.severity = s;
  d.span = span;
  d.code = std::move(code);
  d.message = std::move(msg);
  return d;
}

std::vector<Diagnostic> declaration_lints(const DistributedOntology& d, const RegistryGraph& g) {
  std::vector<Diagnostic> out;
  auto names = message_names(d);
  for (const BasicOntologyBlock* b : all_blocks(d)) {
    const LogicDeclaration& decl = b->decl;
    if (decl.empty()) {
      out.push_back(make_diag(Severity::warning, "inferred-logic",
                              "logic inferred, not declared: no logic declaration is in scope for this basic ontology",
                              b->span));
      continue;
    }
    try {
      LogicDeclaration c = infer_triple(decl, g);
      if (!decl.logic) {
        out.push_back(make_diag(Severity::warning, "inferred-logic",
                                "logic " + names(c.logic->str()) + " inferred, not declared", b->span));
      } else if (!decl.language || !decl.serialization) {
        std::string msg = "completed from the registry:";
        if (!decl.language) msg += " language " + names(c.language->str());
        if (!decl.serialization) msg += " syntax " + names(c.serialization->str());
        out.push_back(make_diag(Severity::info, "registry-completion", msg, b->span));
      }
      const SerializationDesc* ser = g.serialization(*c.serialization);
      if (ser && !ser->supports_iris)
        out.push_back(make_diag(Severity::warning, "no-iri-support",
                                "serialization " + names(ser->iri.str()) +
                                    " does not support IRIs; its symbols are resolved against the document prefixes",
                                b->span));
    } catch (const DolError& e) {
      out.push_back(make_diag(Severity::warning, e.code(), e.what(), b->span));
    }
  }
  return out;
}

// A DolError that already knows where it happened.
class LocatedError : public DolError {
 public:
  LocatedError(const DolError& e, SourceSpan span) : DolError(e.code(), e.what()), span_(span) {}
  const SourceSpan& span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

SourceSpan span_in_block(const BasicOntologyBlock& b, std::size_t offset) {
  offset = std::min(offset, b.text.size());
  SourceSpan s;
  s.begin = s.end = b.span.begin + offset;
  s.line = b.span.line;
  s.column = b.span.column;
  for (std::size_t i = 0; i < offset; ++i) {
    unsigned char c = static_cast<unsigned char>(b.text[i]);
    if (c == '\n') {
      ++s.line;
      s.column = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++s.column;
    }
  }
  return s;
}

std::string location_in(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  unsigned line = 1, col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '\n') {
      ++line;
      col = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

bool soft_failure(const std::string& code) { return code == "unanalyzable-reference" || code == "dependency-failed"; }

std::optional<std::string_view> serialization_for_extension(const std::string& ext) {
  if (ext == ".clif") return vocab::ser_clif;
  if (ext == ".omn") return vocab::ser_manchester;
  if (ext == ".prop") return vocab::ser_prop_hets;
  if (ext == ".ttl") return vocab::ser_turtle;
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Analyzer

struct Analyzer::State {
  DistributedOntology doc;
  AnalyzerOptions options;
  const RegistryGraph& registry;
  const AdapterRegistry& adapters;
  NamePrinter names;
  DevGraph graph;
  std::vector<CheckReport> reports;
  std::vector<Diagnostic> diagnostics;
  rdf::BlankNodeScope blanks{"b"};

  std::map<Iri, std::size_t> named;  // definitions and external ontologies
  std::set<std::size_t> named_ids;
  std::map<Iri, std::string> failed;
  std::vector<Iri> stack;
  std::map<Iri, std::optional<std::filesystem::path>> located;
  std::map<const BasicOntologyBlock*, SignatureAndSentences> extracted;
  std::size_t counter = 0;

  State(DistributedOntology d, AnalyzerOptions o)
      : doc(std::move(d)),
        options(std::move(o)),
        registry(options.registry ? *options.registry : builtin_registry()),
        adapters(options.adapters ? *options.adapters : builtin_adapters()),
        names(message_names(doc)) {}

  void note(Severity s, std::string code, std::string msg, SourceSpan span) {
    diagnostics.push_back(make_diag(s, std::move(code), std::move(msg), span));
  }

  std::size_t add(const std::string& kind, SignatureAndSentences content) {
    return graph.add_node("_:" + kind + std::to_string(++counter), std::move(content));
  }

  std::string trace(const std::vector<Iri>& iris) const {
    std::string out;
    for (const auto& i : iris) out += (out.empty() ? "" : " -> ") + names(i.str());
    return out;
  }

  // Inserts the default translation from the node's logic to `logic`.
  std::size_t coerce(std::size_t id, const Iri& logic, const SourceSpan& where) {
    Iri from = graph.node(id).logic();
    if (from == logic) return id;
    auto path = default_translation(from, logic, registry);
    std::string chosen;
    for (const auto& m : path) chosen += (chosen.empty() ? "" : ", ") + names(m.iri.str());
    note(Severity::info, "implicit-translation",
         "no translation given from " + names(from.str()) + " to " + names(logic.str()) + "; using default " + chosen,
         where);
    std::size_t cur = id;
    for (const auto& m : path) {
      SignatureAndSentences c = apply_translation(translation_impl(m.iri), graph.node(cur).content);
      std::size_t next = add("translation", std::move(c));
      graph.add_edge(DevEdge{EdgeKind::translation, cur, next, m.iri});
      cur = next;
    }
    return cur;
  }

  LogicDeclaration sniff(const BasicOntologyBlock& b) {
    static const std::pair<std::string_view, std::string_view> order[] = {
        {vocab::logic_propositional, vocab::ser_prop_hets},
        {vocab::logic_sroiq, vocab::ser_manchester},
        {vocab::logic_common_logic, vocab::ser_clif},
        {vocab::logic_rdf, vocab::ser_turtle},
    };
    std::vector<LogicDeclaration> fits;
    for (const auto& [logic, ser] : order) {
      const Adapter* a = adapters.find(Iri::parse(logic), Iri::parse(ser));
      if (!a) continue;
      try {
        ExtractionContext ctx{doc.prefixes, nullptr};
        a->extract(b.text, ctx);
        fits.push_back(LogicDeclaration{std::nullopt, Iri::parse(logic), Iri::parse(ser)});
      } catch (const DolError&) {
      }
    }
    if (fits.size() != 1)
      throw DolError("undeclared-logic", "no logic is declared and the content parses in " +
                                             std::to_string(fits.size()) + " known serializations");
    return infer_triple(fits.front(), registry);
  }

  std::size_t with_imports(SignatureAndSentences content, const LogicDeclaration& decl, const std::string& label,
                           const SourceSpan& where) {
    std::vector<std::size_t> imported;
    for (const auto& imp : content.imports) {
      if (!doc.find_definition(imp) && !locate(imp)) {
        note(Severity::warning, "unresolved-import",
             "import " + names(imp.str()) + " is neither defined in this document nor found on the include path", where);
        continue;
      }
      std::size_t id = coerce(flatten_reference(imp, decl), content.logic, where);
      imported.push_back(id);
    }
    for (std::size_t id : imported) merge_into(content, graph.node(id).content);
    std::size_t id = label.empty() ? add("basic", std::move(content)) : graph.add_node(label, std::move(content));
    for (std::size_t from : imported) graph.add_edge(DevEdge{EdgeKind::import, from, id, std::nullopt});
    return id;
  }

  std::size_t block(const BasicOntologyBlock& b) {
    LogicDeclaration decl;
    try {
      decl = b.decl.empty() ? sniff(b) : infer_triple(b.decl, registry);
    } catch (const DolError& e) {
      throw LocatedError(e, b.span);
    }
    const Adapter* a = adapters.find(*decl.logic, *decl.serialization);
    if (!a)
      throw LocatedError(DolError("unregistered-adapter", "no adapter is registered for " + names(decl.logic->str()) +
                                                              " in " + names(decl.serialization->str())),
                         b.span);
    SignatureAndSentences content;
    try {
      ExtractionContext ctx{doc.prefixes, &blanks};
      content = a->extract(b.text, ctx);
    } catch (const DolError& e) {
      throw LocatedError(e, e.has_offset() ? span_in_block(b, e.offset()) : b.span);
    }
    extracted[&b] = content;
    return with_imports(std::move(content), decl, "", b.span);
  }

  std::optional<std::filesystem::path> locate(const Iri& iri) {
    auto memo = located.find(iri);
    if (memo != located.end()) return memo->second;
    std::optional<std::filesystem::path> found;
    if (options.include_path) {
      std::string s = iri.str();
      while (!s.empty() && (s.back() == '#' || s.back() == '/')) s.pop_back();
      auto slash = s.find_last_of("/#:");
      std::string seg = slash == std::string::npos ? s : s.substr(slash + 1);
      if (!seg.empty()) {
        std::string stem = seg.substr(0, seg.rfind('.'));
        std::vector<std::string> candidates{seg};
        for (const char* ext : {".clif", ".omn", ".prop", ".ttl"}) candidates.push_back(stem + ext);
        for (const char* ext : {".clif", ".omn", ".prop", ".ttl"}) candidates.push_back(seg + ext);
        for (const auto& c : candidates) {
          std::error_code ec;
          auto p = *options.include_path / c;
          if (std::filesystem::is_regular_file(p, ec)) {
            found = p;
            break;
          }
        }
      }
    }
    located[iri] = found;
    return found;
  }

  std::size_t external(const Iri& iri, const LogicDeclaration& ctx) {
    auto file = locate(iri);
    LogicDeclaration decl;
    const Adapter* a = nullptr;
    if (file) {
      if (auto ser = serialization_for_extension(file->extension().string())) {
        decl = LogicDeclaration{std::nullopt, std::nullopt, Iri::parse(*ser)};
      } else {
        decl = ctx;
      }
    } else {
      decl = ctx;
    }
    try {
      if (!decl.empty()) {
        decl = infer_triple(decl, registry);
        a = adapters.find(*decl.logic, *decl.serialization);
      }
    } catch (const DolError&) {
    }
    if (!a && !decl.empty())
      throw DolError("unanalyzable-reference",
                     names(iri.str()) + " is written in " +
                         (decl.serialization ? names(decl.serialization->str()) : std::string("an unknown serialization")) +
                         ", for which no adapter is registered");
    if (!file)
      throw DolError("unresolved-reference", names(iri.str()) + " is not defined in this document" +
                                                 (options.include_path ? " and was not found under " +
                                                                             options.include_path->string()
                                                                       : std::string(" and no include path was given")));
    if (!a) throw DolError("undeclared-logic", "cannot tell the logic of " + file->string());
    std::ifstream in(*file, std::ios::binary);
    if (!in) throw DolError("io-error", "cannot read " + file->string());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    SignatureAndSentences content;
    try {
      ExtractionContext ectx{doc.prefixes, &blanks};
      content = a->extract(text, ectx);
    } catch (const DolError& e) {
      throw DolError(e.code(), file->string() + (e.has_offset() ? ":" + location_in(text, e.offset()) : "") + ": " +
                                   e.what());
    }
    return with_imports(std::move(content), decl, iri.str(), SourceSpan{});
  }

  OntologyDefinition* mutable_definition(const Iri& iri) {
    for (auto& item : doc.items)
      if (auto* def = std::get_if<OntologyDefinition>(&item); def && def->iri == iri) return def;
    return nullptr;
  }

  std::size_t flatten_reference(const Iri& iri, const LogicDeclaration& ctx) {
    if (auto it = named.find(iri); it != named.end()) return it->second;
    if (auto it = failed.find(iri); it != failed.end())
      throw DolError("dependency-failed", "depends on " + names(iri.str()) + ", which could not be analyzed");
    if (auto it = std::find(stack.begin(), stack.end(), iri); it != stack.end()) {
      std::vector<Iri> cycle(it, stack.end());
      cycle.push_back(iri);
      throw DolError("cycle", "cyclic import/extension: " + trace(cycle));
    }
    stack.push_back(iri);
    std::size_t id = 0;
    try {
      if (const OntologyDefinition* def = doc.find_definition(iri)) {
        std::size_t body = flatten(def->body, def->context);
        if (named_ids.count(body)) {
          id = graph.add_node(iri.str(), graph.node(body).content);
          graph.add_edge(DevEdge{EdgeKind::import, body, id, std::nullopt});
        } else {
          graph.set_label(body, iri.str());
          id = body;
        }
        mutable_definition(iri)->flattened = graph.node(id).content;
      } else {
        id = external(iri, ctx);
      }
    } catch (const DolError& e) {
      stack.pop_back();
      failed.emplace(iri, e.what());
      throw;
    }
    stack.pop_back();
    named[iri] = id;
    named_ids.insert(id);
    return id;
  }

  const MappingDesc& mapping_of_kind(const Iri& iri, MappingKind kind) {
    const MappingDesc& m = resolve_mapping_iri(iri, registry);
    if (m.kind != kind)
      throw DolError(kind == MappingKind::translation ? "not-a-translation" : "not-a-projection",
                     names(iri.str()) + " is a " + std::string(to_string(m.kind)) + ", not a " +
                         std::string(to_string(kind)));
    return m;
  }

  void require_symbols(const std::vector<SymbolRename>& renames, const SignatureAndSentences& s, bool source) {
    for (const auto& r : renames) {
      const Iri& sym = source ? r.from : r.to;
      if (!s.find(sym))
        throw DolError(source ? "rename-source-missing" : "rename-target-missing",
                       names(sym.str()) + " is not in the " + (source ? "source" : "target") + " signature");
    }
  }

  std::size_t flatten(const OntologyExpression& e, const LogicDeclaration& ctx) {
    try {
      return std::visit([&](const auto& n) { return flatten_node(n, e, ctx); }, e.node);
    } catch (const LocatedError&) {
      throw;
    } catch (const DolError& err) {
      throw LocatedError(err, e.span);
    }
  }

  std::size_t flatten_node(const expr::Reference& n, const OntologyExpression&, const LogicDeclaration& ctx) {
    return flatten_reference(n.iri, ctx);
  }

  std::size_t flatten_node(const expr::Inline& n, const OntologyExpression&, const LogicDeclaration&) {
    return block(n.block);
  }

  std::size_t flatten_node(const expr::Extension& n, const OntologyExpression& e, const LogicDeclaration& ctx) {
    std::size_t base = flatten(*n.base, ctx);
    std::size_t ext = flatten(*n.ext, ctx);
    base = coerce(base, graph.node(ext).logic(), e.span);
    SignatureAndSentences c = graph.node(base).content;
    merge_into(c, graph.node(ext).content);
    std::size_t id = add("extension", std::move(c));
    graph.add_edge(DevEdge{EdgeKind::extension, base, id, std::nullopt});
    graph.add_edge(DevEdge{EdgeKind::extension, ext, id, std::nullopt});
    return id;
  }

  std::size_t flatten_node(const expr::Union& n, const OntologyExpression& e, const LogicDeclaration& ctx) {
    std::size_t left = flatten(*n.left, ctx);
    std::size_t right = flatten(*n.right, ctx);
    if (graph.node(left).logic() != graph.node(right).logic()) {
      try {
        left = coerce(left, graph.node(right).logic(), e.span);
      } catch (const DolError& first) {
        try {
          right = coerce(right, graph.node(left).logic(), e.span);
        } catch (const DolError&) {
          throw first;
        }
      }
    }
    SignatureAndSentences c = graph.node(left).content;
    merge_into(c, graph.node(right).content);
    std::size_t id = add("union", std::move(c));
    graph.add_edge(DevEdge{EdgeKind::union_inclusion, left, id, std::nullopt});
    graph.add_edge(DevEdge{EdgeKind::union_inclusion, right, id, std::nullopt});
    return id;
  }

  std::size_t flatten_node(const expr::Translation& n, const OntologyExpression&, const LogicDeclaration& ctx) {
    std::size_t base = flatten(*n.base, ctx);
    SignatureAndSentences c = graph.node(base).content;
    require_symbols(n.renames, c, true);
    if (n.mapping) c = apply_translation(translation_impl(mapping_of_kind(*n.mapping, MappingKind::translation).iri), c);
    c = rename_symbols(c, n.renames);
    std::size_t id = add("translation", std::move(c));
    graph.add_edge(DevEdge{EdgeKind::translation, base, id, n.mapping});
    return id;
  }

  std::size_t flatten_node(const expr::Projection& n, const OntologyExpression& e, const LogicDeclaration& ctx) {
    std::size_t base = flatten(*n.base, ctx);
    const MappingDesc& m = mapping_of_kind(n.mapping, MappingKind::projection);
    ProjectionResult r = apply_projection(m.iri, graph.node(base).content, options.lossy);
    if (!r.dropped.empty()) {
      std::map<std::string, std::size_t> reasons;
      for (const auto& d : r.dropped) ++reasons[d.reason];
      std::string msg = names(n.mapping.str()) + " dropped " + std::to_string(r.dropped.size()) + " sentence(s):";
      for (const auto& [reason, count] : reasons) msg += " " + std::to_string(count) + " x " + reason + ";";
      msg.pop_back();
      note(Severity::warning, "projection-dropped", msg, e.span);
    }
    std::size_t id = add("projection", std::move(r.result));
    graph.add_edge(DevEdge{EdgeKind::projection, base, id, n.mapping});
    return id;
  }

  std::size_t flatten_node(const expr::ContextShift& n, const OntologyExpression&, const LogicDeclaration& ctx) {
    return flatten(*n.inner, shift_declaration(ctx, n.decl));
  }

  // -------------------------------------------------------------------------

  CheckReport check_interpretation(const Link& link) {
    CheckReport report{link.iri, link.kind, Verdict::unsupported, {}, std::nullopt};
    const SymbolMap* map = std::get_if<SymbolMap>(&link.payload);
    if (!map) throw DolError("wrong-link-kind", "not an interpretation");
    std::size_t s = flatten(link.source, link.context);
    std::size_t t = flatten(link.target, link.context);
    SignatureAndSentences src = graph.node(s).content;
    const SignatureAndSentences tgt = graph.node(t).content;
    graph.add_edge(DevEdge{EdgeKind::interpretation, s, t, map->translation});

    try {
      require_symbols(map->renames, src, true);
      TranslationImpl impl;
      if (map->translation) {
        impl = translation_impl(mapping_of_kind(*map->translation, MappingKind::translation).iri);
      } else {
        std::vector<TranslationImpl> steps;
        if (src.logic != tgt.logic) {
          std::string chosen;
          for (const auto& m : default_translation(src.logic, tgt.logic, registry)) {
            steps.push_back(translation_impl(m.iri));
            chosen += (chosen.empty() ? "" : ", ") + names(m.iri.str());
          }
          note(Severity::info, "implicit-translation",
               "no translation given from " + names(src.logic.str()) + " to " + names(tgt.logic.str()) +
                   "; using default " + chosen,
               link.span);
        }
        impl = compose(steps);
      }
      src = rename_symbols(apply_translation(impl, src), map->renames);
      require_symbols(map->renames, tgt, false);
    } catch (const DolError& e) {
      throw LocatedError(e, link.span);
    }

    if (src.logic != tgt.logic) {
      report.evidence = "translated source is in " + names(src.logic.str()) + " but the target is in " +
                        names(tgt.logic.str());
      return report;
    }

    std::vector<std::string> missing;
    for (const auto& e : src.entities) {
      const Entity* found = tgt.find(e.iri);
      if (!found) missing.push_back(names(e.iri.str()));
      else if (found->kind != e.kind)
        missing.push_back(names(e.iri.str()) + " (" + std::string(to_string(e.kind)) + " vs " +
                          std::string(to_string(found->kind)) + ")");
    }
    if (!missing.empty()) {
      report.verdict = Verdict::refuted_structurally;
      report.evidence = "symbols missing from the target or of another kind:";
      for (const auto& m : missing) report.evidence += " " + m;
      return report;
    }

    std::vector<PropFormula> premises;
    std::size_t ignored = 0;
    for (const auto& sen : tgt.sentences) {
      if (auto f = taxonomic_formula(sen)) premises.push_back(std::move(*f));
      else ++ignored;
    }
    std::set<Iri> atoms;
    for (const auto& p : premises) prop::collect_atoms(p, atoms);

    std::size_t unchecked = 0, by_membership = 0, by_search = 0;
    for (std::size_t i = 0; i < src.sentences.size(); ++i) {
      const Sentence& sen = src.sentences[i];
      if (std::find(tgt.sentences.begin(), tgt.sentences.end(), sen) != tgt.sentences.end()) {
        ++by_membership;
        continue;
      }
      auto f = taxonomic_formula(sen);
      if (!f) {
        ++unchecked;
        continue;
      }
      std::optional<Assignment> cm;
      try {
        cm = find_countermodel(premises, *f);
        // Dropped premises could still entail the axiom; only a model of the
        // whole target refutes it.
        if (cm && ignored) {
          cm = find_point_countermodel(tgt.sentences, *f);
          if (!cm) {
            ++unchecked;
            continue;
          }
        }
      } catch (const DolError&) {
        ++unchecked;
        continue;
      }
      prop::collect_atoms(*f, atoms);
      ++by_search;
      if (cm) {
        report.verdict = Verdict::refuted;
        report.evidence = "translated axiom " + std::to_string(i + 1) + " (" + prop::print(*f, names) +
                          ") fails under " + format_assignment(*cm, names);
        report.counter_assignment = std::move(cm);
        return report;
      }
    }
    if (unchecked == 0) {
      report.verdict = Verdict::verified;
      report.evidence = "all " + std::to_string(src.sentences.size()) + " translated axioms hold in the target (" +
                        std::to_string(by_membership) + " present verbatim, " + std::to_string(by_search) +
                        " by truth tables over " + std::to_string(atoms.size()) + " atoms and " +
                        std::to_string(premises.size()) + " taxonomic premises";
      if (ignored) report.evidence += "; " + std::to_string(ignored) + " non-taxonomic target axioms ignored";
      report.evidence += ")";
    } else {
      report.verdict = Verdict::structurally_ok;
      report.evidence = "all symbols resolved; " + std::to_string(unchecked) +
                        " translated axioms lie outside the taxonomic fragment and were not checked semantically";
    }
    return report;
  }

  CheckReport check_alignment(const Link& link) {
    CheckReport report{link.iri, link.kind, Verdict::structurally_ok, {}, std::nullopt};
    const auto* list = std::get_if<CorrespondenceList>(&link.payload);
    if (!list) throw DolError("wrong-link-kind", "not an alignment");
    std::size_t s = flatten(link.source, link.context);
    std::size_t t = flatten(link.target, link.context);
    const SignatureAndSentences& src = graph.node(s).content;
    const SignatureAndSentences& tgt = graph.node(t).content;
    if (list->entries.empty()) {
      note(Severity::warning, "empty-alignment", "alignment " + names(link.iri.str()) + " has no correspondences",
           link.span);
      report.evidence = "no correspondences";
      return report;
    }
    std::vector<std::string> problems;
    auto need = [&](const SignatureAndSentences& sig, const Iri& iri, EntityKind kind, const char* side) {
      const Entity* e = sig.find(iri);
      if (!e) problems.push_back(names(iri.str()) + " is not in the " + side + " signature");
      else if (e->kind != kind)
        problems.push_back(names(iri.str()) + " is a " + std::string(to_string(e->kind)) + " in the " + side +
                           ", not a " + std::string(to_string(kind)));
    };
    for (const auto& c : list->entries) {
      need(src, c.left, EntityKind::class_, "source");
      std::set<Iri> classes, props;
      owl::collect_class_names(c.right, classes);
      owl::collect_property_names(c.right, props);
      for (const auto& i : classes)
        if (i.str() != vocab::owl_thing && i.str() != vocab::owl_nothing) need(tgt, i, EntityKind::class_, "target");
      for (const auto& i : props) need(tgt, i, EntityKind::object_property, "target");
    }
    if (problems.empty()) {
      report.evidence = std::to_string(list->entries.size()) + " correspondences well-formed over both signatures";
    } else {
      report.verdict = Verdict::refuted_structurally;
      for (const auto& p : problems) report.evidence += (report.evidence.empty() ? "" : "; ") + p;
    }
    return report;
  }

  void report_error(const DolError& e, const SourceSpan& fallback) {
    const auto* located_error = dynamic_cast<const LocatedError*>(&e);
    SourceSpan span = located_error ? located_error->span() : fallback;
    note(soft_failure(e.code()) ? Severity::warning : Severity::error, e.code(), e.what(), span);
  }

  void write_back(OntologyExpression& e) {
    std::visit(
        [&](auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, expr::Inline>) {
            auto it = extracted.find(&n.block);
            if (it != extracted.end()) n.block.extracted = it->second;
          } else if constexpr (std::is_same_v<T, expr::Extension>) {
            write_back(*n.base);
            write_back(*n.ext);
          } else if constexpr (std::is_same_v<T, expr::Union>) {
            write_back(*n.left);
            write_back(*n.right);
          } else if constexpr (std::is_same_v<T, expr::Translation> || std::is_same_v<T, expr::Projection>) {
            write_back(*n.base);
          } else if constexpr (std::is_same_v<T, expr::ContextShift>) {
            write_back(*n.inner);
          }
        },
        e.node);
  }

  void run() {
    doc.analyzed = true;
    diagnostics = declaration_lints(doc, registry);
    for (const auto& item : doc.items) {
      const auto* def = std::get_if<OntologyDefinition>(&item);
      if (!def || named.count(def->iri) || failed.count(def->iri)) continue;
      try {
        flatten_reference(def->iri, def->context);
      } catch (const DolError& e) {
        report_error(e, def->span);
      }
    }
    for (const auto& item : doc.items) {
      const auto* link = std::get_if<Link>(&item);
      if (!link) continue;
      try {
        CheckReport r = link->kind == LinkKind::alignment ? check_alignment(*link) : check_interpretation(*link);
        if (r.verdict == Verdict::refuted)
          note(Severity::error, "interpretation-refuted", names(link->iri.str()) + ": " + r.evidence, link->span);
        reports.push_back(std::move(r));
      } catch (const DolError& e) {
        report_error(e, link->span);
        reports.push_back(CheckReport{link->iri, link->kind, Verdict::unsupported, e.what(), std::nullopt});
      }
    }
    std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) { return a.link < b.link; });
    std::stable_sort(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.span.begin < b.span.begin; });
    for (auto& item : doc.items) {
      if (auto* def = std::get_if<OntologyDefinition>(&item)) write_back(def->body);
      if (auto* l = std::get_if<Link>(&item)) {
        write_back(l->source);
        write_back(l->target);
      }
    }
  }
};

Analyzer::Analyzer(DistributedOntology doc, AnalyzerOptions options)
    : s_(std::make_unique<State>(std::move(doc), std::move(options))) {}

Analyzer::~Analyzer() = default;

std::size_t Analyzer::flatten_reference(const Iri& iri, const LogicDeclaration& ctx) {
  return s_->flatten_reference(iri, ctx);
}

std::size_t Analyzer::flatten(const OntologyExpression& e, const LogicDeclaration& ctx) { return s_->flatten(e, ctx); }

CheckReport Analyzer::check_interpretation(const Link& link) { return s_->check_interpretation(link); }
CheckReport Analyzer::check_alignment(const Link& link) { return s_->check_alignment(link); }

void Analyzer::run() { s_->run(); }

const DistributedOntology& Analyzer::document() const noexcept { return s_->doc; }
const DevGraph& Analyzer::graph() const noexcept { return s_->graph; }
const std::vector<CheckReport>& Analyzer::reports() const noexcept { return s_->reports; }
const std::vector<Diagnostic>& Analyzer::diagnostics() const noexcept { return s_->diagnostics; }

Analysis analyze(DistributedOntology doc, const AnalyzerOptions& options) {
  Analyzer a(std::move(doc), options);
  a.run();
  return Analysis{a.document(), a.graph(), a.reports(), a.diagnostics()};
}

std::vector<Diagnostic> lint_conformance(const DistributedOntology& d, const RegistryGraph& g) {
  std::vector<Diagnostic> out = declaration_lints(d, g);
  AnalyzerOptions options;
  options.registry = &g;
  Analyzer a(d, options);
  a.run();
  for (const auto& diag : a.diagnostics())
    if (diag.code == "implicit-translation") out.push_back(diag);
  std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) { return a.span.begin < b.span.begin; });
  return out;
}

std::string reports_to_json(const std::vector<CheckReport>& reports, const std::vector<Diagnostic>& diagnostics,
                            std::string_view file) {
  using json = nlohmann::ordered_json;
  json out;
  out["file"] = std::string(file);
  out["reports"] = json::array();
  for (const auto& r : reports) {
    json j;
    j["link"] = r.link.str();
    j["kind"] = std::string(to_string(r.kind));
    j["verdict"] = std::string(to_string(r.verdict));
    j["evidence"] = r.evidence;
    if (r.counter_assignment) {
      json a = json::object();
      for (const auto& [atom, value] : *r.counter_assignment) a[atom.str()] = value;
      j["counter_assignment"] = a;
    } else {
      j["counter_assignment"] = nullptr;
    }
    out["reports"].push_back(j);
  }
  out["diagnostics"] = json::array();
  for (const auto& d : diagnostics) {
    json j;
    j["severity"] = std::string(to_string(d.severity));
    j["code"] = d.code;
    j["message"] = d.message;
    j["line"] = d.span.line;
    j["column"] = d.span.column;
    out["diagnostics"].push_back(j);
  }
  return out.dump(2) + "\n";
}

}  // namespace dolc
