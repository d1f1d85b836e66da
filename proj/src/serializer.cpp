#include "dolc/serializer.hpp"

#include <set>

#include "dolc/error.hpp"
#include "dolc/manchester.hpp"
#include "dolc/names.hpp"
#include "dolc/rdf.hpp"
#include "dolc/vocab.hpp"

namespace dolc {

std::optional<Format> format_from_string(std::string_view s) {
  if (s == "text") return Format::dol_text;
  if (s == "xml") return Format::dol_xml;
  if (s == "rdf") return Format::dol_rdf;
  if (s == "ld") return Format::linked_data;
  return std::nullopt;
}

namespace {

bool reserved_word(std::string_view w) {
  static const std::set<std::string_view> words{"distributed-ontology", "logic", "language", "syntax", "ontology",
                                                "interpretation", "alignment", "then", "and", "translate",
                                                "project", "with", "to"};
  return words.count(w) != 0;
}

// ---------------------------------------------------------------------------
// DOL Text

class TextWriter {
 public:
  explicit TextWriter(const PrefixMap& prefixes) : curie_(curie_names(prefixes, true)), plain_(curie_names(prefixes)) {}

  std::string name(const Iri& iri) const {
    std::string s = curie_(iri.str());
    return reserved_word(s) ? "<" + iri.str() + ">" : s;
  }

  std::string decl(const LogicDeclaration& d) const {
    std::string out;
    auto part = [&](const char* kw, const std::optional<Iri>& v) {
      if (!v) return;
      if (!out.empty()) out += ' ';
      out += std::string(kw) + " " + name(*v);
    };
    part("language", d.language);
    part("logic", d.logic);
    part("syntax", d.serialization);
    return out;
  }

  std::string renames(const std::vector<SymbolRename>& rs) const {
    std::string out;
    for (const auto& r : rs) out += (out.empty() ? "" : ", ") + name(r.from) + " \xE2\x86\xA6 " + name(r.to);
    return out;
  }

  std::string symbol_map(const std::optional<Iri>& mapping, const std::vector<SymbolRename>& rs) const {
    std::string out = mapping ? name(*mapping) : "";
    if (!rs.empty()) out += (out.empty() ? "" : ", ") + renames(rs);
    return out;
  }

  // Levels: 0 then-expression, 1 union, 2 postfix, 3 primary.
  std::string expression(const OntologyExpression& e, int level) const {
    return std::visit(
        [&](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, expr::Reference>) {
            return name(n.iri);
          } else if constexpr (std::is_same_v<T, expr::Inline>) {
            return "{" + n.block.text + "}";
          } else if constexpr (std::is_same_v<T, expr::Extension>) {
            std::string ext = std::holds_alternative<expr::ContextShift>(n.ext->node) ? expression(*n.ext, 0)
                                                                                      : expression(*n.ext, 1);
            return group(expression(*n.base, 0) + " then " + ext, level > 0);
          } else if constexpr (std::is_same_v<T, expr::Union>) {
            return group(expression(*n.left, 1) + " and " + expression(*n.right, 2), level > 1);
          } else if constexpr (std::is_same_v<T, expr::Translation>) {
            return group(expression(*n.base, 2) + " translate with " + symbol_map(n.mapping, n.renames), level > 2);
          } else if constexpr (std::is_same_v<T, expr::Projection>) {
            return group(expression(*n.base, 2) + " project with " + name(n.mapping), level > 2);
          } else {
            return decl(n.decl) + " : " + expression(*n.inner, 2);
          }
        },
        e.node);
  }

  std::string term(const ClassExpr& c) const { return owl::print(c, plain_); }

 private:
  static std::string group(std::string s, bool wrap) { return wrap ? "{ " + s + " }" : s; }

  NamePrinter curie_;
  NamePrinter plain_;
};

// ---------------------------------------------------------------------------
// XML

std::string xml_escape(std::string_view s, bool attribute) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += attribute ? "&quot;" : "\""; break;
      case '\n': out += attribute ? "&#10;" : "\n"; break;
      case '\r': out += "&#13;"; break;
      case '\t': out += attribute ? "&#9;" : "\t"; break;
      default: out += c;
    }
  }
  return out;
}

class XmlWriter {
 public:
  explicit XmlWriter(bool pretty) : pretty_(pretty) {}

  using Attrs = std::vector<std::pair<std::string, std::string>>;

  void open(const std::string& tag, const Attrs& attrs = {}) {
    line("<" + tag + attributes(attrs) + ">");
    ++depth_;
  }
  void close(const std::string& tag) {
    --depth_;
    line("</" + tag + ">");
  }
  void empty(const std::string& tag, const Attrs& attrs = {}) { line("<" + tag + attributes(attrs) + "/>"); }
  void text_element(const std::string& tag, std::string_view text) {
    line("<" + tag + ">" + xml_escape(text, false) + "</" + tag + ">");
  }
  void raw(const std::string& s) { out_ += s; }

  std::string take() { return std::move(out_); }

 private:
  static std::string attributes(const Attrs& attrs) {
    std::string s;
    for (const auto& [k, v] : attrs) s += " " + k + "=\"" + xml_escape(v, true) + "\"";
    return s;
  }
  void line(const std::string& s) {
    if (pretty_) out_ += std::string(std::size_t(depth_) * 2, ' ');
    out_ += s;
    if (pretty_) out_ += '\n';
  }

  bool pretty_;
  int depth_ = 0;
  std::string out_;
};

XmlWriter::Attrs decl_attrs(const LogicDeclaration& d) {
  XmlWriter::Attrs a;
  if (d.language) a.emplace_back("language", d.language->str());
  if (d.logic) a.emplace_back("logic", d.logic->str());
  if (d.serialization) a.emplace_back("syntax", d.serialization->str());
  return a;
}

void xml_expression(XmlWriter& w, const OntologyExpression& e) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Reference>) {
          w.empty("Reference", {{"iri", n.iri.str()}});
        } else if constexpr (std::is_same_v<T, expr::Inline>) {
          w.open("BasicOntology", decl_attrs(n.block.decl));
          w.text_element("Text", n.block.text);
          w.close("BasicOntology");
        } else if constexpr (std::is_same_v<T, expr::Extension>) {
          w.open("Extension");
          xml_expression(w, *n.base);
          xml_expression(w, *n.ext);
          w.close("Extension");
        } else if constexpr (std::is_same_v<T, expr::Union>) {
          w.open("Union");
          xml_expression(w, *n.left);
          xml_expression(w, *n.right);
          w.close("Union");
        } else if constexpr (std::is_same_v<T, expr::Translation>) {
          XmlWriter::Attrs a;
          if (n.mapping) a.emplace_back("mapping", n.mapping->str());
          w.open("Translation", a);
          xml_expression(w, *n.base);
          for (const auto& r : n.renames) w.empty("Rename", {{"from", r.from.str()}, {"to", r.to.str()}});
          w.close("Translation");
        } else if constexpr (std::is_same_v<T, expr::Projection>) {
          w.open("Projection", {{"mapping", n.mapping.str()}});
          xml_expression(w, *n.base);
          w.close("Projection");
        } else {
          w.open("ContextShift", decl_attrs(n.decl));
          xml_expression(w, *n.inner);
          w.close("ContextShift");
        }
      },
      e.node);
}

std::string link_element(LinkKind k) {
  switch (k) {
    case LinkKind::interpretation: return "Interpretation";
    case LinkKind::alignment: return "Alignment";
    case LinkKind::import: return "ImportLink";
    case LinkKind::conservative_extension_claim: return "ConservativeExtensionClaim";
    case LinkKind::definitional_extension_claim: return "DefinitionalExtensionClaim";
  }
  return "Link";
}

// ---------------------------------------------------------------------------
// RDF

RdfNode iri_node(std::string_view s) { return RdfNode::iri_node(std::string(s)); }
RdfNode dol(std::string_view term) { return RdfNode::iri_node(std::string(vocab::dol_ns) + std::string(term)); }
RdfNode rdf_type() { return iri_node(vocab::rdf_type); }
RdfNode integer(std::size_t n) { return RdfNode::literal(std::to_string(n), std::string(vocab::xsd_integer)); }

class RdfBuilder {
 public:
  RdfBuilder() = default;

  RdfNode fresh() { return RdfNode::blank("n" + std::to_string(++counter_)); }
  void add(RdfNode s, RdfNode p, RdfNode o) { out_.push_back(RdfTriple{std::move(s), std::move(p), std::move(o)}); }

  void decl(const RdfNode& s, const LogicDeclaration& d) {
    if (d.language) add(s, dol("language"), iri_node(d.language->str()));
    if (d.logic) add(s, dol("logic"), iri_node(d.logic->str()));
    if (d.serialization) add(s, dol("serialization"), iri_node(d.serialization->str()));
  }

  void renames(const RdfNode& s, const std::vector<SymbolRename>& rs) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      RdfNode r = fresh();
      add(s, dol("rename"), r);
      add(r, dol("position"), integer(i + 1));
      add(r, dol("from"), iri_node(rs[i].from.str()));
      add(r, dol("to"), iri_node(rs[i].to.str()));
    }
  }

  RdfNode expression(const OntologyExpression& e) {
    RdfNode s = fresh();
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, expr::Reference>) {
            add(s, rdf_type(), dol("Reference"));
            add(s, dol("refersTo"), iri_node(n.iri.str()));
          } else if constexpr (std::is_same_v<T, expr::Inline>) {
            add(s, rdf_type(), dol("BasicOntology"));
            decl(s, n.block.decl);
            add(s, dol("text"), RdfNode::literal(n.block.text));
          } else if constexpr (std::is_same_v<T, expr::Extension>) {
            add(s, rdf_type(), dol("Extension"));
            add(s, dol("base"), expression(*n.base));
            add(s, dol("extension"), expression(*n.ext));
          } else if constexpr (std::is_same_v<T, expr::Union>) {
            add(s, rdf_type(), dol("Union"));
            add(s, dol("left"), expression(*n.left));
            add(s, dol("right"), expression(*n.right));
          } else if constexpr (std::is_same_v<T, expr::Translation>) {
            add(s, rdf_type(), dol("TranslationExpression"));
            add(s, dol("base"), expression(*n.base));
            if (n.mapping) add(s, dol("mapping"), iri_node(n.mapping->str()));
            renames(s, n.renames);
          } else if constexpr (std::is_same_v<T, expr::Projection>) {
            add(s, rdf_type(), dol("ProjectionExpression"));
            add(s, dol("base"), expression(*n.base));
            add(s, dol("mapping"), iri_node(n.mapping.str()));
          } else {
            add(s, rdf_type(), dol("ContextShift"));
            decl(s, n.decl);
            add(s, dol("inner"), expression(*n.inner));
          }
        },
        e.node);
    return s;
  }

  std::string term(const ClassExpr& c) const { return owl::print(c, angle_bracket_names()); }

  std::vector<RdfTriple> take() { return std::move(out_); }

 private:
  std::size_t counter_ = 0;
  std::vector<RdfTriple> out_;
};

std::string_view link_class(LinkKind k) {
  switch (k) {
    case LinkKind::interpretation: return "Interpretation";
    case LinkKind::alignment: return "Alignment";
    case LinkKind::import: return "ImportLink";
    case LinkKind::conservative_extension_claim: return "ConservativeExtensionClaim";
    case LinkKind::definitional_extension_claim: return "DefinitionalExtensionClaim";
  }
  return "Link";
}

PrefixMap rdf_prefixes(const DistributedOntology& d) {
  PrefixMap p = d.prefixes;
  if (!p.contains("dol")) p.bind("dol", std::string(vocab::dol_ns));
  if (!p.contains("xsd")) p.bind("xsd", std::string(vocab::xsd_ns));
  return p;
}

}  // namespace

std::string print_expression(const OntologyExpression& e, const PrefixMap& prefixes) {
  return TextWriter(prefixes).expression(e, 0);
}

std::string emit_text(const DistributedOntology& d) {
  TextWriter w(d.prefixes);
  std::string out;
  if (!d.prefixes.empty()) {
    out += "%prefix(\n";
    for (const auto& [label, ns] : d.prefixes.bindings()) out += "  " + label + ": <" + ns + ">\n";
    out += ")%\n\n";
  }
  if (d.iri) out += "distributed-ontology " + w.name(*d.iri) + "\n\n";
  for (const auto& item : d.items) {
    if (auto* decl = std::get_if<LogicDeclarationItem>(&item)) {
      out += w.decl(decl->decl) + "\n\n";
    } else if (auto* def = std::get_if<OntologyDefinition>(&item)) {
      out += "ontology " + w.name(def->iri) + " =\n  " + w.expression(def->body, 0) + "\n\n";
    } else if (auto* link = std::get_if<Link>(&item)) {
      if (link->kind != LinkKind::interpretation && link->kind != LinkKind::alignment)
        throw DolError("unsupported-link-kind",
                       "DOL Text has no syntax for " + std::string(to_string(link->kind)) + " links");
      out += std::string(to_string(link->kind)) + " " + w.name(link->iri) + " : " + w.expression(link->source, 0) +
             " to " + w.expression(link->target, 0);
      if (auto* m = std::get_if<SymbolMap>(&link->payload)) {
        if (m->translation) out += " =\n  translate with " + w.symbol_map(m->translation, m->renames);
        else if (!m->renames.empty()) out += " =\n  " + w.renames(m->renames);
      } else {
        const auto& list = std::get<CorrespondenceList>(link->payload);
        if (!list.entries.empty()) {
          out += " =";
          for (std::size_t i = 0; i < list.entries.size(); ++i)
            out += std::string(i ? "," : "") + "\n  " + w.name(list.entries[i].left) + " = " +
                   w.term(list.entries[i].right);
        }
      }
      out += "\n\n";
    }
  }
  while (out.size() > 1 && out[out.size() - 1] == '\n' && out[out.size() - 2] == '\n') out.pop_back();
  return out;
}

std::string emit_xml(const DistributedOntology& d, bool pretty) {
  XmlWriter w(pretty);
  w.raw("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
  XmlWriter::Attrs root{{"xmlns", std::string(vocab::dol_xml_ns)}};
  if (d.iri) root.emplace_back("iri", d.iri->str());
  w.open("DistributedOntology", root);
  for (const auto& [label, ns] : d.prefixes.bindings()) w.empty("Prefix", {{"label", label}, {"namespace", ns}});
  for (const auto& item : d.items) {
    if (auto* decl = std::get_if<LogicDeclarationItem>(&item)) {
      w.empty("LogicDeclaration", decl_attrs(decl->decl));
    } else if (auto* def = std::get_if<OntologyDefinition>(&item)) {
      XmlWriter::Attrs a{{"iri", def->iri.str()}};
      for (auto& kv : decl_attrs(def->context)) a.push_back(kv);
      w.open("Ontology", a);
      xml_expression(w, def->body);
      w.close("Ontology");
    } else if (auto* link = std::get_if<Link>(&item)) {
      XmlWriter::Attrs a{{"iri", link->iri.str()}};
      for (auto& kv : decl_attrs(link->context)) a.push_back(kv);
      std::string tag = link_element(link->kind);
      w.open(tag, a);
      w.open("Source");
      xml_expression(w, link->source);
      w.close("Source");
      w.open("Target");
      xml_expression(w, link->target);
      w.close("Target");
      if (auto* m = std::get_if<SymbolMap>(&link->payload)) {
        XmlWriter::Attrs ma;
        if (m->translation) ma.emplace_back("translation", m->translation->str());
        w.open("SymbolMap", ma);
        for (const auto& r : m->renames) w.empty("Rename", {{"from", r.from.str()}, {"to", r.to.str()}});
        w.close("SymbolMap");
      } else {
        for (const auto& c : std::get<CorrespondenceList>(link->payload).entries) {
          w.open("Correspondence", {{"left", c.left.str()}, {"relation", std::string(to_string(c.relation))}});
          w.text_element("Term", owl::print(c.right, angle_bracket_names()));
          w.close("Correspondence");
        }
      }
      w.close(tag);
    }
  }
  w.close("DistributedOntology");
  std::string out = w.take();
  if (!pretty) out += '\n';
  return out;
}

std::vector<RdfTriple> dol_rdf_statements(const DistributedOntology& d) {
  RdfBuilder b;
  RdfNode doc = d.iri ? iri_node(d.iri->str()) : b.fresh();
  b.add(doc, rdf_type(), dol("DistributedOntology"));
  for (const auto& [label, ns] : d.prefixes.bindings()) {
    RdfNode p = b.fresh();
    b.add(doc, dol("prefix"), p);
    b.add(p, dol("prefixLabel"), RdfNode::literal(label));
    b.add(p, dol("namespace"), iri_node(ns));
  }
  std::size_t position = 0;
  for (const auto& item : d.items) {
    ++position;
    if (auto* decl = std::get_if<LogicDeclarationItem>(&item)) {
      RdfNode s = b.fresh();
      b.add(doc, dol("item"), s);
      b.add(s, rdf_type(), dol("LogicDeclaration"));
      b.add(s, dol("position"), integer(position));
      b.decl(s, decl->decl);
    } else if (auto* def = std::get_if<OntologyDefinition>(&item)) {
      RdfNode s = iri_node(def->iri.str());
      b.add(doc, dol("item"), s);
      b.add(s, rdf_type(), dol("Ontology"));
      b.add(s, dol("position"), integer(position));
      b.decl(s, def->context);
      b.add(s, dol("definition"), b.expression(def->body));
    } else if (auto* link = std::get_if<Link>(&item)) {
      RdfNode s = iri_node(link->iri.str());
      b.add(doc, dol("item"), s);
      b.add(s, rdf_type(), dol(link_class(link->kind)));
      b.add(s, dol("position"), integer(position));
      b.decl(s, link->context);
      b.add(s, dol("source"), b.expression(link->source));
      b.add(s, dol("target"), b.expression(link->target));
      if (auto* m = std::get_if<SymbolMap>(&link->payload)) {
        if (m->translation) b.add(s, dol("mapping"), iri_node(m->translation->str()));
        b.renames(s, m->renames);
      } else {
        const auto& entries = std::get<CorrespondenceList>(link->payload).entries;
        for (std::size_t i = 0; i < entries.size(); ++i) {
          RdfNode c = b.fresh();
          b.add(s, dol("correspondence"), c);
          b.add(c, dol("position"), integer(i + 1));
          b.add(c, dol("left"), iri_node(entries[i].left.str()));
          b.add(c, dol("relation"), RdfNode::literal(std::string(to_string(entries[i].relation))));
          b.add(c, dol("right"), RdfNode::literal(b.term(entries[i].right)));
        }
      }
    }
  }
  return b.take();
}

std::vector<RdfTriple> linked_data_statements(const DistributedOntology& d) {
  std::vector<RdfTriple> out;
  auto add = [&](const Iri& s, RdfNode p, RdfNode o) { out.push_back(RdfTriple{iri_node(s.str()), std::move(p), std::move(o)}); };
  for (const auto& row : collect_parts(d)) {
    switch (row.kind) {
      case PartKind::distributed_ontology: add(row.iri, rdf_type(), dol("DistributedOntology")); break;
      case PartKind::ontology: add(row.iri, rdf_type(), dol("Ontology")); break;
      case PartKind::link: add(row.iri, rdf_type(), dol("Link")); break;
      case PartKind::entity:
        add(row.iri, rdf_type(), dol("Entity"));
        add(row.iri, dol("entityKind"), RdfNode::literal(std::string(to_string(*row.entity_kind))));
        break;
      case PartKind::sentence: add(row.iri, rdf_type(), dol("Sentence")); break;
    }
    if (!row.owner.empty()) add(row.iri, dol("partOf"), iri_node(row.owner.str()));
  }
  for (const auto& item : d.items) {
    if (auto* def = std::get_if<OntologyDefinition>(&item)) {
      if (!def->flattened) continue;
      if (!def->flattened->logic.empty()) add(def->iri, dol("logic"), iri_node(def->flattened->logic.str()));
      add(def->iri, dol("entityCount"), integer(def->flattened->entities.size()));
      add(def->iri, dol("sentenceCount"), integer(def->flattened->sentences.size()));
      for (const auto& imp : def->flattened->imports) add(def->iri, dol("imports"), iri_node(imp.str()));
    } else if (auto* link = std::get_if<Link>(&item)) {
      add(link->iri, dol("linkKind"), RdfNode::literal(std::string(to_string(link->kind))));
      if (auto* r = std::get_if<expr::Reference>(&link->source.node)) add(link->iri, dol("source"), iri_node(r->iri.str()));
      if (auto* r = std::get_if<expr::Reference>(&link->target.node)) add(link->iri, dol("target"), iri_node(r->iri.str()));
      if (auto* m = std::get_if<SymbolMap>(&link->payload); m && m->translation)
        add(link->iri, dol("mapping"), iri_node(m->translation->str()));
    }
  }
  return out;
}

std::string emit(const DistributedOntology& d, const EmissionOptions& options) {
  if (options.base_iri && !is_absolute_iri(options.base_iri->str()))
    throw DolError("invalid-iri", "base IRI is not absolute: " + options.base_iri->str());
  rdf::TurtleWriteOptions turtle;
  if (options.base_iri) turtle.base = options.base_iri->str();
  switch (options.format) {
    case Format::dol_text: return emit_text(d) + "\n";
    case Format::dol_xml: return emit_xml(d, options.pretty);
    case Format::dol_rdf: return rdf::write_turtle(dol_rdf_statements(d), rdf_prefixes(d), turtle);
    case Format::linked_data: {
      if (!d.analyzed)
        throw DolError("unanalyzed", "linked-data output needs an analyzed document");
      return rdf::write_turtle(linked_data_statements(d), rdf_prefixes(d), turtle);
    }
  }
  return {};
}

}  // namespace dolc
