#include "dolc/manchester.hpp"

#include <cctype>
#include <vector>

#include "dolc/error.hpp"
#include "dolc/vocab.hpp"

namespace dolc::owl {

namespace {

enum class Tok { word, keyword, number, iri, lparen, rparen, comma, dot, exists, forall, meet, join, neg, top, bottom, end };

struct Token {
  Tok kind;
  std::string text;  // keywords without the trailing colon
  std::size_t begin;
  std::size_t end;
};

constexpr std::string_view supported_keywords[] = {
    "Class", "ObjectProperty", "Individual", "Prefix", "SubClassOf", "EquivalentTo",
    "DisjointUnionOf", "Characteristics", "SubPropertyOf", "Types", "Facts",
};

constexpr std::string_view unsupported_keywords[] = {
    "DataProperty", "AnnotationProperty", "Datatype", "Annotations", "DisjointWith", "DisjointClasses",
    "EquivalentClasses", "DisjointProperties", "EquivalentProperties", "Domain", "Range", "InverseOf",
    "SubPropertyChain", "SameAs", "DifferentFrom", "SameIndividual", "DifferentIndividuals", "HasKey",
    "Import", "Ontology", "Rule",
};

bool is_keyword(std::string_view w, bool* supported) {
  for (auto k : supported_keywords)
    if (k == w) return *supported = true;
  for (auto k : unsupported_keywords)
    if (k == w) {
      *supported = false;
      return true;
    }
  return false;
}

struct Glyph {
  std::string_view text;
  Tok kind;
};

constexpr Glyph glyphs[] = {
    {"∃", Tok::exists}, {"∀", Tok::forall}, {"⊓", Tok::meet}, {"⊔", Tok::join},
    {"¬", Tok::neg},    {"⊤", Tok::top},    {"⊥", Tok::bottom},
};

bool word_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == ':' || c == '/' || c == '#' || c == '-' || c == '%' || c == '\'' ||
         c >= 0x80;
}

bool starts_glyph(std::string_view s, std::size_t i) {
  for (const auto& g : glyphs)
    if (s.substr(i, g.text.size()) == g.text) return true;
  return false;
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '#' && (i == 0 || s[i - 1] == '\n' || std::isspace(static_cast<unsigned char>(s[i - 1])))) {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    bool matched = false;
    for (const auto& g : glyphs) {
      if (s.substr(i, g.text.size()) == g.text) {
        out.push_back(Token{g.kind, std::string(g.text), i, i + g.text.size()});
        i += g.text.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    switch (c) {
      case '(': out.push_back(Token{Tok::lparen, "(", i, i + 1}); ++i; continue;
      case ')': out.push_back(Token{Tok::rparen, ")", i, i + 1}); ++i; continue;
      case ',': out.push_back(Token{Tok::comma, ",", i, i + 1}); ++i; continue;
      case '.': out.push_back(Token{Tok::dot, ".", i, i + 1}); ++i; continue;
      case '<': {
        auto close = s.find('>', i);
        if (close == std::string_view::npos) throw DolError("manchester-syntax", "unterminated IRI", i);
        out.push_back(Token{Tok::iri, std::string(s.substr(i, close + 1 - i)), i, close + 1});
        i = close + 1;
        continue;
      }
      case '{':
      case '[':
      case '"':
        throw DolError("unsupported-construct", std::string("'") + char(c) + "' (nominals, facets and literals) is not supported", i);
      default: break;
    }
    if (!word_char(c)) throw DolError("manchester-syntax", std::string("unexpected character '") + char(c) + "'", i);
    std::size_t start = i;
    while (i < s.size() && word_char(static_cast<unsigned char>(s[i])) && !starts_glyph(s, i)) ++i;
    std::string word(s.substr(start, i - start));
    bool supported = false;
    if (word.size() > 1 && word.back() == ':' && is_keyword(std::string_view(word).substr(0, word.size() - 1), &supported)) {
      word.pop_back();
      if (!supported) throw DolError("unsupported-construct", "'" + word + ":' is not supported", start);
      out.push_back(Token{Tok::keyword, word, start, i});
    } else if (std::all_of(word.begin(), word.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      out.push_back(Token{Tok::number, word, start, i});
    } else {
      out.push_back(Token{Tok::word, word, start, i});
    }
  }
  out.push_back(Token{Tok::end, "", s.size(), s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, PrefixMap prefixes) : toks_(lex(text)), prefixes_(std::move(prefixes)) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return peek().kind == Tok::word && peek().text == w; }
  std::size_t last_end() const { return pos_ ? toks_[pos_ - 1].end : 0; }

  [[noreturn]] void fail(const std::string& msg) const { throw DolError("manchester-syntax", msg, peek().begin); }
  [[noreturn]] void unsupported(const std::string& what) const {
    throw DolError("unsupported-construct", what + " is not supported", peek().begin);
  }

  bool at_reserved() const {
    static constexpr std::string_view reserved[] = {"and", "or", "not", "some", "only", "exactly", "inverse",
                                                    "that", "min", "max", "value", "Self"};
    if (peek().kind != Tok::word) return false;
    for (auto r : reserved)
      if (peek().text == r) return true;
    return false;
  }

  Iri name() {
    const Token& t = peek();
    if (t.kind != Tok::word && t.kind != Tok::iri) fail(t.kind == Tok::end ? "unexpected end of input" : "expected a name, found '" + t.text + "'");
    if (at_reserved()) fail("expected a name, found keyword '" + t.text + "'");
    next();
    try {
      return resolve_name(t.text, prefixes_);
    } catch (const DolError& e) {
      throw DolError(e.code(), e.what(), t.begin);
    }
  }

  IndividualRef individual() {
    if (peek().kind == Tok::word && peek().text.rfind("_:", 0) == 0) {
      std::string label = next().text.substr(2);
      if (label.empty()) fail("empty anonymous individual label");
      return IndividualRef{label, true};
    }
    return IndividualRef{name().str(), false};
  }

  PropertyExpr property() {
    if (at_word("inverse")) {
      next();
      bool paren = at(Tok::lparen);
      if (paren) next();
      PropertyExpr p{name(), true};
      if (paren) {
        if (!at(Tok::rparen)) fail("expected ')'");
        next();
      }
      return p;
    }
    return PropertyExpr{name(), false};
  }

  ClassExpr description() {
    std::vector<ClassExpr> ops{conjunction()};
    while (at_word("or") || at(Tok::join)) {
      next();
      ops.push_back(conjunction());
    }
    return ops.size() == 1 ? std::move(ops[0]) : ClassExpr::combine(ClassExpr::Kind::union_of, std::move(ops));
  }

  ClassExpr conjunction() {
    std::vector<ClassExpr> ops{primary()};
    while (at_word("and") || at(Tok::meet) || at_word("that")) {
      next();
      ops.push_back(primary());
    }
    return ops.size() == 1 ? std::move(ops[0]) : ClassExpr::combine(ClassExpr::Kind::intersection, std::move(ops));
  }

  ClassExpr primary() {
    if (at_word("not") || at(Tok::neg)) {
      next();
      return ClassExpr::complement_of(primary());
    }
    if (at(Tok::exists) || at(Tok::forall)) {
      auto kind = next().kind == Tok::exists ? ClassExpr::Kind::some : ClassExpr::Kind::only;
      PropertyExpr p = property();
      if (!at(Tok::dot)) fail("expected '.' after the role of a DL restriction");
      next();
      return ClassExpr::restriction(kind, std::move(p), primary());
    }
    if (at(Tok::top)) {
      next();
      return ClassExpr::thing();
    }
    if (at(Tok::bottom)) {
      next();
      return ClassExpr::nothing();
    }
    if (at(Tok::lparen)) {
      next();
      ClassExpr c = description();
      if (!at(Tok::rparen)) fail("expected ')'");
      next();
      return c;
    }
    if (at_word("inverse")) return restriction(property());
    Iri n = name();
    static constexpr std::string_view restriction_words[] = {"some", "only", "exactly", "min", "max", "value", "Self"};
    for (auto w : restriction_words)
      if (at_word(w)) return restriction(PropertyExpr{n, false});
    return ClassExpr::named_class(std::move(n));
  }

  ClassExpr restriction(PropertyExpr p) {
    if (at_word("some") || at_word("only")) {
      auto kind = next().text == "some" ? ClassExpr::Kind::some : ClassExpr::Kind::only;
      return ClassExpr::restriction(kind, std::move(p), primary());
    }
    if (at_word("exactly")) {
      next();
      if (!at(Tok::number)) fail("expected a number after 'exactly'");
      unsigned n = unsigned(std::stoul(next().text));
      std::optional<ClassExpr> filler;
      if (starts_primary()) filler = primary();
      return ClassExpr::restriction(ClassExpr::Kind::exactly, std::move(p), std::move(filler), n);
    }
    if (peek().kind == Tok::word) unsupported("'" + peek().text + "' restriction");
    fail("expected 'some', 'only' or 'exactly'");
  }

  bool starts_primary() const {
    switch (peek().kind) {
      case Tok::lparen: case Tok::exists: case Tok::forall: case Tok::neg: case Tok::top: case Tok::bottom:
      case Tok::iri:
        return true;
      case Tok::word:
        return !at_reserved() || peek().text == "not" || peek().text == "inverse";
      default:
        return false;
    }
  }

  // --- frames ------------------------------------------------------------

  void add(SignatureAndSentences& out, ManchesterAxiom a, std::size_t begin) {
    out.sentences.push_back(Sentence{out.logic, std::move(a), ByteRange{begin, last_end()}});
  }

  template <typename F>
  void comma_list(F item) {
    for (;;) {
      item();
      if (!at(Tok::comma)) break;
      next();
    }
  }

  void class_frame(SignatureAndSentences& out) {
    Iri cls = name();
    out.add_entity(Entity{cls, EntityKind::class_, true});
    ClassExpr self = ClassExpr::named_class(cls);
    while (at(Tok::keyword) && !is_frame_keyword(peek().text)) {
      std::string section = next().text;
      if (section == "SubClassOf" || section == "EquivalentTo") {
        auto kind = section == "SubClassOf" ? ManchesterAxiom::Kind::sub_class_of : ManchesterAxiom::Kind::equivalent_to;
        comma_list([&] {
          std::size_t begin = peek().begin;
          ManchesterAxiom a;
          a.kind = kind;
          a.classes = {self, description()};
          add(out, std::move(a), begin);
        });
      } else if (section == "DisjointUnionOf") {
        std::size_t begin = peek().begin;
        ManchesterAxiom a;
        a.kind = ManchesterAxiom::Kind::disjoint_union_of;
        a.classes = {self};
        comma_list([&] { a.classes.push_back(description()); });
        add(out, std::move(a), begin);
      } else {
        throw DolError("manchester-syntax", "'" + section + ":' does not belong to a Class frame", toks_[pos_ - 1].begin);
      }
    }
  }

  void property_frame(SignatureAndSentences& out) {
    Iri prop = name();
    out.add_entity(Entity{prop, EntityKind::object_property, true});
    while (at(Tok::keyword) && !is_frame_keyword(peek().text)) {
      std::string section = next().text;
      if (section == "Characteristics") {
        comma_list([&] {
          std::size_t begin = peek().begin;
          ManchesterAxiom a;
          a.kind = ManchesterAxiom::Kind::characteristic;
          a.property = prop;
          if (at_word("Transitive")) a.characteristic = PropertyCharacteristic::transitive;
          else if (at_word("Asymmetric")) a.characteristic = PropertyCharacteristic::asymmetric;
          else if (at(Tok::word)) unsupported("characteristic '" + peek().text + "'");
          else fail("expected a property characteristic");
          next();
          add(out, std::move(a), begin);
        });
      } else if (section == "SubPropertyOf") {
        comma_list([&] {
          std::size_t begin = peek().begin;
          if (at_word("inverse")) unsupported("inverse property in SubPropertyOf");
          ManchesterAxiom a;
          a.kind = ManchesterAxiom::Kind::sub_property_of;
          a.property = prop;
          a.super_property = name();
          add(out, std::move(a), begin);
        });
      } else {
        throw DolError("manchester-syntax", "'" + section + ":' does not belong to an ObjectProperty frame", toks_[pos_ - 1].begin);
      }
    }
  }

  void individual_frame(SignatureAndSentences& out) {
    IndividualRef ind = individual();
    if (!ind.anonymous) out.add_entity(Entity{Iri::parse(ind.name), EntityKind::individual, true});
    while (at(Tok::keyword) && !is_frame_keyword(peek().text)) {
      std::string section = next().text;
      if (section == "Types") {
        comma_list([&] {
          std::size_t begin = peek().begin;
          ManchesterAxiom a;
          a.kind = ManchesterAxiom::Kind::types;
          a.subject = ind;
          a.classes = {description()};
          add(out, std::move(a), begin);
        });
      } else if (section == "Facts") {
        comma_list([&] {
          std::size_t begin = peek().begin;
          if (at_word("not")) unsupported("negative property assertion");
          ManchesterAxiom a;
          a.kind = ManchesterAxiom::Kind::fact;
          a.subject = ind;
          a.property = name();
          a.object = individual();
          add(out, std::move(a), begin);
        });
      } else {
        throw DolError("manchester-syntax", "'" + section + ":' does not belong to an Individual frame", toks_[pos_ - 1].begin);
      }
    }
  }

  void prefix_frame() {
    if (!at(Tok::word) || peek().text.back() != ':') fail("expected a prefix label ending in ':'");
    std::string label = next().text;
    label.pop_back();
    if (!at(Tok::iri)) fail("expected <namespace>");
    std::string ns = next().text;
    prefixes_.bind(label, ns.substr(1, ns.size() - 2));
  }

  // `C SubClassOf D` / `C EquivalentTo D` outside frames, for axioms whose
  // left-hand side is not a class name.
  void general_axiom(SignatureAndSentences& out) {
    if (!at(Tok::lparen) && !at(Tok::word) && !at(Tok::iri) && !at(Tok::neg) && !at(Tok::exists) &&
        !at(Tok::forall) && !at(Tok::top) && !at(Tok::bottom))
      fail("expected a frame (Class:, ObjectProperty:, Individual:) or a general class axiom");
    std::size_t begin = peek().begin;
    ManchesterAxiom a;
    ClassExpr lhs = description();
    if (at_word("SubClassOf")) a.kind = ManchesterAxiom::Kind::sub_class_of;
    else if (at_word("EquivalentTo")) a.kind = ManchesterAxiom::Kind::equivalent_to;
    else fail("expected SubClassOf or EquivalentTo after a class expression");
    next();
    a.classes = {std::move(lhs), description()};
    add(out, std::move(a), begin);
  }

  static bool is_frame_keyword(std::string_view k) {
    return k == "Class" || k == "ObjectProperty" || k == "Individual" || k == "Prefix";
  }

  SignatureAndSentences block() {
    SignatureAndSentences out;
    out.logic = Iri::parse(vocab::logic_sroiq);
    while (!at(Tok::end)) {
      if (!at(Tok::keyword)) {
        general_axiom(out);
        continue;
      }
      std::string frame = next().text;
      if (frame == "Class") class_frame(out);
      else if (frame == "ObjectProperty") property_frame(out);
      else if (frame == "Individual") individual_frame(out);
      else if (frame == "Prefix") prefix_frame();
      else throw DolError("manchester-syntax", "'" + frame + ":' outside of a frame", toks_[pos_ - 1].begin);
    }
    out.complete_signature();
    return out;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  PrefixMap prefixes_;
};

bool atomic(const ClassExpr& c) {
  return c.kind == ClassExpr::Kind::named || c.kind == ClassExpr::Kind::thing || c.kind == ClassExpr::Kind::nothing;
}

std::string operand(const ClassExpr& c, const NamePrinter& names) {
  return atomic(c) ? print(c, names) : "(" + print(c, names) + ")";
}

std::string property_text(const PropertyExpr& p, const NamePrinter& names) {
  return (p.inverse ? "inverse " : "") + names(p.property.str());
}

}  // namespace

SignatureAndSentences parse_block(std::string_view text, const PrefixMap& prefixes) {
  return Parser(text, prefixes).block();
}

ClassExpr parse_class_expression(std::string_view text, const PrefixMap& prefixes) {
  Parser p(text, prefixes);
  ClassExpr c = p.description();
  if (!p.at(Tok::end)) p.fail("trailing input after class expression");
  return c;
}

std::string print(const ClassExpr& c, const NamePrinter& names) {
  using K = ClassExpr::Kind;
  auto join = [&](std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      if (i) out += sep;
      out += operand(c.args[i], names);
    }
    return out;
  };
  switch (c.kind) {
    case K::named: return names(c.name.str());
    case K::thing: return names(std::string(vocab::owl_thing));
    case K::nothing: return names(std::string(vocab::owl_nothing));
    case K::intersection: return join(" and ");
    case K::union_of: return join(" or ");
    case K::complement: return "not " + operand(c.args.at(0), names);
    case K::some: return property_text(c.property, names) + " some " + operand(c.args.at(0), names);
    case K::only: return property_text(c.property, names) + " only " + operand(c.args.at(0), names);
    case K::exactly: {
      std::string out = property_text(c.property, names) + " exactly " + std::to_string(c.cardinality);
      if (!c.args.empty()) out += " " + operand(c.args[0], names);
      return out;
    }
  }
  return {};
}

std::string print(const ManchesterAxiom& a, const NamePrinter& names) {
  using K = ManchesterAxiom::Kind;
  auto individual = [&](const IndividualRef& i) { return i.anonymous ? "_:" + i.name : names(i.name); };
  auto frame_or_gci = [&](std::string_view section) {
    const ClassExpr& lhs = a.classes.at(0);
    if (lhs.kind == ClassExpr::Kind::named)
      return "Class: " + names(lhs.name.str()) + " " + std::string(section) + ": " + print(a.classes.at(1), names);
    return operand(lhs, names) + " " + std::string(section) + " " + operand(a.classes.at(1), names);
  };
  switch (a.kind) {
    case K::sub_class_of: return frame_or_gci("SubClassOf");
    case K::equivalent_to: return frame_or_gci("EquivalentTo");
    case K::disjoint_union_of: {
      std::string out = "Class: " + print(a.classes.at(0), names) + " DisjointUnionOf: ";
      for (std::size_t i = 1; i < a.classes.size(); ++i) {
        if (i > 1) out += ", ";
        out += print(a.classes[i], names);
      }
      return out;
    }
    case K::characteristic:
      return "ObjectProperty: " + names(a.property.str()) + " Characteristics: " +
             (a.characteristic == PropertyCharacteristic::transitive ? "Transitive" : "Asymmetric");
    case K::sub_property_of:
      return "ObjectProperty: " + names(a.property.str()) + " SubPropertyOf: " + names(a.super_property.str());
    case K::types: return "Individual: " + individual(a.subject) + " Types: " + print(a.classes.at(0), names);
    case K::fact:
      return "Individual: " + individual(a.subject) + " Facts: " + names(a.property.str()) + " " + individual(a.object);
  }
  return {};
}

bool is_taxonomic(const ClassExpr& c) {
  using K = ClassExpr::Kind;
  switch (c.kind) {
    case K::named: case K::thing: case K::nothing: return true;
    case K::intersection: case K::union_of: case K::complement:
      for (const auto& a : c.args)
        if (!is_taxonomic(a)) return false;
      return true;
    default: return false;
  }
}

bool is_taxonomic(const ManchesterAxiom& a) {
  using K = ManchesterAxiom::Kind;
  if (a.kind != K::sub_class_of && a.kind != K::equivalent_to && a.kind != K::disjoint_union_of) return false;
  for (const auto& c : a.classes)
    if (!is_taxonomic(c)) return false;
  return true;
}

void collect_class_names(const ClassExpr& c, std::set<Iri>& out) {
  if (c.kind == ClassExpr::Kind::named) out.insert(c.name);
  for (const auto& a : c.args) collect_class_names(a, out);
}

void collect_property_names(const ClassExpr& c, std::set<Iri>& out) {
  using K = ClassExpr::Kind;
  if (c.kind == K::some || c.kind == K::only || c.kind == K::exactly) out.insert(c.property.property);
  for (const auto& a : c.args) collect_property_names(a, out);
}

}  // namespace dolc::owl
