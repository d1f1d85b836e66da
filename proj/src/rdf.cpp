#include "dolc/rdf.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "dolc/error.hpp"
#include "dolc/vocab.hpp"

namespace dolc::rdf {

namespace {

bool pn_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
}

class TurtleReader {
 public:
  TurtleReader(std::string_view text, const PrefixMap& inherited, BlankNodeScope& scope)
      : text_(text), scope_(scope) {
    out_.prefixes = inherited;
  }

  ParsedTurtle run() {
    skip_ws();
    while (pos_ < text_.size()) {
      directive_or_triples();
      skip_ws();
    }
    return std::move(out_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw DolError("turtle-syntax", msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool keyword(std::string_view kw, bool case_insensitive) {
    skip_ws();
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char a = text_[pos_ + i], b = kw[i];
      if (case_insensitive ? std::tolower(static_cast<unsigned char>(a)) != std::tolower(static_cast<unsigned char>(b))
                           : a != b)
        return false;
    }
    std::size_t after = pos_ + kw.size();
    if (after < text_.size() && (pn_char(static_cast<unsigned char>(text_[after])) || text_[after] == ':')) return false;
    pos_ = after;
    return true;
  }

  void directive_or_triples() {
    std::size_t start = pos_;
    if (keyword("@prefix", false)) {
      prefix_decl();
      expect('.');
    } else if (keyword("@base", false)) {
      base_ = iri_ref();
      expect('.');
    } else if (keyword("PREFIX", true)) {
      prefix_decl();
    } else if (keyword("BASE", true)) {
      base_ = iri_ref();
    } else {
      statement_start_ = start;
      std::size_t first = out_.triples.size();
      triples();
      expect('.');
      for (std::size_t i = first; i < out_.spans.size(); ++i) out_.spans[i] = ByteRange{start, pos_};
    }
  }

  void prefix_decl() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ':') {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) fail("malformed prefix label");
      ++pos_;
    }
    if (pos_ >= text_.size()) fail("expected ':' in prefix declaration");
    std::string label(text_.substr(start, pos_ - start));
    ++pos_;
    out_.prefixes.bind(label, iri_ref());
  }

  std::string resolve(std::string iri) const {
    if (is_absolute_iri(iri)) return iri;
    if (!base_) fail("relative IRI <" + iri + "> without a base");
    const std::string& b = *base_;
    if (iri.empty()) return b;
    if (iri[0] == '#') return b.substr(0, b.find('#')) + iri;
    auto slash = b.rfind('/');
    return b.substr(0, slash == std::string::npos ? 0 : slash + 1) + iri;
  }

  std::string iri_ref() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '<') fail("expected IRI");
    auto close = text_.find('>', pos_);
    if (close == std::string_view::npos) fail("unterminated IRI");
    std::string iri(text_.substr(pos_ + 1, close - pos_ - 1));
    pos_ = close + 1;
    return resolve(std::move(iri));
  }

  std::string prefixed_name() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (pn_char(c) || c == ':' || c == '%') {
        ++pos_;
      } else if (c == '.' && pos_ + 1 < text_.size() &&
                 (pn_char(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == ':')) {
        ++pos_;
      } else {
        break;
      }
    }
    std::string_view token = text_.substr(start, pos_ - start);
    auto colon = token.find(':');
    if (colon == std::string_view::npos) {
      pos_ = start;
      fail("expected a term");
    }
    std::string label(token.substr(0, colon));
    const std::string* ns = out_.prefixes.lookup(label);
    if (!ns) {
      pos_ = start;
      throw DolError("turtle-syntax", "unknown prefix '" + label + ":'", start);
    }
    return *ns + std::string(token.substr(colon + 1));
  }

  RdfNode blank_label(std::string_view label) {
    auto it = labels_.find(std::string(label));
    if (it == labels_.end()) it = labels_.emplace(std::string(label), scope_.fresh()).first;
    return RdfNode::blank(it->second);
  }

  RdfNode subject_or_object(bool object_position) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '<') return RdfNode::iri_node(iri_ref());
    if (c == '_' && pos_ + 1 < text_.size() && text_[pos_ + 1] == ':') {
      pos_ += 2;
      std::size_t start = pos_;
      while (pos_ < text_.size() && (pn_char(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
      while (pos_ > start && text_[pos_ - 1] == '.') --pos_;
      if (pos_ == start) fail("empty blank node label");
      return blank_label(text_.substr(start, pos_ - start));
    }
    if (c == '[') {
      ++pos_;
      RdfNode node = RdfNode::blank(scope_.fresh());
      if (!peek(']')) predicate_object_list(node);
      expect(']');
      return node;
    }
    if (c == '(') fail("RDF collections are not supported");
    if (object_position) {
      if (c == '"' || c == '\'') return literal();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') return number();
      if (keyword("true", false)) return RdfNode::literal("true", std::string(vocab::xsd_boolean));
      if (keyword("false", false)) return RdfNode::literal("false", std::string(vocab::xsd_boolean));
    }
    return RdfNode::iri_node(prefixed_name());
  }

  RdfNode number() {
    std::size_t start = pos_;
    if (text_[pos_] == '+' || text_[pos_] == '-') ++pos_;
    bool decimal = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '.' && !decimal && pos_ + 1 < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        decimal = true;
        ++pos_;
      } else {
        break;
      }
    }
    std::string lexical(text_.substr(start, pos_ - start));
    if (lexical.empty() || lexical == "+" || lexical == "-") fail("malformed number");
    return RdfNode::literal(lexical, decimal ? std::string(vocab::xsd_ns) + "decimal" : std::string(vocab::xsd_integer));
  }

  RdfNode literal() {
    char q = text_[pos_];
    bool long_form = text_.substr(pos_, 3) == std::string(3, q);
    pos_ += long_form ? 3 : 1;
    std::string value;
    for (;;) {
      if (pos_ >= text_.size()) fail("unterminated string");
      char c = text_[pos_];
      if (long_form ? text_.substr(pos_, 3) == std::string(3, q) : c == q) {
        pos_ += long_form ? 3 : 1;
        break;
      }
      if (!long_form && c == '\n') fail("newline in string");
      if (c == '\\') {
        if (pos_ + 1 >= text_.size()) fail("dangling escape");
        char e = text_[pos_ + 1];
        pos_ += 2;
        switch (e) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case 'r': value += '\r'; break;
          case 'b': value += '\b'; break;
          case 'f': value += '\f'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          case 'u':
          case 'U': value += unicode_escape(e == 'u' ? 4 : 8); break;
          default: fail(std::string("unknown escape \\") + e);
        }
        continue;
      }
      value += c;
      ++pos_;
    }
    if (pos_ < text_.size() && text_[pos_] == '@') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) ++pos_;
      if (pos_ == start) fail("empty language tag");
      return RdfNode::literal(value, {}, std::string(text_.substr(start, pos_ - start)));
    }
    if (text_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      std::string dt = text_[pos_] == '<' ? iri_ref() : prefixed_name();
      return RdfNode::literal(value, dt);
    }
    return RdfNode::literal(value);
  }

  std::string unicode_escape(int digits) {
    if (pos_ + digits > text_.size()) fail("short unicode escape");
    unsigned long cp = std::stoul(std::string(text_.substr(pos_, digits)), nullptr, 16);
    pos_ += digits;
    std::string out;
    if (cp < 0x80) {
      out += char(cp);
    } else if (cp < 0x800) {
      out += char(0xC0 | (cp >> 6));
      out += char(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += char(0xE0 | (cp >> 12));
      out += char(0x80 | ((cp >> 6) & 0x3F));
      out += char(0x80 | (cp & 0x3F));
    } else {
      out += char(0xF0 | (cp >> 18));
      out += char(0x80 | ((cp >> 12) & 0x3F));
      out += char(0x80 | ((cp >> 6) & 0x3F));
      out += char(0x80 | (cp & 0x3F));
    }
    return out;
  }

  RdfNode predicate() {
    skip_ws();
    if (keyword("a", false)) return RdfNode::iri_node(std::string(vocab::rdf_type));
    if (pos_ < text_.size() && text_[pos_] == '<') return RdfNode::iri_node(iri_ref());
    return RdfNode::iri_node(prefixed_name());
  }

  void emit(const RdfNode& s, const RdfNode& p, const RdfNode& o) {
    out_.triples.push_back(RdfTriple{s, p, o});
    out_.spans.push_back(ByteRange{statement_start_, pos_});
  }

  void predicate_object_list(const RdfNode& subject) {
    for (;;) {
      RdfNode p = predicate();
      for (;;) {
        RdfNode o = subject_or_object(true);
        emit(subject, p, o);
        if (!peek(',')) break;
        ++pos_;
      }
      if (!peek(';')) break;
      while (peek(';')) ++pos_;
      if (peek('.') || peek(']')) break;
    }
  }

  void triples() {
    skip_ws();
    bool bracketed = pos_ < text_.size() && text_[pos_] == '[';
    RdfNode subject = subject_or_object(false);
    if (subject.kind == RdfNode::Kind::literal) fail("literal in subject position");
    if (bracketed && peek('.')) return;
    predicate_object_list(subject);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t statement_start_ = 0;
  BlankNodeScope& scope_;
  std::optional<std::string> base_;
  std::map<std::string, std::string> labels_;
  ParsedTurtle out_;
};

bool turtle_local_ok(std::string_view ref) {
  if (ref.empty()) return true;
  auto c0 = static_cast<unsigned char>(ref[0]);
  if (!(std::isalnum(c0) || c0 == '_')) return false;
  for (unsigned char c : ref)
    if (!(std::isalnum(c) || c == '_' || c == '-' || c == '.' || c == ':')) return false;
  return ref.back() != '.';
}

std::string escape_string(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

class TurtleWriter {
 public:
  TurtleWriter(const PrefixMap& prefixes, const TurtleWriteOptions& options)
      : prefixes_(prefixes), options_(options) {}

  std::string iri(const std::string& value) const {
    if (auto parsed = Iri::try_parse(value)) {
      auto c = compact(*parsed, prefixes_);
      if (auto* curie = std::get_if<Curie>(&c); curie && turtle_local_ok(curie->reference))
        return curie->prefix.value_or("") + ":" + curie->reference;
    }
    if (options_.base) {
      const std::string& b = *options_.base;
      if (value == b) return "<>";
      if (value.size() > b.size() && value.compare(0, b.size(), b) == 0 && value[b.size()] == '#')
        return "<" + value.substr(b.size()) + ">";
    }
    return "<" + value + ">";
  }

  std::string node(const RdfNode& n) const {
    switch (n.kind) {
      case RdfNode::Kind::iri: return iri(n.value);
      case RdfNode::Kind::blank: return "_:" + n.value;
      case RdfNode::Kind::literal: {
        std::string out = "\"" + escape_string(n.value) + "\"";
        if (!n.language.empty()) out += "@" + n.language;
        else if (!n.datatype.empty()) out += "^^" + iri(n.datatype);
        return out;
      }
    }
    return {};
  }

  std::string predicate(const RdfNode& n) const {
    if (n.kind == RdfNode::Kind::iri && n.value == vocab::rdf_type) return "a";
    return node(n);
  }

 private:
  const PrefixMap& prefixes_;
  const TurtleWriteOptions& options_;
};

}  // namespace

ParsedTurtle read_turtle(std::string_view text, const PrefixMap& inherited, BlankNodeScope& scope) {
  return TurtleReader(text, inherited, scope).run();
}

std::vector<RdfTriple> read_structural_rdf(std::string_view text) {
  BlankNodeScope scope;
  return read_turtle(text, {}, scope).triples;
}

std::string sort_key(const RdfNode& n) {
  switch (n.kind) {
    case RdfNode::Kind::iri: return "1" + n.value;
    case RdfNode::Kind::blank: return "2" + n.value;
    case RdfNode::Kind::literal: return "3" + n.value + '\x1f' + n.datatype + '\x1f' + n.language;
  }
  return {};
}

void sort_statements(std::vector<RdfTriple>& triples) {
  auto key = [](const RdfTriple& t) {
    return std::make_tuple(sort_key(t.subject), sort_key(t.predicate), sort_key(t.object));
  };
  std::sort(triples.begin(), triples.end(), [&](const RdfTriple& a, const RdfTriple& b) { return key(a) < key(b); });
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
}

std::string write_turtle(std::vector<RdfTriple> triples, const PrefixMap& prefixes,
                         const TurtleWriteOptions& options) {
  auto bindings = prefixes.bindings();
  std::sort(bindings.begin(), bindings.end());
  std::string out;
  if (options.base) out += "@base <" + *options.base + "> .\n";
  for (const auto& [label, ns] : bindings) out += "@prefix " + label + ": <" + ns + "> .\n";
  sort_statements(triples);
  TurtleWriter w(prefixes, options);
  const RdfNode* subject = nullptr;
  const RdfNode* pred = nullptr;
  for (const auto& t : triples) {
    if (subject && *subject == t.subject) {
      if (pred && *pred == t.predicate) {
        out += " ,\n        " + w.node(t.object);
      } else {
        out += " ;\n    " + w.predicate(t.predicate) + " " + w.node(t.object);
      }
    } else {
      if (subject) out += " .\n";
      out += "\n" + w.node(t.subject) + "\n    " + w.predicate(t.predicate) + " " + w.node(t.object);
    }
    subject = &t.subject;
    pred = &t.predicate;
  }
  if (subject) out += " .\n";
  return out;
}

}  // namespace dolc::rdf
