#include "dolc/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "dolc/error.hpp"
#include "dolc/manchester.hpp"
#include "dolc/names.hpp"

namespace dolc {

namespace {

enum class Tok { word, iri, lbrace, rbrace, lparen, rparen, lbracket, rbracket, comma, semicolon, equals, colon, maps_to, string, end };

struct Token {
  Tok kind = Tok::end;
  std::string_view text;
  std::size_t begin = 0;
  std::size_t end = 0;
  bool line_start = false;  // first token on its line
};

constexpr std::string_view maps_to_glyph = "\xE2\x86\xA6";  // ↦

bool is_top_keyword(std::string_view w) {
  return w == "distributed-ontology" || w == "logic" || w == "language" || w == "syntax" || w == "ontology" ||
         w == "interpretation" || w == "alignment";
}

bool is_decl_keyword(std::string_view w) { return w == "logic" || w == "language" || w == "syntax"; }

bool is_reserved(std::string_view w) {
  return is_top_keyword(w) || w == "then" || w == "and" || w == "translate" || w == "project" || w == "with" ||
         w == "to";
}

bool delimiter(char c) {
  switch (c) {
    case '{': case '}': case '(': case ')': case '[': case ']': case ',': case ';': case '=': case '"':
      return true;
    default:
      return std::isspace(static_cast<unsigned char>(c)) != 0;
  }
}

bool iri_char(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u <= 0x20) return false;
  switch (c) {
    case '<': case '"': case '{': case '}': case '|': case '\\': case '^': case '`': return false;
    default: return true;
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : s_(src) {}

  // Skips whitespace and comments; returns true when a newline was crossed.
  bool skip_trivia(std::size_t& i) const {
    bool newline = i == 0;
    while (i < s_.size()) {
      char c = s_[i];
      if (c == '\n') {
        newline = true;
        ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (s_.substr(i, 2) == "%%") {
        while (i < s_.size() && s_[i] != '\n') ++i;
      } else if (s_.substr(i, 2) == "%{") {
        auto close = s_.find("}%", i + 2);
        i = close == std::string_view::npos ? s_.size() : close + 2;
      } else {
        break;
      }
    }
    return newline;
  }

  std::vector<Token> run(std::size_t start) {
    std::vector<Token> out;
    std::size_t i = start;
    for (;;) {
      bool nl = skip_trivia(i);
      if (i >= s_.size()) break;
      Token t;
      t.begin = i;
      t.line_start = nl;
      char c = s_[i];
      auto single = [&](Tok k) {
        t.kind = k;
        ++i;
      };
      switch (c) {
        case '{': single(Tok::lbrace); break;
        case '}': single(Tok::rbrace); break;
        case '(': single(Tok::lparen); break;
        case ')': single(Tok::rparen); break;
        case '[': single(Tok::lbracket); break;
        case ']': single(Tok::rbracket); break;
        case ',': single(Tok::comma); break;
        case ';': single(Tok::semicolon); break;
        case '=': single(Tok::equals); break;
        default: break;
      }
      if (i == t.begin && c == '"') {
        auto close = s_.find_first_of("\"\n", i + 1);
        if (close != std::string_view::npos && s_[close] == '"') {
          t.kind = Tok::string;
          i = close + 1;
        } else {
          t.kind = Tok::word;
          ++i;
        }
      }
      if (i == t.begin && c == '<') {
        std::size_t j = i + 1;
        while (j < s_.size() && iri_char(s_[j]) && s_[j] != '>') ++j;
        if (j < s_.size() && s_[j] == '>' && j > i + 1) {
          t.kind = Tok::iri;
          i = j + 1;
        }
      }
      if (i == t.begin && s_.substr(i, maps_to_glyph.size()) == maps_to_glyph) {
        t.kind = Tok::maps_to;
        i += maps_to_glyph.size();
      }
      if (i == t.begin && s_.substr(i, 3) == "|->") {
        t.kind = Tok::maps_to;
        i += 3;
      }
      if (i == t.begin) {
        while (i < s_.size() && !delimiter(s_[i]) && s_.substr(i, maps_to_glyph.size()) != maps_to_glyph &&
               s_.substr(i, 3) != "|->")
          ++i;
        t.kind = Tok::word;
        if (i - t.begin == 1 && c == ':') t.kind = Tok::colon;
      }
      t.end = i;
      t.text = s_.substr(t.begin, t.end - t.begin);
      out.push_back(t);
    }
    Token end;
    end.kind = Tok::end;
    end.begin = end.end = s_.size();
    out.push_back(end);
    return out;
  }

 private:
  std::string_view s_;
};

bool is_word(const Token& t, std::string_view w) { return t.kind == Tok::word && t.text == w; }

bool is_open(Tok k) { return k == Tok::lbrace || k == Tok::lparen || k == Tok::lbracket; }
bool is_close(Tok k) { return k == Tok::rbrace || k == Tok::rparen || k == Tok::rbracket; }

// Parses ontology expressions over a token range. With `resolve` unset names
// are only checked syntactically, which lets callers probe whether a range is
// an expression before committing to it.
class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, std::string_view src, const LineIndex& lines, const PrefixMap& prefixes,
             bool resolve, std::size_t pos, std::size_t limit)
      : t_(toks), src_(src), lines_(lines), prefixes_(prefixes), resolve_(resolve), pos_(pos), limit_(limit) {}

  std::size_t pos() const { return pos_; }
  bool operator_seen() const { return op_seen_; }
  bool at_end() const { return pos_ >= limit_; }
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < limit_ ? t_[i] : t_.back();
  }
  const Token& next() { return t_[pos_++]; }
  bool at_word(std::string_view w) const { return !at_end() && is_word(peek(), w); }
  bool at(Tok k) const { return !at_end() && peek().kind == k; }

  [[noreturn]] void fail(const std::string& code, const std::string& msg) const {
    throw DolError(code, msg, at_end() ? (limit_ ? t_[limit_ - 1].end : 0) : peek().begin);
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) fail("expected-keyword", "expected '" + std::string(w) + "'");
    next();
  }

  bool at_name() const {
    if (at_end()) return false;
    const Token& tok = peek();
    if (tok.kind == Tok::iri) return true;
    if (tok.kind != Tok::word || is_reserved(tok.text)) return false;
    return parse_curie(tok.text).has_value();
  }

  Iri name() {
    if (!at_name()) {
      if (at_end()) fail("dangling-operator", "expected a name at end of input");
      fail("expected-name", "expected a name, found '" + std::string(peek().text) + "'");
    }
    const Token& tok = next();
    if (!resolve_) return placeholder();
    try {
      return resolve_name(tok.text, prefixes_);
    } catch (const DolError& e) {
      throw DolError(e.code(), e.what(), tok.begin);
    }
  }

  static Iri placeholder() {
    static const Iri p = Iri::parse("urn:dolc:unresolved");
    return p;
  }

  SourceSpan span_from(std::size_t first_token) const {
    std::size_t b = t_[first_token].begin;
    std::size_t e = pos_ > first_token ? t_[pos_ - 1].end : b;
    return lines_.span(b, e);
  }

  LogicDeclaration declaration() {
    LogicDeclaration d;
    while (!at_end() && peek().kind == Tok::word && is_decl_keyword(peek().text)) {
      std::string_view kw = next().text;
      std::optional<Iri>* slot = kw == "logic" ? &d.logic : kw == "language" ? &d.language : &d.serialization;
      if (*slot) fail("duplicate-declaration", "'" + std::string(kw) + "' given twice");
      *slot = name();
    }
    return d;
  }

  OntologyExpression expression(const LogicDeclaration& ctx) {
    std::size_t first = pos_;
    OntologyExpression lhs = union_expr(ctx);
    while (at_word("then")) {
      next();
      op_seen_ = true;
      OntologyExpression rhs = (!at_end() && peek().kind == Tok::word && is_decl_keyword(peek().text))
                                   ? context_shift(ctx)
                                   : union_expr(ctx);
      lhs = make_extension(std::move(lhs), std::move(rhs));
      lhs.span = span_from(first);
    }
    return lhs;
  }

  OntologyExpression context_shift(const LogicDeclaration& ctx) {
    std::size_t first = pos_;
    LogicDeclaration shift = declaration();
    if (!at(Tok::colon)) fail("expected-colon", "expected ':' after the logic declaration of a context shift");
    next();
    OntologyExpression inner = postfix(shift_declaration(ctx, shift));
    auto e = make_context_shift(std::move(shift), std::move(inner));
    e.span = span_from(first);
    return e;
  }

  OntologyExpression union_expr(const LogicDeclaration& ctx) {
    std::size_t first = pos_;
    OntologyExpression lhs = postfix(ctx);
    while (at_word("and")) {
      next();
      op_seen_ = true;
      lhs = make_union(std::move(lhs), postfix(ctx));
      lhs.span = span_from(first);
    }
    return lhs;
  }

  bool at_rename() const { return at_name() && pos_ + 1 < limit_ && t_[pos_ + 1].kind == Tok::maps_to; }

  SymbolRename rename() {
    Iri from = name();
    if (!at(Tok::maps_to)) fail("expected-maps-to", "expected '↦' or '|->'");
    next();
    Iri to = name();
    return SymbolRename{std::move(from), std::move(to)};
  }

  // `[mapping] [, a ↦ b]* [,]`
  SymbolMap symbol_map() {
    SymbolMap m;
    bool need_comma = false;
    if (at_name() && !at_rename()) {
      m.translation = name();
      need_comma = true;
    }
    for (;;) {
      if (need_comma) {
        if (!at(Tok::comma)) break;
        next();
      }
      if (!at_rename()) break;
      m.renames.push_back(rename());
      need_comma = true;
    }
    return m;
  }

  OntologyExpression postfix(const LogicDeclaration& ctx) {
    std::size_t first = pos_;
    OntologyExpression e = primary(ctx);
    for (;;) {
      if (at_word("translate")) {
        next();
        op_seen_ = true;
        expect_word("with");
        SymbolMap m = symbol_map();
        if (!m.translation && m.renames.empty()) fail("expected-name", "expected a mapping or renaming after 'translate with'");
        e = make_translation(std::move(e), std::move(m.translation), std::move(m.renames));
      } else if (at_word("project")) {
        next();
        op_seen_ = true;
        expect_word("with");
        e = make_projection(std::move(e), name());
      } else {
        break;
      }
      e.span = span_from(first);
    }
    return e;
  }

  std::size_t matching_brace(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < limit_; ++i) {
      if (t_[i].kind == Tok::lbrace) ++depth;
      else if (t_[i].kind == Tok::rbrace && --depth == 0) return i;
    }
    throw DolError("unbalanced-brace", "'{' is never closed", t_[open].begin);
  }

  OntologyExpression primary(const LogicDeclaration& ctx) {
    if (at(Tok::lbrace)) {
      std::size_t open = pos_;
      std::size_t close = matching_brace(open);
      ExprParser probe(t_, src_, lines_, prefixes_, false, open + 1, close);
      bool group = false;
      try {
        probe.expression(ctx);
        group = probe.at_end() && close > open + 1;
      } catch (const DolError&) {
        if (probe.operator_seen()) throw;
      }
      OntologyExpression e;
      if (group) {
        ExprParser inner(t_, src_, lines_, prefixes_, resolve_, open + 1, close);
        e = inner.expression(ctx);
        op_seen_ = op_seen_ || inner.operator_seen();
      } else {
        std::size_t b = t_[open].end;
        std::size_t end = t_[close].begin;
        BasicOntologyBlock block{ctx, std::string(src_.substr(b, end - b)), lines_.span(b, end), std::nullopt};
        e = make_inline(std::move(block));
      }
      pos_ = close + 1;
      e.span = span_from(open);
      return e;
    }
    std::size_t first = pos_;
    auto e = make_reference(name());
    e.span = span_from(first);
    return e;
  }

 private:
  const std::vector<Token>& t_;
  std::string_view src_;
  const LineIndex& lines_;
  const PrefixMap& prefixes_;
  bool resolve_;
  std::size_t pos_;
  std::size_t limit_;
  bool op_seen_ = false;
};

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view src) : src_(src), lines_(src) {}

  ParseResult run() {
    std::size_t start = 0;
    try {
      start = prefix_block();
    } catch (const DolError& e) {
      report(e, 0);
      start = recover_prefix_block();
    }
    toks_ = Lexer(src_).run(start);
    std::size_t i = 0;
    bool header_seen = false;
    while (toks_[i].kind != Tok::end) {
      std::size_t end = item_end(i);
      if (is_word(toks_[i], "distributed-ontology")) {
        if (header_seen || !result_.document.items.empty()) {
          diag(Severity::error, "misplaced-header", "'distributed-ontology' must come first and only once", i, end);
        } else {
          header(i, end);
        }
        header_seen = true;
      } else {
        item(i, end);
      }
      i = end;
    }
    if (!header_seen) {
      Diagnostic d;
      d.severity = Severity::warning;
      d.span = lines_.span(0, 0);
      d.code = "missing-header";
      d.message = "no distributed-ontology header";
      result_.diagnostics.push_back(d);
    }
    result_.document.prefixes = prefixes_;
    return std::move(result_);
  }

 private:
  void report(const DolError& e, std::size_t fallback_offset) {
    std::size_t at = e.has_offset() ? e.offset() : fallback_offset;
    Diagnostic d;
    d.severity = Severity::error;
    d.span = lines_.span(at, at);
    d.code = e.code();
    d.message = e.what();
    result_.diagnostics.push_back(d);
  }

  void diag(Severity s, std::string code, std::string msg, std::size_t first, std::size_t end) {
    Diagnostic d;
    d.severity = s;
    d.span = lines_.span(toks_[first].begin, end > first ? toks_[end - 1].end : toks_[first].end);
    d.code = std::move(code);
    d.message = std::move(msg);
    result_.diagnostics.push_back(d);
  }

  // `%prefix( label: <iri> ... )%` before everything else.
  std::size_t prefix_block() {
    Lexer lx(src_);
    std::size_t i = 0;
    lx.skip_trivia(i);
    if (src_.substr(i, 8) != "%prefix(") return 0;
    std::size_t block_start = i;
    i += 8;
    auto skip_ws = [&] {
      while (i < src_.size() && std::isspace(static_cast<unsigned char>(src_[i]))) ++i;
    };
    for (;;) {
      skip_ws();
      if (i >= src_.size()) throw DolError("prefix-syntax", "'%prefix(' is never closed with ')%'", block_start);
      if (src_.substr(i, 2) == ")%") return i + 2;
      std::size_t label_start = i;
      while (i < src_.size() && src_[i] != ':' && !std::isspace(static_cast<unsigned char>(src_[i]))) ++i;
      if (i >= src_.size() || src_[i] != ':')
        throw DolError("prefix-syntax", "expected 'label:' in prefix block", label_start);
      std::string label(src_.substr(label_start, i - label_start));
      if (!label.empty() && !is_prefix_label(label))
        throw DolError("prefix-syntax", "'" + label + "' is not a valid prefix label", label_start);
      ++i;
      skip_ws();
      if (i >= src_.size() || src_[i] != '<') throw DolError("prefix-syntax", "expected <namespace IRI>", i);
      auto close = src_.find('>', i);
      if (close == std::string_view::npos) throw DolError("prefix-syntax", "unterminated IRI", i);
      std::string ns(src_.substr(i + 1, close - i - 1));
      if (!is_absolute_iri(ns)) throw DolError("invalid-iri", "prefix namespace is not an absolute IRI: " + ns, i);
      prefixes_.bind(label, ns);
      i = close + 1;
    }
  }

  std::size_t recover_prefix_block() {
    auto close = src_.find(")%");
    return close == std::string_view::npos ? src_.size() : close + 2;
  }

  // An item runs up to the next top-level keyword outside brackets. Inside a
  // declaration item, further declaration keywords belong to it; after `then`
  // a declaration is a context shift that lasts until the lone `:`.
  std::size_t item_end(std::size_t start) const {
    bool decl_item = toks_[start].kind == Tok::word && is_decl_keyword(toks_[start].text);
    int depth = 0;
    bool shifting = false;
    for (std::size_t i = start + 1; toks_[i].kind != Tok::end; ++i) {
      const Token& t = toks_[i];
      if (is_open(t.kind)) {
        ++depth;
        continue;
      }
      if (is_close(t.kind)) {
        if (depth > 0) --depth;
        continue;
      }
      if (shifting) {
        if (t.kind == Tok::colon && depth == 0) shifting = false;
        continue;
      }
      if (t.kind != Tok::word || !is_top_keyword(t.text)) continue;
      if (depth == 0) {
        if (is_decl_keyword(t.text) && is_word(toks_[i - 1], "then")) {
          shifting = true;
          continue;
        }
        if (decl_item && is_decl_keyword(t.text)) continue;
        return i;
      }
      // Recovery from an unclosed bracket: a definition keyword opening a line.
      if (t.line_start && !is_decl_keyword(t.text)) return i;
    }
    return toks_.size() - 1;
  }

  void header(std::size_t b, std::size_t e) {
    if (e - b != 2) {
      diag(Severity::error, "malformed-header", "expected 'distributed-ontology <name>'", b, e);
      return;
    }
    try {
      result_.document.iri = document_iri_of(toks_[b + 1].text, prefixes_);
    } catch (const DolError& err) {
      report(err, toks_[b + 1].begin);
    }
  }

  bool claim_iri(const Iri& iri, std::size_t b, std::size_t e) {
    if (seen_.insert(iri).second) return true;
    diag(Severity::error, "duplicate-iri", "'" + iri.str() + "' is defined more than once in this document", b, e);
    return false;
  }

  void item(std::size_t b, std::size_t e) {
    const Token& kw = toks_[b];
    try {
      if (kw.kind == Tok::word && is_decl_keyword(kw.text)) declaration_item(b, e);
      else if (is_word(kw, "ontology")) definition(b, e);
      else if (is_word(kw, "interpretation") || is_word(kw, "alignment")) link(b, e);
      else if (kw.kind == Tok::word && kw.text.rfind("%prefix", 0) == 0)
        diag(Severity::error, "misplaced-prefix-block", "the prefix block must come before everything else", b, e);
      else
        diag(Severity::error, "unknown-keyword", "unknown top-level keyword '" + std::string(kw.text) + "'", b, e);
    } catch (const DolError& err) {
      report(err, kw.begin);
    }
  }

  void declaration_item(std::size_t b, std::size_t e) {
    ExprParser p(toks_, src_, lines_, prefixes_, true, b, e);
    LogicDeclaration d = p.declaration();
    if (!p.at_end()) p.fail("unexpected-token", "unexpected '" + std::string(p.peek().text) + "' in logic declaration");
    context_ = d;
    result_.document.items.emplace_back(LogicDeclarationItem{d, lines_.span(toks_[b].begin, toks_[e - 1].end)});
  }

  void definition(std::size_t b, std::size_t e) {
    ExprParser p(toks_, src_, lines_, prefixes_, true, b + 1, e);
    Iri iri = p.name();
    if (!p.at(Tok::equals)) p.fail("expected-equals", "expected '=' after the ontology name");
    p.next();
    std::size_t body_start = p.pos();

    OntologyExpression body;
    ExprParser probe(toks_, src_, lines_, prefixes_, false, body_start, e);
    bool is_expression = false;
    if (body_start < e) {
      try {
        probe.expression(context_);
        is_expression = probe.at_end();
        if (!is_expression && probe.operator_seen())
          probe.fail("unexpected-token", "unexpected '" + std::string(probe.peek().text) + "' after ontology expression");
      } catch (const DolError&) {
        if (probe.operator_seen()) throw;
      }
    }
    if (is_expression) {
      ExprParser real(toks_, src_, lines_, prefixes_, true, body_start, e);
      body = real.expression(context_);
    } else {
      std::size_t tb = body_start < e ? toks_[body_start].begin : toks_[body_start - 1].end;
      std::size_t te = body_start < e ? toks_[e - 1].end : tb;
      BasicOntologyBlock block{context_, std::string(src_.substr(tb, te - tb)), lines_.span(tb, te), std::nullopt};
      body = make_inline(std::move(block));
    }
    if (!claim_iri(iri, b, e)) return;
    OntologyDefinition def{iri, std::move(body), context_, lines_.span(toks_[b].begin, toks_[e - 1].end), std::nullopt};
    result_.document.items.emplace_back(std::move(def));
  }

  void link(std::size_t b, std::size_t e) {
    bool alignment = is_word(toks_[b], "alignment");
    ExprParser p(toks_, src_, lines_, prefixes_, true, b + 1, e);
    Link l;
    l.kind = alignment ? LinkKind::alignment : LinkKind::interpretation;
    l.context = context_;
    l.span = lines_.span(toks_[b].begin, toks_[e - 1].end);
    l.iri = p.name();
    if (p.at(Tok::colon)) p.next();
    l.source = p.expression(context_);
    p.expect_word("to");
    l.target = p.expression(context_);
    if (alignment) {
      CorrespondenceList list;
      if (p.at(Tok::equals)) {
        p.next();
        list = correspondences(p, e);
      }
      l.payload = std::move(list);
    } else {
      SymbolMap m;
      if (p.at(Tok::equals)) {
        p.next();
        if (p.at_word("translate")) {
          p.next();
          p.expect_word("with");
        }
        m = p.symbol_map();
        if (!p.at_end() && m.translation && m.renames.empty() && p.at(Tok::comma)) p.next();
      }
      std::set<Iri> from;
      for (const auto& r : m.renames)
        if (!from.insert(r.from).second) p.fail("duplicate-rename", "'" + r.from.str() + "' is mapped twice");
      l.payload = std::move(m);
    }
    if (!p.at_end()) p.fail("unexpected-token", "unexpected '" + std::string(p.peek().text) + "' in link");
    if (!claim_iri(l.iri, b, e)) return;
    result_.document.items.emplace_back(std::move(l));
  }

  CorrespondenceList correspondences(ExprParser& p, std::size_t e) {
    CorrespondenceList list;
    while (!p.at_end()) {
      Iri left = p.name();
      if (!p.at(Tok::equals)) p.fail("unsupported-relation", "only '=' correspondences are supported");
      p.next();
      std::size_t first = p.pos();
      int depth = 0;
      std::size_t i = first;
      for (; i < e; ++i) {
        if (is_open(toks_[i].kind)) ++depth;
        else if (is_close(toks_[i].kind)) --depth;
        else if (toks_[i].kind == Tok::comma && depth == 0) break;
      }
      if (i == first) p.fail("expected-term", "expected a class expression after '='");
      std::size_t tb = toks_[first].begin;
      std::size_t te = toks_[i - 1].end;
      ClassExpr right;
      try {
        right = owl::parse_class_expression(src_.substr(tb, te - tb), prefixes_);
      } catch (const DolError& err) {
        throw DolError(err.code(), err.what(), tb + (err.has_offset() ? err.offset() : 0));
      }
      list.entries.push_back(Correspondence{std::move(left), CorrespondenceRelation::equivalence, std::move(right)});
      while (p.pos() < i) p.next();
      if (p.at(Tok::comma)) p.next();
    }
    return list;
  }

  std::string_view src_;
  LineIndex lines_;
  std::vector<Token> toks_;
  PrefixMap prefixes_;
  LogicDeclaration context_;
  std::set<Iri> seen_;
  ParseResult result_;
};

// ---------------------------------------------------------------------------
// AST dump

std::string opt_iri(const std::optional<Iri>& i) { return i ? "<" + i->str() + ">" : "-"; }

std::string decl_text(const LogicDeclaration& d) {
  return "language=" + opt_iri(d.language) + " logic=" + opt_iri(d.logic) + " syntax=" + opt_iri(d.serialization);
}

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

void dump(const OntologyExpression& e, int indent, std::string& out) {
  std::string pad(std::size_t(indent), ' ');
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Reference>) {
          out += pad + "reference <" + n.iri.str() + ">\n";
        } else if constexpr (std::is_same_v<T, expr::Inline>) {
          out += pad + "inline " + decl_text(n.block.decl) + " text=" + quoted(n.block.text) + "\n";
        } else if constexpr (std::is_same_v<T, expr::Extension>) {
          out += pad + "extension\n";
          dump(*n.base, indent + 2, out);
          dump(*n.ext, indent + 2, out);
        } else if constexpr (std::is_same_v<T, expr::Union>) {
          out += pad + "union\n";
          dump(*n.left, indent + 2, out);
          dump(*n.right, indent + 2, out);
        } else if constexpr (std::is_same_v<T, expr::Translation>) {
          out += pad + "translation mapping=" + opt_iri(n.mapping) + "\n";
          dump(*n.base, indent + 2, out);
          for (const auto& r : n.renames) out += pad + "  rename <" + r.from.str() + "> <" + r.to.str() + ">\n";
        } else if constexpr (std::is_same_v<T, expr::Projection>) {
          out += pad + "projection mapping=<" + n.mapping.str() + ">\n";
          dump(*n.base, indent + 2, out);
        } else {
          out += pad + "context-shift " + decl_text(n.decl) + "\n";
          dump(*n.inner, indent + 2, out);
        }
      },
      e.node);
}

}  // namespace

ParseResult parse_document(std::string_view text) { return DocumentParser(text).run(); }

OntologyExpression parse_ontology_expression(std::string_view text, const PrefixMap& prefixes,
                                             const LogicDeclaration& context) {
  auto toks = Lexer(text).run(0);
  LineIndex lines(text);
  std::size_t limit = toks.size() - 1;
  ExprParser p(toks, text, lines, prefixes, true, 0, limit);
  if (limit == 0) p.fail("empty-expression", "empty ontology expression");
  OntologyExpression e = p.expression(context);
  if (!p.at_end()) p.fail("unexpected-token", "unexpected '" + std::string(p.peek().text) + "' after ontology expression");
  return e;
}

std::string dump_expression(const OntologyExpression& e, int indent) {
  std::string out;
  dump(e, indent, out);
  return out;
}

std::string dump_ast(const DistributedOntology& d) {
  std::string out = "document " + opt_iri(d.iri) + "\n";
  for (const auto& [label, ns] : d.prefixes.bindings()) out += "prefix " + label + ": <" + ns + ">\n";
  for (const auto& item : d.items) {
    if (auto* decl = std::get_if<LogicDeclarationItem>(&item)) {
      out += "declaration " + decl_text(decl->decl) + "\n";
    } else if (auto* def = std::get_if<OntologyDefinition>(&item)) {
      out += "ontology <" + def->iri.str() + ">\n";
      out += "  context " + decl_text(def->context) + "\n";
      dump(def->body, 2, out);
    } else if (auto* link = std::get_if<Link>(&item)) {
      out += std::string(to_string(link->kind)) + " <" + link->iri.str() + ">\n";
      out += "  context " + decl_text(link->context) + "\n";
      out += "  source\n";
      dump(link->source, 4, out);
      out += "  target\n";
      dump(link->target, 4, out);
      if (auto* m = std::get_if<SymbolMap>(&link->payload)) {
        out += "  symbol-map translation=" + opt_iri(m->translation) + "\n";
        for (const auto& r : m->renames) out += "    rename <" + r.from.str() + "> <" + r.to.str() + ">\n";
      } else {
        for (const auto& c : std::get<CorrespondenceList>(link->payload).entries)
          out += "  correspondence <" + c.left.str() + "> " + std::string(to_string(c.relation)) + " " +
                 owl::print(c.right, angle_bracket_names()) + "\n";
      }
    }
  }
  return out;
}

}  // namespace dolc
