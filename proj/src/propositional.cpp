#include "dolc/propositional.hpp"

#include <cctype>
#include <set>
#include <vector>

#include "dolc/error.hpp"
#include "dolc/vocab.hpp"

namespace dolc::prop {

namespace {

enum class Tok { name, props, dot, comma, lparen, rparen, neg, conj, disj, impl, equiv, bottom, top, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t begin;
  std::size_t end;
};

struct Glyph {
  std::string_view text;
  Tok kind;
};

// Longest spellings first so that `-->` wins over `->`.
constexpr Glyph glyphs[] = {
    {"<=>", Tok::equiv}, {"-->", Tok::impl}, {"⟷", Tok::equiv}, {"↔", Tok::equiv}, {"⟶", Tok::impl},
    {"→", Tok::impl},    {"=>", Tok::impl},  {"->", Tok::impl},  {"¬", Tok::neg},   {"~", Tok::neg},
    {"∧", Tok::conj},    {"/\\", Tok::conj}, {"∨", Tok::disj},   {"\\/", Tok::disj}, {"⊥", Tok::bottom},
    {"⊤", Tok::top},
};

bool name_char(std::string_view s, std::size_t i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (std::isalnum(c) || c == '_' || c == ':' || c == '/' || c == '#' || c == '\'') return true;
  if (c == '-') return !(i + 1 < s.size() && (s[i + 1] == '-' || s[i + 1] == '>'));
  if (c == '.') return i + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[i + 1])) && i > 0;
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
    if (s.substr(i, 2) == "%%") {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    if (s.substr(i, 2) == "%(") {
      auto close = s.find(")%", i);
      if (close == std::string_view::npos) throw DolError("prop-syntax", "unterminated %( label", i);
      i = close + 2;
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
    if (c == '.' ) { out.push_back(Token{Tok::dot, ".", i, i + 1}); ++i; continue; }
    if (c == ',') { out.push_back(Token{Tok::comma, ",", i, i + 1}); ++i; continue; }
    if (c == '(') { out.push_back(Token{Tok::lparen, "(", i, i + 1}); ++i; continue; }
    if (c == ')') { out.push_back(Token{Tok::rparen, ")", i, i + 1}); ++i; continue; }
    if (c == '<') {
      auto close = s.find('>', i);
      if (close == std::string_view::npos) throw DolError("prop-syntax", "unterminated IRI", i);
      out.push_back(Token{Tok::name, std::string(s.substr(i, close + 1 - i)), i, close + 1});
      i = close + 1;
      continue;
    }
    if (name_char(s, i) && s[i] != '.') {
      std::size_t start = i;
      while (i < s.size() && name_char(s, i)) ++i;
      std::string word(s.substr(start, i - start));
      Tok kind = Tok::name;
      if (word == "props" || word == "prop") kind = Tok::props;
      else if (word == "not") kind = Tok::neg;
      else if (word == "false") kind = Tok::bottom;
      else if (word == "true") kind = Tok::top;
      out.push_back(Token{kind, word, start, i});
      continue;
    }
    throw DolError("prop-syntax", "unexpected character '" + std::string(1, char(c)) + "'", i);
  }
  out.push_back(Token{Tok::end, "", s.size(), s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const PrefixMap& prefixes, const std::set<Iri>* declared)
      : toks_(lex(text)), prefixes_(prefixes), declared_(declared) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void fail(const std::string& msg) const { throw DolError("prop-syntax", msg, peek().begin); }

  Iri resolve(const Token& t) {
    try {
      return resolve_name(t.text, prefixes_);
    } catch (const DolError& e) {
      throw DolError(e.code(), e.what(), t.begin);
    }
  }

  Iri name(const Token& t) {
    Iri iri = resolve(t);
    if (declared_ && !declared_->count(iri))
      throw DolError("undeclared-proposition", "proposition '" + t.text + "' is not declared with props", t.begin);
    return iri;
  }

  PropFormula formula() { return equivalence(); }

  PropFormula equivalence() {
    PropFormula lhs = implication();
    while (at(Tok::equiv)) {
      next();
      lhs = PropFormula::make(PropFormula::Op::equivalence, {std::move(lhs), implication()});
    }
    return lhs;
  }

  PropFormula implication() {
    PropFormula lhs = disjunction();
    if (!at(Tok::impl)) return lhs;
    next();
    return PropFormula::make(PropFormula::Op::implication, {std::move(lhs), implication()});
  }

  PropFormula nary(PropFormula::Op op, Tok tok, PropFormula (Parser::*operand)()) {
    std::vector<PropFormula> args{(this->*operand)()};
    while (at(tok)) {
      next();
      args.push_back((this->*operand)());
    }
    if (args.size() == 1) return std::move(args[0]);
    return PropFormula::make(op, std::move(args));
  }

  PropFormula disjunction() { return nary(PropFormula::Op::disjunction, Tok::disj, &Parser::conjunction); }
  PropFormula conjunction() { return nary(PropFormula::Op::conjunction, Tok::conj, &Parser::unary); }

  PropFormula unary() {
    switch (peek().kind) {
      case Tok::neg: next(); return PropFormula::make(PropFormula::Op::negation, {unary()});
      case Tok::bottom: next(); return PropFormula::make_bottom();
      case Tok::top: next(); return PropFormula::make_top();
      case Tok::lparen: {
        next();
        PropFormula f = formula();
        if (!at(Tok::rparen)) fail("expected ')'");
        next();
        return f;
      }
      case Tok::name: return PropFormula::make_atom(name(next()));
      default: fail(peek().kind == Tok::end ? "unexpected end of formula" : "unexpected '" + peek().text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const PrefixMap& prefixes_;
  const std::set<Iri>* declared_;
};

int precedence(PropFormula::Op op) {
  switch (op) {
    case PropFormula::Op::equivalence: return 1;
    case PropFormula::Op::implication: return 2;
    case PropFormula::Op::disjunction: return 3;
    case PropFormula::Op::conjunction: return 4;
    case PropFormula::Op::negation: return 5;
    default: return 6;
  }
}

std::string print_at(const PropFormula& f, const NamePrinter& names, int context) {
  using Op = PropFormula::Op;
  std::string out;
  auto join = [&](std::string_view sep, int child_prec) {
    for (std::size_t i = 0; i < f.args.size(); ++i) {
      if (i) out += sep;
      out += print_at(f.args[i], names, child_prec);
    }
  };
  int p = precedence(f.op);
  switch (f.op) {
    case Op::atom: return names(f.atom.str());
    case Op::bottom: return "⊥";
    case Op::top: return "⊤";
    case Op::negation: out = "¬" + print_at(f.args.at(0), names, p); break;
    case Op::conjunction: join(" ∧ ", p + 1); break;
    case Op::disjunction: join(" ∨ ", p + 1); break;
    case Op::implication:
      out = print_at(f.args.at(0), names, p + 1) + " ⟶ " + print_at(f.args.at(1), names, p);
      break;
    case Op::equivalence:
      out = print_at(f.args.at(0), names, p) + " ⟷ " + print_at(f.args.at(1), names, p + 1);
      break;
  }
  return p < context ? "(" + out + ")" : out;
}

}  // namespace

SignatureAndSentences parse_block(std::string_view text, const PrefixMap& prefixes) {
  SignatureAndSentences out;
  out.logic = Iri::parse(vocab::logic_propositional);
  std::set<Iri> declared;
  Parser p(text, prefixes, &declared);
  while (!p.at(Tok::end)) {
    if (p.at(Tok::props)) {
      p.next();
      for (;;) {
        if (!p.at(Tok::name)) p.fail("expected a proposition name");
        Iri iri = p.resolve(p.next());
        declared.insert(iri);
        out.add_entity(Entity{iri, EntityKind::proposition, true});
        if (!p.at(Tok::comma)) break;
        p.next();
      }
    } else if (p.at(Tok::dot)) {
      p.next();
      std::size_t begin = p.peek().begin;
      PropFormula f = p.formula();
      std::size_t end = p.toks_[p.pos_ - 1].end;
      if (!p.at(Tok::dot) && !p.at(Tok::props) && !p.at(Tok::end)) p.fail("unexpected '" + p.peek().text + "'");
      out.sentences.push_back(Sentence{out.logic, std::move(f), ByteRange{begin, end}});
    } else {
      p.fail("expected 'props' or '.'");
    }
  }
  return out;
}

PropFormula parse_formula(std::string_view text, const PrefixMap& prefixes) {
  Parser p(text, prefixes, nullptr);
  PropFormula f = p.formula();
  if (!p.at(Tok::end)) p.fail("trailing input after formula");
  return f;
}

std::string print(const PropFormula& f, const NamePrinter& names) { return print_at(f, names, 0); }

void collect_atoms(const PropFormula& f, std::set<Iri>& out) {
  if (f.op == PropFormula::Op::atom) out.insert(f.atom);
  for (const auto& a : f.args) collect_atoms(a, out);
}

}  // namespace dolc::prop

namespace dolc {

bool eval_prop(const PropFormula& f, const Assignment& assignment) {
  using Op = PropFormula::Op;
  switch (f.op) {
    case Op::atom: {
      auto it = assignment.find(f.atom);
      if (it == assignment.end()) throw DolError("unassigned-atom", "no truth value for " + f.atom.str());
      return it->second;
    }
    case Op::bottom: return false;
    case Op::top: return true;
    case Op::negation: return !eval_prop(f.args.at(0), assignment);
    case Op::conjunction:
      for (const auto& a : f.args)
        if (!eval_prop(a, assignment)) return false;
      return true;
    case Op::disjunction:
      for (const auto& a : f.args)
        if (eval_prop(a, assignment)) return true;
      return false;
    case Op::implication: return !eval_prop(f.args.at(0), assignment) || eval_prop(f.args.at(1), assignment);
    case Op::equivalence: return eval_prop(f.args.at(0), assignment) == eval_prop(f.args.at(1), assignment);
  }
  return false;
}

}  // namespace dolc
