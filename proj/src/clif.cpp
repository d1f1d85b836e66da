#include "dolc/clif.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "dolc/error.hpp"
#include "dolc/vocab.hpp"

namespace dolc::clif {

namespace {

// Generic s-expression with source offsets.
struct SExpr {
  bool list = false;
  bool quoted = false;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t begin = 0;
  std::size_t end = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    skip();
    while (pos_ < s_.size()) {
      out.push_back(read());
      skip();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw DolError("clif-syntax", msg, at); }

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_.substr(pos_, 2) == "//") {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (s_.substr(pos_, 2) == "/*") {
        auto close = s_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) fail("unterminated comment", pos_);
        pos_ = close + 2;
      } else {
        break;
      }
    }
  }

  SExpr read() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input", pos_);
    SExpr e;
    e.begin = pos_;
    char c = s_[pos_];
    if (c == ')') fail("unbalanced ')'", pos_);
    if (c == '(') {
      ++pos_;
      e.list = true;
      skip();
      while (pos_ < s_.size() && s_[pos_] != ')') {
        e.items.push_back(read());
        skip();
      }
      if (pos_ >= s_.size()) fail("unbalanced '(' opened here", e.begin);
      ++pos_;
    } else if (c == '\'' || c == '"') {
      ++pos_;
      while (pos_ < s_.size() && s_[pos_] != c) {
        if (s_[pos_] == '\\') ++pos_;
        ++pos_;
      }
      if (pos_ >= s_.size()) fail("unterminated quoted string", e.begin);
      e.quoted = true;
      e.atom = std::string(s_.substr(e.begin + 1, pos_ - e.begin - 1));
      ++pos_;
    } else {
      while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
             s_[pos_] != ')' && s_[pos_] != '\'' && s_[pos_] != '"')
        ++pos_;
      e.atom = std::string(s_.substr(e.begin, pos_ - e.begin));
    }
    e.end = pos_;
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool is_head(const SExpr& e, std::string_view name) {
  return e.list && !e.items.empty() && !e.items[0].list && !e.items[0].quoted && e.items[0].atom == name;
}

class Converter {
 public:
  explicit Converter(const PrefixMap& prefixes) : prefixes_(prefixes) {}

  [[noreturn]] void fail(const std::string& msg, const SExpr& at) const { throw DolError("clif-syntax", msg, at.begin); }

  std::string resolve(const SExpr& e) {
    try {
      return resolve_name(e.atom, prefixes_).str();
    } catch (const DolError& err) {
      throw DolError(err.code(), err.what(), e.begin);
    }
  }

  bool bound(const std::string& name) const {
    return std::find(scope_.begin(), scope_.end(), name) != scope_.end();
  }

  ClifTerm term(const SExpr& e) {
    if (e.quoted) throw DolError("unsupported-construct", "quoted strings as terms are not supported", e.begin);
    if (!e.list) {
      if (bound(e.atom)) return ClifTerm::make_variable(e.atom);
      ClifTerm t = ClifTerm::make_name(resolve(e));
      t.sequence_marker = e.atom.rfind("...", 0) == 0;
      return t;
    }
    if (e.items.empty()) fail("empty functional term", e);
    ClifTerm t = term(e.items[0]);
    ClifTerm app{t.name, t.variable, false, true, {}};
    for (std::size_t i = 1; i < e.items.size(); ++i) app.args.push_back(term(e.items[i]));
    return app;
  }

  std::vector<std::string> variables(const SExpr& e) {
    std::vector<std::string> vars;
    if (!e.list) {
      vars.push_back(e.atom);
      return vars;
    }
    for (const auto& v : e.items) {
      if (v.list) throw DolError("unsupported-construct", "restricted quantifier variables are not supported", v.begin);
      vars.push_back(v.atom);
    }
    if (vars.empty()) fail("quantifier without variables", e);
    return vars;
  }

  ClifSentence sentence(const SExpr& e) {
    using K = ClifSentence::Kind;
    if (!e.list || e.items.empty())
      fail("expected a sentence, found '" + e.atom + "'", e);
    const SExpr& head = e.items[0];
    std::string op = head.list || head.quoted ? std::string() : head.atom;
    auto parts = [&](std::size_t min, std::size_t max) {
      std::size_t n = e.items.size() - 1;
      if (n < min || n > max) fail("'" + op + "' takes " + std::to_string(min) + (min == max ? "" : " or more") + " arguments", e);
      std::vector<ClifSentence> out;
      for (std::size_t i = 1; i < e.items.size(); ++i) out.push_back(sentence(e.items[i]));
      return out;
    };
    if (op == "and") return ClifSentence::make(K::conjunction, parts(0, SIZE_MAX));
    if (op == "or") return ClifSentence::make(K::disjunction, parts(0, SIZE_MAX));
    if (op == "not") return ClifSentence::make(K::negation, parts(1, 1));
    if (op == "if") return ClifSentence::make(K::implication, parts(2, 2));
    if (op == "iff") return ClifSentence::make(K::biconditional, parts(2, 2));
    if (op == "=") {
      if (e.items.size() != 3) fail("'=' takes 2 arguments", e);
      return ClifSentence::make_equal(term(e.items[1]), term(e.items[2]));
    }
    if (op == "forall" || op == "exists") {
      if (e.items.size() != 3) fail("'" + op + "' takes a variable list and one sentence", e);
      auto vars = variables(e.items[1]);
      std::size_t mark = scope_.size();
      scope_.insert(scope_.end(), vars.begin(), vars.end());
      ClifSentence body = sentence(e.items[2]);
      scope_.resize(mark);
      return ClifSentence::make_quantifier(op == "forall" ? K::forall : K::exists, std::move(vars), std::move(body));
    }
    if (op == "cl-text" || op == "cl-module" || op == "cl-excludes" || op == "cl-roleset:")
      throw DolError("unsupported-construct", "'" + op + "' is not supported", e.begin);
    if (op == "cl-imports" || op == "cl-comment") fail("'" + op + "' is only allowed at top level", e);
    std::vector<ClifTerm> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(term(e.items[i]));
    return ClifSentence::make_atom(term(head), std::move(args));
  }

  const PrefixMap& prefixes_;
  std::vector<std::string> scope_;
};

std::string term_text(const ClifTerm& t, const NamePrinter& names) {
  std::string head = t.variable ? t.name : names(t.name);
  if (!t.application) return head;
  std::string out = "(" + head;
  for (const auto& a : t.args) out += " " + term_text(a, names);
  return out + ")";
}

}  // namespace

SignatureAndSentences parse_block(std::string_view text, const PrefixMap& prefixes) {
  SignatureAndSentences out;
  out.logic = Iri::parse(vocab::logic_common_logic);
  Converter conv(prefixes);
  std::vector<const SExpr*> work;
  auto top = Reader(text).read_all();
  for (const auto& e : top) work.push_back(&e);
  for (std::size_t i = 0; i < work.size(); ++i) {
    const SExpr& e = *work[i];
    if (is_head(e, "cl-imports")) {
      if (e.items.size() != 2 || e.items[1].list) conv.fail("cl-imports takes one name", e);
      out.add_import(Iri::parse(conv.resolve(e.items[1])));
      continue;
    }
    if (is_head(e, "cl-comment")) {
      if (e.items.size() < 2 || !e.items[1].quoted) conv.fail("cl-comment needs a quoted comment", e);
      for (std::size_t j = 2; j < e.items.size(); ++j) work.push_back(&e.items[j]);
      continue;
    }
    out.sentences.push_back(Sentence{out.logic, conv.sentence(e), ByteRange{e.begin, e.end}});
  }
  out.complete_signature();
  return out;
}

std::string print(const ClifSentence& s, const NamePrinter& names) {
  using K = ClifSentence::Kind;
  auto nary = [&](std::string_view op) {
    std::string out = "(" + std::string(op);
    for (const auto& p : s.parts) out += " " + print(p, names);
    return out + ")";
  };
  switch (s.kind) {
    case K::atom: {
      std::string out = "(" + term_text(s.predicate, names);
      for (const auto& t : s.terms) out += " " + term_text(t, names);
      return out + ")";
    }
    case K::equal: return "(= " + term_text(s.terms.at(0), names) + " " + term_text(s.terms.at(1), names) + ")";
    case K::negation: return nary("not");
    case K::conjunction: return nary("and");
    case K::disjunction: return nary("or");
    case K::implication: return nary("if");
    case K::biconditional: return nary("iff");
    case K::forall:
    case K::exists: {
      std::string out = s.kind == K::forall ? "(forall (" : "(exists (";
      for (std::size_t i = 0; i < s.variables.size(); ++i) out += (i ? " " : "") + s.variables[i];
      return out + ") " + print(s.parts.at(0), names) + ")";
    }
  }
  return {};
}

}  // namespace dolc::clif
