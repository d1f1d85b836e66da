#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dolc/iri.hpp"
#include "dolc/sentences.hpp"

namespace dolc::rdf {

// Hands out blank node labels `<prefix><n>`. Sharing one scope across several
// Turtle blocks keeps labels unique within a whole document.
class BlankNodeScope {
 public:
  explicit BlankNodeScope(std::string prefix = "b") : prefix_(std::move(prefix)) {}
  std::string fresh() { return prefix_ + std::to_string(next_++); }

 private:
  std::string prefix_;
  unsigned next_ = 1;
};

struct ParsedTurtle {
  std::vector<RdfTriple> triples;  // in document order
  std::vector<ByteRange> spans;    // source range of the statement producing each triple
  PrefixMap prefixes;              // inherited plus declared
};

// Turtle subset: @prefix/PREFIX, @base/BASE, triples with `;` and `,`, `a`,
// `_:x` and `[ ... ]` blank nodes, string literals with language tags or
// datatypes, bare integers and booleans, `#` comments. Every blank node is
// relabelled from `scope` in order of first appearance.
// Throws DolError("turtle-syntax") with a byte offset.
ParsedTurtle read_turtle(std::string_view text, const PrefixMap& inherited, BlankNodeScope& scope);

// Statement multiset of a standalone Turtle document.
std::vector<RdfTriple> read_structural_rdf(std::string_view text);

struct TurtleWriteOptions {
  std::optional<std::string> base;  // emitted as @base; `base#frag` IRIs are written `<#frag>`
};

// Deterministic Turtle: every prefix in alphabetical order, statements sorted
// by (subject, predicate, object) and de-duplicated, grouped by subject.
std::string write_turtle(std::vector<RdfTriple> triples, const PrefixMap& prefixes,
                         const TurtleWriteOptions& options = {});

// Sort key of a node as it compares in output order.
std::string sort_key(const RdfNode& n);

void sort_statements(std::vector<RdfTriple>& triples);

}  // namespace dolc::rdf
