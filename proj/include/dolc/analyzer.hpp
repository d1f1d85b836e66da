#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dolc/adapters.hpp"
#include "dolc/diagnostics.hpp"
#include "dolc/model.hpp"
#include "dolc/propositional.hpp"
#include "dolc/registry.hpp"
#include "dolc/sentences.hpp"

namespace dolc {

enum class EdgeKind { import, extension, union_inclusion, translation, projection, interpretation };

std::string_view to_string(EdgeKind k);

struct DevNode {
  std::size_t id = 0;
  std::string label;  // definition IRI, or a synthetic label for sub-expressions
  SignatureAndSentences content;

  const Iri& logic() const { return content.logic; }
};

struct DevEdge {
  EdgeKind kind = EdgeKind::import;
  std::size_t from = 0;
  std::size_t to = 0;
  std::optional<Iri> mapping;  // translation, projection, interpretation
};

class DevGraph {
 public:
  std::size_t add_node(std::string label, SignatureAndSentences content);
  void add_edge(DevEdge e);
  void set_label(std::size_t id, std::string label);

  const std::vector<DevNode>& nodes() const noexcept { return nodes_; }
  const std::vector<DevEdge>& edges() const noexcept { return edges_; }
  const DevNode& node(std::size_t id) const { return nodes_.at(id); }
  const DevNode* find(std::string_view label) const;

  // A cycle along import/extension edges as node labels, first label repeated
  // at the end; empty when there is none.
  std::vector<std::string> find_cycle() const;

 private:
  std::vector<DevNode> nodes_;
  std::vector<DevEdge> edges_;
};

enum class Verdict { verified, refuted, structurally_ok, refuted_structurally, unsupported };

std::string_view to_string(Verdict v);

struct CheckReport {
  Iri link;
  LinkKind kind = LinkKind::interpretation;
  Verdict verdict = Verdict::unsupported;
  std::string evidence;
  std::optional<Assignment> counter_assignment;  // always set for refuted
};

struct AnalyzerOptions {
  const RegistryGraph* registry = nullptr;     // builtin_registry() when null
  const AdapterRegistry* adapters = nullptr;   // builtin_adapters() when null
  // Root for ontologies referenced by IRI but not defined in the document.
  std::optional<std::filesystem::path> include_path;
  bool lossy = false;                          // projections drop untranslatable ABox content
};

// Evaluates one document. The analyzer owns a copy of the document and fills
// in `BasicOntologyBlock::extracted` and `OntologyDefinition::flattened`.
class Analyzer {
 public:
  explicit Analyzer(DistributedOntology doc, AnalyzerOptions options = {});
  ~Analyzer();
  Analyzer(const Analyzer&) = delete;
  Analyzer& operator=(const Analyzer&) = delete;

  // Node for the definition or external ontology named `iri`.
  // Errors: unresolved-reference, cycle, plus those of flatten().
  std::size_t flatten_reference(const Iri& iri, const LogicDeclaration& ctx);

  // Errors: unresolved-reference, no-path/ambiguous-path (no default
  // translation), kind-clash, source-logic-mismatch, untranslatable,
  // unknown-mapping, cycle, and adapter errors.
  std::size_t flatten(const OntologyExpression& e, const LogicDeclaration& ctx);

  // Errors: rename-source-missing, rename-target-missing, plus flatten errors
  // for the endpoints.
  CheckReport check_interpretation(const Link& link);
  CheckReport check_alignment(const Link& link);

  // Flattens every definition, checks every link and lints. Diagnostics are
  // collected rather than thrown.
  void run();

  const DistributedOntology& document() const noexcept;
  const DevGraph& graph() const noexcept;
  const std::vector<CheckReport>& reports() const noexcept;  // sorted by link IRI
  const std::vector<Diagnostic>& diagnostics() const noexcept;

 private:
  struct State;
  std::unique_ptr<State> s_;
};

struct Analysis {
  DistributedOntology document;
  DevGraph graph;
  std::vector<CheckReport> reports;
  std::vector<Diagnostic> diagnostics;
};

Analysis analyze(DistributedOntology doc, const AnalyzerOptions& options = {});

// Conformance warnings: inferred logics, completed declarations, serializations
// without IRI support, logic-unknown languages, implicit default translations.
std::vector<Diagnostic> lint_conformance(const DistributedOntology& d, const RegistryGraph& g);

// The propositional reading of a taxonomic sentence (a propositional sentence,
// or a Manchester axiom for which owl::is_taxonomic holds), with classes read
// as atoms; nullopt for anything else.
std::optional<PropFormula> taxonomic_formula(const Sentence& s);

// Searches all assignments to the atoms of `premises` and `conclusion` for one
// satisfying every premise but not the conclusion. Throws
// DolError("too-many-atoms") beyond 20 atoms.
std::optional<Assignment> find_countermodel(const std::vector<PropFormula>& premises,
                                            const PropFormula& conclusion);

// Searches one-element interpretations for one satisfying every premise but
// not the conclusion. Premises may be any propositional or Manchester
// sentences; a role is read as an atom standing for the loop on the single
// element. Returns nullopt when a premise has no such reading. Throws
// DolError("too-many-atoms") beyond 20 class and role names.
std::optional<Assignment> find_point_countermodel(const std::vector<Sentence>& premises,
                                                  const PropFormula& conclusion);

// `A=1 B=0 ...` in IRI order.
std::string format_assignment(const Assignment& a, const NamePrinter& names);

// JSON report (docs/report-format.md).
std::string reports_to_json(const std::vector<CheckReport>& reports,
                            const std::vector<Diagnostic>& diagnostics, std::string_view file);

}  // namespace dolc
