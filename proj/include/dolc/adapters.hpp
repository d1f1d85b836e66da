#pragma once

#include <map>
#include <memory>
#include <string_view>
#include <utility>

#include "dolc/iri.hpp"
#include "dolc/model.hpp"
#include "dolc/rdf.hpp"
#include "dolc/sentences.hpp"

namespace dolc {

struct ExtractionContext {
  PrefixMap prefixes;                          // document prefixes in scope
  rdf::BlankNodeScope* blank_nodes = nullptr;  // shared per document; a private scope when null
};

// Turns the text of one basic ontology into its signature and sentences.
// Implementations are stateless; syntax errors are DolErrors whose offset is
// relative to `text`.
class Adapter {
 public:
  virtual ~Adapter() = default;
  virtual SignatureAndSentences extract(std::string_view text, ExtractionContext& ctx) const = 0;
};

// Adapters keyed by (logic IRI, serialization IRI). Third parties add
// languages by registering further pairs; see docs/adapters.md.
class AdapterRegistry {
 public:
  void add(Iri logic, Iri serialization, std::shared_ptr<const Adapter> adapter);
  const Adapter* find(const Iri& logic, const Iri& serialization) const;

  // Propositional/Prop-Hets, SROIQ/OWL2-Manchester, CommonLogic/CLIF, RDF/Turtle.
  static AdapterRegistry with_builtins();

 private:
  std::map<std::pair<Iri, Iri>, std::shared_ptr<const Adapter>> adapters_;
};

const AdapterRegistry& builtin_adapters();

// `block.decl` must carry logic and serialization. Errors: unregistered-adapter
// plus whatever the adapter raises.
SignatureAndSentences extract(const BasicOntologyBlock& block, const AdapterRegistry& adapters,
                              ExtractionContext& ctx);

}  // namespace dolc
