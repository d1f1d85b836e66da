#include "dolc/adapters.hpp"

#include "dolc/clif.hpp"
#include "dolc/error.hpp"
#include "dolc/manchester.hpp"
#include "dolc/propositional.hpp"
#include "dolc/vocab.hpp"

namespace dolc {

namespace {

class PropositionalAdapter : public Adapter {
 public:
  SignatureAndSentences extract(std::string_view text, ExtractionContext& ctx) const override {
    return prop::parse_block(text, ctx.prefixes);
  }
};

class ManchesterAdapter : public Adapter {
 public:
  SignatureAndSentences extract(std::string_view text, ExtractionContext& ctx) const override {
    return owl::parse_block(text, ctx.prefixes);
  }
};

class ClifAdapter : public Adapter {
 public:
  SignatureAndSentences extract(std::string_view text, ExtractionContext& ctx) const override {
    return clif::parse_block(text, ctx.prefixes);
  }
};

class TurtleAdapter : public Adapter {
 public:
  SignatureAndSentences extract(std::string_view text, ExtractionContext& ctx) const override {
    rdf::BlankNodeScope local;
    auto parsed = rdf::read_turtle(text, ctx.prefixes, ctx.blank_nodes ? *ctx.blank_nodes : local);
    SignatureAndSentences out;
    out.logic = Iri::parse(vocab::logic_rdf);
    for (std::size_t i = 0; i < parsed.triples.size(); ++i)
      out.add_sentence(Sentence{out.logic, parsed.triples[i], parsed.spans[i]});
    out.complete_signature();
    return out;
  }
};

}  // namespace

void AdapterRegistry::add(Iri logic, Iri serialization, std::shared_ptr<const Adapter> adapter) {
  adapters_[{std::move(logic), std::move(serialization)}] = std::move(adapter);
}

const Adapter* AdapterRegistry::find(const Iri& logic, const Iri& serialization) const {
  auto it = adapters_.find({logic, serialization});
  return it == adapters_.end() ? nullptr : it->second.get();
}

AdapterRegistry AdapterRegistry::with_builtins() {
  AdapterRegistry r;
  r.add(Iri::parse(vocab::logic_propositional), Iri::parse(vocab::ser_prop_hets), std::make_shared<PropositionalAdapter>());
  r.add(Iri::parse(vocab::logic_sroiq), Iri::parse(vocab::ser_manchester), std::make_shared<ManchesterAdapter>());
  r.add(Iri::parse(vocab::logic_common_logic), Iri::parse(vocab::ser_clif), std::make_shared<ClifAdapter>());
  r.add(Iri::parse(vocab::logic_rdf), Iri::parse(vocab::ser_turtle), std::make_shared<TurtleAdapter>());
  return r;
}

const AdapterRegistry& builtin_adapters() {
  static const AdapterRegistry r = AdapterRegistry::with_builtins();
  return r;
}

SignatureAndSentences extract(const BasicOntologyBlock& block, const AdapterRegistry& adapters, ExtractionContext& ctx) {
  if (!block.decl.logic || !block.decl.serialization)
    throw DolError("incomplete-declaration", "basic ontology has no complete logic/serialization context");
  const Adapter* a = adapters.find(*block.decl.logic, *block.decl.serialization);
  if (!a)
    throw DolError("unregistered-adapter", "no adapter registered for logic " + block.decl.logic->str() +
                                               " in serialization " + block.decl.serialization->str());
  return a->extract(block.text, ctx);
}

}  // namespace dolc
