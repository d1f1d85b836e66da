#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dolc/iri.hpp"
#include "dolc/model.hpp"
#include "dolc/sentences.hpp"

namespace dolc {

// An executable logic translation. `map_entity` re-tags kinds (nullopt drops
// the entity); `map_sentence` rewrites one sentence. Entities mentioned by the
// translated sentences are added afterwards, so the result signature always
// covers its sentences.
struct TranslationImpl {
  Iri mapping;
  Iri source_logic;  // empty for the identity
  Iri target_logic;
  std::function<std::optional<Entity>(const Entity&)> map_entity;
  std::function<Sentence(const Sentence&)> map_sentence;
  std::vector<Iri> steps;  // component mappings, in application order

  bool is_identity() const { return steps.empty(); }
};

// Built-in logic-level translation for `mapping`. Errors: unknown-translation.
const TranslationImpl& translation_impl(const Iri& mapping);
bool has_translation_impl(const Iri& mapping);

// Errors: source-logic-mismatch, untranslatable (names the construct).
SignatureAndSentences apply_translation(const TranslationImpl& t, const SignatureAndSentences& s);

// Left-to-right composition. Errors: endpoint-mismatch.
TranslationImpl compose(const std::vector<TranslationImpl>& ts);

struct DroppedSentence {
  Sentence sentence;
  std::string reason;
};

struct ProjectionResult {
  SignatureAndSentences result;
  std::vector<DroppedSentence> dropped;
};

// Built-in logic-level projection. SROIQtoRDF keeps class assertions with a
// named class (rdf:type triples) and property assertions. Other assertions
// are untranslatable unless `lossy`, in which case they are dropped with a
// report like TBox axioms always are.
// Errors: unknown-projection, source-logic-mismatch, untranslatable.
ProjectionResult apply_projection(const Iri& mapping, const SignatureAndSentences& s,
                                  bool lossy = false);
bool has_projection_impl(const Iri& mapping);

// Applies `a ↦ b` renames to entities and sentences.
SignatureAndSentences rename_symbols(const SignatureAndSentences& s,
                                     const std::vector<SymbolRename>& renames);

}  // namespace dolc
