#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ontokit/diagnostic.hpp"
#include "ontokit/model.hpp"
#include "ontokit/reasoner.hpp"

namespace ontokit {

struct SourceText {
  std::string name;
  std::string text;
};

/// A built ontology with its inferred hierarchy and realization.
struct KnowledgeBase {
  Ontology ontology;
  TaxonomyClosure closure;
  Realization realization;
};

/// Result of running parse -> build -> closure -> realize over several
/// sources concatenated in order. `ontology` is set once building succeeds;
/// `kb` only when the hierarchy is also acyclic. Stops at the first stage
/// that reports errors.
struct LoadOutcome {
  std::optional<Ontology> ontology;
  std::optional<KnowledgeBase> kb;
  std::vector<Diagnostic> diagnostics;
};

/// The ontology is named after the first source's header.
LoadOutcome load_sources(const std::vector<SourceText>& sources);

/// Convenience for already-parsed axioms.
LoadOutcome load_ontology(Ontology o);

}  // namespace ontokit
