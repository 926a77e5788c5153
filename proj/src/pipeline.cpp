#include "ontokit/pipeline.hpp"

#include "ontokit/oft.hpp"

namespace ontokit {

LoadOutcome load_ontology(Ontology o) {
  LoadOutcome out;
  auto closure = compute_closure(o);
  out.ontology = std::move(o);
  if (!closure) {
    out.diagnostics = closure.diagnostics();
    return out;
  }
  auto realization = realize(*out.ontology, *closure);
  out.kb = KnowledgeBase{*out.ontology, std::move(closure).value(), std::move(realization)};
  return out;
}

LoadOutcome load_sources(const std::vector<SourceText>& sources) {
  LoadOutcome out;
  std::string name(kDefaultOntologyName);
  std::vector<Axiom> axioms;
  std::vector<std::string> provenance;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    auto parsed = parse_oft(sources[i].text, sources[i].name);
    if (i == 0) name = parsed.ontology_name;
    provenance.push_back(sources[i].name);
    std::move(parsed.axioms.begin(), parsed.axioms.end(), std::back_inserter(axioms));
    out.diagnostics.insert(out.diagnostics.end(), parsed.diagnostics.begin(), parsed.diagnostics.end());
  }
  if (has_errors(out.diagnostics)) return out;

  auto built = build_ontology(std::move(name), std::move(axioms), std::move(provenance));
  if (!built) {
    out.diagnostics = built.diagnostics();
    return out;
  }
  return load_ontology(std::move(built).value());
}

}  // namespace ontokit
