#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ontokit/diagnostic.hpp"
#include "ontokit/model.hpp"

namespace ontokit {

inline constexpr std::string_view kDefaultOntologyName = "unnamed";

struct ParseResult {
  std::string ontology_name{kDefaultOntologyName};
  std::vector<Axiom> axioms;
  std::vector<Diagnostic> diagnostics;
};

/// Parses Ontology Fixture Text. Never throws on malformed input: each bad
/// line becomes an E_SYNTAX diagnostic and is skipped.
ParseResult parse_oft(std::string_view source, std::string_view file_name = "<input>");

/// Canonical, byte-deterministic OFT rendering of `o`.
std::string serialize_oft(const Ontology& o);

/// One statement line (no trailing newline) for a single axiom.
std::string format_axiom(const Axiom& a);

}  // namespace ontokit
