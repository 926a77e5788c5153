#pragma once

#include <cstddef>
#include <vector>

#include "ontokit/diagnostic.hpp"
#include "ontokit/model.hpp"
#include "ontokit/reasoner.hpp"

namespace ontokit {

struct ValidationReport {
  /// Sorted by (file, line, code, message).
  std::vector<Diagnostic> diagnostics;
  std::size_t checked_assertions = 0;
  bool ok = true;
};

/// Facet (type, allowed values, cardinality) and domain/range conformance
/// of every assertion. Missing values for a multiple-cardinality property
/// are reported as warnings only.
ValidationReport validate(const Ontology& o, const TaxonomyClosure& c, const Realization& r);

}  // namespace ontokit
