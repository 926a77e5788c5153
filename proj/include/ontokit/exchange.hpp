#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontokit/diagnostic.hpp"
#include "ontokit/model.hpp"
#include "ontokit/reasoner.hpp"

namespace ontokit {

// --- DOT hierarchy export ---------------------------------------------------

/// `digraph taxonomy { ... }` with parent -> child edges. Asserted mode draws
/// the told edges (including implicit Thing edges); inferred mode draws the
/// transitive reduction of the closure. Nodes, then edges, each sorted.
std::string export_dot(const Ontology& o, const TaxonomyClosure& c, bool inferred);

/// (parent, child) pairs of the transitive reduction of `c`, sorted.
std::vector<std::pair<std::string, std::string>> transitive_reduction(const TaxonomyClosure& c);

// --- CSV instance ingestion ------------------------------------------------

struct ColumnMapping {
  std::string header;
  std::string property;
};

/// Parses `header=prop,header=prop`. Throws DiagnosticError(E_SYNTAX).
std::vector<ColumnMapping> parse_column_map(std::string_view spec);

/// Splits CSV text into rows: comma separator, `"` quoting with `""` as
/// escape, no embedded newlines. Blank lines are skipped; `line` numbers are
/// 1-based. Throws DiagnosticError(E_SYNTAX) on an unterminated quote.
struct CsvRow {
  int line = 0;
  std::vector<std::string> fields;
};
std::vector<CsvRow> read_csv(std::string_view text, std::string_view file_name = "<csv>");

/// One IndividualDecl per data row (named by the `id` column) plus a
/// DataAssertion per non-empty mapped cell, typed by the property's facet.
/// All-or-nothing: any diagnostic means no axioms.
Result<std::vector<Axiom>> ingest_csv(const Ontology& o, std::string_view csv, std::string_view target_class,
                                      const std::vector<ColumnMapping>& columns,
                                      std::string_view file_name = "<csv>");

inline constexpr std::string_view kCsvIdColumn = "id";

// --- Merge ----------------------------------------------------------------

struct MergeReport {
  Ontology merged;
  /// Canonical axioms present in the result but not in the first input.
  std::size_t added = 0;
  /// Kind/facet/declaration clashes (warnings; the first input wins) and
  /// subclass cycles created by the union (errors).
  std::vector<Diagnostic> conflicts;
};

/// Union of canonical axiom sets, rebuilt through build_ontology. Axioms of
/// `b` that disagree with `a` are dropped and reported.
MergeReport merge(const Ontology& a, const Ontology& b, std::string name);

}  // namespace ontokit
