#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ontokit/dlquery.hpp"
#include "ontokit/model.hpp"
#include "ontokit/pipeline.hpp"

namespace ontokit {

inline constexpr std::string_view kCorpusMainFile = "date_fruit.oft";
inline constexpr std::string_view kCorpusInstanceFile = "date_fruit_instances.oft";
inline constexpr std::string_view kCorpusQueryFile = "queries.tsv";

struct SuiteQuery {
  QueryMode mode = QueryMode::Instances;
  std::string query;
  /// Sorted expected answer.
  std::vector<std::string> expected;
  int line = 0;
};

/// The bundled date-fruit fixture, compiled into the library.
struct CorpusFixture {
  std::string main_file;
  std::string instance_file;
  std::vector<SuiteQuery> query_suite;
};

const CorpusFixture& corpus_fixture();

/// Reads `mode<TAB>query<TAB>a,b,c` lines; `#` lines and blank lines are
/// skipped. Throws DiagnosticError(E_SYNTAX) on a malformed line.
std::vector<SuiteQuery> parse_query_suite(std::string_view tsv, std::string_view file_name = kCorpusQueryFile);

/// The fixture sources in load order.
std::vector<SourceText> corpus_sources();

/// Built, closed, realized and validated corpus. Throws std::runtime_error
/// listing the diagnostics if the bundled fixture has any error.
const KnowledgeBase& load_corpus();

}  // namespace ontokit
