#include "ontokit/corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include "ontokit/validator.hpp"

namespace ontokit {

namespace detail {
extern const std::string_view kCorpusMainText;
extern const std::string_view kCorpusInstanceText;
extern const std::string_view kCorpusQueryText;
}  // namespace detail

std::vector<SuiteQuery> parse_query_suite(std::string_view tsv, std::string_view file_name) {
  const std::string file(file_name);
  std::vector<SuiteQuery> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start < tsv.size()) {
    auto end = tsv.find('\n', start);
    auto line = tsv.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? tsv.size() : end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    auto t1 = line.find('\t');
    auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos) {
      throw DiagnosticError(make_error(code::Syntax, "expected three tab-separated columns", file, line_no));
    }
    auto mode = parse_query_mode(line.substr(0, t1));
    if (!mode) {
      throw DiagnosticError(
          make_error(code::Syntax, "unknown mode '" + std::string(line.substr(0, t1)) + "'", file, line_no));
    }
    SuiteQuery q{*mode, std::string(line.substr(t1 + 1, t2 - t1 - 1)), {}, line_no};
    auto expected = line.substr(t2 + 1);
    while (!expected.empty()) {
      auto comma = expected.find(',');
      q.expected.emplace_back(expected.substr(0, comma));
      expected = comma == std::string_view::npos ? std::string_view{} : expected.substr(comma + 1);
    }
    std::sort(q.expected.begin(), q.expected.end());
    out.push_back(std::move(q));
  }
  return out;
}

const CorpusFixture& corpus_fixture() {
  static const CorpusFixture fixture{std::string(detail::kCorpusMainText), std::string(detail::kCorpusInstanceText),
                                     parse_query_suite(detail::kCorpusQueryText)};
  return fixture;
}

std::vector<SourceText> corpus_sources() {
  const auto& f = corpus_fixture();
  return {{std::string(kCorpusMainFile), f.main_file}, {std::string(kCorpusInstanceFile), f.instance_file}};
}

namespace {

KnowledgeBase build_corpus() {
  auto loaded = load_sources(corpus_sources());
  auto diags = loaded.diagnostics;
  if (loaded.kb) {
    auto report = validate(loaded.kb->ontology, loaded.kb->closure, loaded.kb->realization);
    diags.insert(diags.end(), report.diagnostics.begin(), report.diagnostics.end());
  }
  if (!loaded.kb || has_errors(diags)) {
    std::string msg = "bundled corpus is invalid:";
    for (const auto& d : diags) msg += "\n  " + format_diagnostic(d);
    throw std::runtime_error(msg);
  }
  return std::move(*loaded.kb);
}

}  // namespace

const KnowledgeBase& load_corpus() {
  static const KnowledgeBase kb = build_corpus();
  return kb;
}

}  // namespace ontokit
