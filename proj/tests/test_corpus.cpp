#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "ontokit/corpus.hpp"
#include "ontokit/oft.hpp"
#include "ontokit/validator.hpp"

using namespace ontokit;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream f(std::string(ONTOKIT_CORPUS_DIR) + "/" + name, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Frozen checklist of the published hierarchy: parent -> direct children.
const std::map<std::string, std::set<std::string>> kTree = {
    {"Date_fruit", {"Dates", "Products_of_dates", "Species"}},
    {"Dates", {"Attributes", "Benefits", "Chain_of_operations", "Developing_stages", "Quality_profile", "Composition"}},
    {"Attributes", {"Color", "Shape", "Size", "Taste", "Texture"}},
    {"Benefits", {"Food", "Health"}},
    {"Chain_of_operations", {"Transport", "Additional_treatments", "Packing", "Sorting_and_cleaning", "Storage"}},
    {"Additional_treatments", {"Coating", "Dehydration", "Glazing", "Hydration", "Maturation", "Pitting"}},
    {"Storage", {"Fumigation", "Heat_treatment", "Irradiation", "Refrigeration"}},
    {"Developing_stages", {"Hababauk", "Khalaal", "Kimri", "Rotab", "Tamr"}},
    {"Quality_profile", {"Defects", "Other_particles"}},
    {"Defects", {"Blemishes", "Broken_skin", "Deformity", "Discoloration", "Shrivel", "Sunburn"}},
    {"Other_particles", {"Foreign_matter", "Insect_infestation", "Pesticide_residue"}},
    {"Composition", {"Enzymes", "Vitamins", "Minerals", "Crude_fibers", "Moisture", "Proteins", "Fats", "Sugars",
                     "Chemical_substances"}},
    {"Chemical_substances", {"Organic_acids", "Polyphenols"}},
    {"Products_of_dates", {"Date_condiments", "Date_deserts", "Date_paste", "Date_preserves", "Whole_pitted_dates"}},
    {"Date_paste", {"Bakery_products", "Mixture", "Pure_date_paste"}},
};

}  // namespace

TEST(Corpus, EmbeddedTextMatchesFilesOnDisk) {
  const auto& fx = corpus_fixture();
  EXPECT_EQ(fx.main_file, read_file(std::string(kCorpusMainFile)));
  EXPECT_EQ(fx.instance_file, read_file(std::string(kCorpusInstanceFile)));
  EXPECT_EQ(fx.query_suite.size(), parse_query_suite(read_file(std::string(kCorpusQueryFile))).size());
}

TEST(Corpus, GoldenClassCount) {
  // Independent count: distinct names on `class` lines of the raw file.
  std::set<std::string> names;
  std::istringstream in(read_file(std::string(kCorpusMainFile)));
  std::regex class_line(R"(^class\s+([A-Za-z_][A-Za-z0-9_]*))");
  for (std::string line; std::getline(in, line);) {
    std::smatch m;
    if (std::regex_search(line, m, class_line)) names.insert(m[1]);
  }
  EXPECT_EQ(names.size(), 67u);
  const auto& kb = load_corpus();
  EXPECT_EQ(kb.ontology.classes().size(), 67u);
  auto classes = kb.ontology.classes();
  EXPECT_EQ(std::set<std::string>(classes.begin(), classes.end()), names);
}

TEST(Corpus, HierarchyMatchesChecklist) {
  const auto& kb = load_corpus();
  std::set<std::string> covered{"Date_fruit"};
  for (const auto& [parent, children] : kTree) {
    for (const auto& child : children) {
      EXPECT_EQ(kb.closure.direct_parents.at(child), NameSet{parent}) << child;
      covered.insert(child);
    }
  }
  EXPECT_EQ(covered.size(), 67u);
  EXPECT_EQ(kb.closure.direct_parents.at("Date_fruit"), NameSet{"Thing"});
}

TEST(Corpus, ValidatesCleanly) {
  const auto& kb = load_corpus();
  auto report = validate(kb.ontology, kb.closure, kb.realization);
  EXPECT_TRUE(report.diagnostics.empty());
  EXPECT_EQ(report.checked_assertions, 16u);
  EXPECT_EQ(kb.ontology.individuals().size(), 16u);
}

TEST(Corpus, CompetencySuite) {
  const auto& kb = load_corpus();
  const auto& suite = corpus_fixture().query_suite;
  ASSERT_GE(suite.size(), 20u);
  for (const auto& q : suite) {
    auto got = eval_query(kb.ontology, kb.closure, kb.realization, parse_query(q.query), q.mode);
    EXPECT_EQ(got, q.expected) << "line " << q.line << ": " << q.query;
  }
}

TEST(Corpus, SerializationRoundTrips) {
  const auto& kb = load_corpus();
  auto text = serialize_oft(kb.ontology);
  auto parsed = parse_oft(text, "rt.oft");
  ASSERT_TRUE(parsed.diagnostics.empty());
  auto rebuilt = build_ontology(parsed.ontology_name, parsed.axioms);
  ASSERT_TRUE(rebuilt.ok());
  EXPECT_EQ(canonical_axioms(*rebuilt), canonical_axioms(kb.ontology));
  EXPECT_EQ(serialize_oft(*rebuilt), text);
}

TEST(QuerySuite, Format) {
  auto s = parse_query_suite("# c\n\nsubclasses\tA\tC,B\ninstances\tp some A\t\n", "s.tsv");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].expected, (std::vector<std::string>{"B", "C"}));
  EXPECT_EQ(s[0].line, 3);
  EXPECT_TRUE(s[1].expected.empty());
  EXPECT_THROW(parse_query_suite("members\tA\tB\n"), DiagnosticError);
  EXPECT_THROW(parse_query_suite("instances\tA\n"), DiagnosticError);
}
