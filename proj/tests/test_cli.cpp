#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "ontokit/cli.hpp"
#include "ontokit/corpus.hpp"

using namespace ontokit;
namespace fs = std::filesystem;

namespace {

std::string corpus(std::string_view name) { return std::string(ONTOKIT_CORPUS_DIR) + "/" + std::string(name); }
std::string fixture(std::string_view name) { return std::string(ONTOKIT_FIXTURE_DIR) + "/" + std::string(name); }

std::vector<std::string> with_corpus(std::vector<std::string> args) {
  args.push_back(corpus(kCorpusMainFile));
  args.push_back(corpus(kCorpusInstanceFile));
  return args;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ontokit_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST(Cli, CheckCorpusIsClean) {
  auto r = cli::run(with_corpus({"check"}));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "0 errors, 0 warnings\n");
  EXPECT_EQ(r.err, "");
}

TEST(Cli, CheckReportsSeededErrors) {
  auto r = cli::run(with_corpus({"check", fixture("type_mismatch.oft")}));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.out, "1 error, 0 warnings\n");
  EXPECT_NE(r.err.find("type_mismatch.oft:2: error E_TYPE_MISMATCH"), std::string::npos) << r.err;
}

TEST(Cli, CheckReportsParseErrors) {
  auto r = cli::run({"check", "-"}, "class A\nclas B\nclass C sub\n");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.out, "2 errors, 0 warnings\n");
  EXPECT_EQ(r.err,
            "<stdin>:2: error E_SYNTAX unknown statement keyword\n"
            "<stdin>:3: error E_SYNTAX expected superclass name at end of line\n");
}

TEST(Cli, QueryModes) {
  auto r = cli::run(with_corpus({"query", "-q", "Developing_stages", "-m", "subclasses"}));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "Hababauk\nKhalaal\nKimri\nRotab\nTamr\n");
  r = cli::run(with_corpus({"query", "--query", "has_benefits some Health"}));
  EXPECT_EQ(r.out, "Barhee\n");
  r = cli::run(with_corpus({"query", "-q", "Kimri", "-m", "direct-superclasses"}));
  EXPECT_EQ(r.out, "Developing_stages\n");
}

TEST(Cli, QueryErrors) {
  auto r = cli::run(with_corpus({"query", "-q", "Dates and and"}));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("E_SYNTAX"), std::string::npos);
  EXPECT_NE(r.err.find("column 11"), std::string::npos);
  r = cli::run(with_corpus({"query", "-q", "Mango"}));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("E_UNKNOWN_REF"), std::string::npos);
  r = cli::run(with_corpus({"query", "-q", "Dates", "-m", "members"}));
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, Stats) {
  auto r = cli::run(with_corpus({"stats"}));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "classes\t67\nobject_properties\t4\ndata_properties\t3\nindividuals\t16\nassertions\t16\n");
}

TEST(Cli, ExportDotIsDeterministic) {
  auto a = cli::run(with_corpus({"export-dot"}));
  auto b = cli::run(with_corpus({"export-dot"}));
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("digraph taxonomy {\n", 0), 0u);
  EXPECT_NE(a.out.find("  \"Developing_stages\" -> \"Kimri\";\n"), std::string::npos);
  auto inferred = cli::run(with_corpus({"export-dot", "--inferred"}));
  EXPECT_EQ(inferred.out, a.out);  // the corpus tree has no shortcut edges
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli::run({}).exit_code, 2);
  EXPECT_EQ(cli::run({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(cli::run({"check"}).exit_code, 2);
  auto missing = cli::run({"check", "/nonexistent/x.oft"});
  EXPECT_EQ(missing.exit_code, 2);
  EXPECT_NE(missing.err.find("cannot read"), std::string::npos);
  EXPECT_EQ(cli::run({"--help"}).exit_code, 0);
}

TEST_F(CliTest, MergeWritesCanonicalUnion) {
  auto out = (dir_ / "merged.oft").string();
  auto r = cli::run({"merge", corpus(kCorpusMainFile), fixture("medjool.oft"), "-o", out});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  auto text = slurp(out);
  EXPECT_EQ(text.rfind("ontology date_fruit\n", 0), 0u);
  EXPECT_NE(text.find("class Medjool sub Species\n"), std::string::npos);

  r = cli::run({"merge", corpus(kCorpusMainFile), fixture("facet_clash.oft"), "-o", out});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.err.find("warning E_FACET_CLASH"), std::string::npos);
  EXPECT_NE(slurp(out).find("dataprop has_date_of_origin domain Species type number card single"), std::string::npos);
}

TEST_F(CliTest, IngestAppendsIndividuals) {
  auto out = (dir_ / "ingested.oft").string();
  auto r = cli::run(with_corpus({"ingest", "--csv", fixture("varieties.csv"), "--class", "Species", "--map",
                                 "common_name=has_common_name,origin=has_country_of_origin,year=has_date_of_origin",
                                 "-o", out}));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto text = slurp(out);
  EXPECT_NE(text.find("individual Ajwa type Species\n"), std::string::npos);
  EXPECT_NE(text.find("attr Ajwa has_country_of_origin \"Saudi Arabia\"\n"), std::string::npos);
  EXPECT_NE(text.find("attr Medjool has_date_of_origin 1700\n"), std::string::npos);

  auto check = cli::run({"check", out});
  EXPECT_EQ(check.exit_code, 0) << check.err;

  auto bad = cli::run(with_corpus({"ingest", "--csv", fixture("varieties.csv"), "--class", "Species", "--map",
                                   "year", "-o", out}));
  EXPECT_EQ(bad.exit_code, 2);
}
