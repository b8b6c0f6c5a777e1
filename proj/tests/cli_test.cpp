#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "exlab/io.hpp"

namespace exlab {
namespace {

struct Invocation {
  int status;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

Json invoke_json(const std::vector<std::string>& args) {
  const auto result = invoke(args);
  EXPECT_EQ(result.status, cli::kExitOk) << result.err;
  return Json::parse(result.out);
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("exlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST(Cli, BoundsOnBuiltins) {
  EXPECT_EQ(invoke_json({"bounds", "pentagon", "--class", "E"})["value"].dump(), R"({"num":"5","den":"2"})");
  EXPECT_EQ(invoke_json({"bounds", "pentagon", "--class", "NCHV"})["value"].dump(), R"({"num":"2","den":"1"})");
  EXPECT_EQ(invoke_json({"bounds", "pentagram", "--class", "CE"})["value"].dump(), R"({"num":"1","den":"1"})");
  EXPECT_EQ(invoke_json({"bounds", "simplex:5", "--class", "NCHV"})["value"].dump(), R"({"num":"1","den":"1"})");
  const Json product = invoke_json({"bounds", "pentagon", "--class", "CEk", "--copies", "2"});
  EXPECT_EQ(product["value"]["base"]["num"], "5");
  EXPECT_EQ(product["value"]["root"], 2);
}

TEST(Cli, TableFormat) {
  const auto result = invoke({"bounds", "pentagon", "--format", "table"});
  ASSERT_EQ(result.status, cli::kExitOk);
  EXPECT_NE(result.out.find("value"), std::string::npos);
  EXPECT_NE(result.out.find("5/2"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).status, cli::kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).status, cli::kExitUsage);
  EXPECT_EQ(invoke({"bounds"}).status, cli::kExitUsage);
  EXPECT_EQ(invoke({"bounds", "pentagon", "--class", "XYZ"}).status, cli::kExitUsage);
  EXPECT_EQ(invoke({"bounds", "pentagon", "--format", "yaml"}).status, cli::kExitUsage);
  EXPECT_EQ(invoke({"--help"}).status, cli::kExitOk);
}

TEST(Cli, DomainErrorsExitOneWithJsonError) {
  const auto unknown = invoke({"bounds", "hexagon"});
  EXPECT_EQ(unknown.status, cli::kExitDomainError);
  EXPECT_NE(unknown.err.find("unknown builtin"), std::string::npos);
  EXPECT_TRUE(Json::parse(unknown.out).contains("error"));

  EXPECT_EQ(invoke({"theta", "4"}).status, cli::kExitDomainError);
  EXPECT_EQ(invoke({"bounds", "cycle:2"}).status, cli::kExitDomainError);
  EXPECT_EQ(invoke({"bounds", "/nonexistent/file.json"}).status, cli::kExitDomainError);
  EXPECT_EQ(invoke({"bounds", "pentagon", "--class", "CEk", "--copies", "0"}).status, cli::kExitDomainError);
  EXPECT_EQ(invoke({"check", "pentagon"}).status, cli::kExitDomainError);

  const auto table = invoke({"bounds", "hexagon", "--format", "table"});
  EXPECT_EQ(table.status, cli::kExitDomainError);
  EXPECT_TRUE(table.out.empty());
}

TEST_F(TempDir, OutFileRoundTrip) {
  const std::string file = path("product.json");
  ASSERT_EQ(invoke({"or-product", "pentagon", "pentagon", "--out", file}).status, cli::kExitOk);
  std::ifstream in(file);
  const SimplicialComplex loaded = complex_from_json(Json::parse(in));
  EXPECT_EQ(loaded, or_product(pentagon(), pentagon()));
  EXPECT_EQ(invoke_json({"bounds", file, "--class", "CE"})["value"].dump(), R"({"num":"5","den":"1"})");
}

TEST_F(TempDir, ValidateReportsDefects) {
  const std::string file = path("nested.json");
  std::ofstream(file) << R"({"n_vertices":3,"facets":[[0,1],[0,1,2]]})";
  const auto result = invoke({"validate", file});
  EXPECT_EQ(result.status, cli::kExitDomainError);
  const Json json = Json::parse(result.out);
  EXPECT_FALSE(json["valid"]);
  EXPECT_NE(json["defects"][0].get<std::string>().find("nested"), std::string::npos);
  EXPECT_EQ(invoke({"validate", "pentagon"}).status, cli::kExitOk);
}

TEST_F(TempDir, BehaviourPipeline) {
  const std::string pr = path("pr.json");
  const std::string pair = path("pair.json");
  ASSERT_EQ(invoke({"pr-box", "--out", pr}).status, cli::kExitOk);
  ASSERT_EQ(invoke({"product", pr, "prbox", "--out", pair}).status, cli::kExitOk);
  EXPECT_EQ(invoke_json({"find-violation", pr})["violation"], nullptr);
  const Json v = invoke_json({"find-violation", pair, "--support", "nonzero"})["violation"];
  EXPECT_EQ(v["clique"].size(), 5u);
  EXPECT_EQ(v["total"].dump(), R"({"num":"5","den":"4"})");
  EXPECT_TRUE(invoke_json({"check", pair, "--class", "E"})["in_class"]);
  EXPECT_FALSE(invoke_json({"check", pair, "--class", "CE", "--support", "nonzero"})["in_class"]);
  EXPECT_EQ(invoke_json({"lo-complex", "prbox", "--support", "nonzero"})["n_vertices"], 8);
}

TEST(Cli, InlineAssignment) {
  const Json ok = invoke_json({"check", "pentagon", "--assignment", "1/2,1/2,1/2,1/2,1/2"});
  EXPECT_TRUE(ok["in_class"]);
  const Json bad = invoke_json({"check", "pentagram", "--class", "CE", "--assignment", "1/2,1/2,1/2,1/2,1/2"});
  EXPECT_FALSE(bad["in_class"]);
  EXPECT_EQ(invoke({"check", "pentagon", "--assignment", "1/2,1/2"}).status, cli::kExitDomainError);
}

TEST(Cli, InducedAndDot) {
  const Json induced = invoke_json({"induced", "pentagram", "--vertices", "0,2,4"});
  EXPECT_EQ(induced["n_vertices"], 3);
  EXPECT_EQ(induced["facets"].size(), 3u);
  const auto dot = invoke({"dot", "pentagon"});
  ASSERT_EQ(dot.status, cli::kExitOk);
  EXPECT_EQ(dot.out.rfind("graph \"skeleton\" {", 0), 0u);
  EXPECT_EQ(invoke({"pr-box", "--format", "dot"}).status, cli::kExitDomainError);
}

TEST(Cli, ThetaHonoursPrecision) {
  ::setenv("EXLAB_PRECISION", "7", 1);
  const Json seven = invoke_json({"theta", "7"});
  ::unsetenv("EXLAB_PRECISION");
  EXPECT_EQ(seven["value"], "3.3176672");
  EXPECT_EQ(seven["exact"], nullptr);
  const Json five = invoke_json({"theta", "5"});
  EXPECT_EQ(five["digits"], 30);
  EXPECT_EQ(five["value"].get<std::string>().substr(0, 12), "2.2360679774");
  EXPECT_FALSE(five["exact"].is_null());
}

TEST(Cli, PaperCheckPasses) {
  const auto result = invoke({"paper-check", "--format", "table"});
  EXPECT_EQ(result.status, cli::kExitOk);
  EXPECT_EQ(result.out.find("FAIL"), std::string::npos);
}

TEST(Cli, BinaryRunsEndToEnd) {
  const std::string command = std::string("\"") + EXLAB_CLI_PATH + "\" bounds pentagon --format table > /dev/null";
  EXPECT_EQ(std::system(command.c_str()), 0);
  const std::string usage = std::string("\"") + EXLAB_CLI_PATH + "\" > /dev/null 2>&1";
  const int status = std::system(usage.c_str());
  EXPECT_EQ(WEXITSTATUS(status), cli::kExitUsage);
}

}  // namespace
}  // namespace exlab
