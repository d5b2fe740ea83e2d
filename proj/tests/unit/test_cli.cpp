#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "helpers.hpp"
#include "qutest/cli/cli.hpp"

namespace ts = testing_support;
using qutest::cli::cli_main;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

// The CLI writes its probe cache into the working directory.
class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    old_ = std::filesystem::current_path();
    dir_ = ts::temp_dir("cli");
    std::filesystem::current_path(dir_);
  }
  void TearDown() override {
    std::filesystem::current_path(old_);
    std::filesystem::remove_all(dir_);
  }
  std::filesystem::path old_, dir_;
};

}  // namespace

TEST_F(CliTest, FlagshipRunPasses) {
  const auto o = invoke({"run", (ts::corpus_dir() / "bell_test.qasm").string(), "--seed", "42"});
  EXPECT_EQ(o.code, 0) << o.out << o.err;
  EXPECT_NE(o.out.find("test_distribution [native]"), std::string::npos);
  EXPECT_NE(o.out.find("master seed 42"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir_ / ".qutest/runtimes/native"));
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({"run", ts::corpus_dir().string(), "--seed", "1"}).code, 0);
  EXPECT_EQ(invoke({"run", (ts::fixtures_dir() / "failing.qasm").string()}).code, 1);
  EXPECT_EQ(invoke({"run", "missing.qasm"}).code, 2);
  EXPECT_EQ(invoke({"run"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"run", ts::corpus_dir().string(), "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"run", ts::corpus_dir().string(), "--jobs", "0"}).code, 2);
  EXPECT_EQ(invoke({"run", ts::corpus_dir().string(), "--seed", "abc"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, LintReportsCodesWithHints) {
  const auto bad = invoke({"lint", (ts::fixtures_dir() / "lint_all_codes.qasm").string()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("error QT002"), std::string::npos);
  EXPECT_NE(bad.out.find("hint: did you mean 'shots'?"), std::string::npos);
  const auto good = invoke({"lint", ts::corpus_dir().string()});
  EXPECT_EQ(good.code, 0) << good.out;
  EXPECT_EQ(invoke({"lint", "missing"}).code, 2);
}

TEST_F(CliTest, WritesJunitXml) {
  const auto xml = dir_ / "report.xml";
  const auto o = invoke({"run", ts::corpus_dir().string(), (ts::fixtures_dir() / "runtime_versions.qasm").string(),
                         "--junit-xml", xml.string(), "--no-color"});
  EXPECT_EQ(o.code, 1);
  boost::property_tree::ptree tree;
  std::ifstream in(xml);
  ASSERT_NO_THROW(boost::property_tree::read_xml(in, tree));
  EXPECT_EQ(tree.get<int>("testsuites.<xmlattr>.errors"), 2);
  EXPECT_EQ(tree.get<int>("testsuites.<xmlattr>.failures"), 0);
}

TEST_F(CliTest, UnwritableXmlDestinationIsUsageError) {
  const auto o = invoke({"run", ts::corpus_dir().string(), "--junit-xml", (dir_ / "no/such/dir/r.xml").string()});
  EXPECT_EQ(o.code, 2);
}
