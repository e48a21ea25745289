#include <iterator>
#include <sstream>

#include <gtest/gtest.h>

#include "qseries/json_io.hpp"
#include "qseries_cli/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qseries::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Whitespace-separated column `index` of each text row.
std::vector<std::string> column(const std::string& text, std::size_t index) {
  std::vector<std::string> values;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    std::istringstream words(line);
    std::vector<std::string> row{std::istream_iterator<std::string>(words), {}};
    if (row.size() > index) values.push_back(row[index]);
  }
  return values;
}

bool has_row(const std::string& text, const std::string& a, const std::string& b) {
  auto as = column(text, 0), bs = column(text, 1);
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (as[i] == a && bs[i] == b) return true;
  }
  return false;
}

using Col = std::vector<std::string>;

}  // namespace

TEST(CliExpand, Examples) {
  auto r = run({"expand", "1^-1", "--order", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(column(r.out, 1), (Col{"1", "1", "2", "3", "5", "7"}));
  EXPECT_EQ(column(run({"expand", "2^1 1^-2", "--order", "4", "--mod", "5"}).out, 1),
            (Col{"1", "2", "4", "3", "4"}));
  EXPECT_EQ(column(run({"expand", "q^1 1^1", "--order", "3"}).out, 1), (Col{"0", "1", "-1", "-1"}));
}

TEST(CliExpand, Formats) {
  auto csv = run({"expand", "1^-1", "--order", "2", "--csv"});
  EXPECT_EQ(csv.out, "n,coefficient\n0,1\n1,1\n2,2\n");
  auto json = run({"expand", "1^-1", "--order", "2", "--json"});
  EXPECT_EQ(json.out, "{\"ring\":\"Z\",\"order\":2,\"coeffs\":[1,1,2]}\n");
  auto text = run({"expand", "q^1 1^1", "--order", "12"});
  EXPECT_NE(text.out.find(" 9   0\n"), std::string::npos);
  EXPECT_NE(text.out.find(" 3  -1\n"), std::string::npos);
  EXPECT_EQ(run({"expand", "1^-1", "--json", "--csv"}).code, 2);
}

TEST(CliExpand, ParseErrorNamesToken) {
  auto r = run({"expand", "2^1 1^x"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("1^x"), std::string::npos);
  EXPECT_NE(r.err.find("position 4"), std::string::npos);
}

TEST(CliValue, Examples) {
  EXPECT_EQ(run({"value", "A", "--ell", "5", "--n", "3"}).out, "8\n");
  EXPECT_EQ(run({"value", "r", "--k", "8", "--n", "4"}).out, "1136\n");
  EXPECT_EQ(run({"value", "dstar", "--n", "12"}).out, "12\n");
  EXPECT_EQ(run({"value", "sigma3m", "--n", "4"}).out, "71\n");
  EXPECT_EQ(run({"value", "pbar", "--n", "6", "--json"}).out, "{\"seq\":\"pbar\",\"n\":6,\"value\":40}\n");
}

TEST(CliValue, Errors) {
  EXPECT_EQ(run({"value", "A", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"value", "nope", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"value", "r", "--k", "3", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"value", "dstar", "--n", "0"}).code, 2);
}

TEST(CliVerify, Examples) {
  auto r = run({"verify", "C-T6", "--bound", "5000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(column(r.out, 1), (Col{"status", "pass"}));
  EXPECT_EQ(column(r.out, 2), (Col{"instances", "1000"}));
  auto bad = run({"verify", "NOPE"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("unknown claim"), std::string::npos);
}

TEST(CliVerify, FailureExitsOne) {
  auto r = run({"verify", "C-T2", "C-EX1", "--json"});
  EXPECT_EQ(r.code, 1);
  std::istringstream lines(r.out);
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(qseries::report_from_json(first).claim_id, "C-T2");
  EXPECT_EQ(qseries::report_from_json(second).status, qseries::Status::Pass);
}

TEST(CliVerify, JsonLinesRoundTrip) {
  auto r = run({"verify", "all", "--bound", "700", "--prime-cap", "5", "--json"});
  std::istringstream lines(r.out);
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line); ++count) {
    EXPECT_EQ(qseries::report_to_json(qseries::report_from_json(line)), line);
  }
  EXPECT_EQ(count, qseries::builtin_registry().size());
}

TEST(CliIdentities, RunsOnlyIdentities) {
  auto r = run({"identities", "--order", "100", "--csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("id,status,bound,instances,index,lhs,rhs\n", 0), 0u);
  EXPECT_EQ(r.out.find("C-"), std::string::npos);
  EXPECT_NE(r.out.find("I-GF125,pass"), std::string::npos);
  EXPECT_EQ(run({"identities", "C-T6"}).code, 2);
}

TEST(CliHunt, Examples) {
  auto six = run({"hunt", "A", "--ell", "3", "--mod", "6", "--max-step", "10", "--bound", "2000"});
  EXPECT_EQ(six.code, 0);
  EXPECT_TRUE(has_row(six.out, "9", "3"));
  EXPECT_TRUE(has_row(six.out, "9", "6"));
  auto none = run({"hunt", "pbar", "--mod", "5", "--max-step", "3", "--bound", "1000", "--json"});
  EXPECT_EQ(none.code, 0);
  EXPECT_EQ(none.out, "");
  EXPECT_EQ(run({"hunt", "pbar", "--mod", "1"}).code, 2);
}

TEST(CliUsage, BadInvocations) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"expand", "1^-1", "--order", "x"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
