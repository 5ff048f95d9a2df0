// Golden-file tests for the command line tool. Each case is a pair
// cases/NAME.args (one argument per line) and cases/NAME.out (stdout, then
// "-- stderr" and the diagnostics if any, then an "-- exit N" line). Set LAMBDAY_UPDATE_GOLDEN=1 to rewrite the .out files.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "lambday/cli.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kRoot = LAMBDAY_GOLDEN_DIR;

std::vector<std::string> case_names() {
  std::vector<std::string> out;
  for (const auto& entry : fs::directory_iterator(kRoot / "cases")) {
    if (entry.path().extension() == ".args") out.push_back(entry.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

class Golden : public ::testing::TestWithParam<std::string> {};

TEST_P(Golden, Matches) {
  const std::string name = GetParam();
  std::vector<std::string> args;
  std::istringstream lines(slurp(kRoot / "cases" / (name + ".args")));
  std::string line;
  while (std::getline(lines, line)) {
    args.push_back(replace_all(line, "@SPECS@", (kRoot / "specs").string()));
  }
  std::ostringstream out;
  std::ostringstream err;
  int status = lambday::cli::run(args, out, err);
  std::string actual = std::regex_replace(out.str(), std::regex("\"elapsed_us\":[0-9]+"),
                                          "\"elapsed_us\":0");
  if (!err.str().empty()) {
    actual += "-- stderr\n" + replace_all(err.str(), (kRoot / "specs").string(), "@SPECS@");
  }
  actual += "-- exit " + std::to_string(status) + "\n";

  const fs::path expected_path = kRoot / "cases" / (name + ".out");
  const char* update = std::getenv("LAMBDAY_UPDATE_GOLDEN");
  if (update != nullptr && std::string(update) == "1") {
    std::ofstream(expected_path) << actual;
    GTEST_SKIP() << "rewrote " << expected_path;
  }
  ASSERT_TRUE(fs::exists(expected_path)) << expected_path;
  EXPECT_EQ(actual, slurp(expected_path));
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(case_names()),
                         [](const auto& info) {
                           std::string n = info.param;
                           std::replace(n.begin(), n.end(), '-', '_');
                           return n;
                         });

}  // namespace
