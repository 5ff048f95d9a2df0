#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "lambday/cli.hpp"

using lambday::cli::run;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DecideNfNegative) {
  Result r = call({"decide-nf", "Y{o} (\\x:o. x)"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "no normal form\n");
}

TEST(Cli, Height) {
  Result r = call({"height", "(o->o)->(o->o)"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "6\n");
}

TEST(Cli, NormalizeWithFuel) {
  Result r = call({"normalize", "--fuel", "100", "(\\x:o. x) Omega{o}"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "Omega{o}\n");
}

TEST(Cli, FuelExhaustionIsNegative) {
  Result r = call({"normalize", "--fuel", "5", "Y{o} (\\x:o. x)"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("fuel exhausted"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).status, 2);
  EXPECT_EQ(call({"frobnicate"}).status, 2);
  EXPECT_EQ(call({"height"}).status, 2);
  EXPECT_EQ(call({"normalize", "--fuel", "lots", "x"}).status, 2);
  EXPECT_EQ(call({"--help"}).status, 0);
}

TEST(Cli, MalformedInputIsAttributed) {
  Result p = call({"parse", "\\x:o. "});
  EXPECT_EQ(p.status, 2);
  EXPECT_NE(p.err.find("parse"), std::string::npos);
  Result t = call({"typecheck", "(\\x:o. x) Omega{o->o}"});
  EXPECT_EQ(t.status, 2);
  EXPECT_NE(t.err.find("type"), std::string::npos);
  Result o = call({"decide-nf", "[x:o] x"});
  EXPECT_EQ(o.status, 2);
  EXPECT_NE(o.err.find("precondition"), std::string::npos);
  for (const char* junk : {"", "(((", "#", "Y{", "\\:", "Omega{o -> }", "[x:o", "#99999999999999999999{o}"}) {
    Result r = call({"parse", junk});
    EXPECT_EQ(r.status, 2) << junk;
    EXPECT_FALSE(r.err.empty());
  }
  EXPECT_EQ(call({"check-defines", "/nonexistent/spec"}).status, 2);
}

TEST(Cli, SizeLimitGivesUndecided) {
  Result r = call({"domain", "--size-limit", "20", "(o->o)->o->o->o"});
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.out.rfind("undecided at configured limits", 0), 0u);
}

TEST(Cli, SizeLimitFromEnvironment) {
  ::setenv("LAMBDAY_SIZE_LIMIT", "20", 1);
  Result r = call({"domain", "(o->o)->o->o->o"});
  ::unsetenv("LAMBDAY_SIZE_LIMIT");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("undecided"), std::string::npos);
  EXPECT_EQ(call({"domain", "(o->o)->o->o->o"}).status, 0);
}

TEST(Cli, JsonOutputParsesAsOneObject) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{"parse", "--json", "#2{o}"},
                                             {"decide-hnf", "--json", "#2{o}"},
                                             {"height", "--json", "o->o"},
                                             {"eval", "--json", "\\x:o. x"}}) {
    Result r = call(args);
    EXPECT_EQ(r.status, 0);
    ASSERT_FALSE(r.out.empty());
    EXPECT_EQ(r.out.front(), '{');
    EXPECT_EQ(r.out.find('\n'), r.out.size() - 1);
  }
}

TEST(Cli, Repl) {
  std::istringstream in("-- comment\nheight o->o\n\ndecide-nf #2{o}\nbogus\nquit\nheight o\n");
  std::ostringstream out;
  std::ostringstream err;
  lambday::cli::repl(in, out, err, false);
  EXPECT_EQ(out.str().rfind("2\nnormal form\n", 0), 0u);
  // nothing after quit
  EXPECT_EQ(out.str().find("\n1\n"), std::string::npos);
  EXPECT_FALSE(err.str().empty());
}
