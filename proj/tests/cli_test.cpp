// Copyright 2026 The leafdiam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "leafdiam_cli.hpp"

#include <sstream>

#include "gtest/gtest.h"

namespace leafdiam::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, FormulaSubcommands) {
  EXPECT_EQ(run({"min-leaves", "21", "3"}).out, "19\n");
  EXPECT_EQ(run({"lesniak-bound", "21", "3"}).out, "14\n");
  EXPECT_EQ(run({"max-leaves", "21", "3"}).out, "19\n");
  EXPECT_EQ(run({"min-diameter", "6", "3"}).out, "4\n");
  EXPECT_EQ(run({"max-diameter", "6", "3"}).out, "4\n");
  EXPECT_EQ(run({"min-leaves", "21", "3"}).code, kExitOk);
}

TEST(CliTest, InfeasibleExitsTwo) {
  auto r = run({"min-leaves", "3", "1"});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(r.err, "infeasible: d=1 requires n=2\n");
  EXPECT_EQ(run({"min-diameter", "3", "3"}).code, kExitInvalid);
}

TEST(CliTest, BadArgumentsExitTwo) {
  EXPECT_EQ(run({}).code, kExitInvalid);
  EXPECT_EQ(run({"min-leaves", "21"}).code, kExitInvalid);
  EXPECT_EQ(run({"min-leaves", "x", "3"}).code, kExitInvalid);
  EXPECT_EQ(run({"no-such-command"}).code, kExitInvalid);
  EXPECT_EQ(run({"witness"}).code, kExitInvalid);
  EXPECT_EQ(run({"witness", "--min-leaves", "5", "2", "--max-leaves", "5", "2"})
                .code,
            kExitInvalid);
  EXPECT_EQ(run({"verify", "--max-n", "1"}).code, kExitInvalid);
  EXPECT_EQ(run({"table", "--n", "12", "--cap", "12"}).code, kExitInvalid);
}

TEST(CliTest, HelpExitsZero) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("spiderize"), std::string::npos);
}

TEST(CliTest, Witnesses) {
  EXPECT_EQ(run({"witness", "--min-leaves", "7", "4"}).out,
            "7\n0 1\n0 3\n0 5\n1 2\n3 4\n5 6\n");
  EXPECT_EQ(run({"witness", "--min-diameter", "5", "4"}).out,
            "5\n0 1\n0 2\n0 3\n0 4\n");
  EXPECT_EQ(run({"witness", "--max-leaves", "6", "4"}).out,
            "6\n0 1\n1 2\n2 3\n2 5\n3 4\n");
  EXPECT_EQ(run({"witness", "--max-diameter", "6", "3", "--dot"}).out,
            "graph T { 0 -- 1; 1 -- 2; 1 -- 5; 2 -- 3; 3 -- 4; }\n");
  EXPECT_EQ(run({"witness", "--min-leaves", "3", "1"}).code, kExitInvalid);
}

TEST(CliTest, SpiderizeWithTrace) {
  const std::string input = "6\n0 1\n1 2\n2 3\n3 4\n1 5\n";
  auto r = run({"spiderize"}, input);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "6\n0 1\n1 2\n2 3\n2 5\n3 4\n");
  auto traced = run({"spiderize", "--trace"}, input);
  EXPECT_EQ(traced.out, r.out + "# step u=5 b=1 w=5 z=2 phi=8->7\n");
  // Trace comments are ignored when the output is read back.
  EXPECT_EQ(run({"spiderize"}, traced.out).out, r.out);
}

TEST(CliTest, SpiderizeIsIdempotentThroughText) {
  const std::string input =
      "12\n0 1\n1 2\n2 3\n3 4\n4 5\n1 6\n6 7\n7 8\n7 9\n4 10\n10 11\n";
  auto once = run({"spiderize"}, input);
  ASSERT_EQ(once.code, kExitOk);
  EXPECT_EQ(run({"spiderize"}, once.out).out, once.out);
}

TEST(CliTest, SpiderizeRejectsBadInput) {
  auto r = run({"spiderize"}, "3\n0 x\n");
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"spiderize"}, "4\n0 1\n1 2\n2 0\n").code, kExitInvalid);
  EXPECT_EQ(run({"spiderize", "/no/such/file"}).code, kExitInvalid);
}

TEST(CliTest, CheckDiametral) {
  const std::string path5 = "5\n0 1\n1 2\n2 3\n3 4\n";
  EXPECT_EQ(run({"check-diametral", "--path", "0,1,2,3,4"}, path5).out,
            "true\n");
  EXPECT_EQ(run({"check-diametral", "--path", "1,2,3"}, path5).out, "false\n");
  EXPECT_EQ(run({"check-diametral", "--path", "0,2"}, path5).code,
            kExitInvalid);
  EXPECT_EQ(run({"check-diametral", "--path", "0,a"}, path5).code,
            kExitInvalid);
}

TEST(CliTest, VerifyAndTable) {
  auto r = run({"verify", "--max-n", "6", "--jobs", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("0 discrepancies"), std::string::npos);

  EXPECT_EQ(run({"table", "--n", "4", "--csv"}).out,
            "n,d,min_leaves,max_leaves\n4,2,3,3\n4,3,2,2\n"
            "n,f,min_diam,max_diam\n4,2,3,3\n4,3,2,2\n");
  auto plain = run({"table", "--n", "5"});
  EXPECT_EQ(plain.code, kExitOk);
  EXPECT_NE(plain.out.find("order 5"), std::string::npos);

  auto raised = run({"table", "--n", "4", "--cap", "10"});
  EXPECT_EQ(raised.code, kExitOk);
  EXPECT_NE(raised.err.find("warning"), std::string::npos);
  EXPECT_EQ(run({"table", "--n", "10"}).code, kExitInvalid);
}

}  // namespace
}  // namespace leafdiam::cli
