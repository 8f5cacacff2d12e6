// Copyright 2026 The latdim Authors
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

// Drives the latdim executable end to end through the shell.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <algorithm>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("latdim_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }
  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  CliResult run(const std::string& args) const {
    const std::string out = path("stdout.txt");
    const std::string err = path("stderr.txt");
    const std::string cmd =
        std::string(LATDIM_CLI) + " " + args + " >" + out + " 2>" + err;
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read("stdout.txt");
    r.err = read("stderr.txt");
    return r;
  }

  fs::path dir_;
};

TEST_F(CliTest, EmbedPathOfThree) {
  write("p3.txt", "0 1\n1 2\n");
  const CliResult r = run("embed " + path("p3.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "# n=3 tau=2 matching_size=1 dimension=1\n0 0\n1 1\n2 2\n");
}

TEST_F(CliTest, EmbedJson) {
  write("p3.txt", "0 1\n1 2\n");
  const CliResult r = run("embed --format json " + path("p3.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"dimension\": 1"), std::string::npos);
  EXPECT_NE(r.out.find("\"matching_size\": 1"), std::string::npos);
  EXPECT_NE(r.out.find("\"coordinates\""), std::string::npos);
}

TEST_F(CliTest, EmbedExitCodes) {
  write("k3.txt", "0 1\n1 2\n0 2\n");
  const CliResult k3 = run("embed " + path("k3.txt"));
  EXPECT_EQ(k3.code, 2);
  EXPECT_NE(k3.err.find("NotBipartite"), std::string::npos);
  EXPECT_EQ(run("embed " + path("missing.txt")).code, 1);
  write("bad.txt", "0 1\nfoo\n");
  const CliResult bad = run("embed " + path("bad.txt"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("MalformedLine"), std::string::npos);
  EXPECT_EQ(run("embed").code, 1);
  write("p9.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n");
  const CliResult big = run("embed --max-n 5 " + path("p9.txt"));
  EXPECT_EQ(big.code, 1);
  EXPECT_NE(big.err.find("TooLarge"), std::string::npos);
}

TEST_F(CliTest, EmbedWritesDot) {
  write("p3.txt", "0 1\n1 2\n");
  EXPECT_EQ(run("embed " + path("p3.txt") + " --dot " + path("sc.dot")).code, 0);
  EXPECT_NE(read("sc.dot").find("1 -- 2;"), std::string::npos);
}

TEST_F(CliTest, RenderSquareAndCube) {
  write("c4.txt", "0 1\n1 2\n2 3\n3 0\n");
  const CliResult c4 = run("render " + path("c4.txt") + " --out " + path("c4.svg"));
  EXPECT_EQ(c4.code, 0);
  const std::string svg = read("c4.svg");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("width=\"120.00\" height=\"120.00\""), std::string::npos);
  EXPECT_EQ(run("gen spider 5 1 --out " + path("spider.txt")).code, 0);
  EXPECT_EQ(run("render " + path("spider.txt")).code, 0);
  EXPECT_EQ(run("gen hypercube 4 --out " + path("q4.txt")).code, 0);
  const CliResult q4 = run("render " + path("q4.txt"));
  EXPECT_EQ(q4.code, 1);
  EXPECT_NE(q4.err.find("DimensionTooHigh"), std::string::npos);
  EXPECT_EQ(run("render --project " + path("q4.txt")).code, 0);
}

TEST_F(CliTest, Verify) {
  write("p3.txt", "0 1\n1 2\n");
  write("line.txt", "0 0\n1 1\n2 2\n");
  write("moved.txt", "0 0\n1 1\n2 3\n");
  write("short.txt", "0 0\n1 1\n");
  EXPECT_EQ(run("verify " + path("p3.txt") + " " + path("line.txt")).code, 0);
  const CliResult moved = run("verify " + path("p3.txt") + " " + path("moved.txt"));
  EXPECT_EQ(moved.code, 3);
  EXPECT_NE(moved.err.find("pair (0, 2)"), std::string::npos);
  EXPECT_EQ(run("verify " + path("p3.txt") + " " + path("short.txt")).code, 1);
}

TEST_F(CliTest, EmbedOutputVerifies) {
  for (const std::string fam : {"grid 4 5", "random-tree 40 3", "cycle 10",
                                "product cycle:6 path:3 star:3"}) {
    ASSERT_EQ(run("gen " + fam + " --out " + path("g.txt")).code, 0) << fam;
    ASSERT_EQ(run("embed " + path("g.txt") + " --out " + path("e.txt")).code, 0) << fam;
    EXPECT_EQ(run("verify " + path("g.txt") + " " + path("e.txt")).code, 0) << fam;
  }
}

TEST_F(CliTest, Gen) {
  const CliResult grid = run("gen grid 3 4");
  EXPECT_EQ(grid.code, 0);
  EXPECT_EQ(std::count(grid.out.begin(), grid.out.end(), '\n'), 17);
  EXPECT_NE(grid.out.find("10 11\n"), std::string::npos);
  const CliResult q3 = run("gen hypercube 3");
  EXPECT_EQ(std::count(q3.out.begin(), q3.out.end(), '\n'), 12);
  const CliResult t1 = run("gen random-tree 50 7");
  const CliResult t2 = run("gen random-tree 50 --seed 7");
  EXPECT_EQ(std::count(t1.out.begin(), t1.out.end(), '\n'), 49);
  EXPECT_EQ(t1.out, t2.out);
  EXPECT_NE(t1.out, run("gen random-tree 50 8").out);
  EXPECT_EQ(run("gen cycle 5").code, 0);
  EXPECT_EQ(run("gen cycle 2").code, 1);
  EXPECT_EQ(run("gen nosuch 3").code, 1);
}

TEST_F(CliTest, BenchSingleEdge) {
  const CliResult r = run("bench --family path --sizes 2");
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(std::count(header.begin(), header.end(), '\t'), 13);
  EXPECT_EQ(std::count(row.begin(), row.end(), '\t'), 13);
  EXPECT_EQ(row.rfind("path\t2\t2\t1\t1\t0\t1\t", 0), 0u);
}

TEST_F(CliTest, Deterministic) {
  ASSERT_EQ(run("gen product random-tree:9,4 cycle:6 --out " + path("g.txt")).code, 0);
  EXPECT_EQ(run("embed " + path("g.txt") + " --out " + path("a.txt")).code, 0);
  EXPECT_EQ(run("embed " + path("g.txt") + " --out " + path("b.txt")).code, 0);
  EXPECT_EQ(read("a.txt"), read("b.txt"));
  ASSERT_EQ(run("gen grid 3 3 --out " + path("h.txt")).code, 0);
  EXPECT_EQ(run("render " + path("h.txt") + " --out " + path("a.svg")).code, 0);
  EXPECT_EQ(run("render " + path("h.txt") + " --out " + path("b.svg")).code, 0);
  EXPECT_EQ(read("a.svg"), read("b.svg"));
}

}  // namespace
