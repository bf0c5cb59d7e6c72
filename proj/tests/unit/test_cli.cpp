#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "alcm/parser.hpp"
#include "alcm/semantics.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(ALCM_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, p)) out.append(buf, k);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string kb(const char* name) { return std::string(ALCM_KB_DIR) + "/" + name; }

}  // namespace

TEST(Cli, Check) {
  Result r = run("check " + kb("hydro.alcm"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "consistent\n");
  Result c = run("check " + kb("hydro_circular.alcm"));
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(c.out.find("bot3"), std::string::npos);
  EXPECT_NE(c.out.find("circularity: river -> river"), std::string::npos);
  EXPECT_EQ(run("check --oracle " + kb("hydro_equal.alcm")).code, 1);
  EXPECT_EQ(run("check --oracle " + kb("graph_example.alcm")).code, 0);
}

TEST(Cli, Budget) {
  EXPECT_EQ(run("check --budget 2 " + kb("hydro.alcm")).code, 3);
  EXPECT_EQ(run("check --oracle --budget 1 " + kb("hydro.alcm")).code, 3);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("check").code, 2);
  EXPECT_EQ(run("check /nonexistent.alcm").code, 2);
  EXPECT_EQ(run("frobnicate x").code, 2);
  EXPECT_EQ(run("entails " + kb("hydro.alcm") + " 'R(a, b)'").code, 2);
  EXPECT_EQ(run("check --oracle --trace - " + kb("hydro.alcm")).code, 2);
  std::string bad = ::testing::TempDir() + "bad.alcm";
  std::ofstream(bad) << "abox { A(a) }";
  EXPECT_EQ(run("check " + bad).code, 2);
}

TEST(Cli, Inference) {
  EXPECT_EQ(run("metaconcept " + kb("hydro.alcm") + " HydrographicObject").code, 0);
  EXPECT_EQ(run("metaconcept " + kb("hydro.alcm") + " River").code, 1);
  Result m = run("meta " + kb("hydro.alcm") + " river River");
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out, "true\n");
  EXPECT_EQ(run("entails " + kb("hydro.alcm") + " 'River sub not Lake'").code, 0);
  EXPECT_EQ(run("entails " + kb("hydro.alcm") + " 'river = lake'").code, 1);
}

TEST(Cli, ModelAndTrace) {
  std::string model = ::testing::TempDir() + "hydro.json";
  std::string trace = ::testing::TempDir() + "hydro.trace";
  ASSERT_EQ(run("check --stats --model " + model + " --trace " + trace + " " + kb("hydro.alcm")).code, 0);
  std::ifstream in(model);
  std::stringstream buf;
  buf << in.rdbuf();
  alcm::Interpretation I = alcm::fromModelJson(buf.str());
  std::ifstream src(kb("hydro.alcm"));
  std::stringstream text;
  text << src.rdbuf();
  EXPECT_TRUE(alcm::satisfiesKb(I, alcm::parseKb(text.str())).holds);

  std::ifstream t(trace);
  std::string line, last;
  std::getline(t, line);
  EXPECT_EQ(line.rfind("0 ", 0), 0u);
  while (std::getline(t, line)) last = line;
  EXPECT_EQ(last, "verdict consistent");
}
