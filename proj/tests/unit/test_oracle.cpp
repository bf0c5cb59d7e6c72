#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "alcm/engine.hpp"
#include "alcm/oracle.hpp"
#include "alcm/parser.hpp"
#include "corpus.hpp"

using namespace alcm;

namespace {

KnowledgeBase kbFile(const std::string& name) {
  std::ifstream in(std::string(ALCM_KB_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return parseKb(buf.str(), name);
}

Verdict oracle(const char* text, OracleOptions o = {}) { return decide(parseKb(text), o).verdict; }

}  // namespace

TEST(Forest, Initialize) {
  CompletionForest f = initializeForest(parseKb("tbox { A subclassof B; } abox { C(a); R(a, b); a = c; a != b; }"));
  ASSERT_EQ(f.nodes.size(), 3u);
  for (const auto& node : f.nodes) EXPECT_TRUE(node.root);
  int a = f.nodeOf(Name::intern("a")), b = f.nodeOf(Name::intern("b")), c = f.nodeOf(Name::intern("c"));
  EXPECT_TRUE(f.has(a, parseConcept("C")));
  EXPECT_EQ(f.edges.count({a, Name::intern("R"), b}), 1u);
  EXPECT_EQ(f.find(a), f.find(c));
  EXPECT_TRUE(f.notApprox(a, b));
  EXPECT_EQ(f.tbox, std::vector<Concept>{parseConcept("not A or B")});
}

TEST(Oracle, Examples) {
  EXPECT_EQ(decide(KnowledgeBase{}).verdict, Verdict::Consistent);
  EXPECT_EQ(oracle("abox { A(a); (not A)(a); }"), Verdict::Inconsistent);
  EXPECT_EQ(oracle("abox { a != a; }"), Verdict::Inconsistent);
  EXPECT_EQ(oracle("abox { a = b; a != b; }"), Verdict::Inconsistent);
  EXPECT_EQ(oracle("abox { (exists R.A and forall R.not A)(x0); }"), Verdict::Inconsistent);
  EXPECT_EQ(oracle("tbox { top subclassof exists R.A; } abox { A(a); }"), Verdict::Consistent);
  EXPECT_EQ(decide(kbFile("hydro.alcm")).verdict, Verdict::Consistent);
  EXPECT_EQ(decide(kbFile("hydro_circular.alcm")).verdict, Verdict::Inconsistent);
  EXPECT_EQ(decide(kbFile("hydro_equal.alcm")).verdict, Verdict::Inconsistent);
  EXPECT_EQ(decide(kbFile("graph_example.alcm")).verdict, Verdict::Consistent);
  EXPECT_EQ(decide(kbFile("cycles.alcm")).verdict, Verdict::Inconsistent);
}

TEST(Oracle, BudgetGivesUnknown) {
  OracleOptions o;
  o.budget = 1;
  OracleResult r = decide(kbFile("hydro.alcm"), o);
  EXPECT_EQ(r.verdict, Verdict::Unknown);
}

TEST(Oracle, BlockingDoesNotChangeFiniteAnswers) {
  OracleOptions off;
  off.blocking = false;
  off.budget = 2000;
  for (const KnowledgeBase& kb : alcm::testing::corpus(120, 61)) {
    Verdict with = decide(kb).verdict;
    Verdict without = decide(kb, off).verdict;
    if (with == Verdict::Unknown || without == Verdict::Unknown) continue;
    EXPECT_EQ(with, without) << printKb(kb);
  }
}

TEST(Oracle, MetaRulesIrrelevantWithoutMbox) {
  OracleOptions plain;
  plain.metaRules = false;
  alcm::testing::KbGenerator gen(73);
  for (int i = 0; i < 300; ++i) {
    KnowledgeBase kb = gen.nextMboxFree();
    EXPECT_EQ(decide(kb).verdict, decide(kb, plain).verdict) << printKb(kb);
  }
}

TEST(Oracle, AgreesWithEngine) {
  for (const KnowledgeBase& kb : alcm::testing::corpus(300, 404)) {
    Verdict e = checkConsistency(kb, {50000}).verdict;
    Verdict o = decide(kb).verdict;
    if (e == Verdict::Unknown || o == Verdict::Unknown) continue;
    EXPECT_EQ(e, o) << printKb(kb);
  }
}
