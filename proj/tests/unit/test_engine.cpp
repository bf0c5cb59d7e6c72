#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "alcm/engine.hpp"
#include "alcm/oracle.hpp"
#include "alcm/parser.hpp"
#include "corpus.hpp"
#include "properties.hpp"

using namespace alcm;

namespace {

KnowledgeBase kbFile(const std::string& name) {
  std::ifstream in(std::string(ALCM_KB_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return parseKb(buf.str(), name);
}

Judgement root(const char* text) { return initializeRoot(parseKb(text)).root; }
Assertion as(const char* text) { return parseAssertion(text); }
Name n(const char* s) { return Name::intern(s); }

}  // namespace

TEST(InitializeRoot, AddsTboxToEveryIndividual) {
  Judgement j = root("tbox { A subclassof B; } abox { A(a); R(a, b); } mbox { c =m C; }");
  ASSERT_TRUE(j.isBase());
  EXPECT_EQ(j.tbox(), std::vector<Concept>{parseConcept("not A or B")});
  for (const char* x : {"(not A or B)(a)", "(not A or B)(b)", "(not A or B)(c)"}) EXPECT_TRUE(j.contains(as(x))) << x;
}

TEST(InitializeRoot, NnfAndRepresentatives) {
  RootInfo r = initializeRoot(parseKb("abox { (not (A and B))(a); }"));
  EXPECT_TRUE(r.root.contains(as("(not A or not B)(a)")));
  EXPECT_EQ(r.representative.at(n("a")), n("a"));

  RootInfo eq = initializeRoot(parseKb("abox { a = b; A(b); }"));
  EXPECT_EQ(eq.representative.at(n("b")), eq.representative.at(n("a")));
  EXPECT_EQ(eq.root.individuals().size(), 1u);
}

TEST(ApplicableRule, Examples) {
  auto rule = [](const char* text) { return applicableRule(root(text))->rule; };
  EXPECT_EQ(rule("abox { A(a); (not A)(a); }"), Rule::Bot1);
  EXPECT_EQ(rule("abox { bot(a); }"), Rule::Bot1);
  EXPECT_EQ(rule("abox { a != a; }"), Rule::Bot2);
  EXPECT_EQ(rule("abox { A(a); } mbox { a =m A; }"), Rule::Bot3);
  EXPECT_EQ(rule("abox { (A and B)(a); }"), Rule::AndP);
  EXPECT_EQ(rule("abox { (A or B)(a); }"), Rule::OrP);
  EXPECT_EQ(rule("abox { (forall R.A)(a); R(a, b); }"), Rule::Forall);
  EXPECT_EQ(rule("abox { a = b; } mbox { a =m A; b =m B; }"), Rule::Eq);
  EXPECT_EQ(rule("abox { a != b; } mbox { a =m A; b =m B; }"), Rule::Neq);
  EXPECT_EQ(rule("abox { (exists R.A)(a); }"), Rule::TransP);
  EXPECT_FALSE(applicableRule(root("abox { A(a); R(a, b); }")));
}

TEST(ApplicableRule, Close) {
  auto app = applicableRule(root("abox { C(a); D(b); } mbox { a =m A; b =m B; }"));
  ASSERT_TRUE(app);
  EXPECT_EQ(app->rule, Rule::Close);
  EXPECT_EQ(app->connective, RuleApplication::Connective::Or);
  EXPECT_EQ(app->conclusions.size(), 2u);
}

TEST(ApplicableRule, TransOnVariables) {
  Judgement v = Judgement::variable({}, {parseConcept("exists R.A"), parseConcept("forall R.B")});
  auto app = applicableRule(v);
  ASSERT_TRUE(app);
  EXPECT_EQ(app->rule, Rule::Trans);
  ASSERT_EQ(app->conclusions.size(), 1u);
  std::vector<Concept> x{parseConcept("A"), parseConcept("B")};
  canonicalize(x);
  EXPECT_EQ(app->conclusions[0], Judgement::variable({}, x));
  ASSERT_TRUE(app->edgeLabels[0]);
  EXPECT_EQ(app->edgeLabels[0]->existential, parseConcept("exists R.A"));

  EXPECT_EQ(applicableRule(Judgement::variable({}, {Concept::bot()}))->rule, Rule::Bot);
  EXPECT_EQ(applicableRule(Judgement::variable({}, {parseConcept("A"), parseConcept("not A")}))->rule, Rule::Bot);
  EXPECT_EQ(applicableRule(Judgement::variable({}, {parseConcept("A or B")}))->rule, Rule::Or);
  EXPECT_FALSE(applicableRule(Judgement::variable({}, {parseConcept("A")})));
}

TEST(Circularity, Examples) {
  std::vector<Assertion> abox{as("A(a)"), as("B(b)")};
  EXPECT_TRUE(circular(abox, {{n("a"), n("A")}, {n("b"), n("B")}}));
  EXPECT_FALSE(circular({as("B(a)"), as("C(b)")}, {{n("a"), n("A")}, {n("b"), n("B")}}));
  EXPECT_TRUE(circular({as("B(a)"), as("A(b)")}, {{n("a"), n("A")}, {n("b"), n("B")}}));
  KnowledgeBase k = kbFile("cycles.alcm");
  auto cycle = findCircularity(k.abox(), k.mbox());
  ASSERT_TRUE(cycle);
  EXPECT_EQ(*cycle, (std::vector<Name>{n("a0"), n("a1"), n("a2")}));
}

TEST(Graph, EmptyKbIsOneEndNode) {
  ConsistencyResult r = checkConsistency(KnowledgeBase{});
  EXPECT_EQ(r.verdict, Verdict::Consistent);
  ASSERT_EQ(r.graph->size(), 1u);
  EXPECT_EQ(r.graph->node(0).kind, NodeKind::End);
}

TEST(Graph, ClashIsRootPlusAbsurdity) {
  ConsistencyResult r = checkConsistency(parseKb("abox { A(a); (not A)(a); }"));
  EXPECT_EQ(r.verdict, Verdict::Inconsistent);
  ASSERT_EQ(r.graph->size(), 2u);
  ASSERT_TRUE(r.graph->absurdity());
  EXPECT_TRUE(r.unsat.contains(0));
  EXPECT_EQ(r.unsat.reason[0], std::vector<NodeId>{*r.graph->absurdity()});
  EXPECT_EQ(r.refutation->leaves, std::vector<NodeId>{0});
}

TEST(Graph, UnsatNeedsAllOrChildren) {
  ConsistencyResult r = checkConsistency(parseKb("tbox { A subclassof B; } abox { A(a); }"));
  EXPECT_EQ(r.verdict, Verdict::Consistent);
  EXPECT_FALSE(r.unsat.contains(0));
  EXPECT_TRUE(r.unsat.contains(1));
  ASSERT_TRUE(r.marking);
  EXPECT_EQ(r.marking->choice[0], std::optional<NodeId>(2));

  ConsistencyResult both = checkConsistency(parseKb("abox { (A or B)(a); (not A)(a); (not B)(a); }"));
  EXPECT_EQ(both.verdict, Verdict::Inconsistent);
  EXPECT_EQ(both.unsat.reason[0].size(), both.graph->node(0).edges.size());
}

TEST(Graph, ExistentialThroughTbox) {
  ConsistencyResult r = checkConsistency(kbFile("alc_clash.alcm"));
  EXPECT_EQ(r.verdict, Verdict::Inconsistent);
  EXPECT_TRUE(r.refutation->usesRule(*r.graph, Rule::Bot));
  ConsistencyResult loop = checkConsistency(parseKb("tbox { top subclassof exists R.A; } abox { A(a); }"));
  EXPECT_EQ(loop.verdict, Verdict::Consistent);
}

TEST(Graph, PaperExamples) {
  EXPECT_EQ(checkConsistency(kbFile("hydro.alcm")).verdict, Verdict::Consistent);
  ConsistencyResult c = checkConsistency(kbFile("hydro_circular.alcm"));
  EXPECT_EQ(c.verdict, Verdict::Inconsistent);
  EXPECT_TRUE(c.refutation->usesRule(*c.graph, Rule::Bot3));
  EXPECT_EQ(c.refutation->circularity, std::optional<std::vector<Name>>({n("river")}));
  ConsistencyResult e = checkConsistency(kbFile("hydro_equal.alcm"));
  EXPECT_EQ(e.verdict, Verdict::Inconsistent);
  EXPECT_TRUE(e.refutation->usesRule(*e.graph, Rule::Bot1));
  EXPECT_EQ(checkConsistency(kbFile("graph_example.alcm")).verdict, Verdict::Consistent);
}

TEST(Graph, Budget) {
  ConsistencyResult r = checkConsistency(kbFile("hydro.alcm"), {2});
  EXPECT_EQ(r.verdict, Verdict::Unknown);
  EXPECT_FALSE(r.error.empty());
  EXPECT_THROW(buildGraph(initializeRoot(kbFile("hydro.alcm")).root, 2), BudgetExhausted);
}

TEST(Graph, HygieneAndDeterminism) {
  for (const KnowledgeBase& kb : alcm::testing::corpus(300, 99)) {
    ConsistencyResult a = checkConsistency(kb, {50000});
    if (a.verdict == Verdict::Unknown) continue;
    EXPECT_TRUE(alcm::testing::graphHygiene(*a.graph).empty()) << printKb(kb);
    ConsistencyResult b = checkConsistency(kb, {50000});
    EXPECT_EQ(traceString(*a.graph, a.verdict), traceString(*b.graph, b.verdict));
  }
}

TEST(Graph, MarkingAvoidsUnsat) {
  for (const KnowledgeBase& kb : alcm::testing::corpus(300, 7)) {
    ConsistencyResult r = checkConsistency(kb, {50000});
    if (r.verdict != Verdict::Consistent) continue;
    const Marking& m = *r.marking;
    for (NodeId v = 0; v < r.graph->size(); ++v) {
      if (!m.contains(v)) continue;
      EXPECT_FALSE(r.unsat.contains(v));
      const GraphNode& node = r.graph->node(v);
      if (node.kind == NodeKind::Or) {
        ASSERT_TRUE(m.choice[v]);
        EXPECT_TRUE(m.contains(*m.choice[v]));
      } else {
        for (const auto& e : node.edges) EXPECT_TRUE(m.contains(e.target));
      }
    }
  }
}

TEST(Graph, RulesPreserveSatisfiability) {
  alcm::testing::RuleCheck rc;
  for (const KnowledgeBase& kb : alcm::testing::corpus(150, 31)) {
    ConsistencyResult r = checkConsistency(kb, {50000});
    if (r.graph) alcm::testing::checkRulePreservation(*r.graph, 4, rc);
  }
  EXPECT_GT(rc.applications, 100u);
  EXPECT_TRUE(rc.counterexamples.empty()) << rc.counterexamples.front();
}

TEST(Trace, Format) {
  ConsistencyResult r = checkConsistency(parseKb("abox { (A or B)(a); }"));
  EXPECT_EQ(traceString(*r.graph, r.verdict),
            "0 or or' (A or B)(a) -> 1 2\n1 end none - ->\n2 end none - ->\nverdict consistent\n");
  GraphStats s = graphStats(*r.graph);
  EXPECT_EQ(s.nodes, 3u);
  EXPECT_EQ(s.edges, 2u);
  EXPECT_EQ(s.endNodes, 2u);
}
