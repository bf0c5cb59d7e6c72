#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "alcm/parser.hpp"
#include "alcm/query.hpp"
#include "corpus.hpp"

using namespace alcm;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ALCM_KB_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST(Parser, Hydrography) {
  KnowledgeBase kb = parseKb(slurp("hydro.alcm"));
  EXPECT_EQ(kb.tbox().size(), 1u);
  EXPECT_EQ(kb.abox().size(), 6u);
  ASSERT_EQ(kb.mbox().size(), 2u);
  EXPECT_EQ(kb.mbox()[0].individual.str(), "river");
  EXPECT_EQ(kb.mbox()[0].conceptName.str(), "River");
  EXPECT_EQ(kb.mboxRange().size(), 2u);
}

TEST(Parser, Precedence) {
  Concept x = parseConcept("not exists R . A and B");
  ASSERT_EQ(x.kind(), ConceptKind::And);
  EXPECT_EQ(x.first(), parseConcept("not (exists R.A)"));
  EXPECT_EQ(parseConcept("A or B and C"), parseConcept("A or (B and C)"));
  EXPECT_EQ(parseConcept("forall R.A or B").kind(), ConceptKind::Or);
}

TEST(Parser, Assertions) {
  EXPECT_EQ(parseAssertion("R(a, b)").kind(), Assertion::Kind::Role);
  EXPECT_EQ(parseAssertion("a = b").kind(), Assertion::Kind::Equal);
  EXPECT_EQ(parseAssertion("a != b").kind(), Assertion::Kind::NotEqual);
  EXPECT_EQ(parseAssertion("(A or B)(a)").conceptOf(), parseConcept("A or B"));
}

TEST(Parser, Comments) {
  KnowledgeBase kb = parseKb("# nothing\nabox { A(a); # trailing\n }\n");
  EXPECT_EQ(kb.abox().size(), 1u);
}

TEST(Parser, ErrorsCarryPosition) {
  try {
    parseKb("abox {\n  A(a)\n}", "x.alcm");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.origin(), "x.alcm");
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 1u);
  }
  EXPECT_THROW(parseKb("tbox { A subclassof ; }"), ParseError);
  EXPECT_THROW(parseKb("mbox { a =m not A; }"), ParseError);
  EXPECT_THROW(parseKb("abox { A(a) ;"), ParseError);
  EXPECT_THROW(parseKb("box {}"), ParseError);
  EXPECT_THROW(parseConcept("A and"), ParseError);
}

TEST(Parser, RoundTrip) {
  for (const char* f : {"hydro.alcm", "hydro_equal.alcm", "graph_example.alcm", "cycles.alcm"}) {
    KnowledgeBase kb = parseKb(slurp(f));
    EXPECT_EQ(parseKb(printKb(kb)), kb) << f;
  }
  for (const KnowledgeBase& kb : alcm::testing::corpus(300, 9)) EXPECT_EQ(parseKb(printKb(kb)), kb) << printKb(kb);
}

TEST(Parser, Queries) {
  EXPECT_EQ(parseQuery("River sub not Lake").kind, Query::Kind::Subsumption);
  EXPECT_EQ(parseQuery("River(queguay)").kind, Query::Kind::Instance);
  EXPECT_EQ(parseQuery("a = b").kind, Query::Kind::Equality);
  EXPECT_EQ(parseQuery("a != b").kind, Query::Kind::Inequality);
  Query m = parseQuery("river =m River");
  EXPECT_EQ(m.kind, Query::Kind::Metamodelling);
  EXPECT_EQ(m.b.str(), "River");
  EXPECT_THROW(parseQuery("R(a, b)"), ParseError);
}
