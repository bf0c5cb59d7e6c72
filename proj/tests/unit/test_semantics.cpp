#include <gtest/gtest.h>

#include <random>

#include "alcm/parser.hpp"
#include "alcm/semantics.hpp"
#include "corpus.hpp"

using namespace alcm;

namespace {

Element at(const char* n) { return Element::atom(n); }

Interpretation hydroModel() {
  Interpretation I;
  Element q = at("queguay"), s = at("santaLucia"), r = at("deRocha"), d = at("delSauce");
  Element river = Element::set({q, s}), lake = Element::set({r, d});
  I.domain = {q, s, r, d, river, lake};
  I.concepts[Name::intern("River")] = {q, s};
  I.concepts[Name::intern("Lake")] = {r, d};
  I.concepts[Name::intern("HydrographicObject")] = {river, lake};
  for (auto [n, e] : {std::pair{"queguay", q}, {"santaLucia", s}, {"deRocha", r}, {"delSauce", d},
                      {"river", river}, {"lake", lake}})
    I.individuals.insert_or_assign(Name::intern(n), e);
  return I;
}

const char* kHydro = R"(
tbox { River and Lake subclassof bot; }
abox {
  HydrographicObject(river); HydrographicObject(lake);
  River(queguay); River(santaLucia); Lake(deRocha); Lake(delSauce);
}
mbox { river =m River; lake =m Lake; })";

Interpretation randomInterpretation(std::mt19937& rng) {
  Interpretation I;
  std::vector<Element> dom;
  for (int i = 0; i < 4; ++i) dom.push_back(Element::atom("e" + std::to_string(i)));
  I.domain.insert(dom.begin(), dom.end());
  std::bernoulli_distribution coin(0.4);
  for (const char* a : {"A", "B", "C", "D"})
    for (Element e : dom)
      if (coin(rng)) I.concepts[Name::intern(a)].insert(e);
  for (const char* r : {"R", "S"})
    for (Element x : dom)
      for (Element y : dom)
        if (coin(rng)) I.roles[Name::intern(r)].insert({x, y});
  return I;
}

}  // namespace

TEST(Elements, Rank) {
  Element a = at("a"), b = at("b");
  EXPECT_EQ(rank(a), 0u);
  EXPECT_EQ(rank(Element::set({a, b})), 1u);
  EXPECT_EQ(rank(Element::set({Element::set({a}), b})), 2u);
  EXPECT_EQ(rank(Element::set({})), 1u);
}

TEST(Elements, Extensional) {
  Element a = at("a"), b = at("b");
  EXPECT_EQ(Element::set({a, b}), Element::set({b, a, b}));
  EXPECT_NE(Element::set({a}), a);
  EXPECT_TRUE(Element::set({a, b}).contains(b));
}

TEST(Semantics, Extension) {
  Interpretation I = hydroModel();
  EXPECT_EQ(extension(I, parseConcept("River or Lake")).size(), 4u);
  EXPECT_TRUE(extension(I, parseConcept("River and Lake")).empty());
  EXPECT_EQ(extension(I, parseConcept("not HydrographicObject")).size(), 4u);
  EXPECT_EQ(extension(I, parseConcept("top")).size(), 6u);
}

TEST(Semantics, HydroModel) {
  KnowledgeBase kb = parseKb(kHydro);
  EXPECT_TRUE(satisfiesKb(hydroModel(), kb).holds);

  Interpretation bad = hydroModel();
  bad.individuals.insert_or_assign(Name::intern("river"), Element::set({at("queguay")}));
  bad.domain.insert(Element::set({at("queguay")}));
  ModelCheck m = satisfiesKb(bad, kb);
  EXPECT_FALSE(m.holds);
  EXPECT_FALSE(m.violation.empty());

  Interpretation missing = hydroModel();
  missing.individuals.erase(Name::intern("lake"));
  EXPECT_THROW(satisfiesKb(missing, kb), UnresolvedIndividual);
}

TEST(Semantics, EqualityNeedsEqualSets) {
  // c and d name the same element, so the concepts they stand for must coincide.
  KnowledgeBase kb = parseKb("abox { c = d; A(x); } mbox { c =m A; d =m B; }");
  Interpretation I;
  Element x = at("x"), s = Element::set({x});
  I.domain = {x, s};
  I.concepts[Name::intern("A")] = {x};
  I.concepts[Name::intern("B")] = {x};
  I.individuals = {{Name::intern("c"), s}, {Name::intern("d"), s}, {Name::intern("x"), x}};
  EXPECT_TRUE(satisfiesKb(I, kb).holds);
  I.concepts[Name::intern("B")] = {};
  EXPECT_FALSE(satisfiesKb(I, kb).holds);
}

TEST(Semantics, NnfPreservesExtension) {
  std::mt19937 rng(3);
  alcm::testing::KbGenerator gen(17);
  for (int i = 0; i < 300; ++i) {
    Interpretation I = randomInterpretation(rng);
    Concept c = gen.randomConcept(4), d = gen.randomConcept(3);
    EXPECT_EQ(extension(I, c), extension(I, nnf(c))) << c;
    EXPECT_EQ(extension(I, Concept::negation(Concept::conj(c, d))),
              extension(I, Concept::disj(Concept::negation(c), Concept::negation(d))));
  }
}

TEST(Semantics, InvariantUnderRenaming) {
  // Renaming atoms of the domain is an isomorphism; truth of a KB is unchanged.
  std::mt19937 rng(8);
  alcm::testing::KbGenerator gen(21);
  for (int i = 0; i < 200; ++i) {
    KnowledgeBase kb;
    kb.add(TboxAxiom::subsumption(gen.randomConcept(2), gen.randomConcept(3)));
    if (i % 2) kb.add(TboxAxiom::equivalence(gen.randomConcept(1), gen.randomConcept(2)));
    Interpretation I = randomInterpretation(rng);
    Interpretation J;
    auto rename = [](Element e) { return Element::atom("r_" + e.name().str()); };
    for (Element e : I.domain) J.domain.insert(rename(e));
    for (const auto& [n, ext] : I.concepts)
      for (Element e : ext) J.concepts[n].insert(rename(e));
    for (const auto& [n, ext] : I.roles)
      for (auto [x, y] : ext) J.roles[n].insert({rename(x), rename(y)});
    EXPECT_EQ(satisfiesKb(I, kb).holds, satisfiesKb(J, kb).holds);
  }
}

TEST(Semantics, WellFounded) {
  std::vector<int> v{1, 2, 3};
  EXPECT_TRUE(isWellFoundedRelation(v, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}));
  EXPECT_FALSE(isWellFoundedRelation(v, std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 1}}));
  EXPECT_FALSE(isWellFoundedRelation(v, std::vector<std::pair<int, int>>{{2, 2}}));
}

TEST(ModelJson, RoundTrip) {
  Interpretation I = hydroModel();
  I.roles[Name::intern("flowsInto")].insert({at("queguay"), at("deRocha")});
  std::string text = toModelJson(I);
  Interpretation J = fromModelJson(text);
  EXPECT_EQ(J.domain, I.domain);
  EXPECT_EQ(J.concepts, I.concepts);
  EXPECT_EQ(J.roles, I.roles);
  EXPECT_EQ(J.individuals, I.individuals);
  EXPECT_EQ(toModelJson(J), text);
  EXPECT_EQ(I.depth(), 1u);
}
