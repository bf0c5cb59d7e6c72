#include "corpus.hpp"

namespace alcm::testing {

namespace {
const char* const kAtoms[] = {"A", "B", "C", "D"};
const char* const kRoles[] = {"R", "S"};
const char* const kIndividuals[] = {"a", "b", "c", "d"};
}  // namespace

Name KbGenerator::atomName() { return Name::intern(kAtoms[pick(bounds_.atoms)]); }
Name KbGenerator::individual() { return Name::intern(kIndividuals[pick(bounds_.individuals)]); }

Concept KbGenerator::randomConcept(int depth) {
  if (depth <= 0 || chance(0.35)) {
    if (chance(0.04)) return chance(0.5) ? Concept::top() : Concept::bot();
    Concept a = Concept::atom(atomName());
    return chance(0.4) ? Concept::negation(a) : a;
  }
  Name role = Name::intern(kRoles[pick(bounds_.roles)]);
  switch (pick(5)) {
    case 0: return Concept::conj(randomConcept(depth - 1), randomConcept(depth - 1));
    case 1: return Concept::disj(randomConcept(depth - 1), randomConcept(depth - 1));
    case 2: return Concept::exists(role, randomConcept(depth - 1));
    case 3: return Concept::forall(role, randomConcept(depth - 1));
    default: return Concept::negation(randomConcept(depth - 1));
  }
}

KnowledgeBase KbGenerator::generate(int mboxCount) {
  KnowledgeBase kb;
  int tbox = pick(bounds_.tbox + 1);
  for (int i = 0; i < tbox; ++i) {
    Concept lhs = randomConcept(1);
    Concept rhs = randomConcept(bounds_.depth - 1);
    kb.add(chance(0.15) ? TboxAxiom::equivalence(lhs, rhs) : TboxAxiom::subsumption(lhs, rhs));
  }
  int abox = 1 + pick(bounds_.abox);
  for (int i = 0; i < abox; ++i) {
    double r = std::uniform_real_distribution<double>(0, 1)(rng_);
    if (r < 0.65) {
      kb.add(Assertion::member(randomConcept(bounds_.depth), individual()));
    } else if (r < 0.85) {
      kb.add(Assertion::role(Name::intern(kRoles[pick(bounds_.roles)]), individual(), individual()));
    } else if (bounds_.equalities && r < 0.93) {
      kb.add(Assertion::notEqual(individual(), individual()));
    } else if (bounds_.equalities) {
      kb.add(Assertion::equal(individual(), individual()));
    } else {
      kb.add(Assertion::member(Concept::atom(atomName()), individual()));
    }
  }
  for (int i = 0; i < mboxCount; ++i) kb.add(MboxAxiom{individual(), atomName()});
  return kb;
}

KnowledgeBase KbGenerator::next() { return generate(pick(bounds_.mbox + 1)); }
KnowledgeBase KbGenerator::nextMboxFree() { return generate(0); }

std::vector<KnowledgeBase> corpus(std::size_t n, std::uint32_t seed, CorpusBounds bounds) {
  KbGenerator gen(seed, bounds);
  std::vector<KnowledgeBase> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(gen.next());
  return out;
}

}  // namespace alcm::testing
