#include "alcm/reasoner.hpp"

namespace alcm {

std::string_view answerName(Answer a) {
  switch (a) {
    case Answer::True: return "true";
    case Answer::False: return "false";
    case Answer::Unknown: return "unknown";
  }
  return "unknown";
}

Reasoner::Reasoner(KnowledgeBase kb, EngineOptions options) : kb_(std::move(kb)), options_(options) {}

Verdict Reasoner::consistency() const { return checkConsistency(kb_, options_).verdict; }

Answer Reasoner::inconsistentWith(const KnowledgeBase& extra) const {
  KnowledgeBase k = kb_;
  k.add(extra);
  switch (checkConsistency(k, options_).verdict) {
    case Verdict::Inconsistent: return Answer::True;
    case Verdict::Consistent: return Answer::False;
    case Verdict::Unknown: break;
  }
  return Answer::Unknown;
}

Answer Reasoner::entailsInstance(Concept c, Name a) const {
  KnowledgeBase extra;
  extra.add(Assertion::member(nnf(Concept::negation(c)), a));
  return inconsistentWith(extra);
}

Answer Reasoner::entailsSubsumption(Concept c, Concept d) const {
  KnowledgeBase extra;
  extra.add(Assertion::member(Concept::conj(c, nnf(Concept::negation(d))), freshName("x", 0)));
  return inconsistentWith(extra);
}

Answer Reasoner::entailsEquality(Name a, Name b) const {
  KnowledgeBase extra;
  extra.add(Assertion::notEqual(a, b));
  return inconsistentWith(extra);
}

Answer Reasoner::entailsInequality(Name a, Name b) const {
  KnowledgeBase extra;
  extra.add(Assertion::equal(a, b));
  return inconsistentWith(extra);
}

Answer Reasoner::entailsMetamodelling(Name a, Name conceptName) const {
  Name b = freshName("b", 0);
  KnowledgeBase extra;
  extra.add(Assertion::notEqual(a, b));
  extra.add(MboxAxiom{b, conceptName});
  return inconsistentWith(extra);
}

Answer Reasoner::isMetaConcept(Concept c) const {
  bool unknown = false;
  std::vector<Name> range = kb_.mboxRange();
  if (range.empty()) return Answer::False;
  for (Name a : kb_.individuals()) {
    Answer inst = entailsInstance(c, a);
    if (inst == Answer::False) continue;
    for (Name A : range) {
      Answer meta = entailsMetamodelling(a, A);
      if (inst == Answer::True && meta == Answer::True) return Answer::True;
      if (meta != Answer::False) unknown = true;
    }
    if (inst == Answer::Unknown) unknown = true;
  }
  return unknown ? Answer::Unknown : Answer::False;
}

Answer Reasoner::entails(const Query& q) const {
  switch (q.kind) {
    case Query::Kind::Consistency:
      switch (consistency()) {
        case Verdict::Consistent: return Answer::True;
        case Verdict::Inconsistent: return Answer::False;
        case Verdict::Unknown: return Answer::Unknown;
      }
      break;
    case Query::Kind::Subsumption: return entailsSubsumption(q.lhs, q.rhs);
    case Query::Kind::Instance: return entailsInstance(q.lhs, q.a);
    case Query::Kind::Equality: return entailsEquality(q.a, q.b);
    case Query::Kind::Inequality: return entailsInequality(q.a, q.b);
    case Query::Kind::Metamodelling: return entailsMetamodelling(q.a, q.b);
    case Query::Kind::MetaConcept: return isMetaConcept(q.lhs);
  }
  return Answer::Unknown;
}

}  // namespace alcm
