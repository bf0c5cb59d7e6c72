#ifndef ALCM_REASONER_HPP_
#define ALCM_REASONER_HPP_

#include <string_view>

#include "alcm/engine.hpp"
#include "alcm/kb.hpp"
#include "alcm/query.hpp"

namespace alcm {

enum class Answer { True, False, Unknown };
std::string_view answerName(Answer a);

/// Inference services reduced to (in)consistency of an extended KB.
class Reasoner {
 public:
  explicit Reasoner(KnowledgeBase kb, EngineOptions options = {});

  const KnowledgeBase& kb() const { return kb_; }

  Verdict consistency() const;

  Answer entailsInstance(Concept c, Name a) const;
  Answer entailsSubsumption(Concept c, Concept d) const;
  Answer entailsEquality(Name a, Name b) const;
  Answer entailsInequality(Name a, Name b) const;
  Answer entailsMetamodelling(Name a, Name conceptName) const;
  /// Some individual a and some A in range(M) with K |= C(a) and K |= a =m A.
  Answer isMetaConcept(Concept c) const;

  Answer entails(const Query& q) const;

 private:
  Answer inconsistentWith(const KnowledgeBase& extra) const;

  KnowledgeBase kb_;
  EngineOptions options_;
};

}  // namespace alcm

#endif  // ALCM_REASONER_HPP_
