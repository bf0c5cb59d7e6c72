#ifndef ALCM_JUDGEMENT_HPP_
#define ALCM_JUDGEMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "alcm/concept.hpp"
#include "alcm/kb.hpp"

namespace alcm {

/// Node label of the and-or graph. All sets are kept sorted and duplicate
/// free, so equal labels compare equal member by member.
class Judgement {
 public:
  enum class Kind : std::uint8_t { Base, Variable, Absurdity };

  static Judgement absurdity();
  static Judgement base(std::vector<Concept> tbox, std::vector<Assertion> abox, std::vector<MboxAxiom> mbox);
  static Judgement variable(std::vector<Concept> tbox, std::vector<Concept> concepts);

  Kind kind() const { return kind_; }
  bool isBase() const { return kind_ == Kind::Base; }
  bool isVariable() const { return kind_ == Kind::Variable; }
  bool isAbsurdity() const { return kind_ == Kind::Absurdity; }

  const std::vector<Concept>& tbox() const { return tbox_; }
  const std::vector<Assertion>& abox() const { return abox_; }
  const std::vector<MboxAxiom>& mbox() const { return mbox_; }
  /// X of a variable judgement.
  const std::vector<Concept>& concepts() const { return concepts_; }

  bool contains(const Assertion& a) const;
  bool contains(Concept c) const;
  bool contains(const MboxAxiom& m) const;

  /// dom(Ab) ∪ dom(M), sorted.
  std::vector<Name> individuals() const;

  /// As a knowledge base: itself for base labels, ({C ≡ ⊤ | C ∈ T},
  /// {C(x#0) | C ∈ X}, ∅) for variable labels, {⊥(x#0)} for absurdity.
  KnowledgeBase asKb() const;

  std::size_t hash() const { return hash_; }
  bool operator==(const Judgement& o) const;
  std::string str() const;

 private:
  void rehash();

  Kind kind_ = Kind::Absurdity;
  std::vector<Concept> tbox_;
  std::vector<Assertion> abox_;
  std::vector<MboxAxiom> mbox_;
  std::vector<Concept> concepts_;
  std::size_t hash_ = 0;
};

void canonicalize(std::vector<Assertion>& abox);
void canonicalize(std::vector<MboxAxiom>& mbox);

}  // namespace alcm

template <>
struct std::hash<alcm::Judgement> {
  std::size_t operator()(const alcm::Judgement& j) const noexcept { return j.hash(); }
};

#endif  // ALCM_JUDGEMENT_HPP_
