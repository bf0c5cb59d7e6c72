#ifndef ALCM_KB_HPP_
#define ALCM_KB_HPP_

#include <compare>
#include <string>
#include <vector>

#include "alcm/concept.hpp"
#include "alcm/names.hpp"

namespace alcm {

struct TboxAxiom {
  enum class Kind : std::uint8_t { Subsumption, Equivalence };

  Kind kind = Kind::Subsumption;
  Concept lhs;
  Concept rhs;

  static TboxAxiom subsumption(Concept lhs, Concept rhs) { return {Kind::Subsumption, lhs, rhs}; }
  static TboxAxiom equivalence(Concept lhs, Concept rhs) { return {Kind::Equivalence, lhs, rhs}; }

  bool operator==(const TboxAxiom&) const = default;
  std::string str() const;
};

/// C(a), R(a,b), a = b or a != b. Inequalities are stored with their two
/// individuals in name order.
class Assertion {
 public:
  enum class Kind : std::uint8_t { Concept, Role, Equal, NotEqual };

  static Assertion member(Concept c, Name a);
  static Assertion role(Name r, Name a, Name b);
  static Assertion equal(Name a, Name b);
  static Assertion notEqual(Name a, Name b);

  Kind kind() const { return kind_; }
  Concept conceptOf() const { return concept_; }
  Name roleName() const { return role_; }
  Name first() const { return a_; }
  Name second() const { return b_; }
  /// The individual a concept assertion is about.
  Name individual() const { return a_; }

  bool operator==(const Assertion&) const = default;
  friend bool operator<(const Assertion& x, const Assertion& y) { return compare(x, y) < 0; }
  static int compare(const Assertion& x, const Assertion& y);

  std::string str() const;

 private:
  Kind kind_ = Kind::Concept;
  Concept concept_;
  Name role_;
  Name a_;
  Name b_;
};

struct MboxAxiom {
  Name individual;
  Name conceptName;

  bool operator==(const MboxAxiom&) const = default;
  friend bool operator<(const MboxAxiom& x, const MboxAxiom& y) {
    if (x.individual != y.individual) return x.individual < y.individual;
    return x.conceptName < y.conceptName;
  }
  std::string str() const;
};

/// (Tbox, Abox, Mbox). Sections keep insertion order and never hold
/// duplicates.
class KnowledgeBase {
 public:
  const std::vector<TboxAxiom>& tbox() const { return tbox_; }
  const std::vector<Assertion>& abox() const { return abox_; }
  const std::vector<MboxAxiom>& mbox() const { return mbox_; }

  void add(const TboxAxiom& axiom);
  void add(const Assertion& assertion);
  void add(const MboxAxiom& axiom);
  /// Union with another knowledge base.
  void add(const KnowledgeBase& other);

  /// Every individual named in the Abox or Mbox, sorted.
  std::vector<Name> individuals() const;
  std::vector<Name> mboxDomain() const;
  std::vector<Name> mboxRange() const;

  bool empty() const { return tbox_.empty() && abox_.empty() && mbox_.empty(); }
  bool operator==(const KnowledgeBase&) const = default;

 private:
  std::vector<TboxAxiom> tbox_;
  std::vector<Assertion> abox_;
  std::vector<MboxAxiom> mbox_;
};

/// NNF(¬C ⊔ D) for every C ⊑ D, both directions of every C ≡ D. Sorted and
/// without duplicates; ⊤ entries are dropped since they constrain nothing.
std::vector<Concept> nnfTbox(const std::vector<TboxAxiom>& tbox);

/// The Abox with every concept put into NNF.
std::vector<Assertion> nnfAbox(const std::vector<Assertion>& abox);

/// X[keep/drop]: replaces every occurrence of `drop` by `keep`. Result is
/// sorted and duplicate free.
std::vector<Assertion> substituteIndividual(const std::vector<Assertion>& abox, Name keep, Name drop);
std::vector<MboxAxiom> substituteIndividual(const std::vector<MboxAxiom>& mbox, Name keep, Name drop);

/// Individuals occurring in an Abox / Mbox, sorted.
std::vector<Name> individualsOf(const std::vector<Assertion>& abox);
std::vector<Name> individualsOf(const std::vector<MboxAxiom>& mbox);

}  // namespace alcm

#endif  // ALCM_KB_HPP_
