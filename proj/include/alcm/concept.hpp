#ifndef ALCM_CONCEPT_HPP_
#define ALCM_CONCEPT_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "alcm/names.hpp"

namespace alcm {

// Declaration order is the tag order of the concept total order.
enum class ConceptKind : std::uint8_t { Top, Bot, Atom, Not, And, Or, Exists, Forall };

struct ConceptNode;

/// Hash-consed ALC concept. Structurally equal concepts share one node, so
/// `==` is a pointer comparison. Nodes are immutable and live for the whole
/// process.
class Concept {
 public:
  Concept();  // ⊤

  static Concept top();
  static Concept bot();
  static Concept atom(Name name);
  static Concept atom(std::string_view name) { return atom(Name::intern(name)); }
  static Concept negation(Concept c);
  static Concept conj(Concept lhs, Concept rhs);
  static Concept disj(Concept lhs, Concept rhs);
  static Concept exists(Name role, Concept filler);
  static Concept forall(Name role, Concept filler);

  ConceptKind kind() const;
  /// Atom name, or the role of a quantifier.
  Name name() const;
  Name role() const { return name(); }
  /// Operand of ¬, left of ⊓/⊔, filler of ∃/∀.
  Concept first() const;
  Concept second() const;
  Concept operand() const { return first(); }
  Concept filler() const { return first(); }

  bool isAtom() const { return kind() == ConceptKind::Atom; }
  /// A or ¬A.
  bool isLiteral() const;
  bool isNnf() const;

  /// Intern id; stable within a process, used for hashing only.
  std::uint32_t id() const;
  /// Number of symbols.
  std::size_t length() const;

  std::string str() const;

  friend bool operator==(Concept a, Concept b) { return a.node_ == b.node_; }
  /// Structural total order: tag, then children, then names.
  friend bool operator<(Concept a, Concept b) { return compare(a, b) < 0; }
  static int compare(Concept a, Concept b);

 private:
  explicit Concept(const ConceptNode* node) : node_(node) {}
  static Concept make(ConceptKind kind, Name name, const ConceptNode* first, const ConceptNode* second);
  const ConceptNode* node_;
};

std::ostream& operator<<(std::ostream& os, Concept c);

/// Negation normal form, with ⊥ disjuncts and ⊤ conjuncts dropped.
Concept nnf(Concept c);

/// sc(C): the subconcept closure, sorted.
std::vector<Concept> subconcepts(Concept c);

/// Sorts under the concept total order and removes duplicates.
void canonicalize(std::vector<Concept>& concepts);
bool containsSorted(const std::vector<Concept>& sorted, Concept c);

}  // namespace alcm

template <>
struct std::hash<alcm::Concept> {
  std::size_t operator()(alcm::Concept c) const noexcept { return c.id(); }
};

#endif  // ALCM_CONCEPT_HPP_
