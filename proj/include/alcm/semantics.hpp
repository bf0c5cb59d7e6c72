#ifndef ALCM_SEMANTICS_HPP_
#define ALCM_SEMANTICS_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alcm/concept.hpp"
#include "alcm/digraph.hpp"
#include "alcm/kb.hpp"
#include "alcm/names.hpp"

namespace alcm {

struct ElementNode;

/// A well-founded nested set over named atoms: either an atom or a finite
/// set of elements. Hash-consed with canonical member order, so extensional
/// equality is identity.
class Element {
 public:
  static Element atom(Name name);
  static Element atom(std::string_view name) { return atom(Name::intern(name)); }
  static Element set(std::vector<Element> members);

  bool isAtom() const;
  /// Atom name (atoms only).
  Name name() const;
  /// Members in canonical order (sets only).
  const std::vector<Element>& members() const;
  bool contains(Element e) const;

  std::uint32_t id() const;
  std::size_t rank() const;
  std::string str() const;

  friend bool operator==(Element a, Element b) { return a.node_ == b.node_; }
  /// Identity order (intern id). Use compareStructural for presentation.
  friend bool operator<(Element a, Element b) { return a.id() < b.id(); }
  static int compareStructural(Element a, Element b);

 private:
  explicit Element(const ElementNode* n) : node_(n) {}
  const ElementNode* node_;
};

/// Minimal n with e ∈ S_n when S_0 is the set of atoms occurring in e.
std::size_t rank(Element e);

using ElementSet = std::set<Element>;
using ElementPair = std::pair<Element, Element>;

struct Interpretation {
  ElementSet domain;
  std::map<Name, ElementSet> concepts;
  std::map<Name, std::set<ElementPair>> roles;
  std::map<Name, Element> individuals;

  /// Highest rank of a domain element.
  std::size_t depth() const;
};

/// C^I. Unknown atoms and roles denote the empty set.
ElementSet extension(const Interpretation& interp, Concept c);

class UnresolvedIndividual : public std::runtime_error {
 public:
  explicit UnresolvedIndividual(Name n) : std::runtime_error("unresolved individual '" + n.str() + "'") {}
};

struct ModelCheck {
  bool holds = true;
  /// Text of the first violated axiom, empty when `holds`.
  std::string violation;
  explicit operator bool() const { return holds; }
};

/// Whether `interp` is an ALCM model of `kb`. Throws UnresolvedIndividual
/// when the Abox or Mbox names an individual the interpretation does not map.
ModelCheck satisfiesKb(const Interpretation& interp, const KnowledgeBase& kb);

/// On a finite carrier, well-founded iff the edge relation has no cycle.
template <class V>
bool isWellFoundedRelation(const std::vector<V>& nodes, const std::vector<std::pair<V, V>>& edges) {
  Digraph<V> g;
  for (const auto& v : nodes) g.addVertex(v);
  for (const auto& [a, b] : edges) g.addEdge(a, b);
  return g.acyclic();
}

/// Model JSON: {"domain": [terms], "concepts": {name: [ids]},
/// "roles": {name: [[id, id]]}, "individuals": {name: id}} where a term is a
/// string (atom) or an array of terms (set) and ids index "domain".
std::string toModelJson(const Interpretation& interp);
Interpretation fromModelJson(const std::string& text);

}  // namespace alcm

#endif  // ALCM_SEMANTICS_HPP_
