#ifndef ALCM_MODEL_HPP_
#define ALCM_MODEL_HPP_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alcm/engine.hpp"
#include "alcm/semantics.hpp"

namespace alcm {

/// (Δ, L, E). Variables created during the build are named y#0, y#1, ...
struct RGraph {
  std::vector<Name> delta;
  std::map<Name, std::vector<Concept>> labels;
  std::map<Name, std::set<std::pair<Name, Name>>> edges;
  /// Elements that are individuals of the terminal Abox or Mbox.
  std::set<Name> individuals;

  const std::vector<Concept>& label(Name x) const;
  bool hasEdge(Name role, Name x, Name y) const;
};

/// v = v0 .. vk: or-nodes following the marking's choice up to the first
/// and-node.
std::vector<NodeId> saturationPath(const AndOrGraph& g, const Marking& m, NodeId v);

struct RGraphBuild {
  RGraph graph;
  /// End of the root's saturation path; its label is the KB the R-graph is
  /// saturated for.
  NodeId terminal = 0;
  std::map<Name, NodeId> f;
};

RGraphBuild buildRGraph(const AndOrGraph& g, const Marking& m);

struct SaturationViolation {
  /// "T1".."T6", "A1".."A4", "M1".."M4".
  std::string condition;
  std::string witness;
  std::string str() const { return condition + ": " + witness; }
};

std::vector<SaturationViolation> checkSaturated(const RGraph& r, const Judgement& terminal);

/// Name-domain interpretation: atoms for elements, A^I from labels, R^I = E(R).
Interpretation inducedInterpretation(const RGraph& r);

class CircularUnfolding : public std::runtime_error {
 public:
  CircularUnfolding() : std::runtime_error("meta-modelling membership relation is cyclic") {}
};

/// set(x) for every x ∈ Δ. Throws CircularUnfolding when ≺ has a cycle.
std::map<Name, Element> unfoldSetMap(const RGraph& r, const std::vector<MboxAxiom>& mbox);

/// The induced interpretation transported through set().
Interpretation unfoldSets(const RGraph& r, const std::vector<MboxAxiom>& mbox);

/// y ≺ x iff A ∈ L(y) and x =m A.
std::vector<std::pair<Name, Name>> precedesRelation(const RGraph& r, const std::vector<MboxAxiom>& mbox);

struct ExtractedModel {
  RGraphBuild build;
  std::map<Name, Element> set;
  /// Model of the original KB: terminal model plus every merged-away
  /// individual mapped to its representative's element.
  Interpretation model;
  /// Original individual -> element name in Δ.
  std::map<Name, Name> representative;
};

/// Requires a Consistent result.
ExtractedModel extractModel(const ConsistencyResult& result);

}  // namespace alcm

#endif  // ALCM_MODEL_HPP_
