#ifndef ALCM_ENGINE_HPP_
#define ALCM_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "alcm/judgement.hpp"
#include "alcm/kb.hpp"

namespace alcm {

enum class Rule : std::uint8_t {
  // variable judgements
  Bot,
  And,
  Or,
  Trans,
  // base judgements
  Bot1,
  Bot2,
  Bot3,
  AndP,
  OrP,
  Forall,
  TransP,
  Close,
  Eq,
  Neq,
};

std::string_view ruleName(Rule r);
bool isBottomRule(Rule r);

/// ∃R.C on a trans edge; for trans' also the individual a of (∃R.C)(a).
struct EdgeLabel {
  Concept existential;
  Name individual;

  bool operator==(const EdgeLabel&) const = default;
  std::string str() const;
};

struct RuleApplication {
  enum class Connective : std::uint8_t { And, Or };

  Rule rule = Rule::Bot;
  Connective connective = Connective::Or;
  Judgement premise;
  std::vector<Judgement> conclusions;
  /// Parallel to `conclusions`; set only for trans and trans'.
  std::vector<std::optional<EdgeLabel>> edgeLabels;
  std::string principal;
  /// close: the merge branch replaces `drop` by `keep`.
  Name keep;
  Name drop;
};

struct RootInfo {
  Judgement root;
  /// Every individual of the input mapped to its class representative.
  std::map<Name, Name> representative;
};

/// The root label Base(T0, A0, M0) for `kb`. Puts the KB into NNF itself.
RootInfo initializeRoot(const KnowledgeBase& kb);

std::optional<RuleApplication> applicableRule(const Judgement& j);

/// a -> b whenever B(a) ∈ abox and b =m B ∈ mbox, over dom(mbox). Returns
/// the individuals of a cycle, if any.
std::optional<std::vector<Name>> findCircularity(const std::vector<Assertion>& abox,
                                                 const std::vector<MboxAxiom>& mbox);
bool circular(const std::vector<Assertion>& abox, const std::vector<MboxAxiom>& mbox);

class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::size_t budget)
      : std::runtime_error("node budget of " + std::to_string(budget) + " exhausted") {}
};

using NodeId = std::uint32_t;

enum class NodeKind : std::uint8_t { And, Or, End, Absurdity };

struct Edge {
  NodeId target;
  std::optional<EdgeLabel> label;
};

struct GraphNode {
  Judgement label;
  NodeKind kind = NodeKind::End;
  std::optional<Rule> rule;
  std::string principal;
  std::vector<Edge> edges;
  Name keep;
  Name drop;

  /// End nodes count as and-nodes.
  bool isAnd() const { return kind == NodeKind::And || kind == NodeKind::End; }
};

class AndOrGraph {
 public:
  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const GraphNode& node(NodeId id) const { return nodes_[id]; }
  const std::vector<GraphNode>& nodes() const { return nodes_; }
  std::optional<NodeId> find(const Judgement& label) const;
  std::optional<NodeId> absurdity() const { return find(Judgement::absurdity()); }

 private:
  friend AndOrGraph buildGraph(const Judgement&, std::size_t);
  NodeId intern(const Judgement& label, std::size_t budget, bool& created);

  std::vector<GraphNode> nodes_;
  std::unordered_map<Judgement, NodeId> index_;
};

inline constexpr std::size_t kDefaultNodeBudget = std::size_t{1} << 20;

/// Worklist expansion in node-id order with global caching. Throws
/// BudgetExhausted once more than `nodeBudget` nodes would exist.
AndOrGraph buildGraph(const Judgement& root, std::size_t nodeBudget = kDefaultNodeBudget);

struct UnsatNodes {
  std::vector<bool> member;
  /// Children that put the node into the set: one for and-nodes, all of
  /// them for or-nodes.
  std::vector<std::vector<NodeId>> reason;

  bool contains(NodeId id) const { return member[id]; }
};

UnsatNodes unsatNodes(const AndOrGraph& g);

enum class Verdict : std::uint8_t { Consistent, Inconsistent, Unknown };
std::string_view verdictName(Verdict v);

struct Marking {
  std::vector<bool> member;
  /// Chosen child of every marked or-node.
  std::vector<std::optional<NodeId>> choice;

  bool contains(NodeId id) const { return member[id]; }
};

struct Refutation {
  /// Nodes of the refutation below the root, in discovery order.
  std::vector<NodeId> nodes;
  /// Bottom-rule nodes the refutation closes with.
  std::vector<NodeId> leaves;
  std::optional<std::vector<Name>> circularity;

  bool usesRule(const AndOrGraph& g, Rule r) const;
};

struct ConsistencyResult {
  Verdict verdict = Verdict::Unknown;
  std::string error;
  RootInfo root;
  std::shared_ptr<const AndOrGraph> graph;
  UnsatNodes unsat;
  std::optional<Marking> marking;
  std::optional<Refutation> refutation;
};

struct EngineOptions {
  std::size_t nodeBudget = kDefaultNodeBudget;
};

/// Never throws on budget exhaustion; the verdict is Unknown instead.
ConsistencyResult checkConsistency(const KnowledgeBase& kb, const EngineOptions& options = {});
Verdict decideJudgement(const Judgement& j, const EngineOptions& options = {});

Marking consistentMarking(const AndOrGraph& g, const UnsatNodes& unsat);
Refutation refutation(const AndOrGraph& g, const UnsatNodes& unsat);

/// One line per node in id order, "id kind rule principal -> children",
/// then "verdict <v>". The absurdity node is omitted.
void writeTrace(std::ostream& os, const AndOrGraph& g, Verdict verdict);
std::string traceString(const AndOrGraph& g, Verdict verdict);

struct GraphStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t orNodes = 0;
  std::size_t andNodes = 0;
  std::size_t endNodes = 0;
  std::map<std::string, std::size_t> rules;
};

GraphStats graphStats(const AndOrGraph& g);

}  // namespace alcm

#endif  // ALCM_ENGINE_HPP_
