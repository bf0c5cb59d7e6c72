#ifndef ALCM_ORACLE_HPP_
#define ALCM_ORACLE_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alcm/engine.hpp"
#include "alcm/kb.hpp"

namespace alcm {

/// Completion forest of the standard ALCM tableau. Root nodes are
/// individuals (input or created by the inequality rule); the rest are
/// variables with a parent pointer.
struct CompletionForest {
  struct Node {
    Name name;
    bool root = true;
    int parent = -1;
    std::vector<Concept> label;
  };

  std::vector<Node> nodes;
  /// (from, role, to) between representatives and variables.
  std::set<std::tuple<int, Name, int>> edges;
  /// ≈ as a union-find forest over root nodes.
  std::vector<int> rep;
  /// ≉ pairs; compared through `find`.
  std::set<std::pair<int, int>> distinct;
  std::vector<Concept> tbox;
  std::vector<std::pair<int, Name>> mbox;
  std::size_t created = 0;

  int find(int x) const;
  bool active(int x) const { return find(x) == x; }
  bool notApprox(int x, int y) const;
  bool has(int x, Concept c) const;
  bool add(int x, Concept c);
  int nodeOf(Name individual) const;
};

CompletionForest initializeForest(const KnowledgeBase& kb);

struct OracleOptions {
  bool blocking = true;
  bool metaRules = true;
  /// Rule applications over the whole search.
  std::size_t budget = 200000;
};

struct OracleResult {
  Verdict verdict = Verdict::Unknown;
  std::size_t steps = 0;
  /// Why the last closed branch failed, e.g. a circularity.
  std::string lastClash;
};

OracleResult expandForest(CompletionForest forest, const OracleOptions& options = {});
OracleResult decide(const KnowledgeBase& kb, const OracleOptions& options = {});

}  // namespace alcm

#endif  // ALCM_ORACLE_HPP_
