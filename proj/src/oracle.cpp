#include "alcm/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "alcm/digraph.hpp"

namespace alcm {

int CompletionForest::find(int x) const {
  if (!nodes[x].root) return x;
  while (rep[x] != x) x = rep[x];
  return x;
}

bool CompletionForest::notApprox(int x, int y) const {
  x = find(x);
  y = find(y);
  for (const auto& [a, b] : distinct) {
    int fa = find(a);
    int fb = find(b);
    if ((fa == x && fb == y) || (fa == y && fb == x)) return true;
  }
  return false;
}

bool CompletionForest::has(int x, Concept c) const { return containsSorted(nodes[x].label, c); }

bool CompletionForest::add(int x, Concept c) {
  auto& l = nodes[x].label;
  auto it = std::lower_bound(l.begin(), l.end(), c);
  if (it != l.end() && *it == c) return false;
  l.insert(it, c);
  return true;
}

int CompletionForest::nodeOf(Name individual) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].root && nodes[i].name == individual) return static_cast<int>(i);
  return -1;
}

CompletionForest initializeForest(const KnowledgeBase& kb) {
  CompletionForest f;
  f.tbox = nnfTbox(kb.tbox());
  for (Name a : kb.individuals()) {
    f.nodes.push_back({a, true, -1, {}});
    f.rep.push_back(static_cast<int>(f.rep.size()));
  }
  auto id = [&](Name a) { return f.nodeOf(a); };

  for (const auto& as : kb.abox()) {
    if (as.kind() != Assertion::Kind::Equal) continue;
    int x = f.find(id(as.first()));
    int y = f.find(id(as.second()));
    if (x == y) continue;
    if (f.nodes[y].name < f.nodes[x].name) std::swap(x, y);
    f.rep[y] = x;
  }
  for (const auto& as : nnfAbox(kb.abox())) {
    switch (as.kind()) {
      case Assertion::Kind::Concept:
        f.add(f.find(id(as.individual())), as.conceptOf());
        break;
      case Assertion::Kind::Role:
        f.edges.insert({f.find(id(as.first())), as.roleName(), f.find(id(as.second()))});
        break;
      case Assertion::Kind::NotEqual:
        f.distinct.insert({id(as.first()), id(as.second())});
        break;
      case Assertion::Kind::Equal:
        break;
    }
  }
  for (const auto& m : kb.mbox()) f.mbox.emplace_back(id(m.individual), m.conceptName);
  return f;
}

namespace {

Concept xorConcept(Name a, Name b) {
  Concept A = Concept::atom(a);
  Concept B = Concept::atom(b);
  return Concept::disj(Concept::conj(A, Concept::negation(B)), Concept::conj(B, Concept::negation(A)));
}

class Search {
 public:
  explicit Search(const OracleOptions& o) : options_(o) {}

  bool run(CompletionForest& f) {
    while (true) {
      if (clash(f)) return false;
      if (++steps_ > options_.budget) throw BudgetExhausted(options_.budget);
      if (deterministic(f)) continue;

      if (auto choice = orChoice(f)) {
        auto [x, c] = *choice;
        for (Concept d : {c.first(), c.second()}) {
          CompletionForest branch = f;
          branch.add(x, d);
          if (run(branch)) return true;
        }
        return false;
      }
      if (options_.metaRules) {
        if (auto pair = closeChoice(f)) {
          auto [x, y] = *pair;
          CompletionForest merged = f;
          merge(merged, x, y);
          if (run(merged)) return true;
          CompletionForest apart = f;
          apart.distinct.insert({x, y});
          return run(apart);
        }
      }
      return true;
    }
  }

  std::size_t steps() const { return steps_; }
  const std::string& lastClash() const { return lastClash_; }

 private:
  bool clash(const CompletionForest& f) {
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
      int x = static_cast<int>(i);
      if (!f.active(x)) continue;
      for (Concept c : f.nodes[x].label) {
        if (c.kind() == ConceptKind::Bot ||
            (c.kind() == ConceptKind::Not && f.has(x, c.operand()))) {
          lastClash_ = "clash at " + f.nodes[x].name.str();
          return true;
        }
      }
    }
    for (const auto& [a, b] : f.distinct) {
      if (f.find(a) == f.find(b)) {
        lastClash_ = "inequality " + f.nodes[a].name.str() + " != " + f.nodes[b].name.str();
        return true;
      }
    }
    if (options_.metaRules && !f.mbox.empty()) {
      Digraph<int> g;
      for (const auto& [a, _] : f.mbox) g.addVertex(f.find(a));
      for (const auto& [a, _] : f.mbox)
        for (const auto& [b, B] : f.mbox)
          if (f.has(f.find(a), Concept::atom(B))) g.addEdge(f.find(a), f.find(b));
      if (g.findCycle()) {
        lastClash_ = "circularity";
        return true;
      }
    }
    return false;
  }

  bool blocked(const CompletionForest& f, int x) const {
    if (!options_.blocking) return false;
    for (int z = x; z >= 0 && !f.nodes[z].root; z = f.nodes[z].parent) {
      for (int y = f.nodes[z].parent; y >= 0 && !f.nodes[y].root; y = f.nodes[y].parent) {
        const auto& lz = f.nodes[z].label;
        const auto& ly = f.nodes[y].label;
        if (std::includes(ly.begin(), ly.end(), lz.begin(), lz.end())) return true;
      }
    }
    return false;
  }

  bool deterministic(CompletionForest& f) {
    const int n = static_cast<int>(f.nodes.size());
    for (int x = 0; x < n; ++x) {
      if (!f.active(x)) continue;
      for (Concept c : f.tbox)
        if (f.add(x, c)) return true;
    }
    for (int x = 0; x < n; ++x) {
      if (!f.active(x)) continue;
      for (Concept c : std::vector<Concept>(f.nodes[x].label)) {
        if (c.kind() != ConceptKind::And) continue;
        bool changed = f.add(x, c.first());
        changed = f.add(x, c.second()) || changed;
        if (changed) return true;
      }
    }
    for (int x = 0; x < n; ++x) {
      if (!f.active(x)) continue;
      for (Concept c : std::vector<Concept>(f.nodes[x].label)) {
        if (c.kind() != ConceptKind::Forall) continue;
        for (const auto& [from, role, to] : f.edges)
          if (from == x && role == c.role() && f.add(to, c.filler())) return true;
      }
    }
    if (options_.metaRules) {
      for (const auto& [a, A] : f.mbox) {
        for (const auto& [b, B] : f.mbox) {
          if (A == B || f.find(a) != f.find(b)) continue;
          Concept l = Concept::disj(Concept::atom(A), Concept::negation(Concept::atom(B)));
          Concept r = Concept::disj(Concept::atom(B), Concept::negation(Concept::atom(A)));
          bool changed = false;
          for (Concept c : {l, r}) {
            if (containsSorted(f.tbox, c)) continue;
            f.tbox.insert(std::lower_bound(f.tbox.begin(), f.tbox.end(), c), c);
            changed = true;
          }
          if (changed) return true;
        }
      }
      for (const auto& [a, A] : f.mbox) {
        for (const auto& [b, B] : f.mbox) {
          if (!f.notApprox(a, b)) continue;
          Concept x1 = xorConcept(A, B);
          Concept x2 = xorConcept(B, A);
          bool witnessed = false;
          for (int z = 0; z < n && !witnessed; ++z)
            witnessed = f.active(z) && (f.has(z, x1) || f.has(z, x2));
          if (witnessed) continue;
          int z = static_cast<int>(f.nodes.size());
          f.nodes.push_back({freshName("z", f.created++), true, -1, {}});
          f.rep.push_back(z);
          f.add(z, x1);
          return true;
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      if (!f.active(x)) continue;
      for (Concept c : std::vector<Concept>(f.nodes[x].label)) {
        if (c.kind() != ConceptKind::Exists) continue;
        bool satisfied = false;
        for (const auto& [from, role, to] : f.edges)
          if (from == x && role == c.role() && f.has(to, c.filler())) satisfied = true;
        if (satisfied || blocked(f, x)) continue;
        int y = static_cast<int>(f.nodes.size());
        f.nodes.push_back({freshName("v", f.created++), false, x, {}});
        f.rep.push_back(y);
        f.add(y, c.filler());
        f.edges.insert({x, c.role(), y});
        return true;
      }
    }
    return false;
  }

  std::optional<std::pair<int, Concept>> orChoice(const CompletionForest& f) const {
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
      int x = static_cast<int>(i);
      if (!f.active(x)) continue;
      for (Concept c : f.nodes[x].label)
        if (c.kind() == ConceptKind::Or && !f.has(x, c.first()) && !f.has(x, c.second()))
          return std::make_pair(x, c);
    }
    return std::nullopt;
  }

  std::optional<std::pair<int, int>> closeChoice(const CompletionForest& f) const {
    std::vector<int> dom;
    for (const auto& [a, _] : f.mbox) dom.push_back(f.find(a));
    std::sort(dom.begin(), dom.end(), [&](int x, int y) { return f.nodes[x].name < f.nodes[y].name; });
    dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
    for (std::size_t i = 0; i < dom.size(); ++i)
      for (std::size_t j = i + 1; j < dom.size(); ++j)
        if (!f.notApprox(dom[i], dom[j])) return std::make_pair(dom[i], dom[j]);
    return std::nullopt;
  }

  static void merge(CompletionForest& f, int keep, int drop) {
    f.rep[drop] = keep;
    for (Concept c : f.nodes[drop].label) f.add(keep, c);
    f.nodes[drop].label.clear();
    std::set<std::tuple<int, Name, int>> edges;
    for (auto [from, role, to] : f.edges) {
      if (from == drop) from = keep;
      if (to == drop) to = keep;
      edges.insert({from, role, to});
    }
    f.edges = std::move(edges);
  }

  OracleOptions options_;
  std::size_t steps_ = 0;
  std::string lastClash_;
};

}  // namespace

OracleResult expandForest(CompletionForest forest, const OracleOptions& options) {
  Search s(options);
  OracleResult r;
  try {
    r.verdict = s.run(forest) ? Verdict::Consistent : Verdict::Inconsistent;
  } catch (const BudgetExhausted&) {
    r.verdict = Verdict::Unknown;
  }
  r.steps = s.steps();
  r.lastClash = s.lastClash();
  return r;
}

OracleResult decide(const KnowledgeBase& kb, const OracleOptions& options) {
  return expandForest(initializeForest(kb), options);
}

}  // namespace alcm
