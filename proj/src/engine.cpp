#include "alcm/engine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "alcm/digraph.hpp"

namespace alcm {

std::string_view ruleName(Rule r) {
  switch (r) {
    case Rule::Bot: return "bot";
    case Rule::And: return "and";
    case Rule::Or: return "or";
    case Rule::Trans: return "trans";
    case Rule::Bot1: return "bot1";
    case Rule::Bot2: return "bot2";
    case Rule::Bot3: return "bot3";
    case Rule::AndP: return "and'";
    case Rule::OrP: return "or'";
    case Rule::Forall: return "forall";
    case Rule::TransP: return "trans'";
    case Rule::Close: return "close";
    case Rule::Eq: return "=";
    case Rule::Neq: return "!=";
  }
  return "?";
}

bool isBottomRule(Rule r) { return r == Rule::Bot || r == Rule::Bot1 || r == Rule::Bot2 || r == Rule::Bot3; }

std::string EdgeLabel::str() const {
  if (!individual.valid()) return existential.str();
  return Assertion::member(existential, individual).str();
}

std::string_view verdictName(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Inconsistent: return "inconsistent";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// initialization

namespace {

struct UnionFind {
  std::map<Name, Name> parent;

  Name find(Name a) {
    auto it = parent.find(a);
    if (it == parent.end()) {
      parent.emplace(a, a);
      return a;
    }
    if (it->second == a) return a;
    Name r = find(it->second);
    parent[a] = r;
    return r;
  }

  void unite(Name a, Name b) {
    Name ra = find(a);
    Name rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
  }
};

}  // namespace

RootInfo initializeRoot(const KnowledgeBase& kb) {
  std::vector<Concept> tbox = nnfTbox(kb.tbox());

  UnionFind uf;
  for (Name a : kb.individuals()) uf.find(a);
  std::vector<Name> merged;
  for (const auto& as : kb.abox()) {
    if (as.kind() != Assertion::Kind::Equal) continue;
    uf.unite(as.first(), as.second());
    merged.push_back(as.first());
  }

  RootInfo info;
  for (Name a : kb.individuals()) info.representative[a] = uf.find(a);
  auto rep = [&](Name a) { return info.representative.at(a); };

  std::vector<Assertion> abox;
  for (const auto& as : nnfAbox(kb.abox())) {
    switch (as.kind()) {
      case Assertion::Kind::Concept:
        abox.push_back(Assertion::member(as.conceptOf(), rep(as.individual())));
        break;
      case Assertion::Kind::Role:
        abox.push_back(Assertion::role(as.roleName(), rep(as.first()), rep(as.second())));
        break;
      case Assertion::Kind::NotEqual:
        abox.push_back(Assertion::notEqual(rep(as.first()), rep(as.second())));
        break;
      case Assertion::Kind::Equal:
        break;
    }
  }
  std::vector<MboxAxiom> mbox;
  for (const auto& m : kb.mbox()) mbox.push_back({rep(m.individual), m.conceptName});

  std::vector<Name> dom = individualsOf(abox);
  for (const auto& m : mbox) dom.push_back(m.individual);
  for (Name a : merged) dom.push_back(rep(a));
  std::sort(dom.begin(), dom.end());
  dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
  for (Concept c : tbox)
    for (Name a : dom) abox.push_back(Assertion::member(c, a));

  info.root = Judgement::base(std::move(tbox), std::move(abox), std::move(mbox));
  return info;
}

// ---------------------------------------------------------------------------
// circularity

std::optional<std::vector<Name>> findCircularity(const std::vector<Assertion>& abox,
                                                 const std::vector<MboxAxiom>& mbox) {
  if (mbox.empty()) return std::nullopt;
  std::map<Name, std::vector<Name>> byConcept;
  Digraph<Name> g;
  for (const auto& m : mbox) {
    byConcept[m.conceptName].push_back(m.individual);
    g.addVertex(m.individual);
  }
  for (const auto& as : abox) {
    if (as.kind() != Assertion::Kind::Concept || !as.conceptOf().isAtom()) continue;
    if (!g.adjacency().count(as.individual())) continue;
    auto it = byConcept.find(as.conceptOf().name());
    if (it == byConcept.end()) continue;
    for (Name b : it->second) g.addEdge(as.individual(), b);
  }
  return g.findCycle();
}

bool circular(const std::vector<Assertion>& abox, const std::vector<MboxAxiom>& mbox) {
  return findCircularity(abox, mbox).has_value();
}

// ---------------------------------------------------------------------------
// rules

namespace {

std::string joinNames(const std::vector<Name>& v, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].str();
  }
  return s;
}

Concept xorConcept(Name a, Name b) {
  Concept A = Concept::atom(a);
  Concept B = Concept::atom(b);
  return Concept::disj(Concept::conj(A, Concept::negation(B)), Concept::conj(Concept::negation(A), B));
}

RuleApplication unary(Rule r, const Judgement& premise, Judgement conclusion, std::string principal) {
  RuleApplication app;
  app.rule = r;
  app.connective = RuleApplication::Connective::Or;
  app.premise = premise;
  app.conclusions.push_back(std::move(conclusion));
  app.edgeLabels.resize(1);
  app.principal = std::move(principal);
  return app;
}

RuleApplication binary(Rule r, const Judgement& premise, Judgement left, Judgement right, std::string principal) {
  RuleApplication app = unary(r, premise, std::move(left), std::move(principal));
  app.conclusions.push_back(std::move(right));
  app.edgeLabels.resize(2);
  return app;
}

template <class T>
std::vector<T> with(std::vector<T> v, std::initializer_list<T> extra) {
  v.insert(v.end(), extra);
  return v;
}

std::vector<Concept> without(const std::vector<Concept>& v, Concept c) {
  std::vector<Concept> out;
  out.reserve(v.size());
  for (Concept x : v)
    if (!(x == c)) out.push_back(x);
  return out;
}

std::optional<RuleApplication> variableRule(const Judgement& j) {
  const auto& X = j.concepts();
  const auto& T = j.tbox();

  for (Concept c : X) {
    if (c.kind() == ConceptKind::Bot) return unary(Rule::Bot, j, Judgement::absurdity(), "bot");
    if (c.kind() == ConceptKind::Not && j.contains(c.operand()))
      return unary(Rule::Bot, j, Judgement::absurdity(), c.operand().str() + ", " + c.str());
  }
  for (Concept c : X) {
    if (c.kind() != ConceptKind::And) continue;
    return unary(Rule::And, j, Judgement::variable(T, with(without(X, c), {c.first(), c.second()})), c.str());
  }
  for (Concept c : X) {
    if (c.kind() != ConceptKind::Or) continue;
    auto rest = without(X, c);
    return binary(Rule::Or, j, Judgement::variable(T, with(rest, {c.first()})),
                  Judgement::variable(T, with(rest, {c.second()})), c.str());
  }

  RuleApplication app;
  app.rule = Rule::Trans;
  app.connective = RuleApplication::Connective::And;
  app.premise = j;
  std::string principal;
  for (Concept c : X) {
    if (c.kind() != ConceptKind::Exists) continue;
    std::vector<Concept> next = T;
    next.push_back(c.filler());
    for (Concept d : X)
      if (d.kind() == ConceptKind::Forall && d.role() == c.role()) next.push_back(d.filler());
    app.conclusions.push_back(Judgement::variable(T, std::move(next)));
    app.edgeLabels.push_back(EdgeLabel{c, Name()});
    if (!principal.empty()) principal += ", ";
    principal += c.str();
  }
  if (app.conclusions.empty()) return std::nullopt;
  app.principal = std::move(principal);
  return app;
}

std::optional<RuleApplication> baseRule(const Judgement& j) {
  const auto& T = j.tbox();
  const auto& Ab = j.abox();
  const auto& M = j.mbox();
  auto has = [&](Concept c, Name a) { return j.contains(Assertion::member(c, a)); };
  auto extend = [&](std::initializer_list<Assertion> extra) {
    return Judgement::base(T, with(Ab, extra), M);
  };

  // bottom rules
  for (const auto& as : Ab) {
    if (as.kind() != Assertion::Kind::Concept) continue;
    Concept c = as.conceptOf();
    if (c.kind() == ConceptKind::Bot) return unary(Rule::Bot1, j, Judgement::absurdity(), as.str());
    if (c.kind() == ConceptKind::Not && c.operand().isAtom() && has(c.operand(), as.individual()))
      return unary(Rule::Bot1, j, Judgement::absurdity(),
                   Assertion::member(c.operand(), as.individual()).str() + ", " + as.str());
  }
  for (const auto& as : Ab)
    if (as.kind() == Assertion::Kind::NotEqual && as.first() == as.second())
      return unary(Rule::Bot2, j, Judgement::absurdity(), as.str());
  if (auto cycle = findCircularity(Ab, M))
    return unary(Rule::Bot3, j, Judgement::absurdity(), joinNames(*cycle, " -> "));

  // unary rules
  for (const auto& as : Ab) {
    if (as.kind() != Assertion::Kind::Concept || as.conceptOf().kind() != ConceptKind::And) continue;
    Concept c = as.conceptOf();
    Name a = as.individual();
    if (has(c.first(), a) && has(c.second(), a)) continue;
    return unary(Rule::AndP, j, extend({Assertion::member(c.first(), a), Assertion::member(c.second(), a)}), as.str());
  }
  for (const auto& as : Ab) {
    if (as.kind() != Assertion::Kind::Concept || as.conceptOf().kind() != ConceptKind::Forall) continue;
    Concept c = as.conceptOf();
    Name a = as.individual();
    for (const auto& r : Ab) {
      if (r.kind() != Assertion::Kind::Role || r.roleName() != c.role() || r.first() != a) continue;
      if (has(c.filler(), r.second())) continue;
      return unary(Rule::Forall, j, extend({Assertion::member(c.filler(), r.second())}), as.str() + ", " + r.str());
    }
  }
  for (std::size_t i = 0; i + 1 < M.size(); ++i) {
    if (M[i].individual != M[i + 1].individual) continue;
    Concept A = Concept::atom(M[i].conceptName);
    Concept B = Concept::atom(M[i + 1].conceptName);
    Concept l = Concept::disj(A, Concept::negation(B));
    Concept r = Concept::disj(B, Concept::negation(A));
    Concept both = Concept::conj(l, r);
    std::vector<Concept> tbox = with(T, {l, r});
    std::vector<Assertion> abox = Ab;
    for (Name d : j.individuals()) abox.push_back(Assertion::member(both, d));
    std::vector<MboxAxiom> mbox = M;
    mbox.erase(mbox.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    return unary(Rule::Eq, j, Judgement::base(std::move(tbox), std::move(abox), std::move(mbox)),
                 M[i].str() + ", " + M[i + 1].str());
  }
  auto metaOf = [&](Name a) -> std::optional<Name> {
    auto it = std::lower_bound(M.begin(), M.end(), MboxAxiom{a, Name()},
                               [](const MboxAxiom& x, const MboxAxiom& y) { return x.individual < y.individual; });
    if (it == M.end() || it->individual != a) return std::nullopt;
    return it->conceptName;
  };
  for (const auto& as : Ab) {
    if (as.kind() != Assertion::Kind::NotEqual || as.first() == as.second()) continue;
    auto A = metaOf(as.first());
    auto B = metaOf(as.second());
    if (!A || !B) continue;
    Concept x = xorConcept(*A, *B);
    bool witnessed = std::any_of(Ab.begin(), Ab.end(), [&](const Assertion& y) {
      return y.kind() == Assertion::Kind::Concept && y.conceptOf() == x;
    });
    if (witnessed) continue;
    std::vector<Name> used = j.individuals();
    std::size_t k = 0;
    while (std::binary_search(used.begin(), used.end(), freshName("fresh", k))) ++k;
    Name d0 = freshName("fresh", k);
    std::vector<Assertion> abox = Ab;
    abox.push_back(Assertion::member(x, d0));
    for (Concept c : T) abox.push_back(Assertion::member(c, d0));
    return unary(Rule::Neq, j, Judgement::base(T, std::move(abox), M), as.str());
  }

  // or-rules
  for (const auto& as : Ab) {
    if (as.kind() != Assertion::Kind::Concept || as.conceptOf().kind() != ConceptKind::Or) continue;
    Concept c = as.conceptOf();
    Name a = as.individual();
    if (has(c.first(), a) || has(c.second(), a)) continue;
    return binary(Rule::OrP, j, extend({Assertion::member(c.first(), a)}), extend({Assertion::member(c.second(), a)}),
                  as.str());
  }
  std::vector<Name> dom = individualsOf(M);
  for (std::size_t x = 0; x < dom.size(); ++x) {
    for (std::size_t y = x + 1; y < dom.size(); ++y) {
      Name a = dom[x];
      Name b = dom[y];
      if (j.contains(Assertion::notEqual(a, b))) continue;
      RuleApplication app = binary(Rule::Close, j,
                                   Judgement::base(T, substituteIndividual(Ab, a, b), substituteIndividual(M, a, b)),
                                   extend({Assertion::notEqual(a, b)}), a.str() + ", " + b.str());
      app.keep = a;
      app.drop = b;
      return app;
    }
  }

  // trans'
  RuleApplication app;
  app.rule = Rule::TransP;
  app.connective = RuleApplication::Connective::And;
  app.premise = j;
  std::string principal;
  for (const auto& as : Ab) {
    if (as.kind() != Assertion::Kind::Concept || as.conceptOf().kind() != ConceptKind::Exists) continue;
    Concept c = as.conceptOf();
    Name a = as.individual();
    std::vector<Concept> next = T;
    next.push_back(c.filler());
    for (const auto& f : Ab) {
      if (f.kind() == Assertion::Kind::Concept && f.individual() == a && f.conceptOf().kind() == ConceptKind::Forall &&
          f.conceptOf().role() == c.role())
        next.push_back(f.conceptOf().filler());
    }
    app.conclusions.push_back(Judgement::variable(T, std::move(next)));
    app.edgeLabels.push_back(EdgeLabel{c, a});
    if (!principal.empty()) principal += ", ";
    principal += as.str();
  }
  if (app.conclusions.empty()) return std::nullopt;
  app.principal = std::move(principal);
  return app;
}

}  // namespace

std::optional<RuleApplication> applicableRule(const Judgement& j) {
  switch (j.kind()) {
    case Judgement::Kind::Base:
      return baseRule(j);
    case Judgement::Kind::Variable:
      return variableRule(j);
    case Judgement::Kind::Absurdity:
      break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// graph

std::optional<NodeId> AndOrGraph::find(const Judgement& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId AndOrGraph::intern(const Judgement& label, std::size_t budget, bool& created) {
  if (auto it = index_.find(label); it != index_.end()) {
    created = false;
    return it->second;
  }
  if (nodes_.size() >= budget) throw BudgetExhausted(budget);
  auto id = static_cast<NodeId>(nodes_.size());
  GraphNode n;
  n.label = label;
  n.kind = label.isAbsurdity() ? NodeKind::Absurdity : NodeKind::End;
  nodes_.push_back(std::move(n));
  index_.emplace(label, id);
  created = true;
  return id;
}

AndOrGraph buildGraph(const Judgement& root, std::size_t nodeBudget) {
  AndOrGraph g;
  bool created = false;
  g.intern(root, nodeBudget, created);
  for (NodeId v = 0; v < g.nodes_.size(); ++v) {
    if (g.nodes_[v].kind == NodeKind::Absurdity) continue;
    auto app = applicableRule(g.nodes_[v].label);
    if (!app) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < app->conclusions.size(); ++i)
      edges.push_back(Edge{g.intern(app->conclusions[i], nodeBudget, created), app->edgeLabels[i]});
    GraphNode& n = g.nodes_[v];
    n.kind = app->connective == RuleApplication::Connective::And ? NodeKind::And : NodeKind::Or;
    n.rule = app->rule;
    n.principal = std::move(app->principal);
    n.edges = std::move(edges);
    n.keep = app->keep;
    n.drop = app->drop;
  }
  return g;
}

UnsatNodes unsatNodes(const AndOrGraph& g) {
  const std::size_t n = g.size();
  UnsatNodes u;
  u.member.assign(n, false);
  u.reason.assign(n, {});

  std::vector<std::vector<NodeId>> children(n);
  std::vector<std::vector<NodeId>> parents(n);
  for (NodeId v = 0; v < n; ++v) {
    for (const auto& e : g.node(v).edges) children[v].push_back(e.target);
    std::sort(children[v].begin(), children[v].end());
    children[v].erase(std::unique(children[v].begin(), children[v].end()), children[v].end());
    for (NodeId w : children[v]) parents[w].push_back(v);
  }
  std::vector<std::size_t> pending(n);
  for (NodeId v = 0; v < n; ++v) pending[v] = children[v].size();

  std::deque<NodeId> queue;
  if (auto a = g.absurdity()) {
    u.member[*a] = true;
    queue.push_back(*a);
  }
  while (!queue.empty()) {
    NodeId w = queue.front();
    queue.pop_front();
    for (NodeId p : parents[w]) {
      if (u.member[p]) continue;
      const GraphNode& node = g.node(p);
      if (node.isAnd()) {
        u.reason[p] = {w};
      } else if (--pending[p] == 0) {
        u.reason[p] = children[p];
      } else {
        continue;
      }
      u.member[p] = true;
      queue.push_back(p);
    }
  }
  return u;
}

Marking consistentMarking(const AndOrGraph& g, const UnsatNodes& unsat) {
  Marking m;
  m.member.assign(g.size(), false);
  m.choice.assign(g.size(), std::nullopt);
  if (g.size() == 0 || unsat.contains(g.root())) return m;
  std::deque<NodeId> queue{g.root()};
  m.member[g.root()] = true;
  auto visit = [&](NodeId w) {
    if (!m.member[w]) {
      m.member[w] = true;
      queue.push_back(w);
    }
  };
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    const GraphNode& node = g.node(v);
    if (node.isAnd()) {
      for (const auto& e : node.edges) visit(e.target);
      continue;
    }
    std::optional<NodeId> best;
    for (const auto& e : node.edges)
      if (!unsat.contains(e.target) && (!best || e.target < *best)) best = e.target;
    m.choice[v] = best;
    if (best) visit(*best);
  }
  return m;
}

Refutation refutation(const AndOrGraph& g, const UnsatNodes& unsat) {
  Refutation r;
  if (g.size() == 0 || !unsat.contains(g.root())) return r;
  std::vector<bool> seen(g.size(), false);
  std::deque<NodeId> queue{g.root()};
  seen[g.root()] = true;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    const GraphNode& node = g.node(v);
    if (node.kind == NodeKind::Absurdity) continue;
    r.nodes.push_back(v);
    if (node.rule && isBottomRule(*node.rule)) {
      r.leaves.push_back(v);
      if (*node.rule == Rule::Bot3 && !r.circularity)
        r.circularity = findCircularity(node.label.abox(), node.label.mbox());
      continue;
    }
    for (NodeId w : unsat.reason[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      queue.push_back(w);
    }
  }
  return r;
}

bool Refutation::usesRule(const AndOrGraph& g, Rule rule) const {
  return std::any_of(leaves.begin(), leaves.end(), [&](NodeId v) { return g.node(v).rule == rule; });
}

ConsistencyResult checkConsistency(const KnowledgeBase& kb, const EngineOptions& options) {
  ConsistencyResult res;
  res.root = initializeRoot(kb);
  try {
    res.graph = std::make_shared<const AndOrGraph>(buildGraph(res.root.root, options.nodeBudget));
  } catch (const BudgetExhausted& e) {
    res.verdict = Verdict::Unknown;
    res.error = e.what();
    return res;
  }
  res.unsat = unsatNodes(*res.graph);
  if (res.unsat.contains(res.graph->root())) {
    res.verdict = Verdict::Inconsistent;
    res.refutation = refutation(*res.graph, res.unsat);
  } else {
    res.verdict = Verdict::Consistent;
    res.marking = consistentMarking(*res.graph, res.unsat);
  }
  return res;
}

Verdict decideJudgement(const Judgement& j, const EngineOptions& options) {
  if (j.isAbsurdity()) return Verdict::Inconsistent;
  try {
    AndOrGraph g = buildGraph(j, options.nodeBudget);
    return unsatNodes(g).contains(g.root()) ? Verdict::Inconsistent : Verdict::Consistent;
  } catch (const BudgetExhausted&) {
    return Verdict::Unknown;
  }
}

// ---------------------------------------------------------------------------
// trace and stats

namespace {

std::string_view kindName(NodeKind k) {
  switch (k) {
    case NodeKind::And: return "and";
    case NodeKind::Or: return "or";
    case NodeKind::End: return "end";
    case NodeKind::Absurdity: return "absurd";
  }
  return "?";
}

}  // namespace

void writeTrace(std::ostream& os, const AndOrGraph& g, Verdict verdict) {
  for (NodeId v = 0; v < g.size(); ++v) {
    const GraphNode& n = g.node(v);
    if (n.kind == NodeKind::Absurdity) continue;
    os << v << ' ' << kindName(n.kind) << ' ' << (n.rule ? ruleName(*n.rule) : "none") << ' '
       << (n.principal.empty() ? "-" : n.principal) << " ->";
    for (const auto& e : n.edges) os << ' ' << e.target;
    os << '\n';
  }
  os << "verdict " << verdictName(verdict) << '\n';
}

std::string traceString(const AndOrGraph& g, Verdict verdict) {
  std::ostringstream os;
  writeTrace(os, g, verdict);
  return os.str();
}

GraphStats graphStats(const AndOrGraph& g) {
  GraphStats s;
  s.nodes = g.size();
  for (const auto& n : g.nodes()) {
    s.edges += n.edges.size();
    switch (n.kind) {
      case NodeKind::And: ++s.andNodes; break;
      case NodeKind::Or: ++s.orNodes; break;
      case NodeKind::End: ++s.endNodes; break;
      case NodeKind::Absurdity: break;
    }
    if (n.rule) ++s.rules[std::string(ruleName(*n.rule))];
  }
  return s;
}

}  // namespace alcm
