#include "alcm/model.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "alcm/digraph.hpp"

namespace alcm {

const std::vector<Concept>& RGraph::label(Name x) const {
  static const std::vector<Concept> empty;
  auto it = labels.find(x);
  return it == labels.end() ? empty : it->second;
}

bool RGraph::hasEdge(Name role, Name x, Name y) const {
  auto it = edges.find(role);
  return it != edges.end() && it->second.count({x, y}) > 0;
}

std::vector<NodeId> saturationPath(const AndOrGraph& g, const Marking& m, NodeId v) {
  std::vector<NodeId> path{v};
  std::vector<bool> seen(g.size(), false);
  seen[v] = true;
  while (!g.node(path.back()).isAnd()) {
    auto next = m.choice[path.back()];
    if (!next) throw std::logic_error("saturation path leaves the marking");
    if (seen[*next]) throw std::logic_error("or-cycle in marking");
    seen[*next] = true;
    path.push_back(*next);
  }
  return path;
}

RGraphBuild buildRGraph(const AndOrGraph& g, const Marking& m) {
  RGraphBuild out;
  RGraph& r = out.graph;
  out.terminal = saturationPath(g, m, g.root()).back();
  const Judgement& k = g.node(out.terminal).label;

  std::deque<Name> unresolved;
  std::map<std::vector<Concept>, Name> byLabel;
  for (Name a : k.individuals()) {
    r.delta.push_back(a);
    r.individuals.insert(a);
    r.labels[a];
    out.f[a] = out.terminal;
    unresolved.push_back(a);
  }
  for (const auto& as : k.abox()) {
    if (as.kind() == Assertion::Kind::Concept) r.labels[as.individual()].push_back(as.conceptOf());
    if (as.kind() == Assertion::Kind::Role) r.edges[as.roleName()].insert({as.first(), as.second()});
  }
  for (Name a : r.delta) {
    canonicalize(r.labels[a]);
    byLabel.emplace(r.labels[a], a);
  }

  std::size_t fresh = 0;
  while (!unresolved.empty()) {
    Name x = unresolved.front();
    unresolved.pop_front();
    const std::vector<Concept> lx = r.labels[x];
    for (Concept c : lx) {
      if (c.kind() != ConceptKind::Exists) continue;
      const GraphNode& u = g.node(out.f.at(x));
      bool base = u.label.isBase();
      auto e = std::find_if(u.edges.begin(), u.edges.end(), [&](const Edge& e) {
        return e.label && e.label->existential == c && (!base || e.label->individual == x);
      });
      if (e == u.edges.end()) throw std::logic_error("no edge for " + c.str() + " at " + x.str());
      std::vector<NodeId> path = saturationPath(g, m, e->target);
      std::vector<Concept> y;
      for (NodeId w : path) {
        const auto& xs = g.node(w).label.concepts();
        y.insert(y.end(), xs.begin(), xs.end());
      }
      canonicalize(y);
      Name target;
      if (auto it = byLabel.find(y); it != byLabel.end()) {
        target = it->second;
      } else {
        target = freshName("y", fresh++);
        r.delta.push_back(target);
        r.labels[target] = y;
        out.f[target] = path.back();
        byLabel.emplace(y, target);
        unresolved.push_back(target);
      }
      r.edges[c.role()].insert({x, target});
    }
  }
  return out;
}

namespace {

bool xorWitness(Concept c, Name a, Name b) {
  if (c.kind() != ConceptKind::Or) return false;
  Concept A = Concept::atom(a);
  Concept B = Concept::atom(b);
  auto diff = [](Concept d, Concept p, Concept q) {
    if (d.kind() != ConceptKind::And) return false;
    Concept nq = Concept::negation(q);
    return (d.first() == p && d.second() == nq) || (d.first() == nq && d.second() == p);
  };
  return (diff(c.first(), A, B) && diff(c.second(), B, A)) || (diff(c.first(), B, A) && diff(c.second(), A, B));
}

}  // namespace

std::vector<SaturationViolation> checkSaturated(const RGraph& r, const Judgement& k) {
  std::vector<SaturationViolation> out;
  auto fail = [&](std::string cond, std::string witness) { out.push_back({std::move(cond), std::move(witness)}); };
  std::set<Name> delta(r.delta.begin(), r.delta.end());

  for (Name x : r.delta) {
    const auto& l = r.label(x);
    auto has = [&](Concept c) { return containsSorted(l, c); };
    for (Concept c : l) {
      switch (c.kind()) {
        case ConceptKind::Bot:
          fail("T1", "bot in L(" + x.str() + ")");
          break;
        case ConceptKind::Not:
          if (has(c.operand())) fail("T1", c.operand().str() + " and " + c.str() + " in L(" + x.str() + ")");
          break;
        case ConceptKind::And:
          if (!has(c.first()) || !has(c.second())) fail("T2", c.str() + " in L(" + x.str() + ")");
          break;
        case ConceptKind::Or:
          if (!has(c.first()) && !has(c.second())) fail("T3", c.str() + " in L(" + x.str() + ")");
          break;
        case ConceptKind::Forall: {
          auto it = r.edges.find(c.role());
          if (it == r.edges.end()) break;
          for (const auto& [from, to] : it->second)
            if (from == x && !containsSorted(r.label(to), c.filler()))
              fail("T4", c.str() + " in L(" + x.str() + "), edge to " + to.str());
          break;
        }
        case ConceptKind::Exists: {
          bool found = false;
          if (auto it = r.edges.find(c.role()); it != r.edges.end())
            for (const auto& [from, to] : it->second)
              if (from == x && containsSorted(r.label(to), c.filler())) found = true;
          if (!found) fail("T5", c.str() + " in L(" + x.str() + ")");
          break;
        }
        default:
          break;
      }
    }
    for (Concept c : k.tbox())
      if (!has(c)) fail("T6", c.str() + " missing from L(" + x.str() + ")");
  }

  for (Name a : individualsOf(k.abox()))
    if (!delta.count(a)) fail("A1", a.str() + " not in the domain");
  for (const auto& as : k.abox()) {
    switch (as.kind()) {
      case Assertion::Kind::Concept:
        if (!containsSorted(r.label(as.individual()), as.conceptOf())) fail("A2", as.str());
        break;
      case Assertion::Kind::Role:
        if (!r.hasEdge(as.roleName(), as.first(), as.second())) fail("A3", as.str());
        break;
      case Assertion::Kind::NotEqual:
        if (as.first() == as.second()) fail("A4", as.str());
        break;
      case Assertion::Kind::Equal:
        fail("A4", "equality " + as.str() + " in a terminal Abox");
        break;
    }
  }

  const auto& M = k.mbox();
  for (const auto& m : M)
    if (!delta.count(m.individual)) fail("M1", m.individual.str() + " not in the domain");

  std::vector<Assertion> memberships;
  for (Name x : r.delta)
    for (Concept c : r.label(x))
      if (c.isAtom()) memberships.push_back(Assertion::member(c, x));
  if (auto cycle = findCircularity(memberships, M)) {
    std::string w;
    for (Name n : *cycle) w += (w.empty() ? "" : " -> ") + n.str();
    fail("M2", w);
  }

  for (std::size_t i = 0; i + 1 < M.size(); ++i)
    if (M[i].individual == M[i + 1].individual) fail("M3", M[i].str() + ", " + M[i + 1].str());

  for (std::size_t i = 0; i < M.size(); ++i) {
    for (std::size_t j = i + 1; j < M.size(); ++j) {
      if (M[i].individual == M[j].individual) continue;
      Name A = M[i].conceptName;
      Name B = M[j].conceptName;
      bool found = false;
      for (Name t : r.delta) {
        for (Concept c : r.label(t))
          if (xorWitness(c, A, B)) found = true;
        if (found) break;
      }
      if (!found) fail("M4", M[i].str() + ", " + M[j].str());
    }
  }
  return out;
}

namespace {

std::set<Name> atomsOf(const RGraph& r) {
  std::set<Name> atoms;
  for (const auto& [x, l] : r.labels)
    for (Concept c : l)
      for (Concept s : subconcepts(c))
        if (s.isAtom()) atoms.insert(s.name());
  return atoms;
}

Interpretation transport(const RGraph& r, const std::function<Element(Name)>& elem) {
  Interpretation i;
  for (Name x : r.delta) i.domain.insert(elem(x));
  for (Name a : atomsOf(r)) i.concepts[a];
  for (Name x : r.delta)
    for (Concept c : r.label(x))
      if (c.isAtom()) i.concepts[c.name()].insert(elem(x));
  for (const auto& [role, pairs] : r.edges) {
    auto& rel = i.roles[role];
    for (const auto& [x, y] : pairs) rel.insert({elem(x), elem(y)});
  }
  for (Name a : r.individuals) i.individuals.insert_or_assign(a, elem(a));
  return i;
}

}  // namespace

Interpretation inducedInterpretation(const RGraph& r) {
  return transport(r, [](Name x) { return Element::atom(x); });
}

std::vector<std::pair<Name, Name>> precedesRelation(const RGraph& r, const std::vector<MboxAxiom>& mbox) {
  std::vector<std::pair<Name, Name>> out;
  for (const auto& m : mbox)
    for (Name y : r.delta)
      if (containsSorted(r.label(y), Concept::atom(m.conceptName))) out.emplace_back(y, m.individual);
  return out;
}

std::map<Name, Element> unfoldSetMap(const RGraph& r, const std::vector<MboxAxiom>& mbox) {
  if (!isWellFoundedRelation(r.delta, precedesRelation(r, mbox))) throw CircularUnfolding();
  std::map<Name, Name> meta;
  for (const auto& m : mbox) meta.try_emplace(m.individual, m.conceptName);

  std::map<Name, Element> memo;
  std::function<Element(Name)> set = [&](Name x) -> Element {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    auto mt = meta.find(x);
    if (mt == meta.end()) return memo.emplace(x, Element::atom(x)).first->second;
    Concept A = Concept::atom(mt->second);
    std::vector<Element> members;
    for (Name y : r.delta)
      if (containsSorted(r.label(y), A)) members.push_back(set(y));
    return memo.emplace(x, Element::set(std::move(members))).first->second;
  };
  for (Name x : r.delta) set(x);
  return memo;
}

Interpretation unfoldSets(const RGraph& r, const std::vector<MboxAxiom>& mbox) {
  auto sets = unfoldSetMap(r, mbox);
  Interpretation i = transport(r, [&](Name x) { return sets.at(x); });
  for (const auto& m : mbox) i.concepts[m.conceptName];
  return i;
}

ExtractedModel extractModel(const ConsistencyResult& result) {
  if (result.verdict != Verdict::Consistent || !result.graph || !result.marking)
    throw std::logic_error("model extraction needs a consistent result");
  const AndOrGraph& g = *result.graph;
  ExtractedModel out;
  out.build = buildRGraph(g, *result.marking);
  const Judgement& k = g.node(out.build.terminal).label;
  out.set = unfoldSetMap(out.build.graph, k.mbox());
  out.model = unfoldSets(out.build.graph, k.mbox());

  std::map<Name, Name> closeMerges;
  for (NodeId v : saturationPath(g, *result.marking, g.root())) {
    const GraphNode& n = g.node(v);
    if (n.rule == Rule::Close && result.marking->choice[v] == n.edges[0].target) closeMerges[n.drop] = n.keep;
  }
  // only individuals of the input; fresh ones stay anonymous domain elements
  out.model.individuals.clear();
  for (const auto& [a, rep] : result.root.representative) {
    Name x = rep;
    while (closeMerges.count(x)) x = closeMerges.at(x);
    out.representative[a] = x;
    auto it = out.set.find(x);
    Element e = it != out.set.end() ? it->second : Element::atom(x);
    out.model.domain.insert(e);
    out.model.individuals.insert_or_assign(a, e);
  }
  return out;
}

}  // namespace alcm
