#include "alcm/semantics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

namespace alcm {

struct ElementNode {
  bool atom;
  Name name;
  std::vector<Element> members;
  std::uint32_t id;
  std::size_t rank;
};

namespace {

struct ElementKey {
  bool atom;
  Name name;
  std::vector<std::uint32_t> members;
  bool operator<(const ElementKey& o) const {
    if (atom != o.atom) return atom < o.atom;
    if (name.id() != o.name.id()) return name.id() < o.name.id();
    return members < o.members;
  }
};

struct ElementStore {
  std::mutex mutex;
  std::deque<ElementNode> nodes;
  std::map<ElementKey, const ElementNode*> index;
};

ElementStore& store() {
  static ElementStore s;
  return s;
}

}  // namespace

Element Element::atom(Name name) {
  ElementStore& s = store();
  ElementKey key{true, name, {}};
  std::lock_guard lock(s.mutex);
  if (auto it = s.index.find(key); it != s.index.end()) return Element(it->second);
  s.nodes.push_back(ElementNode{true, name, {}, static_cast<std::uint32_t>(s.nodes.size()), 0});
  const ElementNode* n = &s.nodes.back();
  s.index.emplace(std::move(key), n);
  return Element(n);
}

Element Element::set(std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  ElementKey key{false, Name(), {}};
  std::size_t r = 1;
  for (Element m : members) {
    key.members.push_back(m.id());
    r = std::max(r, m.node_->rank + 1);
  }
  ElementStore& s = store();
  std::lock_guard lock(s.mutex);
  if (auto it = s.index.find(key); it != s.index.end()) return Element(it->second);
  s.nodes.push_back(ElementNode{false, Name(), std::move(members), static_cast<std::uint32_t>(s.nodes.size()), r});
  const ElementNode* n = &s.nodes.back();
  s.index.emplace(std::move(key), n);
  return Element(n);
}

bool Element::isAtom() const { return node_->atom; }
Name Element::name() const { return node_->name; }
const std::vector<Element>& Element::members() const { return node_->members; }
std::uint32_t Element::id() const { return node_->id; }

bool Element::contains(Element e) const {
  return std::binary_search(node_->members.begin(), node_->members.end(), e);
}

namespace {

std::vector<Element> structurallySorted(const std::vector<Element>& v) {
  std::vector<Element> out = v;
  std::sort(out.begin(), out.end(), [](Element a, Element b) { return Element::compareStructural(a, b) < 0; });
  return out;
}

}  // namespace

int Element::compareStructural(Element a, Element b) {
  if (a == b) return 0;
  if (a.isAtom() != b.isAtom()) return a.isAtom() ? -1 : 1;
  if (a.isAtom()) {
    auto c = a.name() <=> b.name();
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (a.rank() != b.rank()) return a.rank() < b.rank() ? -1 : 1;
  const auto& am = a.members();
  const auto& bm = b.members();
  if (am.size() != bm.size()) return am.size() < bm.size() ? -1 : 1;
  auto as = structurallySorted(am);
  auto bs = structurallySorted(bm);
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (int c = compareStructural(as[i], bs[i]); c != 0) return c;
  }
  return 0;
}

std::size_t Element::rank() const { return node_->rank; }

std::string Element::str() const {
  if (isAtom()) return name().str();
  std::string out = "{";
  bool first = true;
  for (Element m : structurallySorted(members())) {
    if (!first) out += ", ";
    first = false;
    out += m.str();
  }
  return out + "}";
}

std::size_t rank(Element e) { return e.rank(); }

std::size_t Interpretation::depth() const {
  std::size_t d = 0;
  for (Element e : domain) d = std::max(d, e.rank());
  return d;
}

ElementSet extension(const Interpretation& interp, Concept c) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return interp.domain;
    case ConceptKind::Bot:
      return {};
    case ConceptKind::Atom: {
      auto it = interp.concepts.find(c.name());
      return it == interp.concepts.end() ? ElementSet{} : it->second;
    }
    case ConceptKind::Not: {
      ElementSet inner = extension(interp, c.operand());
      ElementSet out;
      for (Element e : interp.domain)
        if (!inner.count(e)) out.insert(e);
      return out;
    }
    case ConceptKind::And: {
      ElementSet l = extension(interp, c.first());
      ElementSet r = extension(interp, c.second());
      ElementSet out;
      std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::inserter(out, out.end()));
      return out;
    }
    case ConceptKind::Or: {
      ElementSet out = extension(interp, c.first());
      ElementSet r = extension(interp, c.second());
      out.insert(r.begin(), r.end());
      return out;
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall: {
      ElementSet filler = extension(interp, c.filler());
      std::map<Element, std::vector<Element>> succ;
      if (auto it = interp.roles.find(c.role()); it != interp.roles.end())
        for (const auto& [x, y] : it->second) succ[x].push_back(y);
      ElementSet out;
      bool exists = c.kind() == ConceptKind::Exists;
      for (Element x : interp.domain) {
        const auto& ys = succ[x];
        bool hit = exists ? std::any_of(ys.begin(), ys.end(), [&](Element y) { return filler.count(y) > 0; })
                          : std::all_of(ys.begin(), ys.end(), [&](Element y) { return filler.count(y) > 0; });
        if (hit) out.insert(x);
      }
      return out;
    }
  }
  return {};
}

namespace {

Element resolve(const Interpretation& interp, Name a) {
  auto it = interp.individuals.find(a);
  if (it == interp.individuals.end()) throw UnresolvedIndividual(a);
  return it->second;
}

bool subset(const ElementSet& a, const ElementSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

ModelCheck satisfiesKb(const Interpretation& interp, const KnowledgeBase& kb) {
  auto fail = [](std::string what) { return ModelCheck{false, std::move(what)}; };

  for (const auto& a : kb.individuals())
    if (!interp.domain.count(resolve(interp, a))) return fail("individual " + a.str() + " outside the domain");

  for (const auto& ax : kb.tbox()) {
    ElementSet l = extension(interp, ax.lhs);
    ElementSet r = extension(interp, ax.rhs);
    if (!subset(l, r)) return fail(ax.str());
    if (ax.kind == TboxAxiom::Kind::Equivalence && !subset(r, l)) return fail(ax.str());
  }

  for (const auto& as : kb.abox()) {
    bool ok = true;
    switch (as.kind()) {
      case Assertion::Kind::Concept:
        ok = extension(interp, as.conceptOf()).count(resolve(interp, as.individual())) > 0;
        break;
      case Assertion::Kind::Role: {
        auto it = interp.roles.find(as.roleName());
        ok = it != interp.roles.end() &&
             it->second.count({resolve(interp, as.first()), resolve(interp, as.second())}) > 0;
        break;
      }
      case Assertion::Kind::Equal:
        ok = resolve(interp, as.first()) == resolve(interp, as.second());
        break;
      case Assertion::Kind::NotEqual:
        ok = !(resolve(interp, as.first()) == resolve(interp, as.second()));
        break;
    }
    if (!ok) return fail(as.str());
  }

  for (const auto& m : kb.mbox()) {
    ElementSet ext = extension(interp, Concept::atom(m.conceptName));
    Element expected = Element::set(std::vector<Element>(ext.begin(), ext.end()));
    if (!(resolve(interp, m.individual) == expected)) return fail(m.str());
  }
  return {};
}

namespace {

using nlohmann::json;

json termJson(Element e) {
  if (e.isAtom()) return e.name().str();
  json arr = json::array();
  for (Element m : structurallySorted(e.members())) arr.push_back(termJson(m));
  return arr;
}

Element termFromJson(const json& j) {
  if (j.is_string()) return Element::atom(j.get<std::string>());
  if (!j.is_array()) throw std::runtime_error("model json: element term must be a string or an array");
  std::vector<Element> members;
  for (const auto& m : j) members.push_back(termFromJson(m));
  return Element::set(std::move(members));
}

}  // namespace

std::string toModelJson(const Interpretation& interp) {
  std::vector<Element> domain = structurallySorted({interp.domain.begin(), interp.domain.end()});
  std::map<Element, std::size_t> index;
  json dom = json::array();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    index[domain[i]] = i;
    dom.push_back(termJson(domain[i]));
  }
  auto ids = [&](const ElementSet& s) {
    std::vector<std::size_t> v;
    for (Element e : s) v.push_back(index.at(e));
    std::sort(v.begin(), v.end());
    return v;
  };

  json concepts = json::object();
  for (const auto& [name, ext] : interp.concepts) concepts[name.str()] = ids(ext);
  json roles = json::object();
  for (const auto& [name, pairs] : interp.roles) {
    std::vector<std::pair<std::size_t, std::size_t>> v;
    for (const auto& [x, y] : pairs) v.emplace_back(index.at(x), index.at(y));
    std::sort(v.begin(), v.end());
    json arr = json::array();
    for (const auto& [x, y] : v) arr.push_back({x, y});
    roles[name.str()] = arr;
  }
  json individuals = json::object();
  for (const auto& [name, e] : interp.individuals) individuals[name.str()] = index.at(e);

  json out = json::object();
  out["domain"] = dom;
  out["concepts"] = concepts;
  out["roles"] = roles;
  out["individuals"] = individuals;
  return out.dump(2);
}

Interpretation fromModelJson(const std::string& text) {
  json j = json::parse(text);
  Interpretation interp;
  std::vector<Element> domain;
  for (const auto& t : j.at("domain")) domain.push_back(termFromJson(t));
  interp.domain.insert(domain.begin(), domain.end());
  auto at = [&](const json& id) {
    auto i = id.get<std::size_t>();
    if (i >= domain.size()) throw std::runtime_error("model json: domain index out of range");
    return domain[i];
  };
  for (const auto& [name, ids] : j.at("concepts").items()) {
    ElementSet& ext = interp.concepts[Name::intern(name)];
    for (const auto& id : ids) ext.insert(at(id));
  }
  for (const auto& [name, pairs] : j.at("roles").items()) {
    auto& rel = interp.roles[Name::intern(name)];
    for (const auto& p : pairs) rel.insert({at(p.at(0)), at(p.at(1))});
  }
  for (const auto& [name, id] : j.at("individuals").items()) interp.individuals.insert_or_assign(Name::intern(name), at(id));
  return interp;
}

}  // namespace alcm
