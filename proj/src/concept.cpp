#include "alcm/concept.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace alcm {

struct ConceptNode {
  ConceptKind kind;
  Name name;
  const ConceptNode* first;
  const ConceptNode* second;
  std::uint32_t id;
  std::size_t length;
};

namespace {

struct NodeKey {
  ConceptKind kind;
  Name name;
  const ConceptNode* first;
  const ConceptNode* second;
  bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.kind);
    h = h * 1000003u ^ k.name.id();
    h = h * 1000003u ^ std::hash<const void*>{}(k.first);
    h = h * 1000003u ^ std::hash<const void*>{}(k.second);
    return h;
  }
};

struct ConceptStore {
  std::mutex mutex;
  std::deque<ConceptNode> nodes;
  std::unordered_map<NodeKey, const ConceptNode*, NodeKeyHash> index;
};

ConceptStore& store() {
  static ConceptStore s;
  return s;
}

}  // namespace

Concept Concept::make(ConceptKind kind, Name name, const ConceptNode* first, const ConceptNode* second) {
  ConceptStore& s = store();
  NodeKey key{kind, name, first, second};
  std::lock_guard lock(s.mutex);
  if (auto it = s.index.find(key); it != s.index.end()) return Concept(it->second);
  std::size_t len = 1 + (first ? first->length : 0) + (second ? second->length : 0);
  s.nodes.push_back(ConceptNode{kind, name, first, second, static_cast<std::uint32_t>(s.nodes.size()), len});
  const ConceptNode* n = &s.nodes.back();
  s.index.emplace(key, n);
  return Concept(n);
}

Concept::Concept() : Concept(top()) {}

Concept Concept::top() {
  static const Concept t = make(ConceptKind::Top, Name(), nullptr, nullptr);
  return t;
}

Concept Concept::bot() {
  static const Concept b = make(ConceptKind::Bot, Name(), nullptr, nullptr);
  return b;
}

Concept Concept::atom(Name name) { return make(ConceptKind::Atom, name, nullptr, nullptr); }
Concept Concept::negation(Concept c) { return make(ConceptKind::Not, Name(), c.node_, nullptr); }
Concept Concept::conj(Concept l, Concept r) { return make(ConceptKind::And, Name(), l.node_, r.node_); }
Concept Concept::disj(Concept l, Concept r) { return make(ConceptKind::Or, Name(), l.node_, r.node_); }
Concept Concept::exists(Name role, Concept f) { return make(ConceptKind::Exists, role, f.node_, nullptr); }
Concept Concept::forall(Name role, Concept f) { return make(ConceptKind::Forall, role, f.node_, nullptr); }

ConceptKind Concept::kind() const { return node_->kind; }
Name Concept::name() const { return node_->name; }
Concept Concept::first() const { return Concept(node_->first); }
Concept Concept::second() const { return Concept(node_->second); }
std::uint32_t Concept::id() const { return node_->id; }
std::size_t Concept::length() const { return node_->length; }

bool Concept::isLiteral() const {
  return kind() == ConceptKind::Atom || (kind() == ConceptKind::Not && first().isAtom());
}

bool Concept::isNnf() const {
  switch (kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bot:
    case ConceptKind::Atom:
      return true;
    case ConceptKind::Not:
      return first().isAtom();
    case ConceptKind::And:
    case ConceptKind::Or:
      return first().isNnf() && second().isNnf();
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      return first().isNnf();
  }
  return false;
}

int Concept::compare(Concept a, Concept b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bot:
      return 0;
    case ConceptKind::Atom:
      return a.name() < b.name() ? -1 : 1;
    case ConceptKind::Not:
      return compare(a.first(), b.first());
    case ConceptKind::And:
    case ConceptKind::Or:
      if (int c = compare(a.first(), b.first())) return c;
      return compare(a.second(), b.second());
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      if (int c = compare(a.first(), b.first())) return c;
      if (a.name() == b.name()) return 0;
      return a.name() < b.name() ? -1 : 1;
  }
  return 0;
}

namespace {

int precedence(Concept c) {
  switch (c.kind()) {
    case ConceptKind::Or:
      return 1;
    case ConceptKind::And:
      return 2;
    default:
      return 3;
  }
}

void print(std::ostream& os, Concept c, int context) {
  bool parens = precedence(c) < context;
  if (parens) os << '(';
  switch (c.kind()) {
    case ConceptKind::Top:
      os << "top";
      break;
    case ConceptKind::Bot:
      os << "bot";
      break;
    case ConceptKind::Atom:
      os << c.name().str();
      break;
    case ConceptKind::Not:
      os << "not ";
      print(os, c.first(), 3);
      break;
    case ConceptKind::And:
      print(os, c.first(), 2);
      os << " and ";
      print(os, c.second(), 3);
      break;
    case ConceptKind::Or:
      print(os, c.first(), 1);
      os << " or ";
      print(os, c.second(), 2);
      break;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      os << (c.kind() == ConceptKind::Exists ? "exists " : "forall ") << c.role().str() << '.';
      print(os, c.first(), 3);
      break;
  }
  if (parens) os << ')';
}

Concept simplifiedConj(Concept l, Concept r) {
  if (l.kind() == ConceptKind::Top) return r;
  if (r.kind() == ConceptKind::Top) return l;
  return Concept::conj(l, r);
}

Concept simplifiedDisj(Concept l, Concept r) {
  if (l.kind() == ConceptKind::Bot) return r;
  if (r.kind() == ConceptKind::Bot) return l;
  return Concept::disj(l, r);
}

Concept nnfOf(Concept c, bool negated) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return negated ? Concept::bot() : c;
    case ConceptKind::Bot:
      return negated ? Concept::top() : c;
    case ConceptKind::Atom:
      return negated ? Concept::negation(c) : c;
    case ConceptKind::Not:
      return nnfOf(c.first(), !negated);
    case ConceptKind::And:
      return negated ? simplifiedDisj(nnfOf(c.first(), true), nnfOf(c.second(), true))
                     : simplifiedConj(nnfOf(c.first(), false), nnfOf(c.second(), false));
    case ConceptKind::Or:
      return negated ? simplifiedConj(nnfOf(c.first(), true), nnfOf(c.second(), true))
                     : simplifiedDisj(nnfOf(c.first(), false), nnfOf(c.second(), false));
    case ConceptKind::Exists:
      return negated ? Concept::forall(c.role(), nnfOf(c.first(), true))
                     : Concept::exists(c.role(), nnfOf(c.first(), false));
    case ConceptKind::Forall:
      return negated ? Concept::exists(c.role(), nnfOf(c.first(), true))
                     : Concept::forall(c.role(), nnfOf(c.first(), false));
  }
  return c;
}

void collect(Concept c, std::vector<Concept>& out) {
  out.push_back(c);
  switch (c.kind()) {
    case ConceptKind::Not:
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      collect(c.first(), out);
      break;
    case ConceptKind::And:
    case ConceptKind::Or:
      collect(c.first(), out);
      collect(c.second(), out);
      break;
    default:
      break;
  }
}

}  // namespace

std::string Concept::str() const {
  std::ostringstream os;
  print(os, *this, 0);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, Concept c) {
  print(os, c, 0);
  return os;
}

Concept nnf(Concept c) { return nnfOf(c, false); }

std::vector<Concept> subconcepts(Concept c) {
  std::vector<Concept> out;
  collect(c, out);
  canonicalize(out);
  return out;
}

void canonicalize(std::vector<Concept>& concepts) {
  std::sort(concepts.begin(), concepts.end());
  concepts.erase(std::unique(concepts.begin(), concepts.end()), concepts.end());
}

bool containsSorted(const std::vector<Concept>& sorted, Concept c) {
  return std::binary_search(sorted.begin(), sorted.end(), c);
}

}  // namespace alcm
