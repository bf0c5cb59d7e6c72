#include "alcm/kb.hpp"

#include <algorithm>
#include <sstream>

namespace alcm {

namespace {

int compareNames(Name a, Name b) {
  if (a == b) return 0;
  return a < b ? -1 : 1;
}

template <class T>
void sortUnique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <class T>
void pushUnique(std::vector<T>& v, const T& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

}  // namespace

std::string TboxAxiom::str() const {
  return lhs.str() + (kind == Kind::Subsumption ? " subclassof " : " equiv ") + rhs.str();
}

Assertion Assertion::member(Concept c, Name a) {
  Assertion x;
  x.kind_ = Kind::Concept;
  x.concept_ = c;
  x.a_ = a;
  return x;
}

Assertion Assertion::role(Name r, Name a, Name b) {
  Assertion x;
  x.kind_ = Kind::Role;
  x.role_ = r;
  x.a_ = a;
  x.b_ = b;
  return x;
}

Assertion Assertion::equal(Name a, Name b) {
  Assertion x;
  x.kind_ = Kind::Equal;
  x.a_ = a;
  x.b_ = b;
  return x;
}

Assertion Assertion::notEqual(Name a, Name b) {
  Assertion x;
  x.kind_ = Kind::NotEqual;
  x.a_ = std::min(a, b);
  x.b_ = std::max(a, b);
  return x;
}

int Assertion::compare(const Assertion& x, const Assertion& y) {
  if (x.kind_ != y.kind_) return x.kind_ < y.kind_ ? -1 : 1;
  if (x.kind_ == Kind::Concept) {
    if (int c = Concept::compare(x.concept_, y.concept_)) return c;
    return compareNames(x.a_, y.a_);
  }
  if (x.kind_ == Kind::Role) {
    if (int c = compareNames(x.role_, y.role_)) return c;
  }
  if (int c = compareNames(x.a_, y.a_)) return c;
  return compareNames(x.b_, y.b_);
}

std::string Assertion::str() const {
  switch (kind_) {
    case Kind::Concept:
      if (concept_.kind() == ConceptKind::Atom || concept_.kind() == ConceptKind::Top ||
          concept_.kind() == ConceptKind::Bot) {
        return concept_.str() + "(" + a_.str() + ")";
      }
      return "(" + concept_.str() + ")(" + a_.str() + ")";
    case Kind::Role:
      return role_.str() + "(" + a_.str() + ", " + b_.str() + ")";
    case Kind::Equal:
      return a_.str() + " = " + b_.str();
    case Kind::NotEqual:
      return a_.str() + " != " + b_.str();
  }
  return {};
}

std::string MboxAxiom::str() const { return individual.str() + " =m " + conceptName.str(); }

void KnowledgeBase::add(const TboxAxiom& axiom) { pushUnique(tbox_, axiom); }
void KnowledgeBase::add(const Assertion& assertion) { pushUnique(abox_, assertion); }
void KnowledgeBase::add(const MboxAxiom& axiom) { pushUnique(mbox_, axiom); }

void KnowledgeBase::add(const KnowledgeBase& other) {
  for (const auto& t : other.tbox_) add(t);
  for (const auto& a : other.abox_) add(a);
  for (const auto& m : other.mbox_) add(m);
}

std::vector<Name> KnowledgeBase::individuals() const {
  std::vector<Name> out = individualsOf(abox_);
  for (const auto& m : mbox_) out.push_back(m.individual);
  sortUnique(out);
  return out;
}

std::vector<Name> KnowledgeBase::mboxDomain() const { return individualsOf(mbox_); }

std::vector<Name> KnowledgeBase::mboxRange() const {
  std::vector<Name> out;
  for (const auto& m : mbox_) out.push_back(m.conceptName);
  sortUnique(out);
  return out;
}

std::vector<Concept> nnfTbox(const std::vector<TboxAxiom>& tbox) {
  std::vector<Concept> out;
  auto push = [&](Concept lhs, Concept rhs) {
    Concept c = nnf(Concept::disj(Concept::negation(lhs), rhs));
    if (c.kind() != ConceptKind::Top) out.push_back(c);
  };
  for (const auto& ax : tbox) {
    push(ax.lhs, ax.rhs);
    if (ax.kind == TboxAxiom::Kind::Equivalence) push(ax.rhs, ax.lhs);
  }
  canonicalize(out);
  return out;
}

std::vector<Assertion> nnfAbox(const std::vector<Assertion>& abox) {
  std::vector<Assertion> out;
  out.reserve(abox.size());
  for (const auto& a : abox) {
    out.push_back(a.kind() == Assertion::Kind::Concept ? Assertion::member(nnf(a.conceptOf()), a.individual()) : a);
  }
  return out;
}

std::vector<Assertion> substituteIndividual(const std::vector<Assertion>& abox, Name keep, Name drop) {
  auto sub = [&](Name n) { return n == drop ? keep : n; };
  std::vector<Assertion> out;
  out.reserve(abox.size());
  for (const auto& a : abox) {
    switch (a.kind()) {
      case Assertion::Kind::Concept:
        out.push_back(Assertion::member(a.conceptOf(), sub(a.individual())));
        break;
      case Assertion::Kind::Role:
        out.push_back(Assertion::role(a.roleName(), sub(a.first()), sub(a.second())));
        break;
      case Assertion::Kind::Equal:
        out.push_back(Assertion::equal(sub(a.first()), sub(a.second())));
        break;
      case Assertion::Kind::NotEqual:
        out.push_back(Assertion::notEqual(sub(a.first()), sub(a.second())));
        break;
    }
  }
  sortUnique(out);
  return out;
}

std::vector<MboxAxiom> substituteIndividual(const std::vector<MboxAxiom>& mbox, Name keep, Name drop) {
  std::vector<MboxAxiom> out;
  out.reserve(mbox.size());
  for (const auto& m : mbox) out.push_back({m.individual == drop ? keep : m.individual, m.conceptName});
  sortUnique(out);
  return out;
}

std::vector<Name> individualsOf(const std::vector<Assertion>& abox) {
  std::vector<Name> out;
  for (const auto& a : abox) {
    out.push_back(a.first());
    if (a.kind() != Assertion::Kind::Concept) out.push_back(a.second());
  }
  sortUnique(out);
  return out;
}

std::vector<Name> individualsOf(const std::vector<MboxAxiom>& mbox) {
  std::vector<Name> out;
  for (const auto& m : mbox) out.push_back(m.individual);
  sortUnique(out);
  return out;
}

}  // namespace alcm
