#include "alcm/judgement.hpp"

#include <algorithm>

namespace alcm {

void canonicalize(std::vector<Assertion>& abox) {
  std::sort(abox.begin(), abox.end());
  abox.erase(std::unique(abox.begin(), abox.end()), abox.end());
}

void canonicalize(std::vector<MboxAxiom>& mbox) {
  std::sort(mbox.begin(), mbox.end());
  mbox.erase(std::unique(mbox.begin(), mbox.end()), mbox.end());
}

Judgement Judgement::absurdity() {
  Judgement j;
  j.rehash();
  return j;
}

Judgement Judgement::base(std::vector<Concept> tbox, std::vector<Assertion> abox, std::vector<MboxAxiom> mbox) {
  Judgement j;
  j.kind_ = Kind::Base;
  canonicalize(tbox);
  canonicalize(abox);
  canonicalize(mbox);
  j.tbox_ = std::move(tbox);
  j.abox_ = std::move(abox);
  j.mbox_ = std::move(mbox);
  j.rehash();
  return j;
}

Judgement Judgement::variable(std::vector<Concept> tbox, std::vector<Concept> concepts) {
  Judgement j;
  j.kind_ = Kind::Variable;
  canonicalize(tbox);
  canonicalize(concepts);
  j.tbox_ = std::move(tbox);
  j.concepts_ = std::move(concepts);
  j.rehash();
  return j;
}

namespace {

inline void mix(std::size_t& h, std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); }

}  // namespace

void Judgement::rehash() {
  std::size_t h = static_cast<std::size_t>(kind_);
  for (Concept c : tbox_) mix(h, c.id());
  mix(h, 0xabcdef);
  for (const auto& a : abox_) {
    mix(h, static_cast<std::size_t>(a.kind()));
    mix(h, a.kind() == Assertion::Kind::Concept ? a.conceptOf().id() : a.roleName().id());
    mix(h, a.first().id());
    mix(h, a.second().id());
  }
  mix(h, 0x123457);
  for (const auto& m : mbox_) {
    mix(h, m.individual.id());
    mix(h, m.conceptName.id());
  }
  mix(h, 0x777);
  for (Concept c : concepts_) mix(h, c.id());
  hash_ = h;
}

bool Judgement::operator==(const Judgement& o) const {
  return hash_ == o.hash_ && kind_ == o.kind_ && tbox_ == o.tbox_ && abox_ == o.abox_ && mbox_ == o.mbox_ &&
         concepts_ == o.concepts_;
}

bool Judgement::contains(const Assertion& a) const { return std::binary_search(abox_.begin(), abox_.end(), a); }
bool Judgement::contains(Concept c) const { return containsSorted(concepts_, c); }
bool Judgement::contains(const MboxAxiom& m) const { return std::binary_search(mbox_.begin(), mbox_.end(), m); }

std::vector<Name> Judgement::individuals() const {
  std::vector<Name> out = individualsOf(abox_);
  for (const auto& m : mbox_) out.push_back(m.individual);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

KnowledgeBase Judgement::asKb() const {
  KnowledgeBase kb;
  Name x0 = freshName("x", 0);
  switch (kind_) {
    case Kind::Absurdity:
      kb.add(Assertion::member(Concept::bot(), x0));
      break;
    case Kind::Base:
      for (Concept c : tbox_) kb.add(TboxAxiom::subsumption(Concept::top(), c));
      for (const auto& a : abox_) kb.add(a);
      for (const auto& m : mbox_) kb.add(m);
      break;
    case Kind::Variable:
      for (Concept c : tbox_) kb.add(TboxAxiom::subsumption(Concept::top(), c));
      for (Concept c : concepts_) kb.add(Assertion::member(c, x0));
      if (concepts_.empty()) kb.add(Assertion::member(Concept::top(), x0));
      break;
  }
  return kb;
}

std::string Judgement::str() const {
  auto join = [](const auto& v) {
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += ", ";
      s += x.str();
    }
    return s;
  };
  switch (kind_) {
    case Kind::Absurdity:
      return "bot";
    case Kind::Variable:
      return "{" + join(tbox_) + "} ; {" + join(concepts_) + "}";
    case Kind::Base:
      break;
  }
  return "{" + join(tbox_) + "} ; {" + join(abox_) + "} ; {" + join(mbox_) + "}";
}

}  // namespace alcm
