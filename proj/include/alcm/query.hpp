#ifndef ALCM_QUERY_HPP_
#define ALCM_QUERY_HPP_

#include <string>
#include <string_view>

#include "alcm/concept.hpp"
#include "alcm/names.hpp"

namespace alcm {

struct Query {
  enum class Kind { Consistency, Subsumption, Instance, Equality, Inequality, Metamodelling, MetaConcept };

  Kind kind = Kind::Consistency;
  Concept lhs;  // C in "C sub D", "C(a)" and meta-concept queries
  Concept rhs;  // D in "C sub D"
  Name a;
  Name b;       // second individual, or the concept name of "a =m A"

  std::string str() const;
};

/// Query micro-syntax: `C sub D`, `C(a)`, `a = b`, `a != b`, `a =m A`.
/// Role assertions `R(a, b)` are rejected with a ParseError.
Query parseQuery(std::string_view text);

}  // namespace alcm

#endif  // ALCM_QUERY_HPP_
