#ifndef ALCM_PARSER_HPP_
#define ALCM_PARSER_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "alcm/concept.hpp"
#include "alcm/kb.hpp"

namespace alcm {

/// Syntax error in a .alcm source. Line and column are 1-based and always
/// point inside the input (end of input counts as the position after the last
/// character).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string origin, std::size_t line, std::size_t column, std::string production, std::string expected,
             std::string found);

  const std::string& origin() const { return origin_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// Grammar production that failed, e.g. "assertion".
  const std::string& production() const { return production_; }
  const std::string& expected() const { return expected_; }

 private:
  std::string origin_;
  std::size_t line_;
  std::size_t column_;
  std::string production_;
  std::string expected_;
};

/// Grammar:
///
///   kb        := (tboxSec | aboxSec | mboxSec)*
///   tboxSec   := "tbox" "{" (concept ("subclassof" | "equiv") concept ";")* "}"
///   aboxSec   := "abox" "{" (assertion ";")* "}"
///   assertion := concept "(" IND ")" | ROLE "(" IND "," IND ")"
///              | IND "=" IND | IND "!=" IND
///   mboxSec   := "mbox" "{" (IND "=m" CNAME ";")* "}"
///   concept   := andC ("or" andC)*
///   andC      := un ("and" un)*
///   un        := "not" un | "exists" ROLE "." un | "forall" ROLE "." un
///              | "top" | "bot" | CNAME | "(" concept ")"
///
/// Identifiers are [A-Za-z][A-Za-z0-9_]*; '#' starts a line comment.
KnowledgeBase parseKb(std::string_view text, std::string_view origin = "<stdin>");

Concept parseConcept(std::string_view text);
Assertion parseAssertion(std::string_view text);

/// Canonical text form; parseKb(printKb(kb)) == kb.
std::string printKb(const KnowledgeBase& kb);

}  // namespace alcm

#endif  // ALCM_PARSER_HPP_
