#include "alcm/parser.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "alcm/query.hpp"

namespace alcm {

ParseError::ParseError(std::string origin, std::size_t line, std::size_t column, std::string production,
                       std::string expected, std::string found)
    : std::runtime_error(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": in " + production +
                         ": expected " + expected + ", found " + found),
      origin_(std::move(origin)),
      line_(line),
      column_(column),
      production_(std::move(production)),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, LBrace, RBrace, LParen, RParen, Semi, Comma, Dot, Eq, Neq, EqM, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

constexpr std::array kKeywords = {"tbox", "abox", "mbox", "subclassof", "equiv", "and", "or",
                                  "not",  "exists", "forall", "top", "bot", "sub"};

bool isKeyword(std::string_view s) {
  for (const char* k : kKeywords) {
    if (s == k) return true;
  }
  return false;
}

bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string origin) : text_(text), origin_(std::move(origin)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipBlanks();
      Token t{Tok::End, "", line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && isIdentChar(text_[pos_])) advance();
        t.kind = Tok::Ident;
        t.text = std::string(text_.substr(start, pos_ - start));
      } else if (c == '=' && peek(1) == 'm' && !isIdentChar(peek(2))) {
        advance();
        advance();
        t.kind = Tok::EqM;
        t.text = "=m";
      } else if (c == '!' && peek(1) == '=') {
        advance();
        advance();
        t.kind = Tok::Neq;
        t.text = "!=";
      } else {
        switch (c) {
          case '{': t.kind = Tok::LBrace; break;
          case '}': t.kind = Tok::RBrace; break;
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case ';': t.kind = Tok::Semi; break;
          case ',': t.kind = Tok::Comma; break;
          case '.': t.kind = Tok::Dot; break;
          case '=': t.kind = Tok::Eq; break;
          default:
            throw ParseError(origin_, line_, column_, "token", "identifier or punctuation",
                             "'" + std::string(1, c) + "'");
        }
        t.text = std::string(1, c);
        advance();
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t k) const { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skipBlanks() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::string origin_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, std::string origin)
      : origin_(origin), tokens_(Lexer(text, origin).run()) {}

  KnowledgeBase knowledgeBase() {
    KnowledgeBase kb;
    while (!at(Tok::End)) {
      const Token& t = cur();
      if (isWord("tbox")) {
        next();
        section([&] { kb.add(tboxAxiom()); });
      } else if (isWord("abox")) {
        next();
        section([&] { kb.add(assertion()); });
      } else if (isWord("mbox")) {
        next();
        section([&] { kb.add(mboxAxiom()); });
      } else {
        fail(t, "kb", "'tbox', 'abox' or 'mbox'");
      }
    }
    return kb;
  }

  Concept conceptOnly() {
    Concept c = conceptExpr();
    expect(Tok::End, "concept", "end of input");
    return c;
  }

  Assertion assertionOnly() {
    Assertion a = assertion();
    if (at(Tok::Semi)) next();
    expect(Tok::End, "assertion", "end of input");
    return a;
  }

  Query query() {
    Query q;
    if (at(Tok::Ident) && !isKeyword(cur().text) && (peekKind(1) == Tok::Eq || peekKind(1) == Tok::Neq ||
                                                     peekKind(1) == Tok::EqM)) {
      q.a = Name::intern(cur().text);
      next();
      Tok op = cur().kind;
      next();
      if (op == Tok::EqM) {
        q.kind = Query::Kind::Metamodelling;
        q.b = conceptName("query");
      } else {
        q.kind = op == Tok::Eq ? Query::Kind::Equality : Query::Kind::Inequality;
        q.b = individual("query");
      }
    } else if (at(Tok::Ident) && !isKeyword(cur().text) && peekKind(1) == Tok::LParen &&
               peekKind(2) == Tok::Ident && peekKind(3) == Tok::Comma) {
      fail(cur(), "query", "a concept, instance, (in)equality or meta-modelling query (role assertions are not supported)");
    } else {
      Concept c = conceptExpr();
      if (isWord("sub")) {
        next();
        q.kind = Query::Kind::Subsumption;
        q.lhs = c;
        q.rhs = conceptExpr();
      } else {
        q.kind = Query::Kind::Instance;
        q.lhs = c;
        expect(Tok::LParen, "query", "'(' or 'sub'");
        q.a = individual("query");
        expect(Tok::RParen, "query", "')'");
      }
    }
    expect(Tok::End, "query", "end of input");
    return q;
  }

 private:
  template <class F>
  void section(F item) {
    expect(Tok::LBrace, "section", "'{'");
    while (!at(Tok::RBrace)) {
      if (at(Tok::End)) fail(cur(), "section", "'}'");
      item();
      expect(Tok::Semi, "section", "';'");
    }
    next();
  }

  TboxAxiom tboxAxiom() {
    Concept lhs = conceptExpr();
    if (isWord("subclassof")) {
      next();
      return TboxAxiom::subsumption(lhs, conceptExpr());
    }
    if (isWord("equiv")) {
      next();
      return TboxAxiom::equivalence(lhs, conceptExpr());
    }
    fail(cur(), "taxiom", "'subclassof' or 'equiv'");
  }

  MboxAxiom mboxAxiom() {
    Name ind = individual("mbox axiom");
    expect(Tok::EqM, "mbox axiom", "'=m'");
    if (!at(Tok::Ident) || isKeyword(cur().text)) fail(cur(), "mbox axiom", "an atomic concept name");
    Name c = Name::intern(cur().text);
    next();
    if (!at(Tok::Semi)) fail(cur(), "mbox axiom", "';' (the right-hand side must be an atomic concept)");
    return MboxAxiom{ind, c};
  }

  Assertion assertion() {
    if (at(Tok::Ident) && !isKeyword(cur().text)) {
      Tok k1 = peekKind(1);
      if (k1 == Tok::Eq || k1 == Tok::Neq) {
        Name a = Name::intern(cur().text);
        next();
        next();
        Name b = individual("assertion");
        return k1 == Tok::Eq ? Assertion::equal(a, b) : Assertion::notEqual(a, b);
      }
      if (k1 == Tok::LParen && peekKind(2) == Tok::Ident && peekKind(3) == Tok::Comma) {
        Name r = Name::intern(cur().text);
        next();
        next();
        Name a = individual("assertion");
        expect(Tok::Comma, "assertion", "','");
        Name b = individual("assertion");
        expect(Tok::RParen, "assertion", "')'");
        return Assertion::role(r, a, b);
      }
    }
    Concept c = conceptExpr();
    expect(Tok::LParen, "assertion", "'('");
    Name a = individual("assertion");
    expect(Tok::RParen, "assertion", "')'");
    return Assertion::member(c, a);
  }

  Concept conceptExpr() { return continueConcept(unary()); }

  // Finishes "orC" given its first unary operand.
  Concept continueConcept(Concept first) {
    Concept acc = continueAnd(first);
    while (isWord("or")) {
      next();
      acc = Concept::disj(acc, continueAnd(unary()));
    }
    return acc;
  }

  Concept continueAnd(Concept first) {
    Concept acc = first;
    while (isWord("and")) {
      next();
      acc = Concept::conj(acc, unary());
    }
    return acc;
  }

  Concept unary() {
    const Token& t = cur();
    if (t.kind == Tok::LParen) {
      next();
      Concept c = conceptExpr();
      expect(Tok::RParen, "concept", "')'");
      return c;
    }
    if (t.kind != Tok::Ident) fail(t, "concept", "a concept");
    if (t.text == "not") {
      next();
      return Concept::negation(unary());
    }
    if (t.text == "exists" || t.text == "forall") {
      bool ex = t.text == "exists";
      next();
      if (!at(Tok::Ident) || isKeyword(cur().text)) fail(cur(), "concept", "a role name");
      Name role = Name::intern(cur().text);
      next();
      expect(Tok::Dot, "concept", "'.'");
      Concept f = unary();
      return ex ? Concept::exists(role, f) : Concept::forall(role, f);
    }
    if (t.text == "top") {
      next();
      return Concept::top();
    }
    if (t.text == "bot") {
      next();
      return Concept::bot();
    }
    if (isKeyword(t.text)) fail(t, "concept", "a concept");
    Name n = Name::intern(t.text);
    next();
    return Concept::atom(n);
  }

  Name individual(const char* production) {
    if (!at(Tok::Ident) || isKeyword(cur().text)) fail(cur(), production, "an individual name");
    Name n = Name::intern(cur().text);
    next();
    return n;
  }

  Name conceptName(const char* production) {
    if (!at(Tok::Ident) || isKeyword(cur().text)) fail(cur(), production, "an atomic concept name");
    Name n = Name::intern(cur().text);
    next();
    return n;
  }

  const Token& cur() const { return tokens_[pos_]; }
  Tok peekKind(std::size_t k) const {
    return pos_ + k < tokens_.size() ? tokens_[pos_ + k].kind : Tok::End;
  }
  bool at(Tok k) const { return cur().kind == k; }
  bool isWord(std::string_view w) const { return at(Tok::Ident) && cur().text == w; }
  void next() {
    if (pos_ + 1 < tokens_.size()) ++pos_;
  }

  void expect(Tok k, const char* production, const char* expected) {
    if (!at(k)) fail(cur(), production, expected);
    next();
  }

  [[noreturn]] void fail(const Token& t, const std::string& production, const std::string& expected) const {
    throw ParseError(origin_, t.line, t.column, production, expected, describe(t));
  }

  std::string origin_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void printSection(std::ostringstream& os, const char* title, const std::vector<std::string>& items) {
  os << title << " {";
  if (items.empty()) {
    os << " }";
    return;
  }
  os << '\n';
  for (const auto& s : items) os << "  " << s << ";\n";
  os << '}';
}

}  // namespace

KnowledgeBase parseKb(std::string_view text, std::string_view origin) {
  return Parser(text, std::string(origin)).knowledgeBase();
}

Concept parseConcept(std::string_view text) { return Parser(text, "<concept>").conceptOnly(); }

Assertion parseAssertion(std::string_view text) { return Parser(text, "<assertion>").assertionOnly(); }

Query parseQuery(std::string_view text) { return Parser(text, "<query>").query(); }

std::string printKb(const KnowledgeBase& kb) {
  std::vector<std::string> t, a, m;
  for (const auto& x : kb.tbox()) t.push_back(x.str());
  for (const auto& x : kb.abox()) a.push_back(x.str());
  for (const auto& x : kb.mbox()) m.push_back(x.str());
  std::ostringstream os;
  printSection(os, "tbox", t);
  os << '\n';
  printSection(os, "abox", a);
  os << '\n';
  printSection(os, "mbox", m);
  return os.str();
}

std::string Query::str() const {
  switch (kind) {
    case Kind::Consistency:
      return "consistent";
    case Kind::Subsumption:
      return lhs.str() + " sub " + rhs.str();
    case Kind::Instance:
      return Assertion::member(lhs, a).str();
    case Kind::Equality:
      return a.str() + " = " + b.str();
    case Kind::Inequality:
      return a.str() + " != " + b.str();
    case Kind::Metamodelling:
      return a.str() + " =m " + b.str();
    case Kind::MetaConcept:
      return "metaconcept " + lhs.str();
  }
  return {};
}

}  // namespace alcm
