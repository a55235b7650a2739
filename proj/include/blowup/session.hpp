#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blowup/errors.hpp"

namespace blowup {

struct SourceLoc {
  int line = 1;
  int col = 1;
};

// Lexical, syntactic and binding errors all carry a location and a one-line
// repair hint.
struct parse_error : kernel_error {
  SourceLoc loc;
  std::string hint;
  parse_error(SourceLoc l, const std::string& message, std::string h)
      : kernel_error("line " + std::to_string(l.line) + ":" +
                     std::to_string(l.col) + ": " + message),
        loc(l),
        hint(std::move(h)) {}
};

// Polynomial expression tree; evaluated against a concrete ring at run time.
struct PolyExpr {
  enum class Kind { number, variable, add, sub, mul, neg, pow };
  Kind kind = Kind::number;
  long number = 0;
  std::string name;
  int exponent = 1;
  std::vector<PolyExpr> args;
  SourceLoc loc;

  bool operator==(const PolyExpr&) const = default;
};

struct RingDecl {
  std::string name;
  std::optional<uint32_t> p;
  std::vector<std::string> vars;
  std::vector<int> weights;  // empty = all ones
  std::string order = "grevlex";
  SourceLoc loc;
};

struct QuotientDecl {
  std::string name;
  std::string ring_name;
  std::vector<PolyExpr> gens;
  SourceLoc loc;
};

struct IdealDecl {
  std::string name;
  std::vector<PolyExpr> gens;
  SourceLoc loc;
};

struct CheckStmt {
  std::string checker;  // "all" or a statement id such as "thm-1.1a"
  std::string quotient;
  std::string ideal;
  std::optional<std::vector<PolyExpr>> j_gens;
  bool locflag = false;
  std::optional<int> s;
  SourceLoc loc;
};

struct CorpusStmt {
  int vars = 3;
  int maxdeg = 3;
  int count = 10;
  uint64_t seed = 0;
  SourceLoc loc;
};

using Statement =
    std::variant<RingDecl, QuotientDecl, IdealDecl, CheckStmt, CorpusStmt>;

struct SessionAST {
  std::vector<Statement> statements;
};

// Parses and binds a session: names must be declared before use. Throws
// parse_error on any lexical, syntactic or binding problem.
SessionAST parse_session(std::string_view text);

}  // namespace blowup
