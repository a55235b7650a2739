#include "blowup/session.hpp"

#include <cctype>
#include <map>
#include <set>

namespace blowup {

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  long value = 0;
  SourceLoc loc;
};

struct Lexer {
  std::string_view src;
  size_t pos = 0;
  SourceLoc loc;

  void advance(char c) {
    if (c == '\n') {
      ++loc.line;
      loc.col = 1;
    } else {
      ++loc.col;
    }
    ++pos;
  }

  void skip_ws() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '#') {  // comment to end of line
        while (pos < src.size() && src[pos] != '\n') advance(src[pos]);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(c);
      } else {
        break;
      }
    }
  }

  Token next() {
    skip_ws();
    Token t;
    t.loc = loc;
    if (pos >= src.size()) return t;
    char c = src[pos];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::ident;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) ||
              src[pos] == '_')) {
        t.text += src[pos];
        advance(src[pos]);
      }
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::number;
      std::string digits;
      while (pos < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[pos]))) {
        digits += src[pos];
        advance(src[pos]);
      }
      if (digits.size() > 12)
        throw parse_error(t.loc, "integer literal too large",
                          "use a smaller constant");
      t.value = std::stol(digits);
      t.text = digits;
      return t;
    }
    static const std::string punct = "()[]{}=,;^*+-/";
    if (punct.find(c) != std::string::npos) {
      t.kind = Tok::punct;
      t.text = std::string(1, c);
      advance(c);
      return t;
    }
    throw parse_error(t.loc, std::string("unexpected character '") + c + "'",
                      "remove or replace this character");
  }
};

// statement-id spellings accepted after 'check'
const std::map<std::string, std::string>& checker_names() {
  static const std::map<std::string, std::string> m = {
      {"all", "all"},           {"thm_1_1a", "thm-1.1a"},
      {"thm_1_1b", "thm-1.1b"}, {"rem_1_2", "rem-1.2"},
      {"cor_1_3", "cor-1.3"},   {"thm_1_5", "thm-1.5"},
      {"prop_1_8", "prop-1.8"}, {"rem_1_9", "rem-1.9"},
      {"thm_2_5", "thm-2.5"},   {"lem_2_2", "lem-2.2"},
      {"lem_2_3", "lem-2.3"},
  };
  return m;
}

struct Parser {
  Lexer lex;
  Token cur;
  std::set<std::string> rings, quotients, ideals;

  explicit Parser(std::string_view text) : lex{text} { cur = lex.next(); }

  [[noreturn]] void fail(const std::string& msg, const std::string& hint) {
    throw parse_error(cur.loc, msg, hint);
  }

  void bump() { cur = lex.next(); }

  bool at_punct(const std::string& p) const {
    return cur.kind == Tok::punct && cur.text == p;
  }
  bool at_ident(const std::string& w) const {
    return cur.kind == Tok::ident && cur.text == w;
  }

  void expect_punct(const std::string& p, const std::string& hint) {
    if (!at_punct(p)) fail("expected '" + p + "'", hint);
    bump();
  }

  std::string expect_ident(const std::string& what) {
    if (cur.kind != Tok::ident)
      fail("expected " + what, "write an identifier like [a-zA-Z][a-zA-Z0-9_]*");
    std::string s = cur.text;
    bump();
    return s;
  }

  long expect_number(const std::string& what) {
    if (cur.kind != Tok::number) fail("expected " + what, "write an integer");
    long v = cur.value;
    bump();
    return v;
  }

  PolyExpr parse_factor() {
    PolyExpr e;
    e.loc = cur.loc;
    if (at_punct("-")) {
      bump();
      e.kind = PolyExpr::Kind::neg;
      e.args.push_back(parse_factor());
      return e;
    }
    if (cur.kind == Tok::number) {
      e.kind = PolyExpr::Kind::number;
      e.number = cur.value;
      bump();
    } else if (cur.kind == Tok::ident) {
      e.kind = PolyExpr::Kind::variable;
      e.name = cur.text;
      bump();
    } else if (at_punct("(")) {
      bump();
      e = parse_expr();
      expect_punct(")", "close the parenthesized expression");
    } else {
      fail("expected a number, variable or '('",
           "polynomials use infix notation, e.g. x^3*y + 2*t1");
    }
    if (at_punct("^")) {
      SourceLoc l = cur.loc;
      bump();
      long exp = expect_number("an exponent");
      if (exp < 0 || exp > 200)
        throw parse_error(l, "exponent out of range",
                          "exponents must lie in [0, 200]");
      PolyExpr p;
      p.kind = PolyExpr::Kind::pow;
      p.exponent = static_cast<int>(exp);
      p.loc = l;
      p.args.push_back(std::move(e));
      return p;
    }
    return e;
  }

  PolyExpr parse_term() {
    PolyExpr e = parse_factor();
    while (at_punct("*")) {
      SourceLoc l = cur.loc;
      bump();
      PolyExpr rhs = parse_factor();
      PolyExpr m;
      m.kind = PolyExpr::Kind::mul;
      m.loc = l;
      m.args.push_back(std::move(e));
      m.args.push_back(std::move(rhs));
      e = std::move(m);
    }
    return e;
  }

  PolyExpr parse_expr() {
    PolyExpr e = parse_term();
    while (at_punct("+") || at_punct("-")) {
      bool plus = cur.text == "+";
      SourceLoc l = cur.loc;
      bump();
      PolyExpr rhs = parse_term();
      PolyExpr m;
      m.kind = plus ? PolyExpr::Kind::add : PolyExpr::Kind::sub;
      m.loc = l;
      m.args.push_back(std::move(e));
      m.args.push_back(std::move(rhs));
      e = std::move(m);
    }
    return e;
  }

  std::vector<PolyExpr> parse_ideal_args() {
    if (!at_ident("ideal"))
      fail("expected 'ideal'", "ideals are written ideal(f1, f2, ...)");
    bump();
    expect_punct("(", "ideals are written ideal(f1, f2, ...)");
    std::vector<PolyExpr> gens;
    if (!at_punct(")")) {
      gens.push_back(parse_expr());
      while (at_punct(",")) {
        bump();
        gens.push_back(parse_expr());
      }
    }
    expect_punct(")", "close the generator list");
    return gens;
  }

  std::vector<std::string> parse_name_list() {
    expect_punct("[", "variable lists are written [x, y, t1]");
    std::vector<std::string> names;
    if (!at_punct("]")) {
      names.push_back(expect_ident("a variable name"));
      while (at_punct(",")) {
        bump();
        names.push_back(expect_ident("a variable name"));
      }
    }
    expect_punct("]", "close the list");
    return names;
  }

  std::vector<int> parse_int_list() {
    expect_punct("[", "weight lists are written [1, 2, 1]");
    std::vector<int> vals;
    if (!at_punct("]")) {
      vals.push_back(static_cast<int>(expect_number("a weight")));
      while (at_punct(",")) {
        bump();
        vals.push_back(static_cast<int>(expect_number("a weight")));
      }
    }
    expect_punct("]", "close the list");
    return vals;
  }

  RingDecl parse_ring() {
    RingDecl d;
    d.loc = cur.loc;
    bump();  // 'ring'
    d.name = expect_ident("a ring name");
    expect_punct("=", "ring declarations look like ring S = poly(vars=[x,y])");
    if (!at_ident("poly"))
      fail("expected 'poly'", "ring declarations use poly(...)");
    bump();
    expect_punct("(", "ring declarations use poly(...)");
    bool first = true;
    while (!at_punct(")")) {
      if (!first) expect_punct(",", "separate poly() arguments with commas");
      first = false;
      std::string key = expect_ident("an argument name (p, vars, weights, order)");
      expect_punct("=", "poly() arguments are key=value");
      if (key == "p") {
        d.p = static_cast<uint32_t>(expect_number("a prime"));
      } else if (key == "vars") {
        d.vars = parse_name_list();
      } else if (key == "weights") {
        d.weights = parse_int_list();
      } else if (key == "order") {
        d.order = expect_ident("an order name (grevlex or lex)");
        if (d.order != "grevlex" && d.order != "lex")
          fail("unknown order '" + d.order + "'", "use grevlex or lex");
      } else {
        fail("unknown poly() argument '" + key + "'",
             "valid arguments: p, vars, weights, order");
      }
    }
    expect_punct(")", "close poly(...)");
    if (d.vars.empty())
      throw parse_error(d.loc, "ring needs vars=[...]",
                        "declare at least one variable");
    return d;
  }

  CheckStmt parse_check() {
    CheckStmt c;
    c.loc = cur.loc;
    bump();  // 'check'
    std::string name = expect_ident("a checker name");
    auto it = checker_names().find(name);
    if (it == checker_names().end())
      fail("unknown checker '" + name + "'",
           "use all or one of thm_1_1a, thm_1_1b, rem_1_2, cor_1_3, thm_1_5, "
           "prop_1_8, rem_1_9, thm_2_5, lem_2_2, lem_2_3");
    c.checker = it->second;
    expect_punct("(", "check statements look like check all(R, I)");
    c.quotient = expect_ident("a quotient ring name");
    if (!quotients.count(c.quotient))
      fail("undefined quotient ring '" + c.quotient + "'",
           "declare it first: " + c.quotient + " = S / ideal(...)");
    expect_punct(",", "check needs a quotient ring and an ideal");
    c.ideal = expect_ident("an ideal name");
    if (!ideals.count(c.ideal))
      fail("undefined ideal '" + c.ideal + "'",
           "declare it first: " + c.ideal + " = ideal(...)");
    while (at_punct(",")) {
      bump();
      std::string key = expect_ident("an option (J, locflag, s)");
      expect_punct("=", "check options are key=value");
      if (key == "J") {
        c.j_gens = parse_ideal_args();
      } else if (key == "locflag") {
        std::string v = expect_ident("true or false");
        if (v != "true" && v != "false")
          fail("locflag must be true or false", "write locflag=true");
        c.locflag = (v == "true");
      } else if (key == "s") {
        c.s = static_cast<int>(expect_number("a generator count"));
      } else {
        fail("unknown check option '" + key + "'",
             "valid options: J=ideal(...), locflag=true, s=N");
      }
    }
    expect_punct(")", "close the check statement");
    return c;
  }

  CorpusStmt parse_corpus() {
    CorpusStmt c;
    c.loc = cur.loc;
    bump();  // 'corpus'
    if (!at_ident("monomial"))
      fail("expected 'monomial'", "only corpus monomial(...) is supported");
    bump();
    expect_punct("(", "corpus statements look like corpus monomial(vars=3, "
                      "maxdeg=3, count=20, seed=7)");
    bool first = true;
    while (!at_punct(")")) {
      if (!first) expect_punct(",", "separate arguments with commas");
      first = false;
      std::string key = expect_ident("an argument (vars, maxdeg, count, seed)");
      expect_punct("=", "corpus arguments are key=value");
      long v = expect_number("a value");
      if (key == "vars") {
        if (v < 1 || v > 6)
          fail("vars out of range", "use between 1 and 6 variables");
        c.vars = static_cast<int>(v);
      } else if (key == "maxdeg") {
        if (v < 1 || v > 8) fail("maxdeg out of range", "use 1..8");
        c.maxdeg = static_cast<int>(v);
      } else if (key == "count") {
        if (v < 1 || v > 10000) fail("count out of range", "use 1..10000");
        c.count = static_cast<int>(v);
      } else if (key == "seed") {
        c.seed = static_cast<uint64_t>(v);
      } else {
        fail("unknown corpus argument '" + key + "'",
             "valid arguments: vars, maxdeg, count, seed");
      }
    }
    expect_punct(")", "close corpus(...)");
    return c;
  }

  SessionAST parse() {
    SessionAST ast;
    while (cur.kind != Tok::end) {
      if (at_ident("ring")) {
        RingDecl d = parse_ring();
        rings.insert(d.name);
        ast.statements.push_back(std::move(d));
      } else if (at_ident("check")) {
        ast.statements.push_back(parse_check());
      } else if (at_ident("corpus")) {
        ast.statements.push_back(parse_corpus());
      } else if (cur.kind == Tok::ident) {
        // quotient or ideal declaration
        SourceLoc l = cur.loc;
        std::string name = expect_ident("a name");
        expect_punct("=", "declarations look like name = ...");
        if (cur.kind == Tok::ident && cur.text == "ideal") {
          IdealDecl d;
          d.loc = l;
          d.name = name;
          d.gens = parse_ideal_args();
          ideals.insert(d.name);
          ast.statements.push_back(std::move(d));
        } else {
          QuotientDecl d;
          d.loc = l;
          d.name = name;
          d.ring_name = expect_ident("a ring name");
          if (!rings.count(d.ring_name))
            throw parse_error(l, "undefined ring '" + d.ring_name + "'",
                              "declare it first: ring " + d.ring_name +
                                  " = poly(vars=[...])");
          expect_punct("/", "quotients look like R = S / ideal(...)");
          d.gens = parse_ideal_args();
          quotients.insert(d.name);
          ast.statements.push_back(std::move(d));
        }
      } else {
        fail("expected a statement",
             "statements start with ring, check, corpus or a declaration "
             "name");
      }
      expect_punct(";", "terminate every statement with ';'");
    }
    return ast;
  }
};

}  // namespace

SessionAST parse_session(std::string_view text) {
  Parser p(text);
  return p.parse();
}

}  // namespace blowup
