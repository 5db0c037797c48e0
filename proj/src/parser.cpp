#include "abdual/parser.hpp"

#include <cctype>
#include <map>

namespace abdual {
namespace {

bool name_start(char c) { return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)); }
bool var_start(char c) { return std::isupper(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '*' || c == '\'';
}

struct Position {
  int line = 1;
  int column = 1;
};

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  Position pos() const { return pos_; }
  bool eof() {
    skip_space();
    return i_ >= text_.size();
  }
  char peek() {
    skip_space();
    return i_ < text_.size() ? text_[i_] : '\0';
  }
  char peek_raw(std::size_t ahead = 0) const { return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0'; }
  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }
  bool accept(const std::string& tok) {
    skip_space();
    if (text_.compare(i_, tok.size(), tok) != 0) return false;
    for (std::size_t k = 0; k < tok.size(); ++k) advance();
    return true;
  }
  void expect(const std::string& tok) {
    if (!accept(tok)) fail("expected '" + tok + "'");
  }
  [[noreturn]] void fail(const std::string& msg) {
    skip_space();
    throw ParseError(msg, pos_.line, pos_.column);
  }

  // Reads a ground name, including opaque argument lists such as edge(a,b).
  std::string name() {
    skip_space();
    char c = peek_raw();
    if (var_start(c)) throw NonGroundError("variable in ground program", pos_.line, pos_.column);
    if (!name_start(c)) fail("expected a name");
    std::string out;
    while (name_char(peek_raw())) {
      out += peek_raw();
      advance();
    }
    if (peek_raw() == '(' && out != "not") {
      advance();
      out += '(';
      for (bool first = true; !accept(")"); first = false) {
        if (!first) {
          expect(",");
          out += ',';
        }
        out += name();
      }
      out += ')';
    }
    return out;
  }

 private:
  void skip_space() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '%') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Position pos_;
};

struct Located {
  Literal lit;
  Position at;
};

class Parser {
 public:
  Parser(const std::string& text, bool strict) : in_(text), strict_(strict) {}

  Located literal() {
    in_.peek();
    Position at = in_.pos();
    bool naf = false;
    bool paren = false;
    if (keyword_not()) {
      naf = true;
      paren = in_.accept("(");
    }
    bool negated = in_.accept("-");
    Position name_at = in_.pos();
    std::string n = in_.name();
    if (n == "not") in_.fail("unexpected 'not'");
    if (paren) in_.expect(")");
    if (strict_ && is_reserved_symbol(n))
      throw ReservedSymbolError("reserved symbol '" + n + "'", name_at.line, name_at.column);
    if (negated && is_reserved_symbol(n))
      throw ReservedSymbolError("reserved symbol '" + n + "' cannot be explicitly negated", name_at.line, name_at.column);
    return {Literal({n, negated}, naf), at};
  }

  std::vector<Literal> body() {
    std::vector<Literal> out;
    do out.push_back(literal().lit);
    while (in_.accept(","));
    return out;
  }

  void statement(AbductiveFramework& fw, std::vector<std::pair<ObjectiveLiteral, Position>>& heads) {
    if (in_.accept(":-")) {
      Rule r{pos(atom(sym::kBottom)), body()};
      (strict_ ? fw.integrity : fw.program.rules).push_back(std::move(r));
      in_.expect(".");
      return;
    }
    if (strict_ && keyword_abducible()) {
      Located l = literal();
      if (l.lit.naf) throw ParseError("abducible must be an objective literal", l.at.line, l.at.column);
      fw.abducibles.insert(l.lit.objective);
      fw.abducibles.insert(conj_e(l.lit.objective));
      in_.expect(".");
      return;
    }
    Located h = literal();
    if (strict_ && h.lit.naf) throw ParseError("rule head must be an objective literal", h.at.line, h.at.column);
    Rule r{h.lit, {}};
    if (in_.accept(":-")) r.body = body();
    in_.expect(".");
    heads.emplace_back(h.lit.objective, h.at);
    fw.program.rules.push_back(std::move(r));
  }

  AbductiveFramework document() {
    AbductiveFramework fw;
    std::vector<std::pair<ObjectiveLiteral, Position>> heads;
    while (!in_.eof()) statement(fw, heads);
    for (const auto& [o, at] : heads)
      if (fw.abducibles.count(o)) throw AbducibleHeadError("rule head '" + to_string(o) + "' is abducible", at.line, at.column);
    return fw;
  }

  Literal single() {
    Located l = literal();
    if (in_.peek() == ',' || in_.peek() == ':') {
      Position at = in_.pos();
      throw QueryShapeError("query must be a single literal", at.line, at.column);
    }
    in_.accept(".");
    if (!in_.eof()) in_.fail("trailing input after query");
    return l.lit;
  }

 private:
  bool keyword(const std::string& kw, bool allow_paren) {
    in_.peek();
    for (std::size_t k = 0; k < kw.size(); ++k)
      if (in_.peek_raw(k) != kw[k]) return false;
    char after = in_.peek_raw(kw.size());
    bool ok = std::isspace(static_cast<unsigned char>(after)) || (allow_paren && after == '(');
    if (ok) in_.accept(kw);
    return ok;
  }
  bool keyword_not() { return keyword("not", true); }
  bool keyword_abducible() { return keyword("abducible", false); }

  Reader in_;
  bool strict_;
};

std::string join_body(const std::vector<Literal>& body) {
  std::string out;
  for (std::size_t k = 0; k < body.size(); ++k) out += (k ? ", " : "") + to_string(body[k]);
  return out;
}

}  // namespace

AbductiveFramework parse_framework(const std::string& text) {
  AbductiveFramework fw = Parser(text, true).document();
  fw.validate();
  return fw;
}

Program parse_program(const std::string& text) {
  return Parser(text, false).document().program;
}

Literal parse_query(const std::string& text) { return Parser(text, true).single(); }

std::string serialize(const Rule& r) {
  if (r.body.empty()) return to_string(r.head) + ".";
  if (r.head == pos(atom(sym::kBottom))) return ":- " + join_body(r.body) + ".";
  return to_string(r.head) + " :- " + join_body(r.body) + ".";
}

std::string serialize(const Program& p) {
  std::string out;
  for (const auto& r : p.rules) out += serialize(r) + "\n";
  return out;
}

std::string serialize(const AbductiveFramework& fw) {
  std::string out = serialize(fw.program);
  for (const auto& a : fw.abducibles)
    if (!a.negated) out += "abducible " + to_string(a) + ".\n";
  for (const auto& r : fw.integrity) out += serialize(r) + "\n";
  return out;
}

}  // namespace abdual
