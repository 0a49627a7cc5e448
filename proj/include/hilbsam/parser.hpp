#pragma once

// Text input: ring descriptors ("Q[x,y]"), polynomial expressions,
// generator lists with the m^k shorthand, and session files.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := atom ['^' nat]
//   atom   := nat ['/' nat] | variable | '(' expr ')'
//
// In a generator list, an item that is exactly `m` or `m^k` (when m is not
// a ring variable) expands to every monomial of total degree k.

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hilbsam/polynomial.hpp"

namespace hilbsam {

namespace detail {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line0 = 1;    // line of text[0]
  int column0 = 1;  // column of text[0]

  int line() const {
    int l = line0;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i)
      if (text[i] == '\n') ++l;
    return l;
  }
  int column() const {
    std::size_t start = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    if (start == std::string::npos || pos == 0) return column0 + static_cast<int>(pos);
    return static_cast<int>(pos - start);
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line(), column()); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  Integer natural() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return Integer(text.substr(start, pos - start));
  }
  unsigned exponent() {
    std::size_t save = pos;
    Integer n = natural();
    if (n > 65535) {
      pos = save;
      fail("exponent too large");
    }
    return static_cast<unsigned>(n.get_ui());
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
    }
    if (start == pos) fail("expected a variable name");
    return text.substr(start, pos - start);
  }
};

template <Field K>
class PolynomialParser {
 public:
  PolynomialParser(Cursor& c, const PolyRingPtr& ring) : c_(c), ring_(ring) {}

  Polynomial<K> expression() {
    Polynomial<K> acc(ring_);
    bool negate = false;
    if (c_.accept('-')) negate = true;
    else c_.accept('+');
    Polynomial<K> t = term();
    acc = negate ? acc - t : acc + t;
    for (;;) {
      if (c_.accept('+')) acc = acc + term();
      else if (c_.accept('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

 private:
  bool starts_factor() {
    char ch = c_.peek();
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '(';
  }

  Polynomial<K> term() {
    Polynomial<K> acc = factor();
    for (;;) {
      if (c_.accept('*')) acc = acc * factor();
      else if (starts_factor()) acc = acc * factor();
      else break;
    }
    return acc;
  }

  Polynomial<K> factor() {
    Polynomial<K> base = atom();
    if (c_.accept('^')) base = base.pow(c_.exponent());
    return base;
  }

  Polynomial<K> atom() {
    char ch = c_.peek();
    if (ch == '(') {
      c_.accept('(');
      Polynomial<K> inner = expression();
      if (!c_.accept(')')) c_.fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num = c_.natural();
      Integer den = 1;
      if (c_.accept('/')) {
        std::size_t save = c_.pos;
        den = c_.natural();
        if (den == 0) {
          c_.pos = save;
          c_.fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial<K>::constant(ring_, FieldTraits<K>::from_rational(q, ring_->field));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t save = c_.pos;
      c_.skip_ws();
      save = c_.pos;
      std::string name = c_.identifier();
      auto idx = ring_->index_of(name);
      if (!idx) {
        c_.pos = save;
        c_.fail("unknown variable '" + name + "'");
      }
      return Polynomial<K>::variable(ring_, *idx);
    }
    if (ch == '\0') c_.fail("unexpected end of input");
    c_.fail(std::string("unexpected character '") + ch + "'");
  }

  Cursor& c_;
  const PolyRingPtr& ring_;
};

}  // namespace detail

template <Field K>
Polynomial<K> parse_polynomial(const std::string& text, const PolyRingPtr& ring, int line = 1,
                               int column = 1) {
  detail::Cursor c{text, 0, line, column};
  detail::PolynomialParser<K> p(c, ring);
  Polynomial<K> out = p.expression();
  if (!c.at_end()) c.fail(std::string("unexpected character '") + c.peek() + "'");
  return out;
}

/// Comma-separated generators; `m^k` expands to the degree-k monomials.
template <Field K>
std::vector<Polynomial<K>> parse_generators(const std::string& text, const PolyRingPtr& ring,
                                            int line = 1, int column = 1) {
  std::vector<Polynomial<K>> out;
  detail::Cursor c{text, 0, line, column};
  const bool shorthand = !ring->index_of("m");
  do {
    c.skip_ws();
    std::size_t item_start = c.pos;
    std::size_t item_end = text.find(',', item_start);
    if (item_end == std::string::npos) item_end = text.size();
    std::string item = text.substr(item_start, item_end - item_start);
    std::string compact;
    for (char ch : item)
      if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    if (shorthand && (compact == "m" || compact.rfind("m^", 0) == 0)) {
      unsigned k = 1;
      if (compact != "m") {
        detail::Cursor ec{compact, 2, 1, 1};
        k = ec.exponent();
        if (!ec.at_end()) {
          c.pos = item_start;
          c.fail("malformed maximal-ideal power '" + compact + "'");
        }
      }
      for (const auto& m : monomials_of_degree(ring->arity(), k))
        out.push_back(Polynomial<K>::monomial(ring, m));
      c.pos = item_end;
    } else {
      detail::PolynomialParser<K> p(c, ring);
      out.push_back(p.expression());
      c.skip_ws();
      if (c.pos < text.size() && text[c.pos] != ',')
        c.fail(std::string("unexpected character '") + text[c.pos] + "'");
    }
    if (c.at_end()) break;
  } while (c.accept(','));
  if (!c.at_end()) c.fail("expected ','");
  if (out.empty()) c.fail("empty generator list");
  return out;
}

/// "Q[x,y,z]": a field tag (Q, QQ or k) followed by bracketed variables.
inline PolyRingPtr parse_ring(const std::string& text, FieldDescriptor field = FieldDescriptor::rationals(),
                              int line = 1) {
  detail::Cursor c{text, 0, line, 1};
  std::string tag = c.identifier();
  if (tag != "Q" && tag != "QQ" && tag != "k") c.fail("unknown field '" + tag + "' (use Q)");
  if (!c.accept('[')) c.fail("expected '['");
  std::vector<std::string> vars;
  if (!c.accept(']')) {
    do {
      vars.push_back(c.identifier());
    } while (c.accept(','));
    if (!c.accept(']')) c.fail("expected ']'");
  }
  if (!c.at_end()) c.fail("trailing characters after ring");
  try {
    return make_poly_ring(std::move(vars), field);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), line, 1);
  }
}

/// "q" or "fp:<prime>".
inline FieldDescriptor parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return FieldDescriptor::rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.size() > 10 ||
        !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw ParseError("malformed prime '" + digits + "'", 1, 4);
    return FieldDescriptor::prime(std::stoull(digits));
  }
  throw ParseError("unknown field '" + text + "' (use q or fp:<p>)", 1, 1);
}

inline OrderKind parse_order(const std::string& text) {
  if (text == "degrevlex") return OrderKind::degrevlex;
  if (text == "deglex") return OrderKind::deglex;
  if (text == "lex") return OrderKind::lex;
  throw ParseError("unknown monomial order '" + text + "'", 1, 1);
}

// ---------------------------------------------------------------------------
// Session files.
//
//   # comment
//   ring Q[x,y]
//   field q | fp:<p>
//   order degrevlex | deglex | lex
//   mod <polynomial>
//   dim <n>
//   ideal <name> = <generators>
//   curve <name> = <polynomial>
//   <command> <arguments...>

struct SessionCommand {
  std::string name;
  std::vector<std::string> args;
  int line = 0;
};

struct Session {
  std::string ring;
  std::string field = "q";
  std::string order = "degrevlex";
  std::optional<std::string> modulus;
  std::optional<unsigned> dimension;
  std::map<std::string, std::pair<std::string, int>> ideals;  // name -> (text, line)
  std::map<std::string, std::pair<std::string, int>> curves;
  std::vector<SessionCommand> commands;
};

inline const std::vector<std::string>& session_commands() {
  static const std::vector<std::string> names{"coeffs", "hvector", "hilbert-values", "check-hhc",
                                              "check-powers", "curve-resolve", "delta", "hironaka"};
  return names;
}

/// Parses and validates declarations; generator text is kept verbatim and
/// parsed when the ring is built.
inline Session parse_session(const std::string& text) {
  Session s;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool ring_seen = false;
  auto fail = [&](const std::string& what, int col = 1) -> void { throw ParseError(what, lineno, col); };
  auto strip = [](std::string v) {
    auto b = v.find_first_not_of(" \t\r");
    auto e = v.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::size_t sp = line.find_first_of(" \t");
    std::string head = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : strip(line.substr(sp));
    if (head == "ring") {
      if (ring_seen) fail("ring declared twice");
      s.ring = rest;
      ring_seen = true;
      continue;
    }
    if (head == "field" || head == "order") {
      if (ring_seen && head == "field") fail("field must be declared before the ring");
      (head == "field" ? s.field : s.order) = rest;
      continue;
    }
    if (!ring_seen) fail("'" + head + "' before the ring declaration");
    if (head == "mod") {
      s.modulus = rest;
    } else if (head == "dim") {
      if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        fail("dim expects a non-negative integer");
      s.dimension = static_cast<unsigned>(std::stoul(rest));
    } else if (head == "ideal" || head == "curve") {
      auto eq = rest.find('=');
      if (eq == std::string::npos) fail("expected '<name> = ...'");
      std::string name = strip(rest.substr(0, eq));
      if (name.empty()) fail("missing name");
      auto& table = head == "ideal" ? s.ideals : s.curves;
      if (s.ideals.count(name) || s.curves.count(name)) fail("'" + name + "' already declared");
      table[name] = {strip(rest.substr(eq + 1)), lineno};
    } else if (std::find(session_commands().begin(), session_commands().end(), head) !=
               session_commands().end()) {
      SessionCommand cmd{head, {}, lineno};
      std::istringstream words(rest);
      for (std::string w; words >> w;) cmd.args.push_back(w);
      for (const auto& a : cmd.args) {
        bool numeric = !a.empty() && std::all_of(a.begin(), a.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
        if (!numeric && !s.ideals.count(a) && !s.curves.count(a)) fail("undeclared identifier '" + a + "'");
      }
      s.commands.push_back(std::move(cmd));
    } else {
      fail("unknown statement '" + head + "'");
    }
  }
  if (!ring_seen) throw ParseError("session declares no ring", lineno == 0 ? 1 : lineno, 1);
  return s;
}

}  // namespace hilbsam
