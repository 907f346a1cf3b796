#pragma once
// Line-oriented scenario files: one ring declaration, named ideals, named
// filtrations, and an ordered task list. Polynomial text parses into a
// field-independent expression tree that is evaluated once the coefficient
// field is configured, so the same scenario runs over GF(p) or the rationals.

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fibercone/errors.hpp"
#include "fibercone/polynomial.hpp"

namespace fibercone {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum Kind { num, var, add, sub, mul, pw } kind = num;
  long long value = 0;    // num
  std::size_t index = 0;  // var
  unsigned exponent = 0;  // pw
  ExprPtr a, b;
};

struct FiltrationDecl {
  enum Kind { adic, seeded, rescaled, quotient } kind = adic;
  std::string ideal;               // adic base / quotient divisor
  std::vector<std::string> seeds;  // seeded terms, indices 1..u
  unsigned u = 0;
  bool unchecked = false;
  std::string base;  // source filtration for rescaled/quotient
  unsigned t = 1;    // rescale factor
  std::size_t line = 0;
};

struct TaskDecl {
  std::string kind;
  std::vector<std::string> args;
  std::size_t line = 0;
};

struct Scenario {
  std::vector<std::string> vars;
  std::vector<ExprPtr> relations;
  std::vector<std::pair<std::string, std::vector<ExprPtr>>> ideals;
  std::vector<std::pair<std::string, FiltrationDecl>> filtrations;
  std::vector<TaskDecl> tasks;

  bool has_ideal(const std::string& n) const {
    for (auto& p : ideals)
      if (p.first == n) return true;
    return false;
  }
  bool has_filtration(const std::string& n) const {
    for (auto& p : filtrations)
      if (p.first == n) return true;
    return false;
  }
  const std::vector<ExprPtr>& ideal_exprs(const std::string& n) const {
    for (auto& p : ideals)
      if (p.first == n) return p.second;
    throw precondition_error("unknown ideal: " + n);
  }
};

namespace detail {

/* Character cursor over one polynomial expression with column reporting. */
struct ExprCursor {
  const std::string& s;
  std::size_t pos = 0;
  std::size_t line;
  std::size_t col0;  // column of s[0] in the scenario line

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(line, "column " + std::to_string(col0 + pos) + ": " + msg);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

inline ExprPtr make_expr(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

inline ExprPtr parse_sum(ExprCursor& c, const std::vector<std::string>& vars);

inline long long parse_integer(ExprCursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  long long v = 0;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    v = v * 10 + (c.s[c.pos] - '0');
    if (v > 1000000000000000ll) c.fail("integer literal too large");
    ++c.pos;
  }
  if (c.pos == start) c.fail("expected an integer");
  return v;
}

inline ExprPtr parse_atom(ExprCursor& c, const std::vector<std::string>& vars) {
  char ch = c.peek();
  if (ch == '(') {
    ++c.pos;
    auto inner = parse_sum(c, vars);
    if (c.peek() != ')') c.fail("expected ')'");
    ++c.pos;
    return inner;
  }
  if (std::isdigit(static_cast<unsigned char>(ch)))
    return make_expr({Expr::num, parse_integer(c)});
  if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
    std::size_t start = c.pos;
    while (c.pos < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_'))
      ++c.pos;
    std::string name = c.s.substr(start, c.pos - start);
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) {
        Expr e;
        e.kind = Expr::var;
        e.index = i;
        return make_expr(std::move(e));
      }
    c.pos = start;
    c.fail("unknown variable '" + name + "'");
  }
  c.fail(ch == '\0' ? "unexpected end of expression"
                    : std::string("unexpected character '") + ch + "'");
}

inline ExprPtr parse_power(ExprCursor& c, const std::vector<std::string>& vars) {
  auto base = parse_atom(c, vars);
  if (c.peek() == '^') {
    ++c.pos;
    long long e = parse_integer(c);
    if (e > 64) c.fail("exponent too large");
    Expr p;
    p.kind = Expr::pw;
    p.exponent = static_cast<unsigned>(e);
    p.a = base;
    return make_expr(std::move(p));
  }
  return base;
}

inline bool starts_factor(char ch) {
  return ch == '(' || ch == '_' || std::isdigit(static_cast<unsigned char>(ch)) ||
         std::isalpha(static_cast<unsigned char>(ch));
}

inline ExprPtr parse_product(ExprCursor& c, const std::vector<std::string>& vars) {
  bool negate = false;
  while (c.peek() == '-' || c.peek() == '+') {
    if (c.peek() == '-') negate = !negate;
    ++c.pos;
  }
  auto acc = parse_power(c, vars);
  for (;;) {
    char ch = c.peek();
    if (ch == '*') {
      ++c.pos;
      if (!starts_factor(c.peek())) c.fail("expected a factor after '*'");
    } else if (!starts_factor(ch)) {
      break;
    }
    Expr m;
    m.kind = Expr::mul;
    m.a = acc;
    m.b = parse_power(c, vars);
    acc = make_expr(std::move(m));
  }
  if (negate) {
    Expr s;
    s.kind = Expr::sub;
    s.a = make_expr({Expr::num, 0});
    s.b = acc;
    acc = make_expr(std::move(s));
  }
  return acc;
}

inline ExprPtr parse_sum(ExprCursor& c, const std::vector<std::string>& vars) {
  auto acc = parse_product(c, vars);
  for (;;) {
    char ch = c.peek();
    if (ch != '+' && ch != '-') return acc;
    ++c.pos;
    Expr e;
    e.kind = (ch == '+') ? Expr::add : Expr::sub;
    e.a = acc;
    e.b = parse_product(c, vars);
    acc = make_expr(std::move(e));
  }
}

}  // namespace detail

/* Parses one polynomial expression; `col0` is where it starts in its line. */
inline ExprPtr parse_polynomial(const std::string& text,
                                const std::vector<std::string>& vars,
                                std::size_t line, std::size_t col0 = 1) {
  detail::ExprCursor c{text, 0, line, col0};
  auto e = detail::parse_sum(c, vars);
  if (!c.eof()) c.fail("trailing input after expression");
  return e;
}

template <class K>
Polynomial<K> eval_expr(const K& k, std::size_t nvars, const ExprPtr& e) {
  switch (e->kind) {
    case Expr::num:
      return p_const(k, k.from_int(e->value), nvars);
    case Expr::var: {
      Monomial m(nvars);
      m.e[e->index] = 1;
      return p_monomial(k, m, k.one());
    }
    case Expr::add:
      return p_add(k, eval_expr(k, nvars, e->a), eval_expr(k, nvars, e->b));
    case Expr::sub:
      return p_sub(k, eval_expr(k, nvars, e->a), eval_expr(k, nvars, e->b));
    case Expr::mul:
      return p_mul(k, eval_expr(k, nvars, e->a), eval_expr(k, nvars, e->b));
    case Expr::pw: {
      auto acc = p_const(k, k.one(), nvars);
      for (unsigned i = 0; i < e->exponent; ++i)
        acc = p_mul(k, acc, eval_expr(k, nvars, e->a));
      return acc;
    }
  }
  throw precondition_error("malformed expression tree");
}

inline std::string expr_to_string(const ExprPtr& e,
                                  const std::vector<std::string>& vars) {
  auto wrap = [&](const ExprPtr& x, bool need) {
    std::string s = expr_to_string(x, vars);
    return need ? "(" + s + ")" : s;
  };
  switch (e->kind) {
    case Expr::num:
      return std::to_string(e->value);
    case Expr::var:
      return vars[e->index];
    case Expr::add:
      return expr_to_string(e->a, vars) + " + " + expr_to_string(e->b, vars);
    case Expr::sub:
      return expr_to_string(e->a, vars) + " - " +
             wrap(e->b, e->b->kind == Expr::add || e->b->kind == Expr::sub);
    case Expr::mul: {
      auto low = [](const ExprPtr& x) {
        return x->kind == Expr::add || x->kind == Expr::sub;
      };
      return wrap(e->a, low(e->a)) + "*" + wrap(e->b, low(e->b));
    }
    case Expr::pw:
      return wrap(e->a, e->a->kind != Expr::var && e->a->kind != Expr::num) +
             "^" + std::to_string(e->exponent);
  }
  return "";
}

namespace detail {

inline const std::vector<std::string>& reserved_words() {
  static const std::vector<std::string> w{
      "ring", "ideal",  "filtration", "task",      "mod",
      "adic", "seeded", "rescale",    "quotient",  "u",
      "unchecked"};
  return w;
}

inline bool valid_name(const std::string& n) {
  if (n.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(n[0])) && n[0] != '_') return false;
  for (char ch : n)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  for (auto& w : reserved_words())
    if (w == n) return false;
  return true;
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(strip(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

/* `head(arg1, arg2, ...)` -> {head, {args}}; fails on anything else. */
inline std::pair<std::string, std::vector<std::string>> parse_call(
    const std::string& text, std::size_t line) {
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw parse_error(line, "expected a constructor call, got '" + text + "'");
  std::string head = strip(text.substr(0, open));
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  return {head, split_on(inner, ',')};
}

}  // namespace detail

inline Scenario parse_scenario(const std::string& text) {
  Scenario s;
  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
      if (i == text.size() || text[i] == '\n') {
        lines.push_back(text.substr(start, i - start));
        start = i + 1;
      }
  }
  bool have_ring = false;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t line = li + 1;
    std::string raw = lines[li];
    if (auto h = raw.find('#'); h != std::string::npos) raw = raw.substr(0, h);
    raw = detail::strip(raw);
    if (raw.empty()) continue;

    auto eq = raw.find('=');
    auto head_tokens = detail::split_ws(eq == std::string::npos ? raw : raw.substr(0, eq));
    if (head_tokens.empty()) throw parse_error(line, "empty statement");
    const std::string& kw = head_tokens[0];

    if (kw == "ring") {
      if (have_ring) throw parse_error(line, "duplicate ring declaration");
      if (eq != std::string::npos)
        throw parse_error(line, "'=' is not part of a ring declaration");
      std::size_t i = 1;
      while (i < head_tokens.size() && head_tokens[i] != "mod") {
        if (!detail::valid_name(head_tokens[i]))
          throw parse_error(line, "invalid variable name '" + head_tokens[i] + "'");
        for (auto& v : s.vars)
          if (v == head_tokens[i])
            throw parse_error(line, "duplicate variable '" + head_tokens[i] + "'");
        s.vars.push_back(head_tokens[i]);
        ++i;
      }
      if (s.vars.empty()) throw parse_error(line, "ring needs at least one variable");
      if (i < head_tokens.size()) {  // mod <poly>, <poly>, ...
        auto mod_pos = raw.find(" mod ");
        if (mod_pos == std::string::npos) mod_pos = raw.find("\tmod ");
        std::string rel_text = raw.substr(mod_pos + 5);
        for (auto& piece : detail::split_on(rel_text, ',')) {
          if (piece.empty()) throw parse_error(line, "empty relation");
          s.relations.push_back(parse_polynomial(piece, s.vars, line));
        }
      }
      have_ring = true;
      continue;
    }

    if (!have_ring)
      throw parse_error(line, "the ring must be declared before '" + kw + "'");

    if (kw == "ideal") {
      if (head_tokens.size() != 2 || eq == std::string::npos)
        throw parse_error(line, "expected: ideal <name> = <poly>, ...");
      const std::string& name = head_tokens[1];
      if (!detail::valid_name(name))
        throw parse_error(line, "invalid ideal name '" + name + "'");
      if (s.has_ideal(name) || s.has_filtration(name))
        throw parse_error(line, "duplicate name '" + name + "'");
      std::vector<ExprPtr> gens;
      for (auto& piece : detail::split_on(raw.substr(eq + 1), ',')) {
        if (piece.empty()) throw parse_error(line, "empty generator");
        gens.push_back(parse_polynomial(piece, s.vars, line));
      }
      s.ideals.emplace_back(name, std::move(gens));
      continue;
    }

    if (kw == "filtration") {
      if (head_tokens.size() != 2 || eq == std::string::npos)
        throw parse_error(line, "expected: filtration <name> = <constructor>");
      const std::string& name = head_tokens[1];
      if (!detail::valid_name(name))
        throw parse_error(line, "invalid filtration name '" + name + "'");
      if (s.has_ideal(name) || s.has_filtration(name))
        throw parse_error(line, "duplicate name '" + name + "'");
      auto [head, args] = detail::parse_call(detail::strip(raw.substr(eq + 1)), line);
      FiltrationDecl d;
      d.line = line;
      if (head == "adic") {
        d.kind = FiltrationDecl::adic;
        if (args.size() != 1)
          throw parse_error(line, "adic takes one ideal");
        if (!s.has_ideal(args[0]))
          throw parse_error(line, "undeclared ideal '" + args[0] + "'");
        d.ideal = args[0];
      } else if (head == "seeded") {
        d.kind = FiltrationDecl::seeded;
        if (args.empty() || args[0].empty() || args[0].front() != '[')
          throw parse_error(line, "seeded takes [<ideal>; ...], u=<k>");
        // re-split: the bracket list may itself contain no commas, but the
        // call splitter already cut on ','; rebuild from the raw argument text
        auto inner = detail::strip(raw.substr(eq + 1));
        auto lb = inner.find('[');
        auto rb = inner.find(']');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
          throw parse_error(line, "seeded takes [<ideal>; ...], u=<k>");
        for (auto& piece : detail::split_on(inner.substr(lb + 1, rb - lb - 1), ';')) {
          if (piece.empty()) throw parse_error(line, "empty seed entry");
          if (!s.has_ideal(piece))
            throw parse_error(line, "undeclared ideal '" + piece + "'");
          d.seeds.push_back(piece);
        }
        auto tail = detail::split_on(inner.substr(rb + 1, inner.size() - rb - 2), ',');
        bool have_u = false;
        for (auto& piece : tail) {
          if (piece.empty()) continue;
          if (piece == "unchecked") {
            d.unchecked = true;
          } else if (piece.rfind("u=", 0) == 0) {
            d.u = static_cast<unsigned>(std::stoul(piece.substr(2)));
            have_u = true;
          } else {
            throw parse_error(line, "unexpected seeded argument '" + piece + "'");
          }
        }
        if (!have_u) throw parse_error(line, "seeded needs u=<k>");
        if (d.u != d.seeds.size())
          throw parse_error(line, "u must equal the number of seeds");
      } else if (head == "rescale") {
        d.kind = FiltrationDecl::rescaled;
        if (args.size() != 2)
          throw parse_error(line, "rescale takes (<filtration>, <factor>)");
        if (!s.has_filtration(args[0]))
          throw parse_error(line, "undeclared filtration '" + args[0] + "'");
        d.base = args[0];
        try {
          d.t = static_cast<unsigned>(std::stoul(args[1]));
        } catch (...) {
          throw parse_error(line, "invalid rescale factor '" + args[1] + "'");
        }
        if (d.t == 0) throw parse_error(line, "rescale factor must be positive");
      } else if (head == "quotient") {
        d.kind = FiltrationDecl::quotient;
        if (args.size() != 2)
          throw parse_error(line, "quotient takes (<filtration>, <ideal>)");
        if (!s.has_filtration(args[0]))
          throw parse_error(line, "undeclared filtration '" + args[0] + "'");
        if (!s.has_ideal(args[1]))
          throw parse_error(line, "undeclared ideal '" + args[1] + "'");
        d.base = args[0];
        d.ideal = args[1];
      } else {
        throw parse_error(line, "unknown filtration constructor '" + head + "'");
      }
      s.filtrations.emplace_back(name, std::move(d));
      continue;
    }

    if (kw == "task") {
      if (eq != std::string::npos)
        throw parse_error(line, "'=' is not part of a task");
      if (head_tokens.size() < 2) throw parse_error(line, "task needs a kind");
      TaskDecl t;
      t.kind = head_tokens[1];
      t.line = line;
      for (std::size_t i = 2; i < head_tokens.size(); ++i)
        t.args.push_back(head_tokens[i]);
      struct Shape {
        const char* kind;
        std::size_t filts, ideals;
      };
      static const Shape shapes[] = {
          {"report", 1, 1},      {"multiplicity", 1, 1}, {"cm", 1, 1},
          {"spread", 1, 0},      {"reduction", 1, 1},    {"fc-sequence", 1, 1},
          {"cor43-scan", 1, 0}};
      const Shape* shape = nullptr;
      for (auto& sh : shapes)
        if (t.kind == sh.kind) shape = &sh;
      if (!shape) throw parse_error(line, "unknown task kind '" + t.kind + "'");
      if (t.args.size() != shape->filts + shape->ideals)
        throw parse_error(line, "task " + t.kind + " takes " +
                                    std::to_string(shape->filts + shape->ideals) +
                                    " argument(s)");
      if (!s.has_filtration(t.args[0]))
        throw parse_error(line, "undeclared filtration '" + t.args[0] + "'");
      if (shape->ideals == 1 && !s.has_ideal(t.args[1]))
        throw parse_error(line, "undeclared ideal '" + t.args[1] + "'");
      s.tasks.push_back(std::move(t));
      continue;
    }

    throw parse_error(line, "unknown statement '" + kw + "'");
  }
  if (!have_ring) throw parse_error(1, "scenario has no ring declaration");
  return s;
}

/* Canonical re-print; parse -> print -> parse is the identity on structure. */
inline std::string scenario_to_string(const Scenario& s) {
  std::string out = "ring";
  for (auto& v : s.vars) out += " " + v;
  if (!s.relations.empty()) {
    out += " mod ";
    for (std::size_t i = 0; i < s.relations.size(); ++i)
      out += (i ? ", " : "") + expr_to_string(s.relations[i], s.vars);
  }
  out += "\n";
  for (auto& [name, gens] : s.ideals) {
    out += "ideal " + name + " = ";
    for (std::size_t i = 0; i < gens.size(); ++i)
      out += (i ? ", " : "") + expr_to_string(gens[i], s.vars);
    out += "\n";
  }
  for (auto& [name, d] : s.filtrations) {
    out += "filtration " + name + " = ";
    switch (d.kind) {
      case FiltrationDecl::adic:
        out += "adic(" + d.ideal + ")";
        break;
      case FiltrationDecl::seeded: {
        out += "seeded([";
        for (std::size_t i = 0; i < d.seeds.size(); ++i)
          out += (i ? "; " : "") + d.seeds[i];
        out += "], u=" + std::to_string(d.u);
        if (d.unchecked) out += ", unchecked";
        out += ")";
        break;
      }
      case FiltrationDecl::rescaled:
        out += "rescale(" + d.base + ", " + std::to_string(d.t) + ")";
        break;
      case FiltrationDecl::quotient:
        out += "quotient(" + d.base + ", " + d.ideal + ")";
        break;
    }
    out += "\n";
  }
  for (auto& t : s.tasks) {
    out += "task " + t.kind;
    for (auto& a : t.args) out += " " + a;
    out += "\n";
  }
  return out;
}

}  // namespace fibercone
