#include "autxy/text.hpp"

#include <cctype>
#include <vector>

namespace autxy {

ParseError::ParseError(const std::string& msg, std::size_t at)
    : std::runtime_error(msg + " at offset " + std::to_string(at)), pos(at) {}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(std::string("expected ") + what, i);
  }
  long long integer() {
    skip_ws();
    std::size_t start = i;
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (v > 900000000000000000LL) throw ParseError("integer literal too large", start);
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    if (i == start) throw ParseError("expected an integer", i);
    return v;
  }
  std::string word() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  }
};

// Recursive descent over K[x,y]; precedence ^ then unary -, * /, then + -.
struct ExprParser {
  Lexer lx;
  int p;

  BiPoly expr() {
    BiPoly acc = term();
    while (true) {
      if (lx.eat('+'))
        acc = acc + term();
      else if (lx.eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  BiPoly term() {
    BiPoly acc = factor();
    while (true) {
      char c = lx.peek();
      if (c == '*') {
        lx.eat('*');
        acc = acc * factor();
      } else if (c == '/') {
        std::size_t at = lx.i;
        lx.eat('/');
        BiPoly d = factor();
        if (d.depends_on(Var::X) || d.depends_on(Var::Y))
          throw ParseError("divisor must not involve x or y", at);
        RatFunc r = d.constant_term();
        if (r.is_zero()) throw ParseError("division by zero", at);
        acc = acc * r.inverse();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
        acc = acc * factor();  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  BiPoly factor() {
    if (lx.eat('-')) return -factor();
    BiPoly base = primary();
    while (lx.peek() == '^') {
      std::size_t at = lx.i;
      lx.eat('^');
      if (lx.peek() == '-')
        throw ParseError("exponent must be a nonnegative integer", at);
      long long e = lx.integer();
      if (e > 4096) throw ParseError("exponent too large", at);
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  BiPoly primary() {
    char c = lx.peek();
    if (c == '(') {
      lx.eat('(');
      BiPoly inner = expr();
      lx.expect(')', "')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return BiPoly::constant(RatFunc::constant(Scalar(lx.integer(), p)), RingTag::K);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t at = lx.i;
      std::string w = lx.word();
      if (w == "t")
        return BiPoly::constant(RatFunc(TPoly::t(p)), RingTag::K);
      if (w == "x") return BiPoly::x(p, RingTag::K);
      if (w == "y") return BiPoly::y(p, RingTag::K);
      throw ParseError("unknown symbol '" + w + "'", at);
    }
    throw ParseError("expected a polynomial", lx.i);
  }
};

BiPoly parse_expr_all(const std::string& s, int p) {
  ExprParser ps{Lexer{s}, p};
  BiPoly v = ps.expr();
  if (!ps.lx.done()) throw ParseError("trailing input", ps.lx.i);
  return v;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (std::isspace(static_cast<unsigned char>(s[a])) || s[a] == ';')) ++a;
  while (b > a && (std::isspace(static_cast<unsigned char>(s[b - 1])) || s[b - 1] == ';'))
    --b;
  return s.substr(a, b - a);
}

}  // namespace

TPoly parse_tpoly(const std::string& s, int p) {
  BiPoly v = parse_expr_all(s, p);
  if (v.depends_on(Var::X) || v.depends_on(Var::Y))
    throw ParseError("expected an element of R, found x or y", 0);
  RatFunc c = v.constant_term();
  if (!c.is_integral()) throw ParseError("expected an element of R, found a fraction", 0);
  return c.num();
}

RatFunc parse_ratfunc(const std::string& s, int p) {
  BiPoly v = parse_expr_all(s, p);
  if (v.depends_on(Var::X) || v.depends_on(Var::Y))
    throw ParseError("expected an element of K, found x or y", 0);
  return v.constant_term();
}

RPoly parse_rpoly(const std::string& s, int p) {
  BiPoly v = parse_expr_all(s, p);
  if (v.depends_on(Var::X)) throw ParseError("expected an element of R[y], found x", 0);
  if (!v.is_integral())
    throw ParseError("expected an element of R[y], found a fraction", 0);
  return to_rpoly(v);
}

BiPoly parse_bipoly(const std::string& s, int p, RingTag tag) {
  BiPoly v = parse_expr_all(s, p);
  if (tag == RingTag::R && !v.is_integral())
    throw ParseError("polynomial is not defined over R", 0);
  return v.with_tag(tag);
}

namespace {

BiPoly parse_component(const std::string& s, char var, int p, RingTag tag,
                       std::size_t base) {
  Lexer lx{s};
  if (!lx.eat(var))
    throw ParseError(std::string("expected '") + var + " ->'", base + lx.i);
  if (!(lx.eat('-') && lx.eat('>')))
    throw ParseError("expected '->'", base + lx.i);
  return parse_bipoly(s.substr(lx.i), p, tag);
}

}  // namespace

Auto parse_auto(const std::string& s, int p, RingTag tag) {
  std::size_t semi = s.find(';');
  if (semi == std::string::npos)
    throw ParseError("expected 'x -> ...; y -> ...'", s.size());
  BiPoly f1 = parse_component(s.substr(0, semi), 'x', p, tag, 0);
  BiPoly f2 = parse_component(trim(s.substr(semi + 1)), 'y', p, tag, semi + 1);
  return Auto(f1, f2);
}

Word parse_word(const std::string& s, int p) {
  std::vector<std::pair<std::size_t, LetterTag>> marks;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if ((s[i] == 'A' || s[i] == 'B') && s[i + 1] == ':')
      marks.push_back({i, s[i] == 'A' ? LetterTag::A : LetterTag::B});
  if (marks.empty()) {
    if (!trim(s).empty()) throw ParseError("expected 'A:' or 'B:' letters", 0);
    return Word{};
  }
  if (!trim(s.substr(0, marks[0].first)).empty())
    throw ParseError("expected 'A:' or 'B:'", 0);
  Word w;
  for (std::size_t k = 0; k < marks.size(); ++k) {
    std::size_t from = marks[k].first + 2;
    std::size_t to = k + 1 < marks.size() ? marks[k + 1].first : s.size();
    std::string body = trim(s.substr(from, to - from));
    if (body.empty()) throw ParseError("empty letter", from);
    w.letters.push_back(Letter{marks[k].second, parse_auto(body, p, RingTag::K)});
  }
  return w;
}

namespace {

struct PSetParser {
  Lexer lx;
  int p;

  PStableSet parse() {
    PStableSet v = [&] {
      try {
        return union_level();
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lx.i);
      }
    }();
    if (!lx.done()) throw ParseError("trailing input", lx.i);
    return v;
  }

  PStableSet union_level() {
    std::vector<PStableSet> parts{inter_level()};
    while (lx.eat('|')) parts.push_back(inter_level());
    return parts.size() == 1 ? parts[0] : PStableSet::union_of(parts);
  }

  PStableSet inter_level() {
    std::vector<PStableSet> parts{primary()};
    while (lx.eat('&')) parts.push_back(primary());
    return parts.size() == 1 ? parts[0] : PStableSet::intersection_of(parts);
  }

  PStableSet primary() {
    std::size_t at = lx.i;
    try {
      return primary_inner();
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at);
    }
  }

  PStableSet primary_inner() {
    char c = lx.peek();
    if (c == '(') {
      lx.eat('(');
      PStableSet inner = union_level();
      lx.expect(')', "')'");
      return inner;
    }
    if (c == '{') {
      lx.eat('{');
      std::set<long long> elems;
      if (!lx.eat('}')) {
        elems.insert(lx.integer());
        while (lx.eat(',')) elems.insert(lx.integer());
        lx.expect('}', "'}'");
      }
      return PStableSet::finite(elems, p);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = lx.i;
      long long lo = lx.integer();
      lx.expect('.', "'..'");
      lx.expect('.', "'..'");
      long long hi = lx.integer();
      if (lo != 2) {
        if (lo > hi) throw ParseError("empty range", at);
        std::set<long long> elems;
        for (long long m = lo; m <= hi; ++m) elems.insert(m);
        return PStableSet::finite(elems, p);
      }
      return PStableSet::range_to(hi, p);
    }
    std::size_t at = lx.i;
    std::string w = lx.word();
    if (w == "empty") return PStableSet::empty(p);
    if (w == "all") return PStableSet::all_ge2(p);
    if (w == "ppowers") return PStableSet::p_powers(p);
    if (w == "pmult") return PStableSet::p_multiples(p);
    if (w == "pscaled") {
      lx.expect('(', "'('");
      long long n = lx.integer();
      lx.expect(',', "','");
      long long k = lx.integer();
      lx.expect(')', "')'");
      return PStableSet::scaled_range(static_cast<int>(n), k, p);
    }
    if (w == "pscaledall") {
      lx.expect('(', "'('");
      long long n = lx.integer();
      lx.expect(')', "')'");
      return PStableSet::scaled_all(static_cast<int>(n), p);
    }
    if (w == "ppowerpair") {
      lx.expect('(', "'('");
      long long n = lx.integer();
      lx.expect(')', "')'");
      return PStableSet::p_power_pair(static_cast<int>(n), p);
    }
    throw ParseError("unknown exponent set '" + w + "'", at);
  }
};

}  // namespace

PStableSet parse_pset(const std::string& s, int p) {
  return PSetParser{Lexer{s}, p}.parse();
}

namespace {

// in a product: single monomials stay bare, sums get parentheses
std::string product_tpoly(const TPoly& v) {
  std::string raw = str(v);
  int terms = 0;
  for (int i = 0; i <= v.degree(); ++i)
    if (!v.coeff(i).is_zero()) ++terms;
  if (terms > 1) return "(" + raw + ")";
  return raw;
}

std::string product_coeff(const RatFunc& c) {
  if (c.is_integral()) return product_tpoly(c.num());
  return product_tpoly(c.num()) + "/" + product_tpoly(c.den());
}

void append_term(std::string& out, const std::string& term) {
  if (out.empty())
    out = term;
  else if (!term.empty() && term[0] == '-')
    out += term;
  else
    out += "+" + term;
}

std::string power(const char* var, int e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string str(const TPoly& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (int i = v.degree(); i >= 0; --i) {
    Scalar c = v.coeff(i);
    if (c.is_zero()) continue;
    std::string term;
    if (i == 0) {
      term = c.str();
    } else if (c.is_one()) {
      term = power("t", i);
    } else if (v.p() == 0 && c == -Scalar::one(0)) {
      term = "-" + power("t", i);
    } else {
      term = c.str() + "*" + power("t", i);
    }
    append_term(out, term);
  }
  return out;
}

std::string str(const RatFunc& v) {
  if (v.is_integral()) return str(v.num());
  return product_tpoly(v.num()) + "/" + product_tpoly(v.den());
}

std::string str(const BiPoly& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    int i = it->first.i, j = it->first.j;
    const RatFunc& c = it->second;
    std::vector<std::string> parts;
    if (!(c.is_one() && (i > 0 || j > 0))) parts.push_back(product_coeff(c));
    if (i > 0) parts.push_back(power("x", i));
    if (j > 0) parts.push_back(power("y", j));
    std::string term = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) term += "*" + parts[k];
    append_term(out, term);
  }
  return out;
}

std::string str(const RPoly& v) { return str(to_bipoly(v, RingTag::R)); }

std::string str(const Auto& v) {
  return "x -> " + str(v.f1()) + "; y -> " + str(v.f2());
}

std::string str(const Word& v) {
  std::string out;
  for (const auto& l : v.letters) {
    if (!out.empty()) out += ";  ";
    out += (l.tag == LetterTag::A ? "A: " : "B: ") + str(l.value);
  }
  return out;
}

}  // namespace autxy
