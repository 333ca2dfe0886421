#include "galois/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace galois {

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& q) { return q.get_str(); }

bool reduction_less(const Expo& a, const Expo& b) {
  assert(a.size() == b.size());
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.emplace(Expo(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
  assert(var >= 1 && var <= nvars);
  Expo e(nvars, 0);
  e[var - 1] = 1;
  return monomial(nvars, e);
}

MultiPoly MultiPoly::monomial(int nvars, Expo e, const Rat& c) {
  assert(static_cast<int>(e.size()) == nvars);
  MultiPoly p(nvars);
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Expo& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

Rat MultiPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  assert(is_constant());
  return terms_.begin()->second;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var - 1]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int v : e) t += v;
    d = std::max(d, t);
  }
  return d;
}

void MultiPoly::add_term(const Expo& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out = *this;
  out += o;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly out = *this;
  out -= o;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  assert(nvars_ == o.nvars_ || is_zero() || o.is_zero());
  if (is_zero()) nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  assert(nvars_ == o.nvars_ || is_zero() || o.is_zero());
  if (is_zero()) nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly out(nvars_);
  Expo prod(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int v = 0; v < nvars_; ++v) prod[v] = ea[v] + eb[v];
      out.add_term(prod, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const Rat& scalar) const {
  MultiPoly out(nvars_);
  if (scalar == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  assert(e >= 0);
  MultiPoly acc = constant(nvars_, Rat(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MultiPoly MultiPoly::acted_by(const Perm& sigma) const {
  assert(sigma.degree() == nvars_);
  MultiPoly out(nvars_);
  Expo moved(nvars_);
  for (const auto& [e, c] : terms_) {
    for (int j = 1; j <= nvars_; ++j) moved[sigma(j) - 1] = e[j - 1];
    out.terms_.emplace(moved, c);  // action permutes monomials bijectively
  }
  return out;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw MathError("evaluate: arity mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int v = 0; v < nvars_; ++v)
      if (e[v] > 0) term *= pow_rat(point[v], e[v]);
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::with_variables_mapped(const std::vector<int>& map,
                                           int new_nvars) const {
  MultiPoly out(new_nvars);
  for (const auto& [e, c] : terms_) {
    Expo moved(new_nvars, 0);
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      assert(map[v] >= 0 && map[v] < new_nvars);
      moved[map[v]] += e[v];
    }
    out.add_term(moved, c);
  }
  return out;
}

namespace {

void print_monomial(std::ostringstream& os, const Expo& e, const Rat& c,
                    bool first, int nvars) {
  Rat a = c;
  if (first) {
    if (a < 0) { os << '-'; a = -a; }
  } else {
    os << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  bool any_var = std::any_of(e.begin(), e.end(), [](int v) { return v > 0; });
  bool need_sep = false;
  if (!any_var || a != 1) {
    os << a.get_str();
    need_sep = true;
  }
  for (int v = 0; v < static_cast<int>(e.size()); ++v) {
    if (e[v] == 0) continue;
    if (need_sep) os << '*';
    need_sep = true;
    if (nvars == 1)
      os << 'x';
    else
      os << 'x' << (v + 1);
    if (e[v] > 1) os << '^' << e[v];
  }
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::ostringstream term;
    print_monomial(term, e, c, first, nvars_);
    os << term.str();
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  int max_var = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (peek(c)) { ++i; return true; }
    return false;
  }

  MultiPoly parse_expr(int nvars) {
    MultiPoly acc = parse_term(nvars);
    for (;;) {
      if (eat('+')) acc += parse_term(nvars);
      else if (eat('-')) acc -= parse_term(nvars);
      else break;
    }
    return acc;
  }

  MultiPoly parse_term(int nvars) {
    MultiPoly acc = parse_factor(nvars);
    for (;;) {
      if (eat('*')) { acc = acc * parse_factor(nvars); continue; }
      if (eat('/')) {
        MultiPoly div = parse_factor(nvars);
        if (!div.is_constant() || div.constant_value() == 0)
          throw ParseError("division only by nonzero constants");
        acc = acc * (Rat(1) / div.constant_value());
        continue;
      }
      skip_ws();
      if (i < s.size() && (isdigit(static_cast<unsigned char>(s[i])) ||
                           s[i] == 'x' || s[i] == '(')) {
        acc = acc * parse_factor(nvars);  // implicit multiplication
        continue;
      }
      break;
    }
    return acc;
  }

  MultiPoly parse_factor(int nvars) {
    MultiPoly base = parse_base(nvars);
    if (eat('^')) {
      skip_ws();
      size_t start = i;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i) throw ParseError("expected integer exponent");
      base = base.pow(std::stoi(s.substr(start, i - start)));
    }
    return base;
  }

  MultiPoly parse_base(int nvars) {
    skip_ws();
    if (i >= s.size()) throw ParseError("unexpected end of polynomial");
    if (eat('(')) {
      MultiPoly inner = parse_expr(nvars);
      if (!eat(')')) throw ParseError("missing closing parenthesis");
      return inner;
    }
    if (s[i] == '-') { ++i; return -parse_factor(nvars); }
    if (s[i] == '+') { ++i; return parse_factor(nvars); }
    if (isdigit(static_cast<unsigned char>(s[i]))) {
      size_t start = i;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
      Int num(s.substr(start, i - start));
      return MultiPoly::constant(nvars, Rat(num));
    }
    if (s[i] == 'x') {
      ++i;
      size_t start = i;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
      int var = start == i ? 1 : std::stoi(s.substr(start, i - start));
      if (var < 1 || var > nvars)
        throw ParseError("variable index out of range: x" + std::to_string(var));
      max_var = std::max(max_var, var);
      return MultiPoly::variable(nvars, var);
    }
    throw ParseError(std::string("unexpected character '") + s[i] + "' in polynomial");
  }

  // first pass just to find the largest variable index
  int scan_max_var() {
    int best = 1;
    for (size_t k = 0; k < s.size(); ++k) {
      if (s[k] != 'x') continue;
      size_t j = k + 1;
      while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j > k + 1) best = std::max(best, std::stoi(s.substr(k + 1, j - k - 1)));
    }
    return best;
  }
};

}  // namespace

MultiPoly parse_multipoly(const std::string& text, int nvars) {
  Parser scan(text);
  int n = nvars > 0 ? nvars : scan.scan_max_var();
  Parser p(text);
  MultiPoly out = p.parse_expr(n);
  p.skip_ws();
  if (p.i != text.size())
    throw ParseError("trailing input in polynomial: " + text.substr(p.i));
  return out;
}

}  // namespace galois
