#include "galois/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace galois {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) {
  return UniPoly(std::vector<Rat>{c});
}

UniPoly UniPoly::x() { return UniPoly({Rat(0), Rat(1)}); }

UniPoly UniPoly::from_roots(const std::vector<Rat>& roots) {
  UniPoly acc = constant(Rat(1));
  for (const Rat& r : roots) acc = acc * UniPoly({-r, Rat(1)});
  return acc;
}

const Rat& UniPoly::coeff(int k) const {
  static const Rat kZero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

Rat UniPoly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

UniPoly UniPoly::operator-() const {
  std::vector<Rat> out(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) out[k] = -c_[k];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) out[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) out[k] += o.c_[k];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t a = 0; a < c_.size(); ++a)
    for (size_t b = 0; b < o.c_.size(); ++b) out[a + b] += c_[a] * o.c_[b];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  if (s == 0) return UniPoly();
  std::vector<Rat> out(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) out[k] = c_[k] * s;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw MathError("monic(): zero polynomial");
  return *this * (Rat(1) / leading());
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> out(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Rat(static_cast<long>(k));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(int e) const {
  assert(e >= 0);
  UniPoly acc = constant(Rat(1));
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

UniPoly UniPoly::compose_linear(const Rat& a, const Rat& b) const {
  UniPoly arg({b, a});
  UniPoly acc;
  for (int k = degree(); k >= 0; --k) acc = acc * arg + constant(c_[k]);
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw MathError("division by zero polynomial");
  std::vector<Rat> rem = c_;
  int dd = divisor.degree();
  if (degree() < dd) return {UniPoly(), *this};
  std::vector<Rat> quo(degree() - dd + 1, Rat(0));
  Rat inv_lead = Rat(1) / divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    Rat q = rem[k] * inv_lead;
    if (q == 0) continue;
    quo[k - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.c_[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw MathError("exact_div: division is not exact");
  return q;
}

Rat UniPoly::evaluate(const Rat& point) const {
  Rat acc(0);
  for (int k = degree(); k >= 0; --k) acc = acc * point + c_[k];
  return acc;
}

MultiPoly UniPoly::to_multipoly(int nvars, int var) const {
  MultiPoly out(nvars);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Expo e(nvars, 0);
    e[var - 1] = static_cast<int>(k);
    out.add_term(e, c_[k]);
  }
  return out;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& a = c_[k];
    if (a == 0) continue;
    Rat mag = a;
    if (first) {
      if (a < 0) { os << '-'; mag = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) mag = -a;
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag.get_str();
      if (k > 0) os << '*';
    }
    if (k > 0) {
      os << 'x';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

UniPoly parse_unipoly(const std::string& text) {
  MultiPoly p = parse_multipoly(text, 1);
  std::vector<Rat> coeffs(p.degree_in(1) + 1, Rat(0));
  for (const auto& [e, c] : p.terms()) coeffs[e[0]] = c;
  return UniPoly(std::move(coeffs));
}

std::pair<std::vector<Int>, Rat> primitive_integer_coeffs(const UniPoly& f) {
  if (f.is_zero()) throw MathError("primitive part of zero polynomial");
  Int den_lcm(1);
  for (const Rat& c : f.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> scaled(f.coeffs().size());
  for (size_t k = 0; k < scaled.size(); ++k) {
    Rat v = f.coeffs()[k] * Rat(den_lcm);
    assert(v.get_den() == 1);
    scaled[k] = v.get_num();
  }
  Int content(0);
  for (const Int& v : scaled) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (scaled.back() < 0) content = -content;
  for (Int& v : scaled) v /= content;
  return {std::move(scaled), Rat(content, den_lcm)};
}

}  // namespace galois
