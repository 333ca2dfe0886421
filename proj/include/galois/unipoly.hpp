#ifndef GALOIS_UNIPOLY_HPP
#define GALOIS_UNIPOLY_HPP

#include <string>
#include <vector>

#include "galois/multipoly.hpp"
#include "galois/numbers.hpp"

namespace galois {

/// Dense univariate polynomial over the rationals, coefficients ascending.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);  // trims leading zeros

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rat& c);
  static UniPoly x();
  /// pol(y) = prod (x - y_i); the empty product is 1.
  static UniPoly from_roots(const std::vector<Rat>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(int k) const;  // 0 outside range
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly pow(int e) const;
  /// f(a*x + b)
  UniPoly compose_linear(const Rat& a, const Rat& b) const;

  /// Euclidean division; remainder degree < divisor degree.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  /// Division known to be exact; throws MathError if it is not.
  UniPoly exact_div(const UniPoly& divisor) const;

  Rat evaluate(const Rat& point) const;

  template <typename T, typename FromRat>
  T evaluate_generic(const T& point, FromRat from_rat) const {
    if (c_.empty()) return from_rat(Rat(0));
    T acc = from_rat(c_.back());
    for (int k = degree() - 1; k >= 0; --k) acc = acc * point + from_rat(c_[k]);
    return acc;
  }

  MultiPoly to_multipoly(int nvars, int var) const;  // substitute x -> x_var

  std::string to_string() const;  // descending powers, variable "x"

 private:
  std::vector<Rat> c_;
};

inline UniPoly operator*(const Rat& s, const UniPoly& p) { return p * s; }

UniPoly parse_unipoly(const std::string& text);

/// Content-free integer form: returns primitive integer coefficients with
/// positive leading coefficient, and the rational content c such that
/// input = c * primitive.
std::pair<std::vector<Int>, Rat> primitive_integer_coeffs(const UniPoly& f);

}  // namespace galois

#endif
