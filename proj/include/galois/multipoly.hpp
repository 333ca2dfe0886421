#ifndef GALOIS_MULTIPOLY_HPP
#define GALOIS_MULTIPOLY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "galois/numbers.hpp"
#include "galois/perm.hpp"

namespace galois {

/// Exponent vector (e_1..e_n) of a monomial x1^e1 ... xn^en.
using Expo = std::vector<int>;

/// x1-major descending lex; used for storage and printing.
struct ExpoGreater {
  bool operator()(const Expo& a, const Expo& b) const { return a > b; }
};

/// Lex order with the *last* variable most significant. Triangular sets
/// f_i = x_i^{d_i} + g(x_1..x_i) have leading monomial x_i^{d_i} in this
/// order, so staircase reduction terminates against it.
bool reduction_less(const Expo& a, const Expo& b);

/// Sparse multivariate polynomial over the rationals.
class MultiPoly {
 public:
  using TermMap = std::map<Expo, Rat, ExpoGreater>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rat& c);
  static MultiPoly variable(int nvars, int var);  // var is 1-based
  static MultiPoly monomial(int nvars, Expo e, const Rat& c = Rat(1));

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int degree_in(int var) const;  // -1 for the zero polynomial
  int total_degree() const;

  void add_term(const Expo& e, const Rat& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& scalar) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly pow(int e) const;
  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  /// Monomial action sigma.x^i = x_{sigma(1)}^{i_1} ... x_{sigma(n)}^{i_n},
  /// extended linearly.
  MultiPoly acted_by(const Perm& sigma) const;

  Rat evaluate(const std::vector<Rat>& point) const;

  /// Evaluation over any commutative ring type; `from_rat` injects
  /// coefficients, `one` is the ring unit.
  template <typename T, typename FromRat>
  T evaluate_generic(const std::vector<T>& point, FromRat from_rat,
                     const T& one) const {
    T acc = from_rat(Rat(0));
    for (const auto& [e, c] : terms_) {
      T term = from_rat(c);
      for (int v = 0; v < nvars_; ++v)
        for (int k = 0; k < e[v]; ++k) term = term * point[v];
      (void)one;
      acc = acc + term;
    }
    return acc;
  }

  /// The polynomial with variable indices permuted according to `map`,
  /// map[old_index] = new_index (0-based); used to move x_r to x_{r+1}
  /// when building Cauchy modules.
  MultiPoly with_variables_mapped(const std::vector<int>& map, int new_nvars) const;

  std::string to_string() const;

 private:
  int nvars_ = 0;
  TermMap terms_;  // no zero coefficients stored
};

inline MultiPoly operator*(const Rat& s, const MultiPoly& p) { return p * s; }

/// Parses the polynomial grammar: integer/rational literals, variables
/// x or x1..xn, operators + - * / ^, implicit multiplication, parentheses.
/// If nvars == 0 the variable count is inferred from the largest index.
MultiPoly parse_multipoly(const std::string& text, int nvars = 0);

}  // namespace galois

#endif
