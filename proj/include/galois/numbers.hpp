#ifndef GALOIS_NUMBERS_HPP
#define GALOIS_NUMBERS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace galois {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when the input is mathematically unusable (multiple roots,
/// inconsistent ideal, search budget exhausted, ...). The CLI maps this
/// to exit code 1.
struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed textual input (polynomial grammar, permutation
/// syntax). The CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat_of(long num, long den = 1) { return Rat(num, den); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  return r;
}

/// True iff q is the square of a rational.
inline bool is_rational_square(const Rat& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(q.get_den().get_mpz_t());
}

inline size_t bit_length(const Int& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::string to_string(const Int& v);
std::string to_string(const Rat& q);

}  // namespace galois

#endif
