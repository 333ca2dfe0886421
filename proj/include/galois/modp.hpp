#ifndef GALOIS_MODP_HPP
#define GALOIS_MODP_HPP

#include <cstdint>
#include <vector>

#include "galois/numbers.hpp"

namespace galois {

/// Arithmetic mod a prime p < 2^31 (products fit in uint64).
struct PrimeField {
  uint64_t p;

  uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p ? s - p : s; }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p; }
  uint64_t neg(uint64_t a) const { return a ? p - a : 0; }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const;
};

/// Dense polynomial mod p, coefficients ascending, no leading zeros.
using PolyP = std::vector<uint64_t>;

PolyP pp_trim(PolyP f);
int pp_degree(const PolyP& f);
PolyP pp_mul(const PolyP& a, const PolyP& b, const PrimeField& F);
std::pair<PolyP, PolyP> pp_divmod(const PolyP& a, const PolyP& b, const PrimeField& F);
PolyP pp_mod(const PolyP& a, const PolyP& b, const PrimeField& F);
PolyP pp_monic(const PolyP& f, const PrimeField& F);
PolyP pp_gcd(PolyP a, PolyP b, const PrimeField& F);
PolyP pp_derivative(const PolyP& f, const PrimeField& F);
PolyP pp_sub(const PolyP& a, const PolyP& b, const PrimeField& F);
/// base^e mod f, with big exponent.
PolyP pp_powmod(const PolyP& base, const Int& e, const PolyP& f, const PrimeField& F);

/// Reduction of integer coefficients mod p.
PolyP pp_from_int_coeffs(const std::vector<Int>& coeffs, const PrimeField& F);

/// Distinct-degree factorization of a squarefree monic f mod p:
/// (d, product of all irreducible factors of degree d), d ascending.
std::vector<std::pair<int, PolyP>> pp_distinct_degree(const PolyP& f, const PrimeField& F);

/// Full factorization of a squarefree monic f mod p into monic irreducibles,
/// sorted by (degree, coefficient tuple). Splitting uses a fixed-seed
/// generator, so results are deterministic.
std::vector<PolyP> pp_factor_squarefree(const PolyP& f, const PrimeField& F);

/// Deterministic list of primes: the `count` smallest primes >= `from`.
std::vector<uint64_t> primes_from(uint64_t from, size_t count);

/// The `count` largest primes below 2^31, descending.
const std::vector<uint64_t>& crt_primes(size_t count);

/// Incremental Chinese remainders: value in [0, modulus).
struct CrtAccumulator {
  Int value{0};
  Int modulus{1};
  void add(uint64_t residue, uint64_t p);
  /// Symmetric representative in (-modulus/2, modulus/2].
  Int symmetric() const;
};

}  // namespace galois

#endif
