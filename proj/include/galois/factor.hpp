#ifndef GALOIS_FACTOR_HPP
#define GALOIS_FACTOR_HPP

#include <optional>
#include <vector>

#include "galois/unipoly.hpp"

namespace galois {

/// Monic gcd over Q, computed modulo primes with CRT and verified by exact
/// trial division.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

bool is_squarefree(const UniPoly& g);

/// Product of the distinct irreducible factors, monic: g / gcd(g, g').
UniPoly squarefree_part(const UniPoly& g);

/// Complete factorization over Q: monic irreducible factors with
/// multiplicities, sorted by (degree, coefficient order). The input equals
/// leading(g) * prod factor^multiplicity.
std::vector<std::pair<UniPoly, int>> factor_rationals(const UniPoly& g);

Rat resultant(const UniPoly& a, const UniPoly& b);
Rat discriminant(const UniPoly& f);

/// Degrees of the irreducible factors of f mod p, ascending; nullopt when p
/// is a bad prime (divides the leading coefficient or the discriminant).
std::optional<std::vector<int>> factor_degrees_mod_p(const UniPoly& f, uint64_t p);

}  // namespace galois

#endif
