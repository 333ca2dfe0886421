#ifndef GALOIS_INVARIANTS_HPP
#define GALOIS_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "galois/multipoly.hpp"
#include "galois/perm.hpp"
#include "galois/quotient.hpp"
#include "galois/unipoly.hpp"

namespace galois {

/// An H-invariant L-primitive polynomial: Stab_L(theta) = H.
struct InvariantSpec {
  MultiPoly theta;
  PermGroup H;
  PermGroup L;
  std::optional<Expo> exponent_vector;
};

/// Orbit sum of the monomial x^exponents under H (each orbit monomial once).
MultiPoly orbit_sum_invariant(const PermGroup& h, const Expo& exponents);

/// prod_{i<j} (x_i - x_j); the universal A_n-invariant S_n-primitive.
MultiPoly vandermonde(int n);

PermGroup stabilizer_in(const PermGroup& l, const MultiPoly& p);

/// Deterministic enumeration of primitive invariants for H < L: exponent
/// vectors by total degree, then descending lex; the Vandermonde is
/// special-cased for (A_n, S_n). next() yields successive distinct
/// invariants (the engine retries here when a resolvent is not separable).
class InvariantSearch {
 public:
  InvariantSearch(PermGroup h, PermGroup l, size_t budget = 20000);
  std::optional<InvariantSpec> next();

 private:
  bool advance_exponent();
  PermGroup h_, l_;
  size_t budget_;
  size_t tried_ = 0;
  int grade_ = 0;
  Expo current_;
  bool vandermonde_pending_;
  std::vector<MultiPoly> produced_;
};

/// First invariant of the search; MathError when the budget is exhausted.
InvariantSpec primitive_invariant(const PermGroup& h, const PermGroup& l);

/// Exact characteristic polynomial of the multiplication-by-theta
/// endomorphism of A.
UniPoly char_poly(const MultiPoly& theta, const QuotientAlgebra& a);

/// Exact k-th root of a monic polynomial (MathError if none exists).
UniPoly monic_kth_root(const UniPoly& c, int k);

/// Squarefree part of char_poly (the minimal polynomial, k perfect).
UniPoly min_poly(const MultiPoly& theta, const QuotientAlgebra& a);

struct Resolvent {
  InvariantSpec theta;
  UniPoly charpoly;    // C = R^{#H}
  UniPoly resolvent;   // R, degree [L:H]
  int cofactor_exponent = 1;  // #H
  std::vector<std::pair<UniPoly, int>> factors;  // of R (or its squarefree part)
  bool separable = false;
};

/// The resolvent of theta over A: the exact #H-th root of the
/// characteristic polynomial. Requires dim(A) = |L| (pure chain
/// discipline); a failed root extraction means the L hypothesis is wrong.
/// Above `exact_charpoly_cap` dimensions, L must be the full symmetric
/// group and R is assembled by Chinese remainders on the per-prime root
/// extraction (same value, feasible at dimension n!).
Resolvent resolvent(const InvariantSpec& theta, const AlgebraPtr& a);

bool separability_check(const Resolvent& r);

/// Largest dimension for which C is expanded exactly before extracting R.
constexpr size_t exact_charpoly_cap = 400;

}  // namespace galois

#endif
