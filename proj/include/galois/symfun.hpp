#ifndef GALOIS_SYMFUN_HPP
#define GALOIS_SYMFUN_HPP

#include <vector>

#include "galois/multipoly.hpp"
#include "galois/unipoly.hpp"

namespace galois {

enum class SymKind { Elementary, Power, Complete };

/// e_r, p_r or h_r in n variables; e_r = 0 for r > n, e_0 = h_0 = 1, p_0 = n.
MultiPoly symmetric_family(SymKind kind, int r, int n);

/// Power sums p~_1..p~_m of the roots of f, by the Newton recurrence on the
/// coefficients (exact rationals).
std::vector<Rat> newton_power_sums(const UniPoly& f, int m);

/// The combination p_m e_0 - p_{m-1} e_1 + ... + (-1)^m m e_m, which the
/// Girard-Newton identity says is identically zero.
MultiPoly girard_newton_combination(int m, int n);

/// Cauchy modules C_1..C_n of f (normalized monic), built by iterated
/// divided differences; C_i is monic of degree n-i+1 in x_i.
std::vector<MultiPoly> cauchy_modules(const UniPoly& f);

/// Closed form sum_{i=r}^{n} a_i h_{i-r}(x_1..x_{r+1}) for C_{r+1}
/// (coefficients of the monic normalization), 0 <= r <= n-1.
MultiPoly cauchy_closed_form(const UniPoly& f, int r);

/// Divided difference (P(.., x_from) - P(.., x_to)) / (x_from - x_to) for a
/// polynomial P not involving x_to; exact by construction.
MultiPoly divided_difference(const MultiPoly& p, int var_from, int var_to);

}  // namespace galois

#endif
