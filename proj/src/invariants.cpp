#include "galois/invariants.hpp"

#include <algorithm>
#include <cassert>

#include "galois/factor.hpp"
#include "galois/modp.hpp"

namespace galois {

MultiPoly orbit_sum_invariant(const PermGroup& h, const Expo& exponents) {
  if (static_cast<int>(exponents.size()) != h.degree())
    throw MathError("orbit_sum_invariant: exponent arity mismatch");
  MultiPoly seed = MultiPoly::monomial(h.degree(), exponents);
  MultiPoly out(h.degree());
  std::set<Expo> seen;
  for (const Perm& sigma : h.elements()) {
    Expo moved(exponents.size());
    for (int j = 1; j <= h.degree(); ++j) moved[sigma(j) - 1] = exponents[j - 1];
    if (seen.insert(moved).second) out.add_term(moved, Rat(1));
  }
  (void)seed;
  return out;
}

MultiPoly vandermonde(int n) {
  MultiPoly acc = MultiPoly::constant(n, Rat(1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      acc = acc * (MultiPoly::variable(n, i) - MultiPoly::variable(n, j));
  return acc;
}

PermGroup stabilizer_in(const PermGroup& l, const MultiPoly& p) {
  std::vector<Perm> members;
  for (const Perm& sigma : l.elements())
    if (p.acted_by(sigma) == p) members.push_back(sigma);
  return PermGroup::from_elements(std::move(members));
}

InvariantSearch::InvariantSearch(PermGroup h, PermGroup l, size_t budget)
    : h_(std::move(h)), l_(std::move(l)), budget_(budget) {
  if (!h_.is_subgroup_of(l_)) throw MathError("invariant search needs H < L");
  int n = l_.degree();
  vandermonde_pending_ = l_.same_group(PermGroup::symmetric(n)) &&
                         h_.same_group(PermGroup::alternating(n));
  grade_ = 1;
  current_.assign(n, 0);
  current_[0] = 1;  // first composition of grade 1 in descending lex
}

bool InvariantSearch::advance_exponent() {
  int n = static_cast<int>(current_.size());
  // next composition of grade_ in descending lex, else first of grade_+1
  int i = -1;
  for (int k = n - 2; k >= 0; --k)
    if (current_[k] > 0) { i = k; break; }
  if (i < 0) {
    ++grade_;
    std::fill(current_.begin(), current_.end(), 0);
    current_[0] = grade_;
    return true;
  }
  int tail = 0;
  for (int k = i + 1; k < n; ++k) { tail += current_[k]; current_[k] = 0; }
  current_[i] -= 1;
  current_[i + 1] = tail + 1;
  return true;
}

std::optional<InvariantSpec> InvariantSearch::next() {
  int n = l_.degree();
  if (vandermonde_pending_) {
    vandermonde_pending_ = false;
    InvariantSpec spec{vandermonde(n), h_, l_, std::nullopt};
    produced_.push_back(spec.theta);
    return spec;
  }
  while (tried_ < budget_) {
    ++tried_;
    Expo e = current_;
    advance_exponent();
    MultiPoly psi = orbit_sum_invariant(h_, e);
    if (psi.is_constant()) continue;
    bool duplicate = false;
    for (const MultiPoly& prev : produced_)
      if (prev == psi) { duplicate = true; break; }
    if (duplicate) continue;
    // H always stabilizes its own orbit sum; primitivity fails as soon as
    // any element of L outside H stabilizes too
    bool primitive = true;
    for (const Perm& sigma : l_.elements()) {
      if (h_.contains(sigma)) continue;
      if (psi.acted_by(sigma) == psi) { primitive = false; break; }
    }
    if (!primitive) continue;
    produced_.push_back(psi);
    return InvariantSpec{std::move(psi), h_, l_, e};
  }
  return std::nullopt;
}

InvariantSpec primitive_invariant(const PermGroup& h, const PermGroup& l) {
  InvariantSearch search(h, l);
  auto spec = search.next();
  if (!spec)
    throw MathError("primitive invariant search budget exhausted; "
                    "supply a custom invariant");
  return *spec;
}

UniPoly char_poly(const MultiPoly& theta, const QuotientAlgebra& a) {
  if (a.dimension() > exact_charpoly_cap)
    throw MathError("char_poly: dimension too large for the exact route");
  return charpoly(a.multiplication_matrix(theta));
}

UniPoly monic_kth_root(const UniPoly& c, int k) {
  if (c.is_zero() || c.leading() != 1)
    throw MathError("monic_kth_root: input must be monic");
  if (k < 1 || c.degree() % k != 0)
    throw MathError("monic_kth_root: degree is not divisible by k");
  if (k == 1) return c;
  int d = c.degree();
  int e = d / k;
  // reversed-series recurrence: b_t = sum_s (s - k(t-s)) c^_s b_{t-s} / (k t)
  std::vector<Rat> chat(e + 1), b(e + 1);
  for (int t = 0; t <= e; ++t) chat[t] = c.coeff(d - t);
  b[0] = 1;
  for (int t = 1; t <= e; ++t) {
    Rat acc(0);
    for (int s = 1; s <= t; ++s)
      acc += Rat(s - k * (t - s)) * chat[s] * b[t - s];
    b[t] = acc / Rat(static_cast<long>(k) * t);
  }
  std::vector<Rat> coeffs(e + 1);
  for (int t = 0; t <= e; ++t) coeffs[e - t] = b[t];
  UniPoly root(std::move(coeffs));
  if (!(root.pow(k) == c))
    throw MathError("monic_kth_root: polynomial is not an exact k-th power");
  return root;
}

UniPoly min_poly(const MultiPoly& theta, const QuotientAlgebra& a) {
  return squarefree_part(char_poly(theta, a));
}

namespace {

// Root-algebra resolvent at dimension n! via per-prime extraction: the
// charpoly mod p is computed by Hessenberg reduction, its exact #H-th root
// mod p is taken by the same series recurrence, and R is recovered by CRT
// against a rigorous coefficient bound. Valid because L = S_n = Max(M_S)
// holds unconditionally, so C = R^{#H} is guaranteed.
UniPoly resolvent_by_crt(const InvariantSpec& theta, const QuotientAlgebra& a,
                         int index, int cofactor) {
  RatMatrix m = a.multiplication_matrix(theta.theta);
  size_t dim = m.size();

  Int den(1);
  for (const auto& row : m)
    for (const Rat& v : row)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<std::vector<Int>> b(dim, std::vector<Int>(dim));
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) {
      Rat v = m[r][c] * Rat(den);
      b[r][c] = v.get_num();
    }

  // |R coeff| <= 2^e V^e with V a bound on |tau.Theta(alpha)| from the
  // Cauchy root bound of the source polynomial (C_1 is f(x_1))
  const MultiPoly& c1 = a.root_triangular().gens[0];
  std::vector<Rat> f_coeffs(c1.degree_in(1) + 1, Rat(0));
  for (const auto& [ex, cf] : c1.terms()) f_coeffs[ex[0]] = cf;
  const UniPoly f(std::move(f_coeffs));
  Rat rho(1);
  for (int k = 0; k < f.degree(); ++k) {
    Rat q = abs(f.coeff(k) / f.leading());
    if (q > rho) rho = q;
  }
  rho += 1;
  Rat value_bound(0);
  for (const auto& [e, c] : theta.theta.terms()) {
    int total = 0;
    for (int v : e) total += v;
    value_bound += abs(c) * pow_rat(rho, total);
  }
  Int vb = value_bound.get_num() / value_bound.get_den() + 1;
  size_t bound_bits = index * (1 + bit_length(vb * den)) + 8;

  std::vector<CrtAccumulator> acc(index + 1);
  size_t prime_index = 0;
  std::vector<std::vector<uint64_t>> hp(dim, std::vector<uint64_t>(dim));
  while (bit_length(acc[0].modulus) < bound_bits + 2) {
    uint64_t p = crt_primes(prime_index + 1)[prime_index];
    ++prime_index;
    PrimeField F{p};
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c)
        hp[r][c] = mpz_fdiv_ui(b[r][c].get_mpz_t(), p);
    std::vector<uint64_t> cp = hessenberg_charpoly_mod_p(hp, F);
    std::vector<uint64_t> chat(index + 1), root(index + 1);
    for (int t = 0; t <= index; ++t) chat[t] = cp[dim - t];
    root[0] = 1;
    for (int t = 1; t <= index; ++t) {
      uint64_t s_acc = 0;
      for (int s = 1; s <= t; ++s) {
        long coeff = s - static_cast<long>(cofactor) * (t - s);
        uint64_t cmod = coeff >= 0
                            ? static_cast<uint64_t>(coeff) % F.p
                            : F.neg(static_cast<uint64_t>(-coeff) % F.p);
        s_acc = F.add(s_acc, F.mul(F.mul(cmod, chat[s]), root[t - s]));
      }
      root[t] = F.mul(s_acc, F.inv(F.mul(cofactor % F.p, t % F.p)));
    }
    // verify root^cofactor == charpoly mod p
    PolyP rp(index + 1);
    for (int t = 0; t <= index; ++t) rp[index - t] = root[t];
    PolyP power{1};
    PolyP base = rp;
    int exp = cofactor;
    while (exp > 0) {
      if (exp & 1) power = pp_mul(power, base, F);
      base = pp_mul(base, base, F);
      exp >>= 1;
    }
    if (pp_degree(power) != static_cast<int>(dim))
      throw MathError("resolvent: modular verification failed");
    for (size_t t = 0; t < dim + 1; ++t)
      if (power[t] != cp[t])
        throw MathError("resolvent: charpoly is not a perfect power mod p");
    for (int t = 0; t <= index; ++t) acc[t].add(rp[t], p);
  }

  // unscale: R(x) = R_b(den*x) / den^index
  std::vector<Rat> coeffs(index + 1);
  for (int t = 0; t <= index; ++t) {
    Rat ct(acc[t].symmetric());
    coeffs[t] = ct * Rat(pow_int(den, t), pow_int(den, index));
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace

Resolvent resolvent(const InvariantSpec& theta, const AlgebraPtr& a) {
  const PermGroup& l = theta.L;
  const PermGroup& h = theta.H;
  if (a->dimension() != static_cast<size_t>(l.order()))
    throw MathError("resolvent: dim(A) != |L| (pure chain discipline violated)");
  PermGroup stab = stabilizer_in(l, theta.theta);
  if (stab.order() != h.order())
    throw MathError("resolvent: theta is not H-primitive in L");
  int index = static_cast<int>(l.order() / h.order());
  int cofactor = static_cast<int>(h.order());

  Resolvent out;
  out.theta = theta;
  out.cofactor_exponent = cofactor;
  if (a->dimension() <= exact_charpoly_cap) {
    out.charpoly = char_poly(theta.theta, *a);
    out.resolvent = monic_kth_root(out.charpoly, cofactor);
  } else {
    if (l.order() != PermGroup::symmetric(l.degree()).order())
      throw MathError("resolvent: large dimensions are supported at the "
                      "symmetric root only");
    out.resolvent = resolvent_by_crt(theta, *a, index, cofactor);
    out.charpoly = UniPoly();  // not materialized at this size
  }
  if (out.resolvent.degree() != index)
    throw MathError("resolvent: degree != [L:H]");
  out.separable = is_squarefree(out.resolvent);
  out.factors = factor_rationals(out.separable ? out.resolvent
                                               : squarefree_part(out.resolvent));
  return out;
}

bool separability_check(const Resolvent& r) {
  return poly_gcd(r.resolvent, r.resolvent.derivative()).degree() == 0;
}

}  // namespace galois
