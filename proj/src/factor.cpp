#include "galois/factor.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "galois/linalg.hpp"
#include "galois/modp.hpp"

namespace galois {

namespace {

using IntPoly = std::vector<Int>;  // ascending coefficients

IntPoly ip_trim(IntPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// division of integer polynomials with monic divisor
std::pair<IntPoly, IntPoly> ip_divmod_monic(const IntPoly& a, const IntPoly& b) {
  assert(!b.empty() && b.back() == 1);
  IntPoly rem = a;
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(rem.size()) - 1;
  if (da < db) return {{}, std::move(rem)};
  IntPoly quo(da - db + 1, Int(0));
  for (int k = da; k >= db; --k) {
    Int q = rem[k];
    if (q == 0) continue;
    quo[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b[j];
  }
  return {std::move(quo), ip_trim(std::move(rem))};
}

UniPoly ip_to_unipoly(const IntPoly& f) {
  std::vector<Rat> c(f.size());
  for (size_t k = 0; k < f.size(); ++k) c[k] = Rat(f[k]);
  return UniPoly(std::move(c));
}

// extended Euclid mod p: returns (g, s, t) with s*a + t*b = g, g monic
struct PpExtGcd {
  PolyP g, s, t;
};

PpExtGcd pp_ext_gcd(PolyP a, PolyP b, const PrimeField& F) {
  PolyP s0{1}, s1, t0, t1{1};
  a = pp_trim(std::move(a));
  b = pp_trim(std::move(b));
  while (!b.empty()) {
    auto [q, r] = pp_divmod(a, b, F);
    a = std::move(b);
    b = std::move(r);
    PolyP s2 = pp_sub(s0, pp_mul(q, s1, F), F);
    PolyP t2 = pp_sub(t0, pp_mul(q, t1, F), F);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  uint64_t inv = F.inv(a.back());
  auto scale = [&](PolyP& f) {
    for (auto& c : f) c = F.mul(c, inv);
  };
  scale(a); scale(s0); scale(t0);
  return {a, s0, t0};
}

Int ip_max_abs(const IntPoly& f) {
  Int m(0);
  for (const Int& c : f) {
    Int a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

// Landau-Mignotte style bound: any monic factor h of monic M satisfies
// |h|_inf <= 2^deg(M) * sqrt(deg(M)+1) * |M|_inf.
Int factor_coeff_bound(const IntPoly& m) {
  size_t d = m.size() - 1;
  Int root(0);
  Int dd(static_cast<long>(d + 1));
  mpz_sqrt(root.get_mpz_t(), dd.get_mpz_t());
  return (root + 1) * pow_int(Int(2), d) * ip_max_abs(m);
}

Int mod_reduce(const Int& v, const Int& q) {
  Int r = v % q;
  if (r < 0) r += q;
  return r;
}

Int symmetric_reduce(const Int& v, const Int& q) {
  Int r = mod_reduce(v, q);
  if (2 * r > q) r -= q;
  return r;
}

// Multifactor linear Hensel lifting of a monic squarefree factorization
// F = prod(g_i) mod p up to modulus p^k >= target. Factors returned with
// coefficients in [0, p^k).
struct HenselResult {
  std::vector<IntPoly> factors;
  Int modulus;
};

HenselResult hensel_lift(const IntPoly& f, const std::vector<PolyP>& mod_p_factors,
                         uint64_t p, const Int& target) {
  PrimeField F{p};
  size_t r = mod_p_factors.size();

  // Bezout cofactors: s_i * prod_{j!=i} g_j == 1 mod (g_i, p)
  std::vector<PolyP> cofactor(r);
  for (size_t i = 0; i < r; ++i) {
    PolyP prod{1};
    for (size_t j = 0; j < r; ++j)
      if (j != i) prod = pp_mod(pp_mul(prod, mod_p_factors[j], F), mod_p_factors[i], F);
    auto ext = pp_ext_gcd(prod, mod_p_factors[i], F);
    if (pp_degree(ext.g) != 0)
      throw MathError("hensel: factors not coprime mod p");
    cofactor[i] = ext.s;  // already normalized so s*prod == 1 mod g_i
  }

  std::vector<IntPoly> lifted(r);
  for (size_t i = 0; i < r; ++i) {
    lifted[i].resize(mod_p_factors[i].size());
    for (size_t k = 0; k < mod_p_factors[i].size(); ++k)
      lifted[i][k] = Int(static_cast<long>(mod_p_factors[i][k]));
  }

  Int q(static_cast<long>(p));
  Int pz(static_cast<long>(p));
  while (q < target) {
    // error = (F - prod lifted) / q, then correct each factor mod p
    IntPoly prod{Int(1)};
    for (const auto& g : lifted) prod = ip_mul(prod, g);
    IntPoly err(f.size(), Int(0));
    for (size_t k = 0; k < f.size(); ++k) err[k] = f[k];
    for (size_t k = 0; k < prod.size(); ++k) err[k] -= prod[k];
    err = ip_trim(std::move(err));
    for (Int& c : err) {
      assert(c % q == 0);
      c /= q;
    }
    std::vector<Int> err_coeffs = err;
    PolyP err_p = pp_from_int_coeffs(err_coeffs, F);
    for (size_t i = 0; i < r; ++i) {
      PolyP delta = pp_mod(pp_mul(err_p, cofactor[i], F), mod_p_factors[i], F);
      for (size_t k = 0; k < delta.size(); ++k)
        lifted[i][k] = mod_reduce(lifted[i][k] + q * Int(static_cast<long>(delta[k])),
                                  q * pz);
    }
    q *= pz;
    for (auto& g : lifted)
      for (Int& c : g) c = mod_reduce(c, q);
  }
  return {std::move(lifted), q};
}

// Zassenhaus recombination: factor a monic squarefree integer polynomial.
std::vector<IntPoly> factor_monic_squarefree_int(IntPoly m) {
  assert(!m.empty() && m.back() == 1);
  if (m.size() <= 2) return {m};

  // choose an odd prime where m stays squarefree
  uint64_t p = 0;
  PolyP m_p;
  for (uint64_t cand : primes_from(3, 200)) {
    PrimeField F{cand};
    PolyP reduced = pp_from_int_coeffs(m, F);
    if (pp_degree(reduced) != static_cast<int>(m.size()) - 1) continue;
    if (pp_degree(pp_gcd(reduced, pp_derivative(reduced, F), F)) != 0) continue;
    p = cand;
    m_p = std::move(reduced);
    break;
  }
  if (p == 0) throw MathError("no good prime found for factorization");

  PrimeField F{p};
  std::vector<PolyP> modular = pp_factor_squarefree(m_p, F);
  if (modular.size() == 1) return {m};

  Int bound = factor_coeff_bound(m);
  HenselResult lift = hensel_lift(m, modular, p, 2 * bound + 1);
  const Int& q = lift.modulus;

  std::vector<IntPoly> pool = lift.factors;
  std::vector<IntPoly> out;
  IntPoly rest = m;

  auto candidate_from_subset = [&](const std::vector<size_t>& subset) {
    IntPoly prod{Int(1)};
    for (size_t idx : subset) prod = ip_mul(prod, pool[idx]);
    for (Int& c : prod) c = symmetric_reduce(c, q);
    return ip_trim(std::move(prod));
  };

  size_t card = 1;
  while (2 * card <= pool.size()) {
    bool found = false;
    std::vector<size_t> subset(card);
    // lexicographically first combinations of indices
    std::vector<size_t> idx(card);
    for (size_t k = 0; k < card; ++k) idx[k] = k;
    for (;;) {
      IntPoly cand = candidate_from_subset(idx);
      if (!cand.empty() && cand.back() == 1) {
        auto [quo, rem] = ip_divmod_monic(rest, cand);
        if (rem.empty()) {
          out.push_back(cand);
          rest = ip_trim(std::move(quo));
          std::vector<IntPoly> next_pool;
          for (size_t k = 0, j = 0; k < pool.size(); ++k) {
            if (j < idx.size() && idx[j] == k) { ++j; continue; }
            next_pool.push_back(pool[k]);
          }
          pool = std::move(next_pool);
          found = true;
          break;
        }
      }
      // next combination
      size_t k = card;
      while (k-- > 0) {
        if (idx[k] + (card - k) < pool.size()) {
          ++idx[k];
          for (size_t j = k + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (k == 0) { k = SIZE_MAX; break; }
      }
      if (k == SIZE_MAX) break;
    }
    if (!found) ++card;
  }
  if (static_cast<int>(rest.size()) > 1) out.push_back(rest);
  return out;
}

// factorization of a monic squarefree rational polynomial
std::vector<UniPoly> factor_monic_squarefree(const UniPoly& f) {
  int d = f.degree();
  if (d <= 1) return {f};

  // scale y = lambda*x so the integer form is monic
  Int lambda(1);
  for (const Rat& c : f.coeffs())
    mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), c.get_den().get_mpz_t());
  IntPoly m(d + 1);
  for (int k = 0; k <= d; ++k) {
    Rat v = f.coeff(k) * Rat(pow_int(lambda, static_cast<unsigned long>(d - k)));
    assert(v.get_den() == 1);
    m[k] = v.get_num();
  }
  std::vector<IntPoly> int_factors = factor_monic_squarefree_int(std::move(m));
  std::vector<UniPoly> out;
  Rat inv_lambda = Rat(1, lambda);
  for (const auto& g : int_factors) {
    // map back: h(x) = g(lambda*x) / lambda^deg(g)
    UniPoly h = ip_to_unipoly(g).compose_linear(Rat(lambda), Rat(0));
    out.push_back(h.monic());
  }
  return out;
}

bool unipoly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k)
    if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
  return false;
}

}  // namespace

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  auto [ac, a_cont] = primitive_integer_coeffs(a);
  auto [bc, b_cont] = primitive_integer_coeffs(b);
  Int gamma;
  mpz_gcd(gamma.get_mpz_t(), ac.back().get_mpz_t(), bc.back().get_mpz_t());

  int best_degree = std::min(a.degree(), b.degree()) + 1;
  std::vector<CrtAccumulator> acc;
  Int previous(-1);
  size_t prime_index = 0;
  for (;;) {
    uint64_t p = crt_primes(prime_index + 1)[prime_index];
    ++prime_index;
    if (prime_index > 10000) throw MathError("gcd: prime budget exhausted");
    PrimeField F{p};
    PolyP ap = pp_from_int_coeffs(ac, F);
    PolyP bp = pp_from_int_coeffs(bc, F);
    if (pp_degree(ap) != a.degree() || pp_degree(bp) != b.degree()) continue;
    PolyP g = pp_gcd(ap, bp, F);
    int dg = pp_degree(g);
    if (dg == 0) return UniPoly::constant(Rat(1));
    if (dg > best_degree) continue;  // unlucky prime
    if (dg < best_degree) {          // every accumulated prime was unlucky
      best_degree = dg;
      acc.assign(dg + 1, CrtAccumulator{});
      previous = -1;
    }
    uint64_t scale = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    for (int k = 0; k <= dg; ++k) acc[k].add(F.mul(g[k], scale), p);

    // stabilization + verification
    Int lead = acc[best_degree].symmetric();
    if (lead == 0) continue;
    std::vector<Rat> cand_coeffs(best_degree + 1);
    for (int k = 0; k <= best_degree; ++k) cand_coeffs[k] = Rat(acc[k].symmetric());
    UniPoly cand = UniPoly(std::move(cand_coeffs));
    if (previous == acc[0].modulus) continue;
    UniPoly monic_cand = cand.monic();
    auto [q1, r1] = a.divmod(monic_cand);
    if (r1.is_zero()) {
      auto [q2, r2] = b.divmod(monic_cand);
      if (r2.is_zero()) return monic_cand;
    }
    previous = acc[0].modulus;
  }
}

bool is_squarefree(const UniPoly& g) {
  if (g.is_zero()) return false;
  if (g.degree() <= 1) return true;
  return poly_gcd(g, g.derivative()).degree() == 0;
}

UniPoly squarefree_part(const UniPoly& g) {
  if (g.is_zero()) throw MathError("squarefree part of the zero polynomial");
  if (g.degree() == 0) return UniPoly::constant(Rat(1));
  UniPoly d = poly_gcd(g, g.derivative());
  return g.exact_div(d).monic();
}

std::vector<std::pair<UniPoly, int>> factor_rationals(const UniPoly& g) {
  if (g.is_zero()) throw MathError("cannot factor the zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  if (g.degree() == 0) return out;

  // Yun's squarefree decomposition on the monic form
  UniPoly m = g.monic();
  std::vector<std::pair<UniPoly, int>> squarefree_parts;
  UniPoly d = poly_gcd(m, m.derivative());
  if (d.degree() == 0) {
    squarefree_parts.emplace_back(m, 1);
  } else {
    UniPoly w = m.exact_div(d);
    UniPoly y = m.derivative().exact_div(d);
    UniPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
      UniPoly gi = poly_gcd(w, z);
      if (gi.degree() > 0) squarefree_parts.emplace_back(gi, i);
      w = w.exact_div(gi).monic();
      y = z.exact_div(gi);
      z = y - w.derivative();
      ++i;
    }
  }

  for (const auto& [part, mult] : squarefree_parts)
    for (const UniPoly& factor : factor_monic_squarefree(part.monic()))
      out.emplace_back(factor, mult);

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return unipoly_less(a.first, b.first);
  });
  return out;
}

Rat resultant(const UniPoly& a, const UniPoly& b) {
  int da = a.degree(), db = b.degree();
  if (da < 0 || db < 0) return Rat(0);
  if (da == 0) return pow_rat(a.coeff(0), db);
  if (db == 0) return pow_rat(b.coeff(0), da);
  size_t dim = da + db;
  RatMatrix s(dim, RatVec(dim, Rat(0)));
  for (int r = 0; r < db; ++r)
    for (int k = 0; k <= da; ++k) s[r][r + da - k] = a.coeff(k);
  for (int r = 0; r < da; ++r)
    for (int k = 0; k <= db; ++k) s[db + r][r + db - k] = b.coeff(k);
  return determinant(s);
}

Rat discriminant(const UniPoly& f) {
  int d = f.degree();
  if (d < 1) throw MathError("discriminant needs degree >= 1");
  Rat r = resultant(f, f.derivative()) / f.leading();
  int sign_exp = (d * (d - 1)) / 2;
  return sign_exp % 2 == 0 ? r : -r;
}

std::optional<std::vector<int>> factor_degrees_mod_p(const UniPoly& f, uint64_t p) {
  auto [coeffs, content] = primitive_integer_coeffs(f);
  PrimeField F{p};
  PolyP fp = pp_from_int_coeffs(coeffs, F);
  if (pp_degree(fp) != f.degree()) return std::nullopt;  // p | leading coeff
  if (pp_degree(pp_gcd(fp, pp_derivative(fp, F), F)) != 0) return std::nullopt;
  std::vector<int> degrees;
  for (const auto& [d, part] : pp_distinct_degree(fp, F)) {
    int count = pp_degree(part) / d;
    for (int k = 0; k < count; ++k) degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace galois
