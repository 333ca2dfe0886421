#include "galois/modp.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace galois {

uint64_t PrimeField::pow(uint64_t a, uint64_t e) const {
  uint64_t acc = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

uint64_t PrimeField::inv(uint64_t a) const {
  if (a == 0) throw MathError("inverse of zero mod p");
  return pow(a, p - 2);
}

PolyP pp_trim(PolyP f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int pp_degree(const PolyP& f) { return static_cast<int>(f.size()) - 1; }

PolyP pp_mul(const PolyP& a, const PolyP& b, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return pp_trim(std::move(out));
}

std::pair<PolyP, PolyP> pp_divmod(const PolyP& a, const PolyP& b, const PrimeField& F) {
  if (b.empty()) throw MathError("mod-p division by zero");
  PolyP rem = a;
  int db = pp_degree(b);
  if (pp_degree(a) < db) return {{}, rem};
  PolyP quo(a.size() - b.size() + 1, 0);
  uint64_t inv_lead = F.inv(b.back());
  for (int k = pp_degree(a); k >= db; --k) {
    uint64_t q = F.mul(rem[k], inv_lead);
    if (q == 0) continue;
    quo[k - db] = q;
    for (int j = 0; j <= db; ++j)
      rem[k - db + j] = F.sub(rem[k - db + j], F.mul(q, b[j]));
  }
  return {pp_trim(std::move(quo)), pp_trim(std::move(rem))};
}

PolyP pp_mod(const PolyP& a, const PolyP& b, const PrimeField& F) {
  return pp_divmod(a, b, F).second;
}

PolyP pp_monic(const PolyP& f, const PrimeField& F) {
  if (f.empty()) return f;
  uint64_t inv = F.inv(f.back());
  PolyP out(f.size());
  for (size_t k = 0; k < f.size(); ++k) out[k] = F.mul(f[k], inv);
  return out;
}

PolyP pp_gcd(PolyP a, PolyP b, const PrimeField& F) {
  a = pp_trim(std::move(a));
  b = pp_trim(std::move(b));
  while (!b.empty()) {
    PolyP r = pp_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : pp_monic(a, F);
}

PolyP pp_derivative(const PolyP& f, const PrimeField& F) {
  if (f.size() <= 1) return {};
  PolyP out(f.size() - 1);
  for (size_t k = 1; k < f.size(); ++k) out[k - 1] = F.mul(f[k], k % F.p);
  return pp_trim(std::move(out));
}

PolyP pp_sub(const PolyP& a, const PolyP& b, const PrimeField& F) {
  PolyP out(std::max(a.size(), b.size()), 0);
  for (size_t k = 0; k < a.size(); ++k) out[k] = a[k];
  for (size_t k = 0; k < b.size(); ++k) out[k] = F.sub(out[k], b[k]);
  return pp_trim(std::move(out));
}

PolyP pp_powmod(const PolyP& base, const Int& e, const PolyP& f, const PrimeField& F) {
  PolyP acc{1};
  PolyP b = pp_mod(base, f, F);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return acc;
  for (size_t k = bits; k-- > 0;) {
    acc = pp_mod(pp_mul(acc, acc, F), f, F);
    if (mpz_tstbit(e.get_mpz_t(), k)) acc = pp_mod(pp_mul(acc, b, F), f, F);
  }
  return acc;
}

PolyP pp_from_int_coeffs(const std::vector<Int>& coeffs, const PrimeField& F) {
  PolyP out(coeffs.size());
  for (size_t k = 0; k < coeffs.size(); ++k) {
    Int r = coeffs[k] % static_cast<long>(F.p);
    if (r < 0) r += static_cast<long>(F.p);
    out[k] = r.get_ui();
  }
  return pp_trim(std::move(out));
}

std::vector<std::pair<int, PolyP>> pp_distinct_degree(const PolyP& f_in, const PrimeField& F) {
  std::vector<std::pair<int, PolyP>> out;
  PolyP f = pp_monic(f_in, F);
  PolyP h{0, 1};  // x
  const PolyP x{0, 1};
  int d = 0;
  while (pp_degree(f) > 0) {
    ++d;
    if (2 * d > pp_degree(f)) {
      out.emplace_back(pp_degree(f), f);
      break;
    }
    h = pp_powmod(h, Int(static_cast<long>(F.p)), f, F);
    PolyP g = pp_gcd(pp_sub(h, x, F), f, F);
    if (pp_degree(g) > 0) {
      out.emplace_back(d, g);
      f = pp_divmod(f, g, F).first;
      h = pp_mod(h, f, F);
    }
  }
  return out;
}

namespace {

// equal-degree splitting (Cantor-Zassenhaus), p odd
void edf_split(const PolyP& f, int d, const PrimeField& F, std::mt19937_64& rng,
               std::vector<PolyP>& out) {
  if (pp_degree(f) == d) {
    out.push_back(pp_monic(f, F));
    return;
  }
  Int exponent = (pow_int(Int(static_cast<long>(F.p)), d) - 1) / 2;
  for (;;) {
    PolyP r(pp_degree(f), 0);
    for (auto& c : r) c = rng() % F.p;
    r.push_back(1);  // keep it nonconstant
    PolyP w = pp_powmod(r, exponent, f, F);
    if (w.empty()) continue;
    w[0] = F.sub(w[0], 1);
    PolyP g = pp_gcd(w, f, F);
    int dg = pp_degree(g);
    if (dg > 0 && dg < pp_degree(f)) {
      edf_split(g, d, F, rng, out);
      edf_split(pp_divmod(f, g, F).first, d, F, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PolyP> pp_factor_squarefree(const PolyP& f, const PrimeField& F) {
  if (F.p == 2) throw MathError("mod-2 splitting not supported; pick an odd prime");
  std::vector<PolyP> out;
  std::mt19937_64 rng(0x5eed5eedULL);  // fixed seed: deterministic output
  for (const auto& [d, part] : pp_distinct_degree(f, F)) {
    if (pp_degree(part) == d) {
      out.push_back(pp_monic(part, F));
    } else {
      edf_split(part, d, F, rng, out);
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyP& a, const PolyP& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

namespace {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::vector<uint64_t> primes_from(uint64_t from, size_t count) {
  std::vector<uint64_t> out;
  for (uint64_t n = std::max<uint64_t>(from, 2); out.size() < count; ++n)
    if (is_prime_u64(n)) out.push_back(n);
  return out;
}

const std::vector<uint64_t>& crt_primes(size_t count) {
  static std::vector<uint64_t> cache;
  uint64_t next = cache.empty() ? (1ULL << 31) - 1 : cache.back() - 1;
  while (cache.size() < count) {
    while (!is_prime_u64(next)) --next;
    cache.push_back(next);
    --next;
  }
  return cache;
}

void CrtAccumulator::add(uint64_t residue, uint64_t p) {
  // x = value + modulus * t, t = (residue - value) / modulus mod p
  Int pm(static_cast<long>(p));
  Int cur = value % pm;
  Int minv;
  Int m = modulus % pm;
  if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), pm.get_mpz_t()) == 0)
    throw MathError("CRT: moduli not coprime");
  Int t = ((Int(static_cast<long>(residue)) - cur) * minv) % pm;
  if (t < 0) t += pm;
  value += modulus * t;
  modulus *= pm;
}

Int CrtAccumulator::symmetric() const {
  Int half = modulus / 2;
  if (value > half) return value - modulus;
  return value;
}

}  // namespace galois
