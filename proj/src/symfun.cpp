#include "galois/symfun.hpp"

#include <cassert>

#include "galois/factor.hpp"

namespace galois {

namespace {

void subsets_rec(int n, int r, int start, Expo& e, MultiPoly& out) {
  if (r == 0) {
    out.add_term(e, Rat(1));
    return;
  }
  for (int v = start; v <= n - r; ++v) {
    e[v] = 1;
    subsets_rec(n, r - 1, v + 1, e, out);
    e[v] = 0;
  }
}

void compositions_rec(int n, int rest, int var, Expo& e, MultiPoly& out) {
  if (var == n - 1) {
    e[var] = rest;
    out.add_term(e, Rat(1));
    e[var] = 0;
    return;
  }
  for (int k = 0; k <= rest; ++k) {
    e[var] = k;
    compositions_rec(n, rest - k, var + 1, e, out);
    e[var] = 0;
  }
}

}  // namespace

MultiPoly symmetric_family(SymKind kind, int r, int n) {
  if (r < 0) throw MathError("symmetric_family: r must be >= 0");
  MultiPoly out(n);
  switch (kind) {
    case SymKind::Elementary: {
      if (r > n) return out;  // e_r = 0 for r > n
      Expo e(n, 0);
      subsets_rec(n, r, 0, e, out);
      return out;
    }
    case SymKind::Power: {
      if (r == 0) return MultiPoly::constant(n, Rat(n));
      for (int v = 1; v <= n; ++v) {
        Expo e(n, 0);
        e[v - 1] = r;
        out.add_term(e, Rat(1));
      }
      return out;
    }
    case SymKind::Complete: {
      Expo e(n, 0);
      compositions_rec(n, r, 0, e, out);
      return out;
    }
  }
  return out;
}

std::vector<Rat> newton_power_sums(const UniPoly& f, int m) {
  int n = f.degree();
  if (n < 0 || f.leading() == 0) throw MathError("newton_power_sums: zero polynomial");
  std::vector<Rat> p(m + 1, Rat(0));
  const Rat an = f.leading();
  for (int k = 1; k <= m; ++k) {
    Rat acc(0);
    for (int j = 1; j < k; ++j) acc += f.coeff(n - j) * p[k - j];
    if (k <= n) acc += Rat(k) * f.coeff(n - k);
    p[k] = -acc / an;
  }
  p.erase(p.begin());
  return p;
}

MultiPoly girard_newton_combination(int m, int n) {
  MultiPoly acc(n);
  for (int k = 0; k < m; ++k) {
    MultiPoly term = symmetric_family(SymKind::Power, m - k, n) *
                     symmetric_family(SymKind::Elementary, k, n);
    acc += (k % 2 == 0) ? term : -term;
  }
  MultiPoly last = symmetric_family(SymKind::Elementary, m, n) * Rat(m);
  acc += (m % 2 == 0) ? last : -last;
  return acc;
}

MultiPoly divided_difference(const MultiPoly& p, int var_from, int var_to) {
  int n = p.nvars();
  MultiPoly out(n);
  for (const auto& [e, c] : p.terms()) {
    assert(e[var_to - 1] == 0);
    int k = e[var_from - 1];
    // (x_a^k - x_b^k)/(x_a - x_b) = sum_j x_a^j x_b^{k-1-j}
    Expo base = e;
    for (int j = 0; j < k; ++j) {
      base[var_from - 1] = j;
      base[var_to - 1] = k - 1 - j;
      out.add_term(base, c);
    }
  }
  return out;
}

std::vector<MultiPoly> cauchy_modules(const UniPoly& f) {
  int n = f.degree();
  if (n < 1) throw MathError("cauchy_modules: degree must be >= 1");
  UniPoly m = f.monic();
  std::vector<MultiPoly> out;
  out.push_back(m.to_multipoly(n, 1));
  for (int r = 2; r <= n; ++r) {
    // C_r = (C_{r-1}(..,x_{r-1}) - C_{r-1}(..,x_r)) / (x_{r-1} - x_r)
    out.push_back(divided_difference(out.back(), r - 1, r));
  }
  return out;
}

MultiPoly cauchy_closed_form(const UniPoly& f, int r) {
  int n = f.degree();
  if (r < 0 || r > n - 1) throw MathError("cauchy_closed_form: need 0 <= r <= n-1");
  UniPoly m = f.monic();
  MultiPoly acc(n);
  for (int i = r; i <= n; ++i) {
    // h_{i-r} in the variables x_1..x_{r+1}, embedded in n variables
    MultiPoly h = symmetric_family(SymKind::Complete, i - r, r + 1);
    std::vector<int> id_map(r + 1);
    for (int v = 0; v <= r; ++v) id_map[v] = v;
    acc += h.with_variables_mapped(id_map, n) * m.coeff(i);
  }
  return acc;
}

}  // namespace galois
