#include "galois/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "galois/modp.hpp"

namespace galois {

namespace {

void normalize_row(RatVec& row) {
  Int den(1), num(0);
  for (const Rat& v : row)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  for (Rat& v : row) v *= Rat(den);
  for (const Rat& v : row)
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_num().get_mpz_t());
  if (num == 0) return;
  for (Rat& v : row) v /= Rat(num);
}

}  // namespace

Echelon rref(RatMatrix rows, const std::vector<int>& column_order) {
  size_t width = rows.empty() ? column_order.size() : rows[0].size();
  for (auto& r : rows) normalize_row(r);

  Echelon ech;
  size_t next_row = 0;
  for (int col : column_order) {
    size_t pivot = next_row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next_row], rows[pivot]);
    Rat inv = Rat(1) / rows[next_row][col];
    for (Rat& v : rows[next_row]) v *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][col] == 0) continue;
      Rat factor = rows[r][col];
      for (size_t c = 0; c < width; ++c) rows[r][c] -= factor * rows[next_row][c];
    }
    ech.pivot_cols.push_back(col);
    ++next_row;
    if (next_row == rows.size()) break;
  }
  std::vector<bool> is_pivot(width, false);
  for (int c : ech.pivot_cols) is_pivot[c] = true;
  for (size_t c = 0; c < width; ++c)
    if (!is_pivot[c]) ech.free_cols.push_back(static_cast<int>(c));
  ech.reduced_rows.assign(rows.begin(), rows.begin() + next_row);
  return ech;
}

std::optional<RatVec> LinearSolver::add(RatVec v) {
  assert(v.size() == width_);
  RatVec combo(added_ + 1, Rat(0));
  combo[added_] = Rat(1);
  for (size_t k = 0; k < basis_.size(); ++k) {
    const Rat& coeff = v[pivot_of_[k]];
    if (coeff == 0) continue;
    Rat factor = coeff;  // basis rows are pivot-normalized
    for (size_t c = 0; c < width_; ++c) v[c] -= factor * basis_[k][c];
    for (size_t c = 0; c < combo_[k].size(); ++c) combo[c] -= factor * combo_[k][c];
  }
  int pivot = -1;
  for (size_t c = 0; c < width_; ++c)
    if (v[c] != 0) { pivot = static_cast<int>(c); break; }
  ++added_;
  if (pivot < 0) {
    combo.pop_back();  // drop the slot of the dependent vector itself
    for (Rat& c : combo) c = -c;
    return combo;
  }
  Rat inv = Rat(1) / v[pivot];
  for (Rat& c : v) c *= inv;
  for (Rat& c : combo) c *= inv;
  basis_.push_back(std::move(v));
  pivot_of_.push_back(pivot);
  combo_.push_back(std::move(combo));
  return std::nullopt;
}

// charpoly of an integer matrix by Hessenberg reduction mod p
std::vector<uint64_t> hessenberg_charpoly_mod_p(std::vector<std::vector<uint64_t>> h,
                                                const PrimeField& F) {
  size_t d = h.size();
  for (size_t j = 0; j + 2 <= d; ++j) {
    size_t pivot = j + 1;
    while (pivot < d && h[pivot][j] == 0) ++pivot;
    if (pivot == d) continue;
    if (pivot != j + 1) {
      std::swap(h[pivot], h[j + 1]);
      for (size_t r = 0; r < d; ++r) std::swap(h[r][pivot], h[r][j + 1]);
    }
    uint64_t inv = F.inv(h[j + 1][j]);
    for (size_t i = j + 2; i < d; ++i) {
      uint64_t factor = F.mul(h[i][j], inv);
      if (factor == 0) continue;
      for (size_t c = 0; c < d; ++c) h[i][c] = F.sub(h[i][c], F.mul(factor, h[j + 1][c]));
      for (size_t r = 0; r < d; ++r) h[r][j + 1] = F.add(h[r][j + 1], F.mul(factor, h[r][i]));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_{i,k} (prod subdiagonals) p_{i-1}
  std::vector<std::vector<uint64_t>> minors(d + 1);
  minors[0] = {1};
  for (size_t k = 1; k <= d; ++k) {
    const auto& prev = minors[k - 1];
    std::vector<uint64_t> pk(k + 1, 0);
    for (size_t t = 0; t < prev.size(); ++t) {
      pk[t + 1] = F.add(pk[t + 1], prev[t]);
      pk[t] = F.sub(pk[t], F.mul(h[k - 1][k - 1] % F.p, prev[t]));
    }
    uint64_t subdiag = 1;
    for (size_t i = k - 1; i >= 1; --i) {
      subdiag = F.mul(subdiag, h[i][i - 1]);
      uint64_t coeff = F.mul(h[i - 1][k - 1], subdiag);
      if (coeff != 0) {
        const auto& pi = minors[i - 1];
        for (size_t t = 0; t < pi.size(); ++t)
          pk[t] = F.sub(pk[t], F.mul(coeff, pi[t]));
      }
      if (subdiag == 0) break;
    }
    minors[k] = std::move(pk);
  }
  return minors[d];
}

UniPoly charpoly(const RatMatrix& m) {
  size_t d = m.size();
  if (d == 0) return UniPoly::constant(Rat(1));

  Int den(1);
  for (const auto& row : m)
    for (const Rat& v : row)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<std::vector<Int>> b(d, std::vector<Int>(d));
  Int max_row_sq(0);
  for (size_t r = 0; r < d; ++r) {
    Int row_sq(0);
    for (size_t c = 0; c < d; ++c) {
      Rat v = m[r][c] * Rat(den);
      assert(v.get_den() == 1);
      b[r][c] = v.get_num();
      row_sq += b[r][c] * b[r][c];
    }
    max_row_sq = std::max(max_row_sq, row_sq);
  }

  // |c_k| <= C(d,k) * rho^k with rho = max row 2-norm (Hadamard on minors)
  size_t bound_bits = d + (d * bit_length(max_row_sq)) / 2 + 8;
  std::vector<CrtAccumulator> acc(d + 1);
  size_t prime_index = 0;
  while (bit_length(acc[0].modulus) < bound_bits + 2) {
    uint64_t p = crt_primes(prime_index + 1)[prime_index];
    ++prime_index;
    PrimeField F{p};
    std::vector<std::vector<uint64_t>> hp(d, std::vector<uint64_t>(d));
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c < d; ++c) {
        long rem = mpz_fdiv_ui(b[r][c].get_mpz_t(), p);
        hp[r][c] = static_cast<uint64_t>(rem);
      }
    auto cp = hessenberg_charpoly_mod_p(std::move(hp), F);
    assert(cp.size() == d + 1);
    for (size_t k = 0; k <= d; ++k) acc[k].add(cp[k], p);
  }

  // charpoly(M) = charpoly(den*M)(den*x) / den^d
  std::vector<Rat> coeffs(d + 1);
  Int scale = pow_int(den, static_cast<unsigned long>(d));
  for (size_t k = 0; k <= d; ++k) {
    Rat ck(acc[k].symmetric());
    coeffs[k] = ck * Rat(pow_int(den, static_cast<unsigned long>(k)), scale);
  }
  UniPoly out(std::move(coeffs));
  assert(out.degree() == static_cast<int>(d) && out.leading() == 1);
  return out;
}

Rat determinant(const RatMatrix& m) {
  size_t d = m.size();
  if (d == 0) return Rat(1);
  // scale rows to integers, Bareiss fraction-free elimination
  std::vector<std::vector<Int>> a(d, std::vector<Int>(d));
  Rat scale(1);
  for (size_t r = 0; r < d; ++r) {
    Int den(1);
    for (const Rat& v : m[r])
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    scale /= Rat(den);
    for (size_t c = 0; c < d; ++c) {
      Rat v = m[r][c] * Rat(den);
      a[r][c] = v.get_num();
    }
  }
  Int prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < d; ++k) {
    size_t pivot = k;
    while (pivot < d && a[pivot][k] == 0) ++pivot;
    if (pivot == d) return Rat(0);
    if (pivot != k) { std::swap(a[pivot], a[k]); sign = -sign; }
    for (size_t i = k + 1; i < d; ++i) {
      for (size_t j = k + 1; j < d; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num / prev;  // exact by Bareiss
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Rat(sign) * Rat(a[d - 1][d - 1]) * scale;
}

}  // namespace galois
