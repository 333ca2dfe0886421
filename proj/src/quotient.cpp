#include "galois/quotient.hpp"

#include <algorithm>
#include <cassert>

#include "galois/factor.hpp"
#include "galois/symfun.hpp"

namespace galois {

TriangularIdeal make_triangular(std::vector<MultiPoly> gens) {
  TriangularIdeal t;
  t.nvars = static_cast<int>(gens.size());
  for (int i = 1; i <= t.nvars; ++i) {
    const MultiPoly& f = gens[i - 1];
    int d = f.degree_in(i);
    if (d < 1) throw MathError("triangular set: f_i must have degree >= 1 in x_i");
    for (const auto& [e, c] : f.terms()) {
      for (int v = i; v < t.nvars; ++v)
        if (e[v] > 0) throw MathError("triangular set: f_i may involve x_1..x_i only");
      if (e[i - 1] == d) {
        // leading x_i power must be the bare monomial x_i^d with coefficient 1
        bool bare = c == 1;
        for (int v = 0; v + 1 < i; ++v) bare = bare && e[v] == 0;
        if (!bare) throw MathError("triangular set: f_i must be monic in x_i");
      }
    }
    t.init_degrees.push_back(d);
  }
  t.gens = std::move(gens);
  return t;
}

AlgebraPtr QuotientAlgebra::from_triangular(TriangularIdeal t) {
  auto a = std::shared_ptr<QuotientAlgebra>(new QuotientAlgebra());
  a->nvars_ = t.nvars;
  a->tri_ = std::move(t);
  a->root_ = a.get();
  // staircase basis, ascending lex on (e_1..e_n)
  Expo e(a->nvars_, 0);
  for (;;) {
    a->basis_index_.emplace(e, static_cast<int>(a->basis_.size()));
    a->basis_.push_back(e);
    int v = a->nvars_ - 1;
    while (v >= 0) {
      if (++e[v] < a->tri_.init_degrees[v]) break;
      e[v] = 0;
      --v;
    }
    if (v < 0) break;
  }
  std::sort(a->basis_.begin(), a->basis_.end());
  a->basis_index_.clear();
  for (size_t k = 0; k < a->basis_.size(); ++k)
    a->basis_index_.emplace(a->basis_[k], static_cast<int>(k));
  return a;
}

AlgebraPtr QuotientAlgebra::symmetric_ideal(const UniPoly& f) {
  if (f.degree() < 1) throw MathError("symmetric_ideal: degree must be >= 1");
  if (!is_squarefree(f))
    throw MathError("symmetric_ideal: f has multiple roots (gcd(f, f') != 1)");
  return from_triangular(make_triangular(cauchy_modules(f)));
}

const TriangularIdeal& QuotientAlgebra::root_triangular() const {
  return root_->tri_;
}

std::vector<MultiPoly> QuotientAlgebra::ideal_generators() const {
  std::vector<MultiPoly> gens;
  std::vector<const QuotientAlgebra*> chain;
  for (const QuotientAlgebra* a = this; a != nullptr; a = a->parent_.get())
    chain.push_back(a);
  std::reverse(chain.begin(), chain.end());
  for (const QuotientAlgebra* a : chain) {
    if (a->parent_ == nullptr)
      gens.insert(gens.end(), a->tri_.gens.begin(), a->tri_.gens.end());
    else
      gens.insert(gens.end(), a->relations_.begin(), a->relations_.end());
  }
  return gens;
}

const RatVec& QuotientAlgebra::monomial_coords_root(const Expo& e) const {
  assert(root_ == this);
  auto hit = nf_cache_.find(e);
  if (hit != nf_cache_.end()) return hit->second;

  RatVec out(basis_.size(), Rat(0));
  auto in_basis = basis_index_.find(e);
  if (in_basis != basis_index_.end()) {
    out[in_basis->second] = 1;
  } else {
    // rewrite the highest-index excessive variable via its triangular
    // generator: x_i^{d_i} = -(tail of f_i)
    int var = -1;
    for (int v = nvars_; v-- > 0;)
      if (e[v] >= tri_.init_degrees[v]) { var = v; break; }
    assert(var >= 0);
    Expo rest = e;
    rest[var] -= tri_.init_degrees[var];
    const MultiPoly& f = tri_.gens[var];
    Expo shifted(nvars_);
    for (const auto& [fe, fc] : f.terms()) {
      if (fe[var] == tri_.init_degrees[var]) continue;  // the monic head
      for (int v = 0; v < nvars_; ++v) shifted[v] = rest[v] + fe[v];
      const RatVec& sub = monomial_coords_root(shifted);
      for (size_t k = 0; k < out.size(); ++k)
        if (sub[k] != 0) out[k] -= fc * sub[k];
    }
  }
  return nf_cache_.emplace(e, std::move(out)).first->second;
}

RatVec QuotientAlgebra::chain_project(RatVec root_coords) const {
  // apply the projections from the root down to this algebra
  std::vector<const QuotientAlgebra*> chain;
  for (const QuotientAlgebra* a = this; a->parent_ != nullptr; a = a->parent_.get())
    chain.push_back(a);
  std::reverse(chain.begin(), chain.end());
  RatVec cur = std::move(root_coords);
  for (const QuotientAlgebra* a : chain) {
    RatVec next(a->basis_.size(), Rat(0));
    for (size_t j = 0; j < cur.size(); ++j) {
      if (cur[j] == 0) continue;
      const RatVec& col = a->projection_[j];
      for (size_t k = 0; k < next.size(); ++k)
        if (col[k] != 0) next[k] += cur[j] * col[k];
    }
    cur = std::move(next);
  }
  return cur;
}

RatVec QuotientAlgebra::coords(const MultiPoly& p) const {
  if (p.nvars() != nvars_ && !p.is_zero())
    throw MathError("coords: arity mismatch");
  RatVec root_coords(root_->basis_.size(), Rat(0));
  for (const auto& [e, c] : p.terms()) {
    const RatVec& mono = root_->monomial_coords_root(e);
    for (size_t k = 0; k < root_coords.size(); ++k)
      if (mono[k] != 0) root_coords[k] += c * mono[k];
  }
  if (parent_ == nullptr) return root_coords;
  return chain_project(std::move(root_coords));
}

MultiPoly QuotientAlgebra::normal_form(const MultiPoly& p) const {
  RatVec v = coords(p);
  MultiPoly out(nvars_);
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out.add_term(basis_[k], v[k]);
  return out;
}

bool QuotientAlgebra::member(const MultiPoly& p) const {
  RatVec v = coords(p);
  return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

RatMatrix QuotientAlgebra::multiplication_matrix(const MultiPoly& theta) const {
  MultiPoly t = normal_form(theta);
  size_t d = dimension();
  RatMatrix m(d, RatVec(d, Rat(0)));
  Expo shifted(nvars_);
  for (size_t j = 0; j < d; ++j) {
    MultiPoly prod(nvars_);
    for (const auto& [e, c] : t.terms()) {
      for (int v = 0; v < nvars_; ++v) shifted[v] = e[v] + basis_[j][v];
      prod.add_term(shifted, c);
    }
    RatVec col = coords(prod);
    for (size_t k = 0; k < d; ++k) m[k][j] = std::move(col[k]);
  }
  return m;
}

AlgebraPtr QuotientAlgebra::extended(const std::vector<MultiPoly>& relations) const {
  std::vector<MultiPoly> active;
  for (const MultiPoly& r : relations)
    if (!member(r)) active.push_back(r);
  if (active.empty()) return shared_from_this();

  size_t d = dimension();
  RatMatrix rows;
  rows.reserve(active.size() * d);
  Expo shifted(nvars_);
  for (const MultiPoly& r : active) {
    MultiPoly rn = normal_form(r);
    for (size_t j = 0; j < d; ++j) {
      MultiPoly prod(nvars_);
      for (const auto& [e, c] : rn.terms()) {
        for (int v = 0; v < nvars_; ++v) shifted[v] = e[v] + basis_[j][v];
        prod.add_term(shifted, c);
      }
      rows.push_back(coords(prod));
    }
  }

  // eliminate large monomials first so the kept basis is the low staircase
  std::vector<int> column_order(d);
  for (size_t k = 0; k < d; ++k) column_order[k] = static_cast<int>(d - 1 - k);
  std::sort(column_order.begin(), column_order.end(), [&](int a, int b) {
    return reduction_less(basis_[b], basis_[a]);
  });
  Echelon ech = rref(std::move(rows), column_order);
  if (ech.rank() == d)
    throw MathError("extend_ideal: quotient collapsed to dimension 0 "
                    "(adjoined polynomial is not a factor value)");

  auto child = std::shared_ptr<QuotientAlgebra>(new QuotientAlgebra());
  child->nvars_ = nvars_;
  child->parent_ = shared_from_this();
  child->relations_ = std::move(active);
  child->root_ = root_;
  for (int c : ech.free_cols) child->basis_.push_back(basis_[c]);
  std::sort(child->basis_.begin(), child->basis_.end());
  for (size_t k = 0; k < child->basis_.size(); ++k)
    child->basis_index_.emplace(child->basis_[k], static_cast<int>(k));

  child->projection_.assign(d, RatVec(child->basis_.size(), Rat(0)));
  for (size_t k = 0; k < child->basis_.size(); ++k)
    child->projection_[basis_index_.at(child->basis_[k])][k] = 1;
  for (size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    int pivot = ech.pivot_cols[r];
    RatVec& col = child->projection_[pivot];
    // pivot monomial == -sum over free columns of the reduced row
    for (size_t k = 0; k < child->basis_.size(); ++k) {
      int free_col = basis_index_.at(child->basis_[k]);
      col[k] = -ech.reduced_rows[r][free_col];
    }
  }
  return child;
}

TriangularIdeal QuotientAlgebra::triangularize() const {
  size_t dim = dimension();
  std::vector<MultiPoly> gens;
  std::vector<int> degrees;
  std::vector<Expo> partial{Expo(nvars_, 0)};  // staircase found so far

  for (int i = 1; i <= nvars_; ++i) {
    LinearSolver solver(dim);
    std::vector<Expo> added;
    auto feed = [&](const Expo& e) {
      MultiPoly mono = MultiPoly::monomial(nvars_, e);
      return solver.add(coords(mono));
    };
    int d_i = -1;
    MultiPoly f_i(nvars_);
    for (int power = 0; d_i < 0; ++power) {
      // the pure power x_i^power first, then the rest of its level
      Expo pe(nvars_, 0);
      pe[i - 1] = power;
      if (power > 0) {
        auto dep = feed(pe);
        if (dep) {
          d_i = power;
          f_i = MultiPoly::monomial(nvars_, pe);
          for (size_t k = 0; k < dep->size(); ++k)
            if ((*dep)[k] != 0) f_i -= MultiPoly::monomial(nvars_, added[k], (*dep)[k]);
          break;
        }
        added.push_back(pe);
      } else {
        auto dep = feed(pe);
        assert(!dep);
        added.push_back(pe);
      }
      for (const Expo& m : partial) {
        if (std::all_of(m.begin(), m.end(), [](int v) { return v == 0; })) continue;
        Expo e = m;
        e[i - 1] = power;
        if (feed(e))
          throw MathError("triangularize: ideal is not triangular in lex order "
                          "(partial staircase is linearly dependent)");
        added.push_back(e);
      }
      if (added.size() > dim + 1)
        throw MathError("triangularize: no monic dependency at expected degree");
    }
    degrees.push_back(d_i);
    std::vector<Expo> next_partial;
    for (const Expo& m : partial)
      for (int k = 0; k < d_i; ++k) {
        Expo e = m;
        e[i - 1] = k;
        next_partial.push_back(e);
      }
    std::sort(next_partial.begin(), next_partial.end());
    partial = std::move(next_partial);
    gens.push_back(std::move(f_i));
  }

  long product = 1;
  for (int dgr : degrees) product *= dgr;
  if (product != static_cast<long>(dim))
    throw MathError("triangularize: product of initial degrees does not match "
                    "the dimension (ideal not triangular)");
  TriangularIdeal t = make_triangular(std::move(gens));
  for (const MultiPoly& f : t.gens) assert(member(f));
  return t;
}

PermGroup decomposition_group(const QuotientAlgebra& a) {
  PermGroup sn = PermGroup::symmetric(a.nvars());
  std::vector<MultiPoly> gens = a.ideal_generators();
  std::vector<Perm> members;
  for (const Perm& sigma : sn.elements()) {
    bool stable = true;
    for (const MultiPoly& g : gens)
      if (!a.member(g.acted_by(sigma))) { stable = false; break; }
    if (stable) members.push_back(sigma);
  }
  return PermGroup::from_elements(std::move(members));
}

PermSet injector(const QuotientAlgebra& a_i, const QuotientAlgebra& a_j) {
  if (a_i.nvars() != a_j.nvars())
    throw MathError("injector: mismatched variable counts");
  PermGroup sn = PermGroup::symmetric(a_i.nvars());
  std::vector<MultiPoly> gens = a_i.ideal_generators();
  std::vector<Perm> members;
  for (const Perm& sigma : sn.elements()) {
    bool maps_in = true;
    for (const MultiPoly& g : gens)
      if (!a_j.member(g.acted_by(sigma))) { maps_in = false; break; }
    if (maps_in) members.push_back(sigma);
  }
  PermSet out(a_i.nvars(), std::move(members));
  if (!out.contains(Perm::identity(a_i.nvars())))
    throw MathError("injector: I is not contained in J");
  return out;
}

PurityCertificate is_pure(const QuotientAlgebra& a) {
  PurityCertificate cert;
  cert.dimension = a.dimension();
  cert.stabilizer_order = decomposition_group(a).order();
  cert.pure = static_cast<long>(cert.dimension) == cert.stabilizer_order;
  if (cert.pure) {
    try {
      a.triangularize();
      cert.triangular_ok = true;
    } catch (const MathError&) {
      cert.triangular_ok = false;
    }
  }
  return cert;
}

VarietyReport variety_check(const QuotientAlgebra& a, const RootVector& roots,
                            const Rat& tolerance,
                            const std::optional<PermSet>& expected) {
  VarietyReport report;
  report.dimension = a.dimension();
  PermGroup sn = PermGroup::symmetric(a.nvars());
  std::vector<MultiPoly> gens = a.ideal_generators();
  Real tol = real_from_rat(tolerance);

  for (const Perm& sigma : sn.elements()) {
    std::vector<ComplexBall> tuple = sigma.permute_tuple(roots.roots());
    bool vanishes = true;
    for (const MultiPoly& g : gens) {
      ComplexBall value = evaluate_ball(g, tuple);
      Real upper = value.abs_upper();
      Real lower = value.abs_lower();
      if (upper <= tol) continue;
      if (lower > tol) { vanishes = false; break; }
      throw MathError("variety_check: precision insufficient to separate "
                      "root tuples at the given tolerance");
    }
    if (vanishes) report.flagged.push_back(sigma);
  }
  report.flagged_count = report.flagged.size();
  report.count_matches_dimension = report.flagged_count == report.dimension;
  if (expected) {
    PermSet flagged_set(a.nvars(), report.flagged);
    report.matches_expected = flagged_set == *expected;
  }
  return report;
}

}  // namespace galois
