#include "galois/engine.hpp"

#include <algorithm>
#include <cassert>
#include <variant>

#include "galois/factor.hpp"
#include "galois/lattice.hpp"
#include "galois/modp.hpp"

namespace galois {

namespace {

std::vector<Rat> simple_rational_roots(const Resolvent& res) {
  std::vector<Rat> out;
  if (!res.separable) return out;
  for (const auto& [factor, mult] : res.factors)
    if (factor.degree() == 1 && mult == 1) out.push_back(-factor.coeff(0));
  return out;
}

}  // namespace

std::variant<IdealChainNode, NoDescent> descend_step(
    const IdealChainNode& node, const PermGroup& edge, RootVector& roots,
    const EngineConfig& config, ChainStep* step_out) {
  const PermGroup& l = node.supergroup;
  InvariantSearch search(edge, l, config.invariant_budget);

  for (int retry = 0; retry < config.separability_retries; ++retry) {
    auto spec = search.next();
    if (!spec)
      throw MathError("descend_step: invariant search budget exhausted");
    Resolvent res = resolvent(*spec, node.algebra);
    if (!res.separable) continue;  // Tschirnhaus-free retry

    std::vector<Rat> linear_roots = simple_rational_roots(res);
    if (linear_roots.empty()) return NoDescent{};

    // which coset value tau_i.Theta(alpha) equals the chosen rational root:
    // that coset's conjugate of `edge` contains the Galois group
    CosetSystem cs = transversal(l, edge, CosetSide::Left);
    const Rat& c = linear_roots.front();
    size_t chosen = cs.transversal.size();
    for (;;) {
      std::vector<size_t> hits;
      for (size_t i = 0; i < cs.transversal.size(); ++i) {
        MultiPoly moved = spec->theta.acted_by(cs.transversal[i]);
        ComplexBall value = evaluate_ball(moved, roots.roots());
        ComplexBall gap = ball_sub(value, ComplexBall::exact(c));
        if (gap.abs_lower() == 0) hits.push_back(i);
      }
      if (hits.size() == 1) { chosen = hits.front(); break; }
      // separable resolvent: values are pairwise distinct, so enough
      // precision always singles out one coset
      unsigned next_bits = roots.precision_bits() * 2;
      if (next_bits > config.max_precision_bits)
        throw MathError("descend_step: precision escalation cap reached "
                        "while selecting a factor");
      roots = roots.refined(next_bits);
    }

    const Perm& tau = cs.transversal[chosen];
    MultiPoly moved_theta = spec->theta.acted_by(tau);
    MultiPoly relation = moved_theta - MultiPoly::constant(l.degree(), c);
    AlgebraPtr child = node.algebra->extended({relation});
    if (child->dimension() != static_cast<size_t>(edge.order()))
      throw MathError("descend_step: extension dimension != |H| "
                      "(chain hypothesis violated)");
    IdealChainNode next;
    next.algebra = child;
    next.supergroup = edge.conjugated(tau);
    next.invariant_used = moved_theta;
    next.factor_used = UniPoly({-c, Rat(1)});
    if (step_out) {
      step_out->from_order = l.order();
      step_out->to_order = edge.order();
      step_out->invariant = moved_theta.to_string();
      step_out->resolvent = res.resolvent.to_string();
      step_out->chosen_factor = next.factor_used->to_string();
      step_out->dim_before = node.algebra->dimension();
      step_out->dim_after = child->dimension();
    }
    return next;
  }
  throw MathError("descend_step: separability retries exhausted");
}

OracleReport dedekind_cycle_types(const UniPoly& f, const EngineConfig& config) {
  OracleReport report;
  std::vector<uint64_t> primes = config.dedekind_primes;
  if (primes.empty()) {
    // first good odd primes; 2 is skipped (odd-prime factorization machinery)
    uint64_t p = 3;
    while (report.dedekind.size() < config.min_dedekind_primes) {
      auto degrees = factor_degrees_mod_p(f, p);
      if (degrees)
        report.dedekind.emplace_back(p, *degrees);
      else
        report.skipped_primes.push_back(p);
      p = primes_from(p + 1, 1)[0];
      if (p > 10000)
        throw MathError("dedekind oracle: could not find enough good primes");
    }
  } else {
    for (uint64_t p : primes) {
      auto degrees = factor_degrees_mod_p(f, p);
      if (degrees)
        report.dedekind.emplace_back(p, *degrees);
      else
        report.skipped_primes.push_back(p);
    }
  }
  report.disc_is_square = is_rational_square(discriminant(f));
  return report;
}

std::vector<PermGroup> identify_from_partitions(const std::vector<int>& observed,
                                                const PermGroup& l,
                                                const PermGroup& h) {
  std::vector<int> target = observed;
  std::sort(target.rbegin(), target.rend());
  std::vector<PermGroup> matches;
  for (const PermGroup& g : subgroup_classes(l.degree())) {
    if (!g.is_subgroup_of(l)) continue;
    GroupMatrixEntry entry = group_matrix_entry(l, g, h);
    if (entry.partition == target) matches.push_back(g);
  }
  if (matches.empty())
    throw MathError("identify_from_partitions: observed degrees match no "
                    "subgroup class (inconsistent input)");
  return matches;
}

GaloisResult galois_group(const UniPoly& f, const EngineConfig& config) {
  int n = f.degree();
  if (n < 2) throw MathError("galois_group: degree must be >= 2");
  if (n > config.max_degree)
    throw MathError("galois_group: degree exceeds max_degree (" +
                    std::to_string(config.max_degree) + ")");
  if (!is_squarefree(f))
    throw MathError("galois_group: f must be squarefree");

  GaloisResult result;
  result.f = f;
  result.reducible = factor_rationals(f).size() > 1;

  RootVector roots = complex_roots(f, config.precision_bits);

  IdealChainNode node;
  node.algebra = QuotientAlgebra::symmetric_ideal(f);
  node.supergroup = PermGroup::symmetric(n);
  result.chain.push_back(node);

  for (;;) {
    bool descended = false;
    for (const PermGroup& edge : maximal_subgroup_classes(node.supergroup)) {
      ChainStep step;
      auto outcome = descend_step(node, edge, roots, config, &step);
      if (std::holds_alternative<IdealChainNode>(outcome)) {
        node = std::get<IdealChainNode>(outcome);
        result.chain.push_back(node);
        result.steps.push_back(std::move(step));
        descended = true;
        break;
      }
    }
    if (!descended) break;
  }

  result.relations_ideal = node.algebra;
  result.group = decomposition_group(*node.algebra);
  if (!result.group.same_group(node.supergroup))
    throw MathError("galois_group: decomposition group disagrees with the "
                    "descent hypothesis (internal inconsistency)");
  result.triangular = node.algebra->triangularize();
  result.label = result.reducible ? std::nullopt : transitive_label(result.group);

  // oracles: Dedekind cycle types and the discriminant-square test
  result.oracles = dedekind_cycle_types(f, config);
  auto group_types = result.group.cycle_types();
  result.oracles.cycle_types_consistent = true;
  for (const auto& [p, type] : result.oracles.dedekind) {
    std::vector<int> sorted_desc = type;
    std::sort(sorted_desc.rbegin(), sorted_desc.rend());
    bool found = std::find(group_types.begin(), group_types.end(), sorted_desc) !=
                 group_types.end();
    if (!found) result.oracles.cycle_types_consistent = false;
  }
  result.oracles.disc_consistent =
      result.oracles.disc_is_square == result.group.is_even_only();
  if (!result.oracles.cycle_types_consistent || !result.oracles.disc_consistent)
    throw MathError("galois_group: oracle check failed (internal inconsistency)");

  // purity of the final ideal, all three checkable equivalences
  size_t dim = node.algebra->dimension();
  result.purity_dim_eq_stab = dim == static_cast<size_t>(result.group.order());
  long init_product = 1;
  for (int d : result.triangular.init_degrees) init_product *= d;
  result.purity_initdeg_product = init_product == static_cast<long>(dim);
  PermSet self_inj = injector(*node.algebra, *node.algebra);
  result.purity_group_eq_injector =
      self_inj.size() == static_cast<size_t>(result.group.order()) &&
      std::equal(self_inj.members().begin(), self_inj.members().end(),
                 result.group.elements().begin());
  if (static_cast<long>(dim) != result.group.order())
    throw MathError("galois_group: |group| != dim (internal inconsistency)");
  return result;
}

TriangularIdeal fundamental_modules(const GaloisResult& result) {
  TriangularIdeal t = result.relations_ideal->triangularize();
  PermGroup h = result.group;
  for (int i = 1; i <= t.nvars; ++i) {
    PermGroup next = h.stabilizer_point(i);
    long expected = h.order() / next.order();
    if (t.init_degrees[i - 1] != expected)
      throw MathError("fundamental_modules: deg_{x_i} f_i != "
                      "#H_(i-1)/#H_(i) (internal inconsistency)");
    h = next;
  }
  return t;
}

}  // namespace galois
