#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galois/engine.hpp"
#include "galois/factor.hpp"
#include "galois/lattice.hpp"
#include "galois/symfun.hpp"

using namespace galois;

namespace {

PermGroup d4_block_stabilizer() {
  PermGroup s4 = PermGroup::symmetric(4);
  return stabilizer_in(s4, parse_multipoly("x1*x2 + x3*x4", 4));
}

std::vector<PermGroup> transitive_matches(const std::vector<PermGroup>& classes) {
  std::vector<PermGroup> out;
  for (const PermGroup& g : classes)
    if (g.is_transitive()) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("dedekind cycle types") {
  EngineConfig cfg;
  cfg.dedekind_primes = {5, 7, 11, 13};
  OracleReport r = dedekind_cycle_types(parse_unipoly("x^3 - 2"), cfg);
  REQUIRE(r.dedekind.size() == 4);
  CHECK(r.dedekind[0] == std::pair<uint64_t, std::vector<int>>{5, {1, 2}});
  CHECK(r.dedekind[1] == std::pair<uint64_t, std::vector<int>>{7, {3}});
  CHECK(!r.disc_is_square);  // disc(x^3-2) = -108

  cfg.dedekind_primes = {2, 3, 5};
  OracleReport bad = dedekind_cycle_types(parse_unipoly("x^3 - 2"), cfg);
  CHECK(bad.skipped_primes == std::vector<uint64_t>{2, 3});  // notice, not error

  cfg.dedekind_primes.clear();
  cfg.min_dedekind_primes = 8;
  OracleReport full = dedekind_cycle_types(parse_unipoly("x^2 + 1"), cfg);
  CHECK(full.dedekind.size() >= 8);
  for (const auto& [p, type] : full.dedekind) {
    int sum = 0;
    for (int d : type) sum += d;
    CHECK(sum == 2);
    if (p % 4 == 1) CHECK(type == std::vector<int>{1, 1});  // 2^2 = -1 mod 5 etc.
  }
}

TEST_CASE("identification from partition rows") {
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup d4 = d4_block_stabilizer();

  auto klein = transitive_matches(identify_from_partitions({1, 1, 1}, s4, d4));
  REQUIRE(klein.size() == 1);
  CHECK(klein[0].order() == 4);
  CHECK(*transitive_label(klein[0]) == "V4");

  auto big = transitive_matches(identify_from_partitions({3}, s4, d4));
  REQUIRE(big.size() == 2);
  CHECK(big[0].order() == 12);
  CHECK(big[1].order() == 24);

  auto cyclic_dihedral = transitive_matches(identify_from_partitions({1, 2}, s4, d4));
  REQUIRE(cyclic_dihedral.size() == 2);
  CHECK(*transitive_label(cyclic_dihedral[0]) == "C4");
  CHECK(*transitive_label(cyclic_dihedral[1]) == "D4");

  CHECK_THROWS_AS(identify_from_partitions({2, 2}, s4, d4), MathError);
}

TEST_CASE("descend_step on the worked examples") {
  EngineConfig cfg;

  // x^4+1 at (S_4, D_4 class): R = x^3 - 4x splits, descend 24 -> 8
  {
    UniPoly f = parse_unipoly("x^4 + 1");
    RootVector roots = complex_roots(f, cfg.precision_bits);
    IdealChainNode node{QuotientAlgebra::symmetric_ideal(f),
                        PermGroup::symmetric(4), std::nullopt, std::nullopt};
    auto outcome = descend_step(node, d4_block_stabilizer(), roots, cfg);
    REQUIRE(std::holds_alternative<IdealChainNode>(outcome));
    const auto& next = std::get<IdealChainNode>(outcome);
    CHECK(next.algebra->dimension() == 8);
    CHECK(next.supergroup.order() == 8);
    CHECK(are_conjugate(next.supergroup, d4_block_stabilizer()));
  }

  // x^3-2: disc = -108 is not a square, the A_3 edge refuses
  {
    UniPoly f = parse_unipoly("x^3 - 2");
    RootVector roots = complex_roots(f, cfg.precision_bits);
    IdealChainNode node{QuotientAlgebra::symmetric_ideal(f),
                        PermGroup::symmetric(3), std::nullopt, std::nullopt};
    auto outcome = descend_step(node, PermGroup::alternating(3), roots, cfg);
    CHECK(std::holds_alternative<NoDescent>(outcome));
  }

  // x^3-3x+1: disc = 81 = 9^2, descend 6 -> 3
  {
    UniPoly f = parse_unipoly("x^3 - 3x + 1");
    RootVector roots = complex_roots(f, cfg.precision_bits);
    IdealChainNode node{QuotientAlgebra::symmetric_ideal(f),
                        PermGroup::symmetric(3), std::nullopt, std::nullopt};
    auto outcome = descend_step(node, PermGroup::alternating(3), roots, cfg);
    REQUIRE(std::holds_alternative<IdealChainNode>(outcome));
    CHECK(std::get<IdealChainNode>(outcome).algebra->dimension() == 3);
  }
}

TEST_CASE("pipeline: quadratics and cubics") {
  GaloisResult r1 = galois_group(parse_unipoly("x^2 - 2"));
  CHECK(r1.group.order() == 2);
  CHECK(*r1.label == "C2");

  GaloisResult r2 = galois_group(parse_unipoly("x^3 - 2"));
  CHECK(r2.group.order() == 6);
  CHECK(*r2.label == "S3");

  GaloisResult r3 = galois_group(parse_unipoly("x^3 - 3x + 1"));
  CHECK(r3.group.order() == 3);
  CHECK(*r3.label == "C3");
  CHECK(r3.oracles.disc_is_square);
}

TEST_CASE("pipeline: quartics") {
  GaloisResult klein = galois_group(parse_unipoly("x^4 + 1"));
  CHECK(klein.group.order() == 4);
  CHECK(*klein.label == "V4");
  for (const auto& type : klein.group.cycle_types()) {
    bool identity = type == std::vector<int>{1, 1, 1, 1};
    bool double_transposition = type == std::vector<int>{2, 2};
    CHECK((identity || double_transposition));
  }

  GaloisResult dihedral = galois_group(parse_unipoly("x^4 - 2"));
  CHECK(dihedral.group.order() == 8);
  CHECK(*dihedral.label == "D4");

  GaloisResult cyclic = galois_group(parse_unipoly("x^4 + x^3 + x^2 + x + 1"));
  CHECK(cyclic.group.order() == 4);
  CHECK(*cyclic.label == "C4");
  bool has_4_cycle = false;
  for (const auto& type : cyclic.group.cycle_types())
    if (type == std::vector<int>{4}) has_4_cycle = true;
  CHECK(has_4_cycle);
}

TEST_CASE("pipeline: reducible input runs with labels suppressed") {
  GaloisResult r = galois_group(parse_unipoly("x^4 - 1"));
  CHECK(r.reducible);
  CHECK(!r.label.has_value());
  CHECK(r.group.order() == 2);  // Gal(Q(i)/Q)
  CHECK(!r.group.is_transitive());
}

TEST_CASE("pipeline rejects bad input") {
  CHECK_THROWS_AS(galois_group(parse_unipoly("x^2 - 2x + 1")), MathError);
  CHECK_THROWS_AS(galois_group(parse_unipoly("x - 1")), MathError);
  EngineConfig cfg;
  cfg.max_degree = 3;
  CHECK_THROWS_AS(galois_group(parse_unipoly("x^4 + 1"), cfg), MathError);
}

TEST_CASE("chain structure invariants") {
  GaloisResult r = galois_group(parse_unipoly("x^4 - 2"));

  // dimensions strictly decrease and divide the previous
  for (size_t k = 1; k < r.chain.size(); ++k) {
    size_t before = r.chain[k - 1].algebra->dimension();
    size_t after = r.chain[k].algebra->dimension();
    CHECK(after < before);
    CHECK(before % after == 0);
  }
  CHECK(24 % r.group.order() == 0);
  CHECK(r.relations_ideal->dimension() == static_cast<size_t>(r.group.order()));

  // the group preserves the relations ideal generator-wise
  for (const Perm& sigma : r.group.elements())
    for (const MultiPoly& gen : r.triangular.gens)
      CHECK(r.relations_ideal->member(gen.acted_by(sigma)));

  // every node of the chain is a pure ideal
  for (const IdealChainNode& node : r.chain) {
    CHECK(node.algebra->dimension() ==
          static_cast<size_t>(node.supergroup.order()));
    CHECK(decomposition_group(*node.algebra).same_group(node.supergroup));
  }

  CHECK(r.purity_dim_eq_stab);
  CHECK(r.purity_initdeg_product);
  CHECK(r.purity_group_eq_injector);
}

TEST_CASE("fundamental modules") {
  GaloisResult klein = galois_group(parse_unipoly("x^4 + 1"));
  TriangularIdeal t1 = fundamental_modules(klein);
  CHECK(t1.init_degrees == std::vector<int>{4, 1, 1, 1});

  GaloisResult generic = galois_group(parse_unipoly("x^3 - 2"));
  TriangularIdeal t2 = fundamental_modules(generic);
  CHECK(t2.init_degrees == std::vector<int>{3, 2, 1});

  long product = 1;
  for (int d : t1.init_degrees) product *= d;
  CHECK(product == klein.group.order());
}

TEST_CASE("identification table is consistent with the quartic runs") {
  // resolvent factor degrees at the D_4 edge vs the final groups
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup d4 = d4_block_stabilizer();
  struct Case { const char* poly; std::vector<int> degrees; };
  for (const Case& c : {Case{"x^4 + 1", {1, 1, 1}}, Case{"x^4 - 2", {1, 2}},
                        Case{"x^4 + x^3 + x^2 + x + 1", {1, 2}}}) {
    UniPoly f = parse_unipoly(c.poly);
    AlgebraPtr ms = QuotientAlgebra::symmetric_ideal(f);
    InvariantSpec spec{parse_multipoly("x1*x2 + x3*x4", 4), d4, s4, std::nullopt};
    Resolvent res = resolvent(spec, ms);
    std::vector<int> observed;
    for (const auto& [factor, mult] : res.factors)
      for (int k = 0; k < mult; ++k) observed.push_back(factor.degree());
    std::sort(observed.begin(), observed.end());
    CHECK(observed == c.degrees);
    GaloisResult r = galois_group(f);
    bool found = false;
    for (const PermGroup& cand : identify_from_partitions(observed, s4, d4))
      if (are_conjugate(cand, r.group)) found = true;
    CHECK(found);
  }
}
