#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "galois/invariants.hpp"
#include "galois/multipoly.hpp"
#include "galois/perm.hpp"

using namespace galois;

TEST_CASE("composition convention (p*q)(i) = p(q(i))") {
  Perm p({2, 1, 3}), q({1, 3, 2});
  CHECK(compose(p, q).images() == std::vector<int>{2, 3, 1});
  CHECK(compose(Perm::identity(3), Perm({3, 1, 2})).images() ==
        std::vector<int>{3, 1, 2});
  CHECK(compose(Perm({2, 3, 1}), Perm({3, 1, 2})).is_identity());
  CHECK_THROWS_AS(compose(Perm({2, 1}), Perm({1, 2, 3})), MathError);
}

TEST_CASE("cycle parsing and printing") {
  CHECK(Perm::parse("(1 2)", 3).images() == std::vector<int>{2, 1, 3});
  CHECK(Perm::parse("[2,1,3]").images() == std::vector<int>{2, 1, 3});
  CHECK(Perm::parse("(1 2)(3 4)", 4).to_cycle_string() == "(1 2)(3 4)");
  CHECK(Perm::identity(4).to_cycle_string() == "()");
  CHECK_THROWS_AS(Perm::parse("[2,2,3]"), ParseError);
}

TEST_CASE("tuple and monomial actions") {
  Perm sigma({2, 1, 3});
  std::vector<char> tup{'a', 'b', 'c'};
  CHECK(sigma.permute_tuple(tup) == std::vector<char>{'b', 'a', 'c'});

  // sigma = [2,1] on x1^2 x2 -> x2^2 x1
  MultiPoly m = parse_multipoly("x1^2*x2", 2);
  CHECK(m.acted_by(Perm({2, 1})) == parse_multipoly("x2^2*x1", 2));
}

TEST_CASE("action compatibility tau sigma.r(a) = sigma.r(tau*a)") {
  std::mt19937 rng(7);
  PermGroup s3 = PermGroup::symmetric(3);
  for (int trial = 0; trial < 25; ++trial) {
    MultiPoly r(3);
    for (int t = 0; t < 4; ++t) {
      Expo e{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
             static_cast<int>(rng() % 3)};
      r.add_term(e, Rat(static_cast<long>(rng() % 11) - 5));
    }
    std::vector<Rat> alpha{Rat(static_cast<long>(rng() % 7) - 3),
                           Rat(static_cast<long>(rng() % 7) - 3),
                           Rat(static_cast<long>(rng() % 7) - 3)};
    const auto& elems = s3.elements();
    Perm sigma = elems[rng() % elems.size()];
    Perm tau = elems[rng() % elems.size()];
    Rat lhs = r.acted_by(compose(tau, sigma)).evaluate(alpha);
    Rat rhs = r.acted_by(sigma).evaluate(tau.permute_tuple(alpha));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("generate: closure, orders, determinism") {
  CHECK(PermGroup::generated_by({Perm({2, 1, 3})}).order() == 2);
  CHECK(PermGroup::generated_by({Perm({2, 3, 1}), Perm({2, 1, 3})}).order() == 6);
  CHECK(PermGroup::generated_by({Perm({2, 3, 1})}).order() == 3);
  PermGroup s4 = PermGroup::symmetric(4);
  CHECK(s4.order() == 24);
  CHECK(PermGroup::alternating(4).order() == 12);
  // group axioms on the enumerated closure
  PermGroup a4 = PermGroup::alternating(4);
  CHECK(a4.contains(Perm::identity(4)));
  for (const Perm& x : a4.elements()) {
    CHECK(a4.contains(x.inverse()));
    CHECK(a4.contains(x * a4.elements()[3]));
  }
  CHECK(24 % a4.order() == 0);
}

TEST_CASE("orbits and stabilizers") {
  PermGroup s3 = PermGroup::symmetric(3);
  CHECK(orbit(s3, 1) == std::vector<int>{1, 2, 3});
  PermGroup swap12 = PermGroup::generated_by({Perm({2, 1, 3})});
  CHECK(orbit(swap12, 3) == std::vector<int>{3});

  CHECK(s3.stabilizer_point(3).order() == 2);

  // orbit of a monomial under A_3 has size 3
  PermGroup a3 = PermGroup::alternating(3);
  MultiPoly seed = parse_multipoly("x1*x2^2", 3);
  std::vector<MultiPoly> orb;
  for (const Perm& g : a3.elements()) {
    MultiPoly image = seed.acted_by(g);
    if (std::find(orb.begin(), orb.end(), image) == orb.end())
      orb.push_back(image);
  }
  CHECK(orb.size() == 3);
}

TEST_CASE("Vandermonde stabilizer is A_n") {
  for (int n : {3, 4}) {
    PermGroup sn = PermGroup::symmetric(n);
    PermGroup stab = stabilizer_in(sn, vandermonde(n));
    CHECK(stab.same_group(PermGroup::alternating(n)));
  }
}

TEST_CASE("stabilizer of x1x2+x3x4 in S_4 has order 8") {
  PermGroup s4 = PermGroup::symmetric(4);
  MultiPoly theta = parse_multipoly("x1*x2+x3*x4", 4);
  PermGroup stab = stabilizer_in(s4, theta);
  CHECK(stab.order() == 8);

  // orbit-stabilizer |orbit| * |stab| = |G| on assorted seeds
  long orbit_size = 0;
  std::set<MultiPoly::TermMap> seen;
  for (const Perm& g : s4.elements())
    if (seen.insert(theta.acted_by(g).terms()).second) ++orbit_size;
  CHECK(orbit_size * stab.order() == s4.order());
}

TEST_CASE("transversals") {
  PermGroup s3 = PermGroup::symmetric(3);
  PermGroup h = PermGroup::generated_by({Perm({2, 1, 3})});
  CosetSystem cs = transversal(s3, h, CosetSide::Left);
  CHECK(cs.index() == 3);

  // pairwise disjoint, union = L
  std::set<std::vector<int>> all;
  for (const Perm& t : cs.transversal)
    for (const Perm& e : h.elements()) all.insert((t * e).images());
  CHECK(all.size() == 6);

  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup d4 = stabilizer_in(s4, parse_multipoly("x1*x2+x3*x4", 4));
  CHECK(transversal(s4, d4, CosetSide::Left).index() == 3);
  CHECK(transversal(s3, s3, CosetSide::Right).index() == 1);
  CHECK_THROWS_AS(transversal(h, s3, CosetSide::Left), MathError);
}

TEST_CASE("conjugation") {
  PermGroup h = PermGroup::generated_by({Perm::parse("(1 2)", 3)});
  PermGroup conj = conjugate(h, Perm::parse("(2 3)", 3));
  CHECK(conj.same_group(PermGroup::generated_by({Perm::parse("(1 3)", 3)})));
  CHECK(conjugate(h, Perm::identity(3)).same_group(h));
  CHECK(conj.order() == h.order());

  PermGroup a3 = PermGroup::alternating(3);
  PermGroup s3 = PermGroup::symmetric(3);
  for (const Perm& t : s3.elements()) CHECK(conjugate(a3, t).same_group(a3));

  // (G^tau)^sigma = G^{sigma tau}
  PermGroup g = PermGroup::generated_by({Perm::parse("(1 2)(3 4)", 4)});
  Perm sigma = Perm::parse("(1 3)", 4), tau = Perm::parse("(2 4 3)", 4);
  CHECK(conjugate(conjugate(g, tau), sigma).same_group(conjugate(g, sigma * tau)));
}

TEST_CASE("normalizers by scan") {
  CHECK(normalizer(PermGroup::alternating(3)).order() == 6);
  PermGroup h = PermGroup::generated_by({Perm::parse("(1 2)", 3)});
  CHECK(normalizer(h).same_group(h));
  CHECK(normalizer(PermGroup::symmetric(4)).order() == 24);
}

TEST_CASE("group matrix entries") {
  PermGroup s3 = PermGroup::symmetric(3);
  PermGroup a3 = PermGroup::alternating(3);
  PermGroup c2 = PermGroup::generated_by({Perm::parse("(1 2)", 3)});

  GroupMatrixEntry e1 = group_matrix_entry(s3, a3, c2);
  CHECK(e1.partition == std::vector<int>{3});
  REQUIRE(e1.orbit_groups.size() == 1);
  CHECK(e1.orbit_groups[0].second.order() == 3);  // C_3 as symmetric representation

  GroupMatrixEntry e2 = group_matrix_entry(s3, c2, c2);
  CHECK(e2.partition == std::vector<int>{2, 1});

  GroupMatrixEntry e3 = group_matrix_entry(s3, PermGroup::trivial(3), c2);
  CHECK(e3.partition == std::vector<int>{1, 1, 1});

  // entry is invariant under conjugating G and H
  Perm t = Perm::parse("(1 3)", 3);
  GroupMatrixEntry e4 = group_matrix_entry(s3, conjugate(a3, t), conjugate(c2, t));
  CHECK(e4.partition == e1.partition);
}
