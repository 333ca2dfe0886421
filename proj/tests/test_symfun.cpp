#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galois/perm.hpp"
#include "galois/roots.hpp"
#include "galois/symfun.hpp"

using namespace galois;

TEST_CASE("symmetric families") {
  CHECK(symmetric_family(SymKind::Elementary, 2, 3) ==
        parse_multipoly("x1*x2 + x1*x3 + x2*x3", 3));
  CHECK(symmetric_family(SymKind::Elementary, 5, 3).is_zero());
  CHECK(symmetric_family(SymKind::Elementary, 0, 3) == MultiPoly::constant(3, Rat(1)));
  CHECK(symmetric_family(SymKind::Complete, 2, 2) ==
        parse_multipoly("x1^2 + x1*x2 + x2^2", 2));
  CHECK(symmetric_family(SymKind::Complete, 0, 2) == MultiPoly::constant(2, Rat(1)));
  CHECK(symmetric_family(SymKind::Power, 0, 4) == MultiPoly::constant(4, Rat(4)));
  CHECK(symmetric_family(SymKind::Power, 3, 2) == parse_multipoly("x1^3 + x2^3", 2));
}

TEST_CASE("newton power sums from coefficients") {
  auto p = newton_power_sums(parse_unipoly("x^2 - 3x + 2"), 2);
  CHECK(p[0] == 3);  // 1 + 2
  CHECK(p[1] == 5);  // 1 + 4

  auto z = newton_power_sums(parse_unipoly("x^4"), 6);
  for (const Rat& v : z) CHECK(v == 0);

  // rational-root oracle: direct power sums of the roots
  std::mt19937 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Rat> roots;
    for (int k = 0; k < 4; ++k)
      roots.emplace_back(static_cast<long>(rng() % 11) - 5);
    UniPoly f = UniPoly::from_roots(roots);
    auto sums = newton_power_sums(f, 7);
    for (int m = 1; m <= 7; ++m) {
      Rat direct(0);
      for (const Rat& r : roots) direct += pow_rat(r, m);
      CHECK(sums[m - 1] == direct);
    }
  }
}

TEST_CASE("p_2 = e_1 p_1 - 2 e_2 symbolically") {
  int n = 4;
  MultiPoly lhs = symmetric_family(SymKind::Power, 2, n);
  MultiPoly rhs = symmetric_family(SymKind::Elementary, 1, n) *
                      symmetric_family(SymKind::Power, 1, n) -
                  symmetric_family(SymKind::Elementary, 2, n) * Rat(2);
  CHECK(lhs == rhs);
}

TEST_CASE("Girard-Newton identity vanishes for m <= 8, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 8; ++m)
      CHECK(girard_newton_combination(m, n).is_zero());
}

TEST_CASE("Cauchy modules of the worked quartic") {
  UniPoly f = parse_unipoly("x^4 - 2*x^3 + 2*x^2 + 2");
  auto c = cauchy_modules(f);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == parse_multipoly("x1^4 - 2*x1^3 + 2*x1^2 + 2", 4));
  CHECK(c[1] == parse_multipoly("x2^3 + x1*x2^2 + x1^2*x2 + x1^3"
                                " - 2*(x2^2 + x1*x2 + x1^2) + 2*(x2 + x1)", 4));
  CHECK(c[2] == parse_multipoly("x3^2 + x3*x2 + x2^2 + x3*x1 + x2*x1 + x1^2"
                                " - 2*(x2 + x1 + x3) + 2", 4));
  CHECK(c[3] == parse_multipoly("x4 + x3 + x2 + x1 - 2", 4));
}

TEST_CASE("Cauchy modules of a quadratic") {
  auto c = cauchy_modules(parse_unipoly("x^2 - 3x + 2"));
  REQUIRE(c.size() == 2);
  CHECK(c[0] == parse_multipoly("x1^2 - 3*x1 + 2", 2));
  CHECK(c[1] == parse_multipoly("x1 + x2 - 3", 2));
}

TEST_CASE("C_n equals e_1 - e_1(roots) on random monic cubics and quartics") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 3 + trial % 2;
    std::vector<Rat> coeffs(n + 1);
    for (auto& v : coeffs) v = Rat(static_cast<long>(rng() % 15) - 7);
    coeffs[n] = 1;
    UniPoly f(std::move(coeffs));
    auto c = cauchy_modules(f);
    MultiPoly expected = symmetric_family(SymKind::Elementary, 1, n) +
                         MultiPoly::constant(n, f.coeff(n - 1));  // e_1 + a_{n-1}
    CHECK(c[n - 1] == expected);
  }
}

TEST_CASE("closed form agrees with the divided differences") {
  UniPoly paper = parse_unipoly("x^4 - 2*x^3 + 2*x^2 + 2");
  auto modules = cauchy_modules(paper);
  for (int r = 0; r <= 3; ++r) CHECK(cauchy_closed_form(paper, r) == modules[r]);

  std::mt19937 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + rng() % 5;  // up to degree 6
    std::vector<Rat> coeffs(n + 1);
    for (auto& v : coeffs)
      v = Rat(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    coeffs[n] = 1;
    UniPoly f(std::move(coeffs));
    auto modules_f = cauchy_modules(f);
    for (int r = 0; r < n; ++r) CHECK(cauchy_closed_form(f, r) == modules_f[r]);
  }
}

TEST_CASE("closed form endpoints") {
  UniPoly f = parse_unipoly("x^3 + 4x^2 - x + 7");
  CHECK(cauchy_closed_form(f, 0) == f.to_multipoly(3, 1));  // C_1 = f(x_1)
  CHECK(cauchy_closed_form(f, 2) ==
        symmetric_family(SymKind::Elementary, 1, 3) + MultiPoly::constant(3, Rat(4)));
}

TEST_CASE("Cauchy modules vanish at every permutation of the numeric roots") {
  for (const char* text : {"x^3 - 2", "x^4 + 1", "x^4 - 2*x^3 + 2*x^2 + 2"}) {
    UniPoly f = parse_unipoly(text);
    int n = f.degree();
    RootVector rv = complex_roots(f, 160);
    auto modules = cauchy_modules(f);
    PermGroup sn = PermGroup::symmetric(n);
    Real tol = boost::multiprecision::ldexp(Real(1), -80);
    for (const Perm& sigma : sn.elements()) {
      auto tuple = sigma.permute_tuple(rv.roots());
      for (const MultiPoly& c : modules) {
        ComplexBall value = evaluate_ball(c, tuple);
        CHECK(value.abs_lower() == 0);  // 0 inside the interval
        CHECK(value.abs_upper() <= tol);
      }
    }
  }
}

TEST_CASE("coefficient identity f/a_n = prod (x - alpha_i) via e_r") {
  // exact on rational-root examples
  std::vector<Rat> roots{Rat(1), Rat(-2), Rat(5, 2)};
  UniPoly f = UniPoly::from_roots(roots);
  for (int r = 1; r <= 3; ++r) {
    Rat er = symmetric_family(SymKind::Elementary, r, 3).evaluate(roots);
    Rat coeff = f.coeff(3 - r);
    CHECK(coeff == (r % 2 == 0 ? er : -er));
  }
}
