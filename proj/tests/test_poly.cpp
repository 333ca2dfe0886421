#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galois/multipoly.hpp"
#include "galois/symfun.hpp"
#include "galois/unipoly.hpp"

using namespace galois;

TEST_CASE("parser round trips the grammar") {
  UniPoly f = parse_unipoly("x^4 - 2*x^3 + 2*x^2 + 2");
  CHECK(f.degree() == 4);
  CHECK(f.coeff(4) == 1);
  CHECK(f.coeff(3) == -2);
  CHECK(f.coeff(0) == 2);
  CHECK(f.to_string() == "x^4 - 2*x^3 + 2*x^2 + 2");
  CHECK(parse_unipoly(f.to_string()) == f);

  CHECK(parse_unipoly("2x^2") == parse_unipoly("2*x^2"));     // implicit *
  CHECK(parse_unipoly("x/2") == parse_unipoly("1/2 * x"));
  CHECK(parse_unipoly("-(x - 1)^2") == parse_unipoly("-x^2 + 2x - 1"));
  CHECK(parse_multipoly("x1x2 + x3x4", 4) == parse_multipoly("x1*x2+x3*x4", 4));
  CHECK_THROWS_AS(parse_unipoly("x^"), ParseError);
  CHECK_THROWS_AS(parse_unipoly("x5 + 1"), ParseError);
  CHECK_THROWS_AS(parse_multipoly("x1/x2", 2), ParseError);
}

TEST_CASE("multivariate printing is deterministic descending lex") {
  MultiPoly p = parse_multipoly("x2 + x1^2 - 3", 2);
  CHECK(p.to_string() == "x1^2 + x2 - 3");
  CHECK(parse_multipoly(p.to_string(), 2) == p);
}

TEST_CASE("evaluation") {
  MultiPoly e1 = symmetric_family(SymKind::Elementary, 1, 3);
  CHECK(e1.evaluate({Rat(1), Rat(2), Rat(3)}) == 6);
  CHECK(MultiPoly::constant(3, Rat(7, 2)).evaluate({Rat(0), Rat(0), Rat(0)}) ==
        Rat(7, 2));
  CHECK_THROWS_AS(e1.evaluate({Rat(1)}), MathError);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(11);
  auto random_poly = [&] {
    MultiPoly p(3);
    int terms = 1 + rng() % 4;
    for (int t = 0; t < terms; ++t) {
      Expo e{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
             static_cast<int>(rng() % 3)};
      p.add_term(e, Rat(static_cast<long>(rng() % 9) - 4));
    }
    return p;
  };
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("poly_from_roots") {
  CHECK(UniPoly::from_roots({Rat(1), Rat(2)}) == parse_unipoly("x^2 - 3x + 2"));
  CHECK(UniPoly::from_roots({}) == UniPoly::constant(Rat(1)));
}

TEST_CASE("division") {
  UniPoly f = parse_unipoly("x^5 - 1");
  UniPoly g = parse_unipoly("x - 1");
  auto [q, r] = f.divmod(g);
  CHECK(r.is_zero());
  CHECK(q * g == f);
  CHECK(f.exact_div(g) == q);
  CHECK_THROWS_AS(f.exact_div(parse_unipoly("x^2 + 1")), MathError);
}

TEST_CASE("compose_linear depresses a quartic") {
  UniPoly f = parse_unipoly("x^4 + 4*x^3 + 2*x + 1");
  UniPoly depressed = f.compose_linear(Rat(1), Rat(-1));  // x -> x - 1
  CHECK(depressed.coeff(3) == 0);
  CHECK(depressed.evaluate(Rat(3)) == f.evaluate(Rat(2)));
}

TEST_CASE("primitive integer coefficients") {
  auto [coeffs, content] = primitive_integer_coeffs(parse_unipoly("x^2/6 - 1/4"));
  CHECK(coeffs == std::vector<Int>{Int(-3), Int(0), Int(2)});
  CHECK(content == Rat(1, 12));
}
