#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galois/factor.hpp"
#include "galois/unipoly.hpp"

using namespace galois;

namespace {

UniPoly expand(const std::vector<std::pair<UniPoly, int>>& factors, const Rat& lead) {
  UniPoly acc = UniPoly::constant(lead);
  for (const auto& [f, mult] : factors) acc = acc * f.pow(mult);
  return acc;
}

// independent irreducibility oracle for degree <= 3: rational roots by
// divisor search on a primitive integer model
bool has_rational_root(const UniPoly& f) {
  auto [coeffs, content] = primitive_integer_coeffs(f);
  Int a0 = coeffs.front(), ad = coeffs.back();
  if (a0 == 0) return true;
  std::vector<Int> nums, dens;
  for (Int d(1); d * d <= abs(a0); ++d)
    if (a0 % d == 0) { nums.push_back(d); nums.push_back(abs(a0) / d); }
  for (Int d(1); d * d <= abs(ad); ++d)
    if (ad % d == 0) { dens.push_back(d); dens.push_back(abs(ad) / d); }
  for (const Int& n : nums)
    for (const Int& d : dens)
      for (int sign : {1, -1})
        if (f.evaluate(Rat(sign * n, d)) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("gcd and squarefree part") {
  UniPoly g = parse_unipoly("(x - 1)^2 * (x + 2)");
  CHECK(squarefree_part(g) == parse_unipoly("(x - 1)*(x + 2)").monic());
  UniPoly sf = parse_unipoly("x^3 + x + 1");
  CHECK(squarefree_part(sf) == sf);                    // idempotence on squarefree
  CHECK(squarefree_part(squarefree_part(g)) == squarefree_part(g));
  CHECK(squarefree_part(sf.pow(8)) == sf);             // f^{#H} collapses to f
  CHECK(poly_gcd(squarefree_part(g), squarefree_part(g).derivative()).degree() == 0);
  CHECK_THROWS_AS(squarefree_part(UniPoly::zero()), MathError);

  CHECK(poly_gcd(parse_unipoly("x^2 - 1"), parse_unipoly("x^2 + 2x + 1")) ==
        parse_unipoly("x + 1"));
  CHECK(poly_gcd(parse_unipoly("x^2 + 1"), parse_unipoly("x + 3")).degree() == 0);
}

TEST_CASE("factorization of the named examples") {
  auto f1 = factor_rationals(parse_unipoly("x^4 - 1"));
  REQUIRE(f1.size() == 3);
  CHECK(f1[0].first == parse_unipoly("x - 1"));
  CHECK(f1[1].first == parse_unipoly("x + 1"));
  CHECK(f1[2].first == parse_unipoly("x^2 + 1"));

  auto f2 = factor_rationals(parse_unipoly("x^4 + 1"));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].first == parse_unipoly("x^4 + 1"));

  auto f3 = factor_rationals(parse_unipoly("x^3 - 4x"));
  REQUIRE(f3.size() == 3);
  CHECK(f3[0].first == parse_unipoly("x - 2"));
  CHECK(f3[1].first == parse_unipoly("x"));
  CHECK(f3[2].first == parse_unipoly("x + 2"));
}

TEST_CASE("x^4+1 irreducibility against the exhaustive-search oracle") {
  UniPoly f = parse_unipoly("x^4 + 1");
  CHECK(!has_rational_root(f));
  // any factorization would include a monic quadratic x^2+a*x+b with
  // integer coefficients inside the Landau-Mignotte box |a|,|b| <= 17
  bool quadratic_factor = false;
  for (long a = -17; a <= 17 && !quadratic_factor; ++a)
    for (long b = -17; b <= 17 && !quadratic_factor; ++b) {
      UniPoly q({Rat(b), Rat(a), Rat(1)});
      if (f.divmod(q).second.is_zero()) quadratic_factor = true;
    }
  CHECK(!quadratic_factor);
  CHECK(factor_rationals(f).size() == 1);
}

TEST_CASE("factorization round-trips on random inputs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int degree = 2 + rng() % 5;
    std::vector<Rat> coeffs(degree + 1);
    for (auto& c : coeffs) c = Rat(static_cast<long>(rng() % 21) - 10);
    if (coeffs.back() == 0) coeffs.back() = 1;
    UniPoly f(std::move(coeffs));
    if (f.degree() < 1) continue;
    auto factors = factor_rationals(f);
    CHECK(expand(factors, f.leading()) == f);
    for (const auto& [factor, mult] : factors) {
      CHECK(factor.leading() == 1);
      if (factor.degree() == 2 || factor.degree() == 3)
        CHECK(!has_rational_root(factor));  // irreducibility, degree <= 3 oracle
    }
  }
}

TEST_CASE("multiplicities via Yun") {
  UniPoly f = parse_unipoly("(x - 1)^3 * (x^2 + 1)^2 * (x + 4)");
  auto factors = factor_rationals(f);
  REQUIRE(factors.size() == 3);
  CHECK(expand(factors, f.leading()) == f);
  for (const auto& [factor, mult] : factors) {
    if (factor == parse_unipoly("x - 1")) CHECK(mult == 3);
    if (factor == parse_unipoly("x^2 + 1")) CHECK(mult == 2);
    if (factor == parse_unipoly("x + 4")) CHECK(mult == 1);
  }
}

TEST_CASE("resultant and discriminant") {
  CHECK(discriminant(parse_unipoly("x^3 - 3x + 1")) == 81);
  CHECK(discriminant(parse_unipoly("x^2 + 1")) == -4);
  CHECK(discriminant(parse_unipoly("x^3 - 2")) == -108);
  // quadratic formula check on random quadratics
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Rat a(static_cast<long>(rng() % 9) + 1), b(static_cast<long>(rng() % 19) - 9),
        c(static_cast<long>(rng() % 19) - 9);
    UniPoly q({c, b, a});
    CHECK(discriminant(q) == b * b - 4 * a * c);
  }
  CHECK(resultant(parse_unipoly("x - 2"), parse_unipoly("x - 5")) == -3);
}

TEST_CASE("factor degrees mod p") {
  // 3^3 = 27 = 2 mod 5 gives the (1,2) split; mod 7 there is no cube
  // root of 2, so the cubic stays irreducible
  auto d1 = factor_degrees_mod_p(parse_unipoly("x^3 - 2"), 5);
  REQUIRE(d1.has_value());
  CHECK(*d1 == std::vector<int>{1, 2});
  auto d7 = factor_degrees_mod_p(parse_unipoly("x^3 - 2"), 7);
  REQUIRE(d7.has_value());
  CHECK(*d7 == std::vector<int>{3});

  auto d2 = factor_degrees_mod_p(parse_unipoly("x^2 + 1"), 5);
  REQUIRE(d2.has_value());
  CHECK(*d2 == std::vector<int>{1, 1});

  CHECK(!factor_degrees_mod_p(parse_unipoly("x^3 - 2"), 3).has_value());  // bad prime

  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    int degree = 2 + rng() % 5;
    std::vector<Rat> coeffs(degree + 1);
    for (auto& c : coeffs) c = Rat(static_cast<long>(rng() % 13) - 6);
    coeffs.back() = 1;
    UniPoly f(std::move(coeffs));
    auto degrees = factor_degrees_mod_p(f, 101);
    if (!degrees) continue;
    int sum = 0;
    for (int d : *degrees) sum += d;
    CHECK(sum == degree);  // conservation
  }
}
