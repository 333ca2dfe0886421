#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galois/roots.hpp"

using namespace galois;

namespace {

bool ball_contains(const ComplexBall& b, const Rat& re, const Rat& im) {
  Real dre = abs(b.re - real_from_rat(re));
  Real dim = abs(b.im - real_from_rat(im));
  return dre <= b.rad && dim <= b.rad;
}

Real pow2(long e) { return boost::multiprecision::ldexp(Real(1), e); }

}  // namespace

TEST_CASE("x^2+1 at 64 bits encloses +-i within 2^-60") {
  RootVector rv = complex_roots(parse_unipoly("x^2 + 1"), 64);
  REQUIRE(rv.roots().size() == 2);
  // canonical order: (0,-1) before (0,1)
  CHECK(rv.roots()[0].im < 0);
  CHECK(rv.roots()[1].im > 0);
  for (const ComplexBall& b : rv.roots()) {
    CHECK(abs(b.re) <= pow2(-60));
    CHECK(abs(abs(b.im) - 1) <= pow2(-60));
    CHECK(b.rad <= pow2(-60));
  }
}

TEST_CASE("x^3-2 at 128 bits") {
  RootVector rv = complex_roots(parse_unipoly("x^3 - 2"), 128);
  REQUIRE(rv.roots().size() == 3);
  // the real cube root of 2, 40 digits
  Real cbrt2("1.259921049894873164767210607278228350570");
  const ComplexBall& real_root = rv.roots()[2];  // largest real part
  CHECK(abs(real_root.re - cbrt2) <= pow2(-100));
  CHECK(abs(real_root.im) <= pow2(-100));
  // conjugate pair
  CHECK(abs(rv.roots()[0].im + rv.roots()[1].im) <= pow2(-100));
  CHECK(abs(rv.roots()[0].re - rv.roots()[1].re) <= pow2(-100));
}

TEST_CASE("x^2-3x+2 encloses 1 and 2 exactly") {
  RootVector rv = complex_roots(parse_unipoly("x^2 - 3x + 2"), 96);
  REQUIRE(rv.roots().size() == 2);
  CHECK(ball_contains(rv.roots()[0], Rat(1), Rat(0)));
  CHECK(ball_contains(rv.roots()[1], Rat(2), Rat(0)));
}

TEST_CASE("root sums and products match the coefficients") {
  for (const char* text : {"x^4 + x^3 + x^2 + x + 1", "x^5 - x - 1",
                           "3x^3 - 2x^2 + 7x - 5"}) {
    UniPoly f = parse_unipoly(text);
    RootVector rv = complex_roots(f, 128);
    ComplexBall sum = ComplexBall::exact(Rat(0));
    ComplexBall prod = ComplexBall::exact(Rat(1));
    for (const ComplexBall& b : rv.roots()) {
      sum = ball_add(sum, b);
      prod = ball_mul(prod, b);
    }
    int d = f.degree();
    Rat expected_sum = -f.coeff(d - 1) / f.coeff(d);
    Rat expected_prod = (d % 2 == 0 ? f.coeff(0) : -f.coeff(0)) / f.coeff(d);
    ComplexBall sum_gap = ball_sub(sum, ComplexBall::exact(expected_sum));
    ComplexBall prod_gap = ball_sub(prod, ComplexBall::exact(expected_prod));
    CHECK(sum_gap.abs_lower() == 0);   // interval containment
    CHECK(prod_gap.abs_lower() == 0);
    CHECK(sum_gap.abs_upper() <= pow2(-64));
    CHECK(prod_gap.abs_upper() <= pow2(-64));
  }
}

TEST_CASE("refinement keeps order and shrinks radii") {
  UniPoly f = parse_unipoly("x^4 - 2");
  RootVector base = complex_roots(f, 96);
  RootVector finer = base.refined(256);
  REQUIRE(finer.roots().size() == base.roots().size());
  for (size_t k = 0; k < base.roots().size(); ++k) {
    CHECK(finer.roots()[k].rad <= pow2(-256));
    Real drift = abs(finer.roots()[k].re - base.roots()[k].re) +
                 abs(finer.roots()[k].im - base.roots()[k].im);
    CHECK(drift <= pow2(-90));
  }
}

TEST_CASE("non-squarefree input is rejected") {
  CHECK_THROWS_AS(complex_roots(parse_unipoly("(x - 1)^2"), 64), MathError);
  CHECK_THROWS_AS(complex_roots(parse_unipoly("5"), 64), MathError);
}
