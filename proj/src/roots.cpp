#include "galois/roots.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>

#include "galois/factor.hpp"

namespace galois {

void set_working_bits(unsigned bits) {
  unsigned digits10 = static_cast<unsigned>(bits * 0.30103) + 4;
  Real::default_precision(digits10);
}

Real real_from_rat(const Rat& q) {
  Real num(q.get_num().get_str());
  if (q.get_den() == 1) return num;
  return num / Real(q.get_den().get_str());
}

namespace {

Real eps_at_current_precision() {
  // thread default precision in decimal digits -> a safe binary epsilon
  unsigned digits10 = Real::default_precision();
  long bits = static_cast<long>(digits10 * 3.32193) - 4;
  return boost::multiprecision::ldexp(Real(1), -std::max(8L, bits));
}

Real slack(const Real& re, const Real& im) {
  return (abs(re) + abs(im) + 1) * eps_at_current_precision();
}

}  // namespace

ComplexBall ComplexBall::exact(const Rat& re_value, const Rat& im_value) {
  ComplexBall b;
  b.re = real_from_rat(re_value);
  b.im = real_from_rat(im_value);
  b.rad = slack(b.re, b.im);  // covers the re/im conversion rounding
  return b;
}

Real ComplexBall::abs_upper() const {
  return sqrt(re * re + im * im) * (1 + eps_at_current_precision() * 4) + rad;
}

Real ComplexBall::abs_lower() const {
  Real lower = sqrt(re * re + im * im) * (1 - eps_at_current_precision() * 4) - rad;
  return lower > 0 ? lower : Real(0);
}

ComplexBall ball_add(const ComplexBall& a, const ComplexBall& b) {
  ComplexBall out;
  out.re = a.re + b.re;
  out.im = a.im + b.im;
  out.rad = a.rad + b.rad + slack(out.re, out.im);
  return out;
}

ComplexBall ball_sub(const ComplexBall& a, const ComplexBall& b) {
  ComplexBall out;
  out.re = a.re - b.re;
  out.im = a.im - b.im;
  out.rad = a.rad + b.rad + slack(out.re, out.im);
  return out;
}

ComplexBall ball_mul(const ComplexBall& a, const ComplexBall& b) {
  ComplexBall out;
  out.re = a.re * b.re - a.im * b.im;
  out.im = a.re * b.im + a.im * b.re;
  Real abs_a = sqrt(a.re * a.re + a.im * a.im) * (1 + eps_at_current_precision() * 4);
  Real abs_b = sqrt(b.re * b.re + b.im * b.im) * (1 + eps_at_current_precision() * 4);
  out.rad = abs_a * b.rad + abs_b * a.rad + a.rad * b.rad + slack(out.re, out.im) * 4;
  return out;
}

ComplexBall ball_pow(const ComplexBall& a, int e) {
  assert(e >= 0);
  ComplexBall acc = ComplexBall::exact(Rat(1));
  ComplexBall base = a;
  while (e > 0) {
    if (e & 1) acc = ball_mul(acc, base);
    base = ball_mul(base, base);
    e >>= 1;
  }
  return acc;
}

ComplexBall evaluate_ball(const UniPoly& f, const ComplexBall& point) {
  ComplexBall acc = ComplexBall::exact(Rat(0));
  for (int k = f.degree(); k >= 0; --k)
    acc = ball_add(ball_mul(acc, point), ComplexBall::exact(f.coeff(k)));
  return acc;
}

ComplexBall evaluate_ball(const MultiPoly& p, const std::vector<ComplexBall>& point) {
  if (static_cast<int>(point.size()) != p.nvars())
    throw MathError("evaluate_ball: arity mismatch");
  ComplexBall acc = ComplexBall::exact(Rat(0));
  for (const auto& [e, c] : p.terms()) {
    ComplexBall term = ComplexBall::exact(c);
    for (int v = 0; v < p.nvars(); ++v)
      if (e[v] > 0) term = ball_mul(term, ball_pow(point[v], e[v]));
    acc = ball_add(acc, term);
  }
  return acc;
}

namespace {

// Aberth-Ehrlich in double precision: good-enough starting points.
std::vector<std::complex<double>> aberth_initial(const UniPoly& g) {
  int d = g.degree();
  std::vector<std::complex<double>> c(d + 1);
  for (int k = 0; k <= d; ++k) c[k] = g.coeff(k).get_d();

  double radius = 0;
  for (int k = 0; k < d; ++k)
    radius = std::max(radius, std::abs(c[k] / c[d]));
  radius = 1.0 + radius;

  std::vector<std::complex<double>> z(d);
  for (int k = 0; k < d; ++k) {
    double angle = 2.0 * M_PI * k / d + 0.4;
    z[k] = std::polar(radius * 0.7, angle);
  }

  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (int k = d; k >= 0; --k) acc = acc * x + c[k];
    return acc;
  };
  auto eval_d = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (int k = d; k >= 1; --k) acc = acc * x + c[k] * static_cast<double>(k);
    return acc;
  };

  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0;
    for (int i = 0; i < d; ++i) {
      std::complex<double> p = eval(z[i]);
      std::complex<double> dp = eval_d(z[i]);
      if (std::abs(dp) == 0) { z[i] += 1e-6; continue; }
      std::complex<double> newton = p / dp;
      std::complex<double> rep = 0;
      for (int j = 0; j < d; ++j)
        if (j != i) rep += 1.0 / (z[i] - z[j]);
      std::complex<double> denom = 1.0 - newton * rep;
      std::complex<double> step = std::abs(denom) > 1e-300 ? newton / denom : newton;
      z[i] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

struct ComplexVal {
  Real re, im;
};

ComplexVal cv_mul(const ComplexVal& a, const ComplexVal& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
ComplexVal cv_sub(const ComplexVal& a, const ComplexVal& b) {
  return {a.re - b.re, a.im - b.im};
}
ComplexVal cv_div(const ComplexVal& a, const ComplexVal& b) {
  Real n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

ComplexVal horner(const std::vector<ComplexVal>& coeffs, const ComplexVal& x) {
  ComplexVal acc{Real(0), Real(0)};
  for (size_t k = coeffs.size(); k-- > 0;) {
    acc = cv_mul(acc, x);
    acc.re += coeffs[k].re;
    acc.im += coeffs[k].im;
  }
  return acc;
}

}  // namespace

RootVector complex_roots(const UniPoly& g, unsigned precision_bits) {
  if (g.degree() < 1) throw MathError("complex_roots: degree must be >= 1");
  if (!is_squarefree(g))
    throw MathError("complex_roots: input must be squarefree");

  int d = g.degree();
  auto start = aberth_initial(g);

  Real target;
  std::vector<ComplexBall> balls(d);
  unsigned work = std::max(precision_bits * 2, 128u);
  const unsigned work_cap = std::max(precision_bits * 2, 128u) * 64;
  for (;; work *= 2) {
    if (work > work_cap)
      throw MathError("complex_roots: failed to certify isolation at requested precision");
    set_working_bits(work);
    target = boost::multiprecision::ldexp(Real(1), -static_cast<long>(precision_bits));

    std::vector<ComplexVal> coeffs(d + 1), dcoeffs(d);
    for (int k = 0; k <= d; ++k) coeffs[k] = {real_from_rat(g.coeff(k)), Real(0)};
    for (int k = 1; k <= d; ++k)
      dcoeffs[k - 1] = {real_from_rat(g.coeff(k) * Rat(k)), Real(0)};

    std::vector<ComplexVal> z(d);
    for (int i = 0; i < d; ++i)
      z[i] = {Real(start[i].real()), Real(start[i].imag())};

    // Newton: quadratic convergence from the double-precision seeds
    int newton_rounds = 4 + static_cast<int>(std::log2(static_cast<double>(work)));
    for (int round = 0; round < newton_rounds; ++round) {
      for (int i = 0; i < d; ++i) {
        ComplexVal p = horner(coeffs, z[i]);
        ComplexVal dp = horner(dcoeffs, z[i]);
        Real dn = dp.re * dp.re + dp.im * dp.im;
        if (dn == 0) continue;
        z[i] = cv_sub(z[i], cv_div(p, dp));
      }
    }

    // certification: disks D(z_i, d*|g(z_i)/g'(z_i)|) pairwise disjoint
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      ComplexBall zb{z[i].re, z[i].im, Real(0)};
      zb.rad = slack(zb.re, zb.im);
      ComplexBall val = evaluate_ball(g, zb);
      ComplexBall dval = evaluate_ball(g.derivative(), zb);
      Real denom = dval.abs_lower();
      if (denom == 0) { ok = false; break; }
      Real radius = Real(d) * val.abs_upper() / denom;
      radius += slack(radius, Real(0));
      if (radius > target) { ok = false; break; }
      balls[i] = ComplexBall{z[i].re, z[i].im, radius};
    }
    if (!ok) continue;
    for (int i = 0; i < d && ok; ++i)
      for (int j = i + 1; j < d && ok; ++j) {
        Real dre = abs(balls[i].re - balls[j].re);
        Real dim = abs(balls[i].im - balls[j].im);
        Real dist_lower =
            std::max(dre, dim) * (1 - eps_at_current_precision() * 8);
        if (dist_lower <= balls[i].rad + balls[j].rad) ok = false;
      }
    if (ok) break;
  }

  std::sort(balls.begin(), balls.end(), [](const ComplexBall& a, const ComplexBall& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  RootVector rv;
  rv.roots_ = std::move(balls);
  rv.bits_ = precision_bits;
  rv.source_ = g;
  return rv;
}

RootVector RootVector::refined(unsigned precision_bits) const {
  if (precision_bits <= bits_) return *this;
  const UniPoly& g = source_;
  int d = g.degree();
  unsigned work = precision_bits * 2 + 64;
  set_working_bits(work);
  Real target = boost::multiprecision::ldexp(Real(1), -static_cast<long>(precision_bits));

  std::vector<ComplexVal> coeffs(d + 1), dcoeffs(d);
  for (int k = 0; k <= d; ++k) coeffs[k] = {real_from_rat(g.coeff(k)), Real(0)};
  for (int k = 1; k <= d; ++k)
    dcoeffs[k - 1] = {real_from_rat(g.coeff(k) * Rat(k)), Real(0)};

  RootVector out;
  out.bits_ = precision_bits;
  out.source_ = g;
  for (const ComplexBall& b : roots_) {
    ComplexVal z{Real(b.re), Real(b.im)};
    z.re.precision(Real::default_precision());
    z.im.precision(Real::default_precision());
    for (int round = 0; round < 64; ++round) {
      ComplexVal p = horner(coeffs, z);
      ComplexVal dp = horner(dcoeffs, z);
      Real dn = dp.re * dp.re + dp.im * dp.im;
      if (dn == 0) break;
      ComplexVal step = cv_div(p, dp);
      z = cv_sub(z, step);
      Real magnitude = abs(step.re) + abs(step.im);
      if (magnitude < target / 1024) break;
    }
    ComplexBall zb{z.re, z.im, Real(0)};
    zb.rad = slack(zb.re, zb.im);
    ComplexBall val = evaluate_ball(g, zb);
    ComplexBall dval = evaluate_ball(g.derivative(), zb);
    Real denom = dval.abs_lower();
    if (denom == 0)
      throw MathError("refined: derivative vanished during refinement");
    Real radius = Real(d) * val.abs_upper() / denom + slack(z.re, z.im);
    if (radius > target)
      throw MathError("refined: could not reach requested precision");
    out.roots_.push_back(ComplexBall{z.re, z.im, radius});
  }
  return out;
}

}  // namespace galois
