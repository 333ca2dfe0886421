#ifndef GALOIS_ROOTS_HPP
#define GALOIS_ROOTS_HPP

#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "galois/multipoly.hpp"
#include "galois/unipoly.hpp"

namespace galois {

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

/// Sets the working mpfr precision (thread default) in bits.
void set_working_bits(unsigned bits);

Real real_from_rat(const Rat& q);

/// Complex disk: midpoint (re, im) and radius. All arithmetic propagates
/// the radius together with a slack term covering midpoint rounding, so a
/// result ball always contains the exact value of the operation on any
/// points of the input balls.
struct ComplexBall {
  Real re{0}, im{0}, rad{0};

  static ComplexBall exact(const Rat& re_value, const Rat& im_value = Rat(0));
  Real abs_upper() const;
  Real abs_lower() const;  // clamped at 0
  bool contains_zero() const { return abs_lower() == 0; }
};

ComplexBall ball_add(const ComplexBall& a, const ComplexBall& b);
ComplexBall ball_sub(const ComplexBall& a, const ComplexBall& b);
ComplexBall ball_mul(const ComplexBall& a, const ComplexBall& b);
ComplexBall ball_pow(const ComplexBall& a, int e);

ComplexBall evaluate_ball(const UniPoly& f, const ComplexBall& point);
ComplexBall evaluate_ball(const MultiPoly& p, const std::vector<ComplexBall>& point);

/// Certified isolating disks for all roots of a squarefree polynomial,
/// sorted by (real, imaginary) midpoint. Each disk contains exactly one
/// root and has radius <= 2^-precision_bits.
class RootVector {
 public:
  RootVector() = default;

  const std::vector<ComplexBall>& roots() const { return roots_; }
  unsigned precision_bits() const { return bits_; }
  const UniPoly& source() const { return source_; }

  /// Tighter disks at higher precision, keeping the root order.
  RootVector refined(unsigned precision_bits) const;

  friend RootVector complex_roots(const UniPoly& g, unsigned precision_bits);

 private:
  std::vector<ComplexBall> roots_;
  unsigned bits_ = 0;
  UniPoly source_;
};

/// Aberth-Ehrlich initial approximations in double precision followed by
/// Newton refinement under mpfr; isolation is certified by pairwise
/// disjoint Newton disks D(z_i, n|g(z_i)/g'(z_i)|).
RootVector complex_roots(const UniPoly& g, unsigned precision_bits);

}  // namespace galois

#endif
