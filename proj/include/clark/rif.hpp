#pragma once

#include <vector>

#include "clark/measure.hpp"
#include "clark/poly.hpp"

namespace clark {

struct SingularPoint {
  Complex z1;
  Complex z2;
};

// phi = p~/p with p(z1, z2) = p1(z1) + z2 p2(z1), bidegree (n, 1), and
// p~(z1, z2) = z2 p~1(z1) + p~2(z1) the reflection at degree (n, 1).
class RIF_n1 {
 public:
  // Validates stability on D^2 and atorality; locates the boundary singularities.
  RIF_n1(Poly1 p1, Poly1 p2, int n);

  int n() const { return n_; }
  const Poly1& p1() const { return p1_; }
  const Poly1& p2() const { return p2_; }
  const Poly1& p1_tilde() const { return p1t_; }
  const Poly1& p2_tilde() const { return p2t_; }

  Complex p(Complex z1, Complex z2) const { return p1_(z1) + z2 * p2_(z1); }
  Complex p_tilde(Complex z1, Complex z2) const { return z2 * p1t_(z1) + p2t_(z1); }
  Complex eval(Complex z1, Complex z2) const;
  Complex boundary_value(Complex zeta1, Complex zeta2) const;
  // d phi / d z1
  Complex partial_z1(Complex z1, Complex z2) const;

  // p1 p~1 - p2 p~2: the resultant of p and p~ in z2, a polynomial in z1.
  const Poly1& resultant() const { return res_; }
  // |p1|^2 - |p2|^2 on the circle, equal to zeta^-n times the resultant.
  const TrigPoly& boundary_gap() const { return gap_; }
  const std::vector<SingularPoint>& singularities() const { return sing_; }
  // Constant value of phi on the line {z1 = tau} through a singularity, p~2(tau)/p1(tau).
  Complex line_value(const SingularPoint& s) const;

 private:
  void check_stable() const;
  void find_singularities();

  int n_;
  Poly1 p1_, p2_, p1t_, p2t_;
  Poly1 res_;
  TrigPoly gap_;
  std::vector<SingularPoint> sing_;
};

// Rational function num/den whose common roots on the circle are divided out for evaluation.
struct RationalFunction {
  Poly1 num;
  Poly1 den;
  std::vector<Complex> shared_roots;  // flagged common roots on the circle
  Poly1 num_reduced;
  Poly1 den_reduced;

  Complex operator()(Complex z) const { return num_reduced(z) / den_reduced(z); }
};

// B_alpha = (p~1 - alpha p2)/(alpha p1 - p~2); the level curve is zeta -> conj(B_alpha(zeta)).
RationalFunction b_alpha(const RIF_n1& R, UnimodularConstant alpha);

// W_alpha = (|p1|^2 - |p2|^2)/|p~1 - alpha p2|^2 with removable zeros divided out.
class WeightAlpha {
 public:
  WeightAlpha(const RIF_n1& R, UnimodularConstant alpha);

  double operator()(Complex zeta) const;
  const TrigPoly& numerator() const { return numerator_; }
  const Poly1& denominator_root() const { return q_; }  // |q|^2 is the denominator
  const std::vector<Complex>& shared_roots() const { return shared_; }

 private:
  int n_;
  TrigPoly numerator_;
  Poly1 q_;
  std::vector<Complex> shared_;
  Poly1 res_reduced_;
  Poly1 q_reduced_;
};

double w_alpha(const RIF_n1& R, UnimodularConstant alpha, Complex zeta);

struct ExceptionalValue {
  UnimodularConstant alpha;
  SingularPoint at;
  double radial_spread = 0.0;  // |radial limit - line value|
};

std::vector<ExceptionalValue> exceptional_values(const RIF_n1& R);

// 1/|d phi/d z1 (tau, z2)|, checked constant in z2.
double line_constant(const RIF_n1& R, const SingularPoint& s);

ClarkMeasure2D rif_clark_measure(const RIF_n1& R, UnimodularConstant alpha);

// p1 = 4 - 3z + z^2, p2 = -1 - z, n = 2: one singularity at (1, 1), exceptional value -1.
RIF_n1 quadratic_rif();

// Tolerance for matching alpha against an exceptional value.
inline constexpr double kExceptionalTol = 1e-9;

}  // namespace clark
