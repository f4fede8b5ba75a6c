#pragma once

#include <utility>
#include <vector>

#include "clark/torus.hpp"

namespace clark {

// z^k by repeated squaring; k may be negative.
Complex ipow(Complex z, int k);

// Polynomial with ascending complex coefficients; exact trailing zeros are trimmed,
// so the zero polynomial has no coefficients.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Complex>& coeffs() const { return c_; }
  Complex coeff(int i) const;
  double max_abs_coeff() const;

  Complex operator()(Complex z) const;
  Poly1 derivative() const;

  friend Poly1 operator+(const Poly1& a, const Poly1& b);
  friend Poly1 operator-(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(Complex s, const Poly1& a);
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }

 private:
  std::vector<Complex> c_;
};

// z^n conj(q)(1/conj(z)): conjugated coefficients reversed and padded to degree n.
Poly1 reflect(const Poly1& q, int n);

// All complex roots, from the eigenvalues of the companion matrix.
std::vector<Complex> roots(const Poly1& q);

// q = (z - r) * quotient + remainder
std::pair<Poly1, Complex> deflate(const Poly1& q, Complex r);

// Laurent polynomial sum_k c_k zeta^k, k = lowest .. lowest + c.size() - 1, used for
// real trigonometric polynomials on the circle.
struct TrigPoly {
  int lowest = 0;
  std::vector<Complex> c;

  Complex operator()(Complex zeta) const;
  // d^j/dtheta^j at zeta = e^{i theta}
  Complex derivative(Complex zeta, int j) const;
};

// |q(zeta)|^2 on the circle as a Laurent polynomial.
TrigPoly modulus_squared(const Poly1& q);
TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);

}  // namespace clark
