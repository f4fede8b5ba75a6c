#include "clark/poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace clark {

Complex ipow(Complex z, int k) {
  if (k < 0) return 1.0 / ipow(z, -k);
  Complex r(1.0, 0.0);
  Complex b = z;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

Poly1::Poly1(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == Complex(0.0, 0.0)) c_.pop_back();
}

Complex Poly1::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Complex(0.0, 0.0);
}

double Poly1::max_abs_coeff() const {
  double m = 0.0;
  for (Complex c : c_) m = std::max(m, std::abs(c));
  return m;
}

Complex Poly1::operator()(Complex z) const {
  Complex v = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * z + c_[i];
  return v;
}

Poly1 Poly1::derivative() const {
  std::vector<Complex> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(static_cast<double>(i) * c_[i]);
  return Poly1(std::move(d));
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
  std::vector<Complex> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly1(std::move(c));
}

Poly1 operator-(const Poly1& a, const Poly1& b) {
  std::vector<Complex> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Poly1(std::move(c));
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return Poly1();
  std::vector<Complex> c(a.c_.size() + b.c_.size() - 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly1(std::move(c));
}

Poly1 operator*(Complex s, const Poly1& a) {
  std::vector<Complex> c(a.c_);
  for (Complex& x : c) x *= s;
  return Poly1(std::move(c));
}

Poly1 reflect(const Poly1& q, int n) {
  if (n < 0 || q.degree() > n) throw std::invalid_argument("reflect: degree exceeds n");
  std::vector<Complex> c(n + 1, Complex(0.0, 0.0));
  for (int i = 0; i <= q.degree(); ++i) c[n - i] = std::conj(q.coeff(i));
  return Poly1(std::move(c));
}

std::vector<Complex> roots(const Poly1& q) {
  if (q.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const int d = q.degree();
  if (d == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  const Complex lead = q.coeff(d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -q.coeff(i) / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw ComputationError("companion eigenvalue solver failed");
  std::vector<Complex> out(d);
  for (int i = 0; i < d; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

std::pair<Poly1, Complex> deflate(const Poly1& q, Complex r) {
  const int d = q.degree();
  if (d <= 0) return {Poly1(), q.coeff(0)};
  std::vector<Complex> quotient(d);
  Complex carry = q.coeff(d);
  for (int i = d - 1; i >= 0; --i) {
    quotient[i] = carry;
    carry = q.coeff(i) + carry * r;
  }
  return {Poly1(std::move(quotient)), carry};
}

Complex TrigPoly::operator()(Complex zeta) const { return derivative(zeta, 0); }

Complex TrigPoly::derivative(Complex zeta, int j) const {
  Complex v = 0.0;
  Complex power = ipow(zeta, lowest);
  for (std::size_t i = 0; i < c.size(); ++i) {
    double k = lowest + static_cast<int>(i);
    Complex factor = ipow(Complex(0.0, k), j);
    v += factor * c[i] * power;
    power *= zeta;
  }
  return v;
}

TrigPoly modulus_squared(const Poly1& q) {
  const int d = q.degree();
  TrigPoly t;
  if (d < 0) return t;
  t.lowest = -d;
  t.c.assign(2 * d + 1, Complex(0.0, 0.0));
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d; ++b) t.c[a - b + d] += q.coeff(a) * std::conj(q.coeff(b));
  return t;
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) {
  if (a.c.empty()) {
    TrigPoly r = b;
    for (Complex& x : r.c) x = -x;
    return r;
  }
  if (b.c.empty()) return a;
  int lo = std::min(a.lowest, b.lowest);
  int hi = std::max(a.lowest + static_cast<int>(a.c.size()), b.lowest + static_cast<int>(b.c.size()));
  TrigPoly r;
  r.lowest = lo;
  r.c.assign(hi - lo, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[a.lowest - lo + i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[b.lowest - lo + i] -= b.c[i];
  return r;
}

}  // namespace clark
