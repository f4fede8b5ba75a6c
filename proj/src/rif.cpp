#include "clark/rif.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace clark {

RIF_n1::RIF_n1(Poly1 p1, Poly1 p2, int n) : n_(n), p1_(std::move(p1)), p2_(std::move(p2)) {
  if (n_ < 0) throw std::invalid_argument("degree n must be nonnegative");
  if (p1_.degree() > n_ || p2_.degree() > n_) throw std::invalid_argument("p1, p2 must have degree <= n");
  if (p1_.is_zero()) throw std::invalid_argument("p1 must be nonzero");
  p1t_ = reflect(p1_, n_);
  p2t_ = reflect(p2_, n_);
  res_ = p1_ * p1t_ - p2_ * p2t_;
  if (res_.max_abs_coeff() <= 1e-10)
    throw std::invalid_argument("p and its reflection share a factor (resultant vanishes)");
  gap_ = modulus_squared(p1_) - modulus_squared(p2_);
  check_stable();
  find_singularities();
}

void RIF_n1::check_stable() const {
  // p is affine in z2: zero-free on the closed z2 disc iff |p1(z1)| > |p2(z1)|.
  for (int i = 0; i < 64; ++i) {
    const double r = i / 64.0;
    for (int j = 0; j < 256; ++j) {
      Complex z = std::polar(r, kTwoPi * j / 256.0);
      double a = std::abs(p1_(z)), b = std::abs(p2_(z));
      if (!(a > 1e-12) || a < b - 1e-12)
        throw std::invalid_argument("p is not stable: zero in the bidisc near z1 = (" +
                                    std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
    }
  }
}

void RIF_n1::find_singularities() {
  // h = |p1|^2 - |p2|^2 >= 0 on the circle, so boundary roots of the resultant have even
  // multiplicity and the eigenvalues split into a cluster of radius about eps^(1/m).
  // The cluster centroid is accurate to rounding.
  std::vector<Complex> rs = roots(res_);
  std::vector<bool> used(rs.size(), false);
  std::vector<double> angles;
  double scale = 0.0;
  for (Complex c : gap_.c) scale += std::abs(c);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> cluster{i};
    used[i] = true;
    for (std::size_t k = 0; k < cluster.size(); ++k)
      for (std::size_t j = 0; j < rs.size(); ++j)
        if (!used[j] && std::abs(rs[j] - rs[cluster[k]]) < 1e-3) {
          used[j] = true;
          cluster.push_back(j);
        }
    Complex c = 0.0;
    for (std::size_t j : cluster) c += rs[j];
    c /= static_cast<double>(cluster.size());
    if (std::fabs(std::abs(c) - 1.0) >= 1e-4) continue;
    double t = canonical_angle(std::arg(c));
    if (std::fabs(gap_(std::polar(1.0, t)).real()) > 1e-12 * scale) continue;
    bool dup = false;
    for (double a : angles) dup = dup || angular_distance(a, t) < 1e-8;
    if (!dup) angles.push_back(t);
  }
  std::sort(angles.begin(), angles.end());
  for (double t : angles) {
    Complex tau = std::polar(1.0, t);
    Complex a = p1_(tau), b = p2_(tau);
    if (std::abs(b) < 1e-12) throw ComputationError("singularity with p1 = p2 = 0; p is not atoral");
    Complex z2 = -a / b;
    if (std::fabs(std::abs(z2) - 1.0) > 1e-6) continue;
    z2 /= std::abs(z2);
    if (std::abs(p(tau, z2)) > 1e-8 || std::abs(p_tilde(tau, z2)) > 1e-8)
      throw ComputationError("singularity refinement failed at theta = " + std::to_string(t));
    sing_.push_back({tau, z2});
  }
}

Complex RIF_n1::eval(Complex z1, Complex z2) const { return p_tilde(z1, z2) / p(z1, z2); }

Complex RIF_n1::boundary_value(Complex zeta1, Complex zeta2) const {
  for (const auto& s : sing_)
    if (std::abs(zeta1 - s.z1) <= 1e-12 && std::abs(zeta2 - s.z2) <= 1e-12) return line_value(s);
  return eval(zeta1, zeta2);
}

Complex RIF_n1::partial_z1(Complex z1, Complex z2) const {
  Complex pv = p(z1, z2);
  Complex pt = p_tilde(z1, z2);
  Complex dp = p1_.derivative()(z1) + z2 * p2_.derivative()(z1);
  Complex dpt = z2 * p1t_.derivative()(z1) + p2t_.derivative()(z1);
  return (dpt * pv - pt * dp) / (pv * pv);
}

Complex RIF_n1::line_value(const SingularPoint& s) const { return p2t_(s.z1) / p1_(s.z1); }

namespace {

// Singularities whose line value is alpha; there num and den of B_alpha share the root tau.
std::vector<Complex> exceptional_taus(const RIF_n1& R, UnimodularConstant alpha) {
  std::vector<Complex> out;
  for (const auto& s : R.singularities())
    if (std::abs(R.line_value(s) - alpha.alpha) <= kExceptionalTol) out.push_back(s.z1);
  return out;
}

Poly1 deflate_all(Poly1 q, const std::vector<Complex>& taus, int times) {
  for (Complex t : taus)
    for (int i = 0; i < times; ++i) q = deflate(q, t).first;
  return q;
}

}  // namespace

RationalFunction b_alpha(const RIF_n1& R, UnimodularConstant alpha) {
  RationalFunction f;
  f.num = R.p1_tilde() - alpha.alpha * R.p2();
  f.den = alpha.alpha * R.p1() - R.p2_tilde();
  f.shared_roots = exceptional_taus(R, alpha);
  f.num_reduced = deflate_all(f.num, f.shared_roots, 1);
  f.den_reduced = deflate_all(f.den, f.shared_roots, 1);
  return f;
}

WeightAlpha::WeightAlpha(const RIF_n1& R, UnimodularConstant alpha)
    : n_(R.n()), numerator_(R.boundary_gap()), q_(R.p1_tilde() - alpha.alpha * R.p2()) {
  shared_ = exceptional_taus(R, alpha);
  res_reduced_ = deflate_all(R.resultant(), shared_, 2);
  q_reduced_ = deflate_all(q_, shared_, 1);
}

double WeightAlpha::operator()(Complex zeta) const {
  if (shared_.empty()) {
    double den = std::norm(q_(zeta));
    if (den < 1e-14) return std::numeric_limits<double>::quiet_NaN();
    return numerator_(zeta).real() / den;
  }
  // R = zeta^n (|p1|^2 - |p2|^2) and (zeta - tau)^2/|zeta - tau|^2 = -zeta tau on the circle.
  double den = std::norm(q_reduced_(zeta));
  if (den < 1e-14) return std::numeric_limits<double>::quiet_NaN();
  Complex v = ipow(zeta, -n_) * res_reduced_(zeta);
  for (Complex t : shared_) v *= -zeta * t;
  return v.real() / den;
}

double w_alpha(const RIF_n1& R, UnimodularConstant alpha, Complex zeta) {
  return WeightAlpha(R, alpha)(zeta);
}

std::vector<ExceptionalValue> exceptional_values(const RIF_n1& R) {
  std::vector<ExceptionalValue> out;
  for (const auto& s : R.singularities()) {
    Complex v = R.line_value(s);
    RadialLimit lim = radial_limit([&](double r) { return R.eval(r * s.z1, r * s.z2); });
    double spread = std::abs(lim.value - v);
    if (lim.diverged || spread > 1e-6)
      throw ComputationError("radial limit at a singularity disagrees with the line value (spread " +
                             std::to_string(spread) + ")");
    auto a = UnimodularConstant::from_complex(v);
    bool dup = false;
    for (const auto& e : out) dup = dup || angular_distance(e.alpha.nu, a.nu) < kExceptionalTol;
    if (!dup) out.push_back({a, s, spread});
  }
  return out;
}

double line_constant(const RIF_n1& R, const SingularPoint& s) {
  const Complex d0 = R.partial_z1(s.z1, 0.0);
  std::vector<Complex> z2s;
  for (double t : {0.25, 0.5, 0.75, 0.9}) z2s.push_back(-t * s.z2);
  for (double a : {0.5 * kPi, 2.0 * kPi / 3.0, kPi, 1.5 * kPi}) z2s.push_back(s.z2 * std::polar(1.0, a));
  for (Complex z2 : z2s) {
    Complex d = R.partial_z1(s.z1, z2);
    if (std::abs(d - d0) > 1e-8 * std::max(1.0, std::abs(d0)))
      throw ComputationError("d phi/d z1 is not constant along the line through the singularity");
  }
  if (std::abs(d0) < 1e-14) throw ComputationError("vanishing z1-derivative on a singular line");
  return 1.0 / std::abs(d0);
}

ClarkMeasure2D rif_clark_measure(const RIF_n1& R, UnimodularConstant alpha) {
  ClarkMeasure2D mu;
  RationalFunction B = b_alpha(R, alpha);
  WeightAlpha W(R, alpha);
  mu.curves.push_back(GraphCurve{[B](Complex z) { return std::conj(B(z)); }, W});
  for (const auto& s : R.singularities())
    if (std::abs(R.line_value(s) - alpha.alpha) <= kExceptionalTol)
      mu.lines.push_back({TorusPoint::from_complex(s.z1), line_constant(R, s)});
  mu.validate();
  return mu;
}

RIF_n1 quadratic_rif() { return RIF_n1(Poly1({4.0, -3.0, 1.0}), Poly1({-1.0, -1.0}), 2); }

}  // namespace clark
