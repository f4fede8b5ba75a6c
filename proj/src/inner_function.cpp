#include "clark/inner_function.hpp"

#include <cmath>
#include <limits>

namespace clark {

InnerFunction1D::InnerFunction1D(double unimodular_angle, int monomial_power,
                                 std::vector<Complex> zeros, std::vector<SingularAtom> atoms)
    : a_(canonical_angle(unimodular_angle)),
      k_(monomial_power),
      zeros_(std::move(zeros)),
      atoms_(std::move(atoms)) {
  if (k_ < 0) throw std::invalid_argument("monomial power must be nonnegative");
  for (Complex z : zeros_) require_disk(z, "Blaschke zero");
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!(atoms_[i].mass > 0.0) || !std::isfinite(atoms_[i].mass))
      throw std::invalid_argument("singular atom masses must be finite and positive");
    for (std::size_t j = 0; j < i; ++j)
      if (same_point(atoms_[i].xi, atoms_[j].xi))
        throw std::invalid_argument("singular atom locations must be distinct");
  }
}

namespace {

Complex blaschke_factor(Complex a, Complex z) { return (a - z) / (1.0 - std::conj(a) * z); }

// i * cot(t/2) = (xi + zeta)/(xi - zeta) for zeta = xi e^{it}; returns cot(t/2).
double herglotz_cot(Complex xi, Complex zeta) {
  double t = std::arg(zeta * std::conj(xi));
  return 1.0 / std::tan(0.5 * t);
}

}  // namespace

Complex InnerFunction1D::eval(Complex z) const {
  require_disk(z);
  Complex v = std::polar(1.0, a_) * std::pow(z, k_);
  for (Complex a : zeros_) v *= blaschke_factor(a, z);
  Complex h = 0.0;
  for (const auto& s : atoms_) {
    Complex xi = s.xi.value();
    h += s.mass * (xi + z) / (xi - z);
  }
  return v * std::exp(-h);
}

Complex InnerFunction1D::derivative(Complex z) const {
  require_disk(z);
  // Product rule over the factors z^k, b_1..b_m, S; exact at zeros of phi.
  std::vector<Complex> f;
  std::vector<Complex> d;
  if (k_ > 0) {
    f.push_back(std::pow(z, k_));
    d.push_back(static_cast<double>(k_) * std::pow(z, k_ - 1));
  }
  for (Complex a : zeros_) {
    Complex den = 1.0 - std::conj(a) * z;
    f.push_back((a - z) / den);
    d.push_back((std::norm(a) - 1.0) / (den * den));
  }
  if (!atoms_.empty()) {
    Complex h = 0.0;
    Complex dh = 0.0;
    for (const auto& s : atoms_) {
      Complex xi = s.xi.value();
      h += s.mass * (xi + z) / (xi - z);
      dh += 2.0 * s.mass * xi / ((xi - z) * (xi - z));
    }
    Complex sv = std::exp(-h);
    f.push_back(sv);
    d.push_back(-sv * dh);
  }
  const std::size_t n = f.size();
  if (n == 0) return 0.0;
  std::vector<Complex> prefix(n + 1, 1.0), suffix(n + 1, 1.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * f[i];
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * f[i];
  Complex sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += prefix[i] * d[i] * suffix[i + 1];
  return std::polar(1.0, a_) * sum;
}

BoundaryValue InnerFunction1D::boundary_value(Complex zeta) const {
  double phase = a_ + k_ * std::arg(zeta);
  Complex v = std::polar(1.0, phase);
  for (Complex a : zeros_) v *= blaschke_factor(a, zeta);
  double singular_phase = 0.0;
  for (const auto& s : atoms_) {
    if (angular_distance(std::arg(zeta), s.xi.theta) < 1e-12) return {BoundaryValue::Kind::Zero, 0.0};
    singular_phase -= s.mass * herglotz_cot(s.xi.value(), zeta);
  }
  v *= std::polar(1.0, std::remainder(singular_phase, kTwoPi));
  return {BoundaryValue::Kind::Unimodular, v};
}

double InnerFunction1D::boundary_derivative_modulus(Complex zeta) const {
  double m = k_;
  for (Complex a : zeros_) m += (1.0 - std::norm(a)) / std::norm(zeta - a);
  for (const auto& s : atoms_) {
    if (angular_distance(std::arg(zeta), s.xi.theta) < 1e-12)
      return std::numeric_limits<double>::infinity();
    m += 2.0 * s.mass / std::norm(s.xi.value() - zeta);
  }
  return m;
}

double InnerFunction1D::angular_derivative_modulus(Complex zeta) const {
  if (!boundary_value(zeta).unimodular())
    throw std::domain_error("angular derivative requested where the boundary value is not unimodular");
  RadialLimit lim = radial_limit([&](double r) { return derivative(r * zeta); });
  if (lim.diverged) return std::numeric_limits<double>::infinity();
  return std::abs(lim.value);
}

double InnerFunction1D::lifted_phase(double theta) const {
  if (!atoms_.empty()) throw std::invalid_argument("lifted phase needs a Blaschke-type function");
  // On the circle (a - z)/(1 - conj(a) z) = -z w / conj(w) with w = 1 - a conj(z), Re w > 0.
  double p = a_ + k_ * theta;
  Complex e = std::polar(1.0, -theta);
  for (Complex a : zeros_) p += kPi + theta + 2.0 * std::arg(1.0 - a * e);
  return p;
}

}  // namespace clark
