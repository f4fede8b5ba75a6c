#include "clark/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace clark {

double herglotz_rhs(Complex phi, UnimodularConstant alpha) {
  const double m = std::norm(phi);
  if (!(m < 1.0)) throw std::domain_error("herglotz_rhs: |Phi(z)| must be < 1");
  return (1.0 - m) / std::norm(alpha.alpha - phi);
}

double herglotz_rhs(const InteriorFn& Phi, UnimodularConstant alpha, std::span<const Complex> z) {
  for (Complex c : z) require_disk(c, "test point");
  return herglotz_rhs(Phi(z), alpha);
}

std::vector<std::vector<Complex>> sample_test_points(int d, std::size_t count, std::uint64_t seed,
                                                     double rmax) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (!(rmax >= 0.0 && rmax < 1.0)) throw std::invalid_argument("rmax must lie in [0, 1)");
  std::mt19937_64 gen(seed);
  // 53 random bits per draw so the sequence does not depend on the library's distributions.
  auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  std::vector<std::vector<Complex>> out(count, std::vector<Complex>(d));
  for (auto& z : out)
    for (Complex& c : z) {
      double r = rmax * uniform();
      c = std::polar(r, kTwoPi * uniform());
    }
  return out;
}

void VerificationReport::finalize() {
  bool ok = true;
  for (const auto& r : identity_residuals) ok = ok && r.relative_error <= r.allowed;
  if (mass) ok = ok && mass->error <= mass->allowed;
  for (const auto& f : fourier) ok = ok && f.modulus <= f.allowed;
  for (const auto& s : support) ok = ok && (s.exempt || s.distance <= tolerances.support);
  passed = ok;
}

void VerificationReport::merge(const VerificationReport& other) {
  identity_residuals.insert(identity_residuals.end(), other.identity_residuals.begin(),
                            other.identity_residuals.end());
  if (other.mass) mass = other.mass;
  fourier.insert(fourier.end(), other.fourier.begin(), other.fourier.end());
  support.insert(support.end(), other.support.begin(), other.support.end());
  finalize();
}

double VerificationReport::max_identity_excess() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& r : identity_residuals) m = std::max(m, r.relative_error - r.allowed);
  return m;
}

double VerificationReport::max_fourier_modulus() const {
  double m = 0.0;
  for (const auto& f : fourier) m = std::max(m, f.modulus);
  return m;
}

double VerificationReport::max_support_distance() const {
  double m = 0.0;
  for (const auto& s : support)
    if (!s.exempt) m = std::max(m, s.distance);
  return m;
}

namespace {

IdentityResidual residual(const std::vector<Complex>& z, const IntegralEstimate& est, double rhs,
                          double relative_tol) {
  IdentityResidual r;
  r.z = z;
  r.lhs = est.value.real();
  r.rhs = rhs;
  r.relative_error = std::abs(est.value - rhs) / rhs;
  r.allowed = relative_tol + est.tail_term / rhs;
  return r;
}

VerificationReport identity_report(const std::vector<std::vector<Complex>>& points,
                                   const std::vector<IntegralEstimate>& est, const InteriorFn& Phi,
                                   UnimodularConstant alpha, double relative_tol) {
  VerificationReport rep;
  rep.tolerances.identity_relative = relative_tol;
  for (std::size_t i = 0; i < points.size(); ++i)
    rep.identity_residuals.push_back(residual(points[i], est[i], herglotz_rhs(Phi, alpha, points[i]), relative_tol));
  rep.finalize();
  return rep;
}

}  // namespace

VerificationReport poisson_identity_check(const TorusMeasure2D& mu, const InteriorFn& Phi,
                                          UnimodularConstant alpha,
                                          const std::vector<std::vector<Complex>>& points,
                                          const QuadratureGrid& grid, double relative_tol) {
  std::vector<TorusPoint2> centres;
  for (const auto& z : points) {
    if (z.size() != 2) throw std::invalid_argument("test points must lie in D^2");
    centres.push_back({z[0], z[1]});
  }
  auto est = integrate(mu, PoissonFamily2D(centres), grid);
  return identity_report(points, est, Phi, alpha, relative_tol);
}

VerificationReport poisson_identity_check(const EmbeddedClarkND& mu, const InteriorFn& Phi,
                                          UnimodularConstant alpha,
                                          const std::vector<std::vector<Complex>>& points,
                                          const QuadratureGrid& grid, double relative_tol) {
  for (const auto& z : points)
    if (static_cast<int>(z.size()) != mu.dimension) throw std::invalid_argument("test point dimension mismatch");
  auto est = integrate_embed_nd(mu, PoissonFamilyND(points), grid);
  return identity_report(points, est, Phi, alpha, relative_tol);
}

MassResult total_mass_check(const TorusMeasure2D& mu, const InteriorFn& Phi, UnimodularConstant alpha,
                            const QuadratureGrid& grid, double relative_tol) {
  auto est = integrate(mu, FourierFamily2D({{0, 0}}), grid).front();
  const std::vector<Complex> origin(2, 0.0);
  MassResult m;
  m.computed = est.value.real();
  m.expected = herglotz_rhs(Phi, alpha, origin);
  m.error = std::abs(est.value - m.expected);
  m.allowed = relative_tol * m.expected + est.tail_term;
  return m;
}

bool Exemption::contains(const TorusPoint2& s) const {
  switch (kind) {
    case Kind::Point:
      return std::max(std::abs(s[0] - at[0]), std::abs(s[1] - at[1])) <= radius;
    case Kind::FirstLine:
      return std::abs(s[0] - at[0]) <= radius;
    case Kind::SecondLine:
      return std::abs(s[1] - at[1]) <= radius;
    case Kind::Antidiagonal:
      return std::abs(s[0] * s[1] - at[0]) <= radius;
  }
  return false;
}

double singular_exemption_radius(double mass, double tol) {
  const double eps = std::numeric_limits<double>::epsilon();
  return std::max(tol, std::sqrt(16.0 * mass * eps / tol));
}

std::vector<Exemption> embed_exemptions(const InnerFunction1D& phi, double tol) {
  std::vector<Exemption> out;
  for (const auto& a : phi.singular_atoms())
    out.push_back({Exemption::Kind::Antidiagonal, {a.xi.value(), 1.0}, singular_exemption_radius(a.mass, tol)});
  return out;
}

std::vector<Exemption> product_exemptions(const ProductInner& P, double tol) {
  std::vector<Exemption> out;
  for (const auto& a : P.phi.singular_atoms())
    out.push_back({Exemption::Kind::FirstLine, {a.xi.value(), 1.0}, singular_exemption_radius(a.mass, tol)});
  for (const auto& b : P.psi.singular_atoms())
    out.push_back({Exemption::Kind::SecondLine, {1.0, b.xi.value()}, singular_exemption_radius(b.mass, tol)});
  return out;
}

double rif_exemption_radius(const RIF_n1& R, const SingularPoint& s, double tol) {
  // Near tau the gap |p1|^2 - |p2|^2 behaves like c theta^m, and Phi* at a rounded point
  // carries an error of about eps (|p1|^2 + |p2|^2)/gap.
  const TrigPoly& gap = R.boundary_gap();
  double scale = 0.0;
  for (Complex c : gap.c) scale += std::abs(c);
  double c = 0.0, factorial = 1.0;
  int m = 1;
  for (; m <= 2 * static_cast<int>(gap.c.size()); ++m) {
    factorial *= m;
    c = std::abs(gap.derivative(s.z1, m)) / factorial;
    if (c > 1e-9 * scale) break;
  }
  const double S = std::norm(R.p1()(s.z1)) + std::norm(R.p2()(s.z1));
  const double eps = std::numeric_limits<double>::epsilon();
  return std::max(tol, std::pow(16.0 * eps * S / (c * tol), 1.0 / m));
}

std::vector<Exemption> rif_exemptions(const RIF_n1& R, double tol) {
  std::vector<Exemption> out;
  for (const auto& s : R.singularities())
    out.push_back({Exemption::Kind::Point, {s.z1, s.z2}, rif_exemption_radius(R, s, tol)});
  return out;
}

std::vector<SupportEntry> support_inclusion_check(const TorusMeasure2D& mu, const BoundaryFn& Phi,
                                                  UnimodularConstant alpha,
                                                  std::size_t samples_per_component,
                                                  const std::vector<Exemption>& exempt) {
  std::vector<SupportEntry> out;
  for (const auto& s : mu.support_samples(samples_per_component)) {
    SupportEntry e;
    e.point = s;
    Complex v = Phi(s);
    e.distance = std::isfinite(v.real()) && std::isfinite(v.imag()) ? std::abs(v - alpha.alpha)
                                                                    : std::numeric_limits<double>::infinity();
    for (const auto& x : exempt) e.exempt = e.exempt || x.contains(s);
    out.push_back(e);
  }
  return out;
}

std::vector<FourierEntry> fourier_rp_check(const TorusMeasure2D& mu, int kmax, const QuadratureGrid& grid,
                                           double tol) {
  if (kmax < 1) throw std::invalid_argument("kmax must be at least 1");
  std::vector<std::array<int, 2>> modes;
  for (int a = 1; a <= kmax; ++a)
    for (int b = 1; b <= kmax; ++b) {
      modes.push_back({a, -b});
      modes.push_back({-a, b});
    }
  auto est = integrate(mu, FourierFamily2D(modes), grid);
  std::vector<FourierEntry> out;
  for (std::size_t i = 0; i < modes.size(); ++i)
    out.push_back({modes[i], std::abs(est[i].value), tol + est[i].tail_term});
  return out;
}

VerificationReport full_check(const TorusMeasure2D& mu, const InteriorFn& Phi, const BoundaryFn& boundary,
                              UnimodularConstant alpha, const std::vector<Exemption>& exempt,
                              const QuadratureGrid& grid, const CheckOptions& options) {
  auto points = sample_test_points(2, options.test_points, options.seed);
  VerificationReport rep = poisson_identity_check(mu, Phi, alpha, points, grid, options.identity_relative);
  rep.seed = options.seed;
  rep.tolerances.mass_relative = options.identity_relative;
  rep.mass = total_mass_check(mu, Phi, alpha, grid, options.identity_relative);
  rep.fourier = fourier_rp_check(mu, options.fourier_kmax, grid, rep.tolerances.fourier_absolute);
  rep.support = support_inclusion_check(mu, boundary, alpha, options.support_per_component, exempt);
  rep.finalize();
  return rep;
}

}  // namespace clark
