#include "clark/clark1d.hpp"

#include <cmath>

namespace clark {

DiscreteMeasure1D clark_blaschke(const InnerFunction1D& phi, UnimodularConstant alpha) {
  if (!phi.is_blaschke_type())
    throw std::invalid_argument("clark_blaschke needs a non-constant finite Blaschke product");
  const int n = phi.blaschke_degree();
  const std::size_t samples = 16 * static_cast<std::size_t>(n);

  std::vector<double> theta(samples + 1), psi(samples + 1);
  for (std::size_t s = 0; s <= samples; ++s) {
    theta[s] = kTwoPi * static_cast<double>(s) / static_cast<double>(samples);
    psi[s] = phi.lifted_phase(theta[s]);
  }
  // Targets nu + 2 pi m in [psi(0), psi(0) + 2 pi n).
  const double m0 = std::ceil((psi[0] - alpha.nu) / kTwoPi);

  DiscreteMeasure1D out;
  std::size_t s = 0;
  for (int i = 0; i < n; ++i) {
    const double target = alpha.nu + kTwoPi * (m0 + i);
    while (s + 1 < samples && psi[s + 1] <= target) ++s;
    double lo = theta[s], hi = theta[s + 1];
    while (hi - lo > 1e-13) {
      double mid = 0.5 * (lo + hi);
      if (phi.lifted_phase(mid) <= target)
        lo = mid;
      else
        hi = mid;
    }
    double t = 0.5 * (lo + hi);
    double slope = phi.boundary_derivative_modulus(std::polar(1.0, t));
    double polished = t - (phi.lifted_phase(t) - target) / slope;
    if (polished >= lo - 1e-13 && polished <= hi + 1e-13) t = polished;

    Complex eta = std::polar(1.0, t);
    double dmod = phi.boundary_derivative_modulus(eta);
    if (dmod < 1e-14)
      throw ComputationError("degenerate angular derivative at a Clark atom (theta = " +
                             std::to_string(t) + ")");
    out.atoms.push_back({TorusPoint(t), 1.0 / dmod});
  }
  out.validate();
  return out;
}

double atomic_singular_tail_bound(double c, int K) {
  if (K < 1) throw std::invalid_argument("truncation order K must be at least 1");
  double k = K;
  return c * (2.0 * k + 1.0) / (2.0 * kPi * kPi * k * k);
}

DiscreteMeasure1D clark_atomic_singular(double c, TorusPoint xi, UnimodularConstant alpha, int K) {
  if (K < 1) throw std::invalid_argument("truncation order K must be at least 1");
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("singular mass must be positive");
  // -c (xi + eta)/(xi - eta) = i s with s = nu + 2 pi k gives eta = xi (s - ic)/(s + ic),
  // and |phi'(eta)| = 2c/|xi - eta|^2 = (s^2 + c^2)/(2c).
  DiscreteMeasure1D out;
  out.atoms.reserve(2 * static_cast<std::size_t>(K) + 1);
  for (long k = -K; k <= K; ++k) {
    double s = alpha.nu + kTwoPi * static_cast<double>(k);
    double angle = xi.theta - 2.0 * std::atan2(c, s);
    out.atoms.push_back({TorusPoint(angle), 2.0 * c / (s * s + c * c)});
  }
  out.tail_bound = atomic_singular_tail_bound(c, K);
  out.generator_id = "single-atom-singular";
  out.accumulation_points.push_back(xi);
  return out;
}

bool clark1d_supported(const InnerFunction1D& phi) {
  return phi.is_blaschke_type() || phi.is_single_atom_singular();
}

DiscreteMeasure1D clark_measure1d(const InnerFunction1D& phi, UnimodularConstant alpha, int K) {
  if (K < 1) throw std::invalid_argument("truncation order K must be at least 1");
  if (phi.is_blaschke_type()) return clark_blaschke(phi, alpha);
  if (phi.is_single_atom_singular()) {
    const SingularAtom& s = phi.singular_atoms().front();
    auto shifted = UnimodularConstant::from_angle(alpha.nu - phi.unimodular_angle());
    return clark_atomic_singular(s.mass, s.xi, shifted, K);
  }
  throw std::invalid_argument(
      "unsupported function class: need a finite Blaschke product or a single singular atom");
}

void clark_fiber_atoms(const InnerFunction1D& phi, UnimodularConstant alpha, int K,
                       std::vector<Complex>& points, std::vector<double>& weights) {
  points.clear();
  weights.clear();
  if (phi.is_single_atom_singular()) {
    if (K < 1) throw std::invalid_argument("truncation order K must be at least 1");
    const SingularAtom& a = phi.singular_atoms().front();
    const double c = a.mass;
    const Complex xi = a.xi.value();
    const double nu = canonical_angle(alpha.nu - phi.unimodular_angle());
    for (long k = -K; k <= K; ++k) {
      double s = nu + kTwoPi * static_cast<double>(k);
      points.push_back(xi * Complex(s, -c) / Complex(s, c));
      weights.push_back(2.0 * c / (s * s + c * c));
    }
    return;
  }
  DiscreteMeasure1D mu = clark_measure1d(phi, alpha, K);
  for (const auto& at : mu.atoms) {
    points.push_back(at.point.value());
    weights.push_back(at.weight);
  }
}

LevelPoints level_points(const InnerFunction1D& phi, UnimodularConstant alpha, int K) {
  DiscreteMeasure1D mu = clark_measure1d(phi, alpha, K);
  LevelPoints out;
  for (const auto& a : mu.atoms) out.points.push_back(a.point);
  out.accumulation = mu.accumulation_points;
  return out;
}

double clark_total_mass(const InnerFunction1D& phi, UnimodularConstant alpha) {
  Complex p0 = phi.eval(0.0);
  return (1.0 - std::norm(p0)) / std::norm(alpha.alpha - p0);
}

}  // namespace clark
