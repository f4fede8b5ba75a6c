#include "clark/product.hpp"

#include <cmath>
#include <limits>

namespace clark {

BoundaryValue ProductInner::boundary_value(Complex zeta1, Complex zeta2) const {
  BoundaryValue a = phi.boundary_value(zeta1);
  BoundaryValue b = psi.boundary_value(zeta2);
  if (a.kind == BoundaryValue::Kind::Zero || b.kind == BoundaryValue::Kind::Zero)
    return {BoundaryValue::Kind::Zero, 0.0};
  if (!a.unimodular() || !b.unimodular()) return {BoundaryValue::Kind::Undefined, 0.0};
  return {BoundaryValue::Kind::Unimodular, a.value * b.value};
}

ProductInner exp_exp_product() {
  return {InnerFunction1D::singular_atom(0.0, 1.0), InnerFunction1D::singular_atom(0.0, 1.0)};
}

ProductInner blaschke_exp_product(Complex lambda) {
  return {InnerFunction1D::singular_atom(0.0, 1.0), InnerFunction1D::blaschke({lambda}, 1)};
}

std::optional<DiscreteMeasure1D> fiber_measure(const ProductInner& P, Complex zeta1,
                                               UnimodularConstant alpha, int K) {
  BoundaryValue b = P.phi.boundary_value(zeta1);
  if (!b.unimodular()) return std::nullopt;
  auto beta = UnimodularConstant::from_angle(alpha.nu - std::arg(b.value));
  return clark_measure1d(P.psi, beta, K);
}

Complex ExpExpBranch::g(Complex zeta) const {
  const double s = nu + kTwoPi * static_cast<double>(k);
  const Complex i(0.0, 1.0);
  return (s * (zeta - 1.0) + 2.0 * i) / (s * (zeta - 1.0) + 2.0 * i * zeta);
}

double ExpExpBranch::weight(Complex zeta) const {
  const double s = nu + kTwoPi * static_cast<double>(k);
  const Complex i(0.0, 1.0);
  return 2.0 * std::norm(zeta - 1.0) / std::norm(s * (zeta - 1.0) + 2.0 * i * zeta);
}

ExpExpBranch expexp_branches(double nu, long k) { return {nu, k}; }

std::array<Complex, 2> BlaschkeExpBranches::roots(Complex zeta) const {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double t = std::arg(zeta);
  if (std::fabs(t) < 1e-14) return {Complex(nan, nan), Complex(nan, nan)};
  // (1+zeta)/(1-zeta) = i cot(t/2) on the circle.
  const Complex e = std::polar(1.0, nu + 1.0 / std::tan(0.5 * t));
  const Complex b = lambda + e * std::conj(lambda);
  const Complex sq = std::sqrt(b * b - 4.0 * e);
  return {0.5 * (b + sq), 0.5 * (b - sq)};
}

double BlaschkeExpBranches::weight(Complex g) const {
  const Complex lc = std::conj(lambda);
  return std::norm(1.0 - lc * g) / std::abs(lambda - 2.0 * g + lc * g * g);
}

BlaschkeExpBranches blaschke_exp_branches(Complex lambda, double nu) {
  require_disk(lambda, "lambda");
  return {lambda, nu};
}

std::array<std::vector<Complex>, 2> trace_blaschke_exp(const BlaschkeExpBranches& b,
                                                       const QuadratureGrid& grid) {
  const std::size_t n = grid.size();
  std::array<std::vector<Complex>, 2> out;
  out[0].resize(n);
  out[1].resize(n);
  std::size_t start = 0;
  double best = 1e300;
  for (std::size_t j = 0; j < n; ++j) {
    double d = std::abs(grid.node(j) + 1.0);
    if (d < best) {
      best = d;
      start = j;
    }
  }
  auto place = [&](std::size_t j, std::array<Complex, 2>& prev, bool have_prev) {
    auto r = b.roots(grid.node(j));
    if (!std::isfinite(r[0].real())) {
      out[0][j] = r[0];
      out[1][j] = r[1];
      return;
    }
    if (std::abs(r[0] - r[1]) < 1e-12)
      throw ComputationError("branch collision at theta = " + std::to_string(grid.angle(j)));
    if (have_prev &&
        std::abs(r[0] - prev[1]) + std::abs(r[1] - prev[0]) < std::abs(r[0] - prev[0]) + std::abs(r[1] - prev[1]))
      std::swap(r[0], r[1]);
    out[0][j] = r[0];
    out[1][j] = r[1];
    prev = r;
  };
  std::array<Complex, 2> prev{};
  place(start, prev, false);
  std::array<Complex, 2> seed = prev;
  for (std::size_t j = start + 1; j < n; ++j) place(j, prev, true);
  prev = seed;
  for (std::size_t j = start; j-- > 0;) place(j, prev, true);
  return out;
}

namespace {

bool is_unit_exp(const InnerFunction1D& f) {
  return f.is_single_atom_singular() && f.unimodular_angle() == 0.0 &&
         f.singular_atoms().front().xi.theta == 0.0 && f.singular_atoms().front().mass == 1.0;
}

double family_tail(const InnerFunction1D& f, int K) {
  return f.is_single_atom_singular() ? atomic_singular_tail_bound(f.singular_atoms().front().mass, K) : 0.0;
}

}  // namespace

ProductClarkMeasure::ProductClarkMeasure(ProductInner P, UnimodularConstant alpha, int K,
                                         Orientation orientation, FiberSource source)
    : P_(std::move(P)), alpha_(alpha), K_(K), orientation_(orientation), source_(source) {
  if (K_ < 1) throw std::invalid_argument("truncation order K must be at least 1");
  if (!clark1d_supported(P_.psi))
    throw std::invalid_argument("psi must be a finite Blaschke product or a single singular atom");
  if (orientation_ == Orientation::Balanced && !clark1d_supported(P_.phi)) orientation_ = Orientation::Fiberwise;

  if (source_ == FiberSource::ExpExpClosedForm && !(is_unit_exp(P_.phi) && is_unit_exp(P_.psi)))
    throw std::invalid_argument("exp-exp closed form needs phi = psi = exp(-(1+z)/(1-z))");
  if (source_ == FiberSource::BlaschkeExpClosedForm) {
    const auto& psi = P_.psi;
    if (!(is_unit_exp(P_.phi) && psi.is_blaschke_type() && psi.monomial_power() == 1 &&
          psi.zeros().size() == 1 && psi.unimodular_angle() == 0.0))
      throw std::invalid_argument("Blaschke-exp closed form needs psi = z (lambda-z)/(1-conj(lambda) z)");
    lambda_ = psi.zeros().front();
  }

  tail_ = family_tail(P_.psi, K_);
  if (orientation_ == Orientation::Balanced) tail_ += family_tail(P_.phi, K_);
}

bool ProductClarkMeasure::psi_fiber(Complex zeta1, std::vector<Complex>& points,
                                    std::vector<double>& weights) const {
  points.clear();
  weights.clear();
  BoundaryValue b = P_.phi.boundary_value(zeta1);
  if (!b.unimodular()) return false;
  switch (source_) {
    case FiberSource::Solver: {
      auto beta = UnimodularConstant::from_angle(alpha_.nu - std::arg(b.value));
      clark_fiber_atoms(P_.psi, beta, K_, points, weights);
      return true;
    }
    case FiberSource::ExpExpClosedForm: {
      // Centre the index window on the heaviest branch, s + cot(theta/2) near 0.
      double cot = 1.0 / std::tan(0.5 * std::arg(zeta1));
      long k0 = std::lround(-(alpha_.nu + cot) / kTwoPi);
      for (long k = k0 - K_; k <= k0 + K_; ++k) {
        ExpExpBranch br{alpha_.nu, k};
        points.push_back(br.g(zeta1));
        weights.push_back(br.weight(zeta1));
      }
      return true;
    }
    case FiberSource::BlaschkeExpClosedForm: {
      BlaschkeExpBranches br{lambda_, alpha_.nu};
      for (Complex g : br.roots(zeta1)) {
        points.push_back(g);
        weights.push_back(br.weight(g));
      }
      return true;
    }
  }
  return false;
}

bool ProductClarkMeasure::phi_fiber(Complex zeta2, std::vector<Complex>& points,
                                    std::vector<double>& weights) const {
  points.clear();
  weights.clear();
  BoundaryValue b = P_.psi.boundary_value(zeta2);
  if (!b.unimodular()) return false;
  auto beta = UnimodularConstant::from_angle(alpha_.nu - std::arg(b.value));
  clark_fiber_atoms(P_.phi, beta, K_, points, weights);
  return true;
}

void ProductClarkMeasure::node_fibers(Complex zeta, NodeFibers& out) const {
  if (orientation_ == Orientation::Fiberwise) {
    NodeFiber& f = out.add(FiberAxis::Second, zeta);
    if (!psi_fiber(zeta, f.points, f.weights)) out.undefined.push_back(0);
    return;
  }
  // Where phi*(zeta) = 0 the split weight 1/(|phi'| + |psi'|) vanishes, so the
  // node contributes nothing to that orientation.
  NodeFiber& a = out.add(FiberAxis::Second, zeta);
  if (psi_fiber(zeta, a.points, a.weights)) {
    double dphi = P_.phi.boundary_derivative_modulus(zeta);
    for (double& w : a.weights) w = w / (1.0 + dphi * w);
  }
  NodeFiber& b = out.add(FiberAxis::First, zeta);
  if (phi_fiber(zeta, b.points, b.weights)) {
    double dpsi = P_.psi.boundary_derivative_modulus(zeta);
    for (double& w : b.weights) w = w / (1.0 + dpsi * w);
  }
}

std::vector<TorusPoint2> ProductClarkMeasure::support_samples(std::size_t per_component) const {
  std::vector<TorusPoint2> s;
  std::vector<Complex> pts;
  std::vector<double> w;
  for (std::size_t j = 0; j < per_component; ++j) {
    Complex z = std::polar(1.0, kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(per_component));
    if (psi_fiber(z, pts, w))
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (w[i] > 0.0) s.push_back({z, pts[i]});
    if (orientation_ == Orientation::Balanced && phi_fiber(z, pts, w))
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (w[i] > 0.0) s.push_back({pts[i], z});
  }
  return s;
}

}  // namespace clark
