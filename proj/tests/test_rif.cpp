#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "clark/rif.hpp"
#include "clark/verify.hpp"

using namespace clark;

namespace {

bool same_coeffs(const Poly1& p, std::vector<Complex> c) { return p == Poly1(std::move(c)); }

RIF_n1 z1z2() { return RIF_n1(Poly1({1.0}), Poly1(), 1); }

}  // namespace

TEST_CASE("reflection") {
  CHECK(same_coeffs(reflect(Poly1({1.0}), 0), {1.0}));
  CHECK(same_coeffs(reflect(Poly1({2.0, -1.0}), 1), {-1.0, 2.0}));
  CHECK(same_coeffs(reflect(Poly1({Complex(0.0, 1.0)}), 2), {0.0, 0.0, Complex(0.0, -1.0)}));
  CHECK_THROWS(reflect(Poly1({1.0, 1.0, 1.0}), 1));
}

TEST_CASE("polynomial helpers") {
  Poly1 q({-1.0, 0.0, 1.0});
  auto r = roots(q);
  REQUIRE(r.size() == 2);
  CHECK(std::abs(std::abs(r[0]) - 1.0) < 1e-14);
  auto [quot, rem] = deflate(q, 1.0);
  CHECK(same_coeffs(quot, {1.0, 1.0}));
  CHECK(rem == Complex(0.0, 0.0));
  CHECK(ipow(Complex(0.0, 1.0), -3) == Complex(0.0, 1.0));
  TrigPoly t = modulus_squared(Poly1({1.0, -1.0}));  // |1 - zeta|^2 = 2 - zeta - 1/zeta
  CHECK(t.lowest == -1);
  CHECK(std::abs(t(Complex(-1.0, 0.0)) - 4.0) < 1e-15);
  CHECK(std::abs(t.derivative(Complex(0.0, 1.0), 1) - 2.0) < 1e-15);  // d/dtheta (2 - 2 cos) = 2 sin
}

TEST_CASE("phi = z1 z2") {
  auto R = z1z2();
  CHECK(R.singularities().empty());
  CHECK(exceptional_values(R).empty());
  auto alpha = UnimodularConstant::from_angle(0.6);
  auto B = b_alpha(R, alpha);
  Complex z(0.3, -0.8);
  CHECK(std::abs(B(z) - z / alpha.alpha) < 1e-15);
  CHECK(w_alpha(R, alpha, std::polar(1.0, 2.0)) == doctest::Approx(1.0));
  CHECK(std::abs(R.boundary_value(Complex(0.0, 1.0), Complex(0.0, 1.0)) + 1.0) < 1e-15);
  auto mu = rif_clark_measure(R, alpha);
  CHECK(mu.lines.empty());
  CHECK(mu.tail_bound == 0.0);
}

TEST_CASE("quadratic RIF algebra") {
  auto R = quadratic_rif();
  CHECK(same_coeffs(R.p1_tilde(), {1.0, -3.0, 4.0}));
  CHECK(same_coeffs(R.p2_tilde(), {0.0, -1.0, -1.0}));
  // p~ = 4 z1^2 z2 - z1^2 - 3 z1 z2 - z1 + z2
  for (Complex z1 : {Complex(0.2, 0.1), Complex(-0.6, 0.3)})
    for (Complex z2 : {Complex(0.5, -0.5), Complex(0.1, 0.0)}) {
      Complex expected = 4.0 * z1 * z1 * z2 - z1 * z1 - 3.0 * z1 * z2 - z1 + z2;
      CHECK(std::abs(R.p_tilde(z1, z2) - expected) < 1e-15);
    }
  CHECK(R.boundary_gap().lowest == -2);
  REQUIRE(R.boundary_gap().c.size() == 5);
  const double gap[] = {4, -16, 24, -16, 4};  // 4|zeta - 1|^4
  for (int i = 0; i < 5; ++i) CHECK(R.boundary_gap().c[i] == Complex(gap[i], 0.0));
}

TEST_CASE("quadratic RIF B_alpha and W_alpha against closed-form coefficients") {
  auto R = quadratic_rif();
  for (double nu : {0.0, kPi / 4, kPi / 2, 2.0}) {
    auto alpha = UnimodularConstant::from_angle(nu);
    Complex a = alpha.alpha;
    auto B = b_alpha(R, alpha);
    CHECK(same_coeffs(B.num, {1.0 + a, -3.0 + a, 4.0}));
    CHECK(same_coeffs(B.den, {4.0 * a, 1.0 - 3.0 * a, a + 1.0}));
    CHECK(B.shared_roots.empty());
    WeightAlpha W(R, alpha);
    CHECK(same_coeffs(W.denominator_root(), {1.0 + a, -3.0 + a, 4.0}));
    QuadratureGrid grid(1024);
    for (std::size_t j = 1; j < grid.size(); ++j) {
      Complex z = grid.node(j);
      double printed = 4.0 * std::pow(std::abs(z - 1.0), 4) / std::norm(4.0 * z * z - 3.0 * z + 1.0 + a + a * z);
      REQUIRE(W(z) == doctest::Approx(printed).epsilon(1e-11));
      REQUIRE(W(z) >= 0.0);
      REQUIRE(std::abs(std::abs(B(z)) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("quadratic RIF generic alpha: frozen values at zeta = e^{0.7 i}") {
  auto R = quadratic_rif();
  auto alpha = UnimodularConstant::from_angle(kPi / 2);
  Complex z = std::polar(1.0, 0.7);
  Complex B = b_alpha(R, alpha)(z);
  CHECK(std::abs(B - Complex(0.68607434118052356983, 0.72753144150181615403)) < 1e-14);
  CHECK(w_alpha(R, alpha, z) == doctest::Approx(0.055900992944444980992).epsilon(1e-13));
  CHECK(std::abs(R.boundary_value(z, std::conj(B)) - alpha.alpha) < 1e-9);
}

TEST_CASE("quadratic RIF singularity, exceptional value, line constant") {
  auto R = quadratic_rif();
  REQUIRE(R.singularities().size() == 1);
  const auto& s = R.singularities()[0];
  CHECK(std::abs(s.z1 - 1.0) < 1e-14);
  CHECK(std::abs(s.z2 - 1.0) < 1e-14);
  CHECK(std::abs(R.p(s.z1, s.z2)) <= 1e-8);
  CHECK(std::abs(R.p_tilde(s.z1, s.z2)) <= 1e-8);
  auto ex = exceptional_values(R);
  REQUIRE(ex.size() == 1);
  CHECK(std::abs(ex[0].alpha.alpha + 1.0) < 1e-12);
  CHECK(ex[0].radial_spread < 1e-6);
  CHECK(line_constant(R, s) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(R.partial_z1(1.0, Complex(0.3, 0.2)) + 2.0) < 1e-12);
  CHECK(std::abs(R.boundary_value(1.0, 1.0) + 1.0) < 1e-14);
}

TEST_CASE("quadratic RIF at alpha = -1") {
  auto R = quadratic_rif();
  auto alpha = UnimodularConstant::from_angle(kPi);
  auto B = b_alpha(R, alpha);
  REQUIRE(B.shared_roots.size() == 1);
  QuadratureGrid grid(4096);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    Complex z = grid.node(j);
    REQUIRE(std::abs(B(z) - z) < 1e-12);  // curve zeta2 = conj(zeta1)
    REQUIRE(std::abs(w_alpha(R, alpha, z) - 0.25 * std::norm(z - 1.0)) <= 1e-12);
  }
  auto mu = rif_clark_measure(R, alpha);
  REQUIRE(mu.lines.size() == 1);
  CHECK(mu.lines[0].tau.theta == 0.0);
  CHECK(mu.lines[0].constant == doctest::Approx(0.5));
  // frozen: 1/4 int P P |zeta-1|^2 + 1/2 int P, at z = (0.4, 0.3i), by 30-digit quadrature
  std::vector<Complex> z{0.4, Complex(0.0, 0.3)};
  auto Phi = [&R](std::span<const Complex> w) { return R.eval(w[0], w[1]); };
  CHECK(herglotz_rhs(Phi, alpha, z) == doctest::Approx(1.4730546792849632466).epsilon(1e-14));
  auto est = integrate_measure2d(mu, PoissonFamily2D({{z[0], z[1]}}), grid);
  CHECK(est[0].value.real() == doctest::Approx(1.4730546792849632466).epsilon(1e-12));
}

TEST_CASE("level set equals the zero set of p~ - alpha p") {
  auto R = quadratic_rif();
  for (double nu : {0.0, kPi / 4, kPi}) {
    auto alpha = UnimodularConstant::from_angle(nu);
    auto mu = rif_clark_measure(R, alpha);
    ClarkMeasureView view(mu);
    for (const auto& s : view.support_samples(64))
      CHECK(std::abs(R.p_tilde(s[0], s[1]) - alpha.alpha * R.p(s[0], s[1])) <= 1e-8);
  }
}

TEST_CASE("W_alpha is integrable: quadrature stable under refinement") {
  auto R = quadratic_rif();
  for (double nu : {0.0, kPi / 4, kPi / 2, kPi}) {
    WeightAlpha W(R, UnimodularConstant::from_angle(nu));
    auto f = [&W](Complex z) { return Complex(W(z)); };
    Complex a = periodic_quadrature(f, QuadratureGrid(4096));
    Complex b = periodic_quadrature(f, QuadratureGrid(8192));
    CHECK(std::abs(a - b) <= 1e-8 * std::abs(b));
  }
}

TEST_CASE("total mass") {
  auto R = quadratic_rif();
  auto Phi = [&R](std::span<const Complex> w) { return R.eval(w[0], w[1]); };
  for (double nu : {0.0, kPi / 4, kPi}) {
    auto alpha = UnimodularConstant::from_angle(nu);
    auto mu = rif_clark_measure(R, alpha);
    auto m = total_mass_check(ClarkMeasureView(mu), Phi, alpha, QuadratureGrid(4096), 1e-8);
    CHECK(m.expected == doctest::Approx(1.0));  // phi(0,0) = 0
    CHECK(m.error <= m.allowed);
  }
}

TEST_CASE("validation") {
  // p = 1 - 2 z1 vanishes inside the disc
  CHECK_THROWS_AS(RIF_n1(Poly1({1.0, -2.0}), Poly1(), 1), std::invalid_argument);
  // |p2| > |p1| somewhere: 1 + 2 z2 has a zero at z2 = -1/2
  CHECK_THROWS_AS(RIF_n1(Poly1({1.0}), Poly1({2.0}), 0), std::invalid_argument);
  // p = 1 + z2 and p~ = z2 + 1 coincide: the resultant vanishes
  CHECK_THROWS_AS(RIF_n1(Poly1({1.0}), Poly1({1.0}), 0), std::invalid_argument);
  CHECK_THROWS(RIF_n1(Poly1({1.0, 1.0, 1.0}), Poly1(), 1));
}

TEST_CASE("random perturbations of a stable polynomial keep singularities on the torus") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(-0.05, 0.05);
  for (int trial = 0; trial < 5; ++trial) {
    // p1 = 3 + small, p2 = 1 + small: strictly stable, no boundary singularities
    RIF_n1 R(Poly1({Complex(3.0 + u(gen), u(gen)), Complex(u(gen), u(gen))}), Poly1({Complex(1.0 + u(gen), u(gen))}), 1);
    CHECK(R.singularities().empty());
    auto alpha = UnimodularConstant::from_angle(1.0 + trial);
    auto Phi = [&R](std::span<const Complex> w) { return R.eval(w[0], w[1]); };
    auto rep = poisson_identity_check(ClarkMeasureView(rif_clark_measure(R, alpha)), Phi, alpha,
                                      sample_test_points(2, 10, trial), QuadratureGrid(2048), 1e-10);
    CHECK(rep.passed);
  }
}
