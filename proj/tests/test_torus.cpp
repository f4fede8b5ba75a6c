#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>

#include "clark/torus.hpp"

using namespace clark;

TEST_CASE("canonical angles and distances") {
  CHECK(canonical_angle(-kPi / 2) == doctest::Approx(1.5 * kPi).epsilon(1e-15));
  CHECK(canonical_angle(kTwoPi) == 0.0);
  CHECK(canonical_angle(7 * kPi) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(angular_distance(0.1, kTwoPi - 0.1) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(same_point(TorusPoint(0.0), TorusPoint(kTwoPi)));
  CHECK_FALSE(same_point(TorusPoint(0.0), TorusPoint(1e-10)));
}

TEST_CASE("unimodular constants") {
  auto a = UnimodularConstant::from_angle(kPi);
  CHECK(a.nu == doctest::Approx(kPi));
  CHECK(std::abs(a.alpha + 1.0) < 1e-15);
  auto b = UnimodularConstant::from_complex(Complex(0.0, 1.0 + 1e-13));
  CHECK(b.nu == doctest::Approx(kPi / 2));
  CHECK_THROWS(UnimodularConstant::from_complex(Complex(0.0, 1.1)));
}

TEST_CASE("Poisson kernel") {
  CHECK(poisson_kernel(0.0, Complex(0.0, 1.0)) == doctest::Approx(1.0));
  // (1 - 1/4)/|1 - 1/2|^2 = 3
  CHECK(poisson_kernel(0.5, 1.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(poisson_sup(0.5) == doctest::Approx(3.0));
  CHECK_THROWS(require_disk(Complex(1.0, 0.0)));
  std::vector<Complex> z{0.5, Complex(0.0, 0.5)}, zeta{1.0, Complex(0.0, 1.0)};
  CHECK(poisson_kernel_nd(z, zeta) == doctest::Approx(9.0));

  std::vector<Complex> pts{1.0, Complex(0.0, 1.0), -1.0};
  std::vector<double> w{0.5, 0.25, 2.0};
  Complex zc(0.3, -0.4);
  double direct = 0.0;
  for (int i = 0; i < 3; ++i) direct += w[i] * poisson_kernel(zc, pts[i]);
  CHECK(poisson_weighted_sum(pts, w, zc) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("trapezoid rule integrates Poisson kernels to 1") {
  QuadratureGrid g(1024);
  CHECK(g.node(0) == Complex(1.0, 0.0));
  CHECK(g.node(256) == Complex(0.0, 1.0));
  CHECK(g.node(512) == Complex(-1.0, 0.0));
  Complex z(0.6, 0.5);
  Complex v = periodic_quadrature([z](Complex w) { return Complex(poisson_kernel(z, w)); }, g);
  CHECK(std::abs(v - 1.0) < 1e-13);
  // trigonometric polynomials below the Nyquist limit are exact
  Complex t = periodic_quadrature([](Complex w) { return std::pow(w, 7) + 2.0; }, g);
  CHECK(std::abs(t - 2.0) < 1e-14);
}

TEST_CASE("undefined nodes") {
  QuadratureGrid small(256), big(8192);
  CHECK(small.max_undefined() == 1);
  CHECK(big.max_undefined() == 8);
  auto one_nan = [](Complex w) { return w == Complex(1.0, 0.0) ? Complex(std::nan(""), 0.0) : Complex(1.0); };
  CHECK_NOTHROW(periodic_quadrature(one_nan, small));
  auto half_nan = [](Complex w) { return w.imag() > 0 ? Complex(std::nan(""), 0.0) : Complex(1.0); };
  CHECK_THROWS_AS(periodic_quadrature(half_nan, small), QuadratureError);
}

TEST_CASE("pairwise summation") {
  std::vector<double> v(1000, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-14));
  CHECK(pairwise_sum(std::span<const double>()) == 0.0);
}

TEST_CASE("radial limits") {
  // (1 - r)/(1 - r z) style convergence: h(r) = 1 + (1 - r) has limit 1.
  auto lim = radial_limit([](double r) { return Complex(1.0 + (1.0 - r), 0.0); });
  CHECK_FALSE(lim.diverged);
  CHECK(std::abs(lim.value - 1.0) < 1e-14);
  auto div = radial_limit([](double r) { return Complex(1.0 / (1.0 - r) / (1.0 - r), 0.0); });
  CHECK(div.diverged);
}

TEST_CASE("parallel_for covers the range and rethrows") {
  std::vector<int> hit(10000, 0);
  parallel_for(hit.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) hit[i] += 1;
  });
  for (int h : hit) REQUIRE(h == 1);
  CHECK_THROWS_AS(parallel_for(10000, [](std::size_t b, std::size_t) {
                    if (b == 0) throw ComputationError("boom");
                  }),
                  ComputationError);
}
