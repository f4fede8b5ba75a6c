#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clark/embed.hpp"
#include "clark/io.hpp"
#include "clark/rif.hpp"
#include "clark/verify.hpp"

using namespace clark;

namespace {

Complex prod2(std::span<const Complex> z) { return z[0] * z[1]; }

}  // namespace

TEST_CASE("herglotz_rhs") {
  auto one = UnimodularConstant::from_angle(0.0);
  std::vector<Complex> origin{0.0, 0.0}, half{0.5, 0.5};
  CHECK(herglotz_rhs(prod2, UnimodularConstant::from_angle(2.0), origin) == doctest::Approx(1.0));
  CHECK(herglotz_rhs(prod2, one, half) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(herglotz_rhs(Complex(1.0, 0.0), one), std::domain_error);
  CHECK(herglotz_rhs(Complex(0.999, 0.0), UnimodularConstant::from_angle(kPi)) > 0.0);
}

TEST_CASE("test point sampling is seeded and bounded") {
  auto a = sample_test_points(2, 100, 42);
  auto b = sample_test_points(2, 100, 42);
  auto c = sample_test_points(2, 100, 43);
  CHECK(a == b);
  CHECK(a != c);
  double rmax = 0.0;
  for (const auto& z : a)
    for (Complex w : z) rmax = std::max(rmax, std::abs(w));
  CHECK(rmax <= 0.95);
  CHECK(rmax > 0.85);
}

TEST_CASE("identity at the origin equals the mass error") {
  auto f = InnerFunction1D::blaschke({Complex(0.3, 0.1)}, 1);
  auto alpha = UnimodularConstant::from_angle(0.5);
  auto mu = embed_clark2d(f, alpha);
  ClarkMeasureView view(mu);
  auto Phi = [&f](std::span<const Complex> z) { return f.eval(z[0] * z[1]); };
  QuadratureGrid grid(512);
  auto rep = poisson_identity_check(view, Phi, alpha, {{0.0, 0.0}}, grid, 1e-10);
  auto m = total_mass_check(view, Phi, alpha, grid, 1e-10);
  const auto& r = rep.identity_residuals[0];
  CHECK(std::abs(std::abs(r.lhs - r.rhs) - m.error) < 1e-13);
  CHECK(r.rhs == m.expected);
}

TEST_CASE("negative control: diagonal measure is not RP") {
  ClarkMeasure2D diag;
  diag.curves.push_back(GraphCurve{[](Complex z) { return z; }, [](Complex) { return 1.0; }});
  auto f = fourier_rp_check(ClarkMeasureView(diag), 2, QuadratureGrid(256));
  double at = 0.0;
  for (const auto& e : f)
    if (e.k == std::array<int, 2>{1, -1}) at = e.modulus;
  CHECK(at == doctest::Approx(1.0));
  VerificationReport rep;
  rep.fourier = f;
  rep.finalize();
  CHECK_FALSE(rep.passed);
}

TEST_CASE("negative control: dropping the exceptional line breaks the identity") {
  auto R = quadratic_rif();
  auto alpha = UnimodularConstant::from_angle(kPi);
  auto mu = rif_clark_measure(R, alpha);
  auto Phi = [&R](std::span<const Complex> z) { return R.eval(z[0], z[1]); };
  auto pts = sample_test_points(2, 30, 1);
  QuadratureGrid grid(4096);
  auto with = poisson_identity_check(ClarkMeasureView(mu), Phi, alpha, pts, grid, 1e-8);
  CHECK(with.passed);
  mu.lines.clear();
  auto without = poisson_identity_check(ClarkMeasureView(mu), Phi, alpha, pts, grid, 1e-8);
  CHECK_FALSE(without.passed);
  double worst = 0.0;
  for (const auto& r : without.identity_residuals) worst = std::max(worst, r.relative_error);
  CHECK(worst > 0.1);
}

TEST_CASE("support check exemptions") {
  ClarkMeasure2D line;
  line.lines.push_back({TorusPoint(0.0), 0.5});
  auto R = quadratic_rif();
  auto boundary = [&R](std::span<const Complex> z) { return R.boundary_value(z[0], z[1]); };
  auto entries = support_inclusion_check(ClarkMeasureView(line), boundary, UnimodularConstant::from_angle(kPi), 32,
                                         {{Exemption::Kind::Point, {Complex(1.0), Complex(1.0)}, 1e-8}});
  REQUIRE(entries.size() == 32);
  for (const auto& e : entries) CHECK(e.distance < 1e-12);
  auto wrong = support_inclusion_check(ClarkMeasureView(line), boundary, UnimodularConstant::from_angle(0.0), 4, {});
  for (const auto& e : wrong) CHECK(e.distance == doctest::Approx(2.0));
}

TEST_CASE("exemption regions") {
  Exemption line{Exemption::Kind::FirstLine, {Complex(1.0), Complex(1.0)}, 1e-3};
  CHECK(line.contains({std::polar(1.0, 5e-4), Complex(-1.0)}));
  CHECK_FALSE(line.contains({std::polar(1.0, 2e-3), Complex(1.0)}));
  Exemption anti{Exemption::Kind::Antidiagonal, {Complex(1.0), Complex(1.0)}, 1e-3};
  CHECK(anti.contains({std::polar(1.0, 2.0), std::polar(1.0, -2.0 + 1e-4)}));
  CHECK_FALSE(anti.contains({std::polar(1.0, 2.0), std::polar(1.0, 2.0)}));
  // unit mass: |phi'| eps at the radius stays below tol
  double r = singular_exemption_radius(1.0, 1e-8);
  CHECK(r < 1e-3);
  CHECK(2.0 / (r * r) * 4.0 * std::numeric_limits<double>::epsilon() <= 1e-8);
  CHECK(singular_exemption_radius(0.0, 1e-8) == 1e-8);
  // quadratic RIF: gap 4 theta^4 at tau = 1, |p1|^2 + |p2|^2 = 8
  auto R = quadratic_rif();
  const double expected = std::pow(16.0 * std::numeric_limits<double>::epsilon() * 8.0 / (4.0 * 1e-8), 0.25);
  CHECK(rif_exemption_radius(R, R.singularities()[0], 1e-8) == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("reports round-trip through JSON") {
  auto R = quadratic_rif();
  auto alpha = UnimodularConstant::from_angle(kPi / 4);
  auto mu = rif_clark_measure(R, alpha);
  auto Phi = [&R](std::span<const Complex> z) { return R.eval(z[0], z[1]); };
  auto boundary = [&R](std::span<const Complex> z) { return R.boundary_value(z[0], z[1]); };
  CheckOptions opt;
  opt.test_points = 5;
  opt.fourier_kmax = 2;
  opt.support_per_component = 4;
  auto rep = full_check(ClarkMeasureView(mu), Phi, boundary, alpha, rif_exemptions(R, 1e-8), QuadratureGrid(1024), opt);
  rep.support.push_back({{Complex(1.0), Complex(-1.0)}, std::numeric_limits<double>::infinity(), true});
  json j = report_to_json(rep);
  auto back = report_from_json(json::parse(j.dump()));
  CHECK(report_to_json(back).dump() == j.dump());
  CHECK(back.seed == opt.seed);
  CHECK(std::isinf(back.support.back().distance));
  REQUIRE(back.identity_residuals.size() == 5);
  CHECK(back.identity_residuals[2].relative_error == rep.identity_residuals[2].relative_error);
  // bit-identical reruns
  auto again = full_check(ClarkMeasureView(mu), Phi, boundary, alpha, rif_exemptions(R, 1e-8), QuadratureGrid(1024), opt);
  again.support.push_back(rep.support.back());
  CHECK(report_to_json(again).dump() == j.dump());
}
