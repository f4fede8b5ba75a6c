#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clark/io.hpp"
#include "clark/plot.hpp"

using namespace clark;

TEST_CASE("function specs") {
  auto f = parse_function(json::parse(R"({"unimodular": 0.5, "monomial": 2,
      "blaschke_zeros": [[0.1, -0.2]], "singular_atoms": [{"angle": 1.0, "mass": 0.3}]})"));
  CHECK(f.unimodular_angle() == 0.5);
  CHECK(f.monomial_power() == 2);
  REQUIRE(f.zeros().size() == 1);
  CHECK(f.zeros()[0] == Complex(0.1, -0.2));
  REQUIRE(f.singular_atoms().size() == 1);
  CHECK(f.singular_atoms()[0].mass == 0.3);
  auto back = parse_function(function_to_json(f));
  CHECK(back.eval(Complex(0.2, 0.1)) == f.eval(Complex(0.2, 0.1)));
  CHECK(parse_function(json::object()).is_constant());
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(parse_function(json::parse(R"({"monomial": 1.5})")), SchemaError);
  CHECK_THROWS_AS(parse_function(json::parse(R"({"blaschke_zeros": [[2, 0]]})")), SchemaError);
  CHECK_THROWS_AS(parse_function(json::parse(R"({"blaschke_zeros": [1, 2]})")), SchemaError);
  CHECK_THROWS_AS(parse_function(json::parse(R"({"zeros": []})")), SchemaError);
  CHECK_THROWS_AS(parse_function(json::parse(R"({"singular_atoms": [{"angle": 0}]})")), SchemaError);
  CHECK_THROWS_AS(parse_product(json::parse(R"({"phi": {}})")), SchemaError);
  CHECK_THROWS_AS(parse_rif(json::parse(R"({"p1": [[1, 0], [-2, 0]], "p2": [], "n": 1})")), SchemaError);
  CHECK_THROWS_AS(parse_rif(json::parse(R"({"p1": [[1, 0]], "p2": [], "n": "2"})")), SchemaError);
  CHECK_THROWS_AS(load_json_file("/nonexistent/spec.json"), SchemaError);
}

TEST_CASE("RIF spec") {
  auto R = parse_rif(json::parse(R"({"p1": [[4, 0], [-3, 0], [1, 0]], "p2": [[-1, 0], [-1, 0]], "n": 2})"));
  CHECK(R.p1_tilde() == quadratic_rif().p1_tilde());
  CHECK(R.singularities().size() == 1);
}

TEST_CASE("measure1d JSON") {
  auto j = measure1d_to_json(clark_measure1d(InnerFunction1D::monomial(1), UnimodularConstant::from_angle(0.0)));
  REQUIRE(j["atoms"].size() == 1);
  CHECK(j["atoms"][0]["angle"].get<double>() == 0.0);
  CHECK(j["atoms"][0]["weight"].get<double>() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("decimal formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5e-20) == "-2.4999999999999999e-20");
  CHECK(std::stod(format_double(kPi)) == kPi);
}

TEST_CASE("CSV layout and determinism") {
  auto rows = figure_data(4, 64);
  auto csv = to_csv(rows);
  CHECK(csv.rfind("component_id,theta1,theta2,weight\n", 0) == 0);
  CHECK(csv == to_csv(figure_data(4, 64)));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(rows.size()) + 1);
}

TEST_CASE("figure 1 contains the exceptional line for alpha = -1 only") {
  auto rows = figure_data(1, 128);
  int lines = 0;
  for (const auto& r : rows)
    if (r.component_id.find("_line") != std::string::npos) {
      CHECK(r.component_id == "alpha3_line0");
      CHECK(r.theta1 == 0.0);
      CHECK(r.weight == doctest::Approx(0.5));
      ++lines;
    }
  CHECK(lines == 128);
}

TEST_CASE("rounded angles snap to the exceptional value") {
  auto a = snap_to_exceptional(quadratic_rif(), {0.0, 0.785398, 3.141593});
  CHECK(a[0] == 0.0);
  CHECK(a[1] == 0.785398);
  CHECK(a[2] == doctest::Approx(kPi).epsilon(1e-15));
  auto rows = sample_rif_curves(quadratic_rif(), a, 16);
  CHECK(std::any_of(rows.begin(), rows.end(), [](const CurveSample& r) { return r.component_id == "alpha2_line0"; }));
}

TEST_CASE("SVG output") {
  for (int fig = 1; fig <= kFigureCount; ++fig) {
    auto svg = to_svg(figure_data(fig, 64), figure_shows_weights(fig));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
  }
  CHECK_THROWS(figure_data(6));
}
