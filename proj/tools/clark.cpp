#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "clark/embed.hpp"
#include "clark/io.hpp"
#include "clark/plot.hpp"
#include "clark/product.hpp"
#include "clark/rif.hpp"
#include "clark/verify.hpp"

using namespace clark;

namespace {

constexpr int kExitSchema = 1;
constexpr int kExitComputation = 2;
constexpr int kExitVerification = 3;

struct Options {
  std::string input;
  double alpha = 0.0;
  std::size_t N = 4096;
  int K = kDefaultTruncation;
  std::string output;
  std::string format = "json";
  std::size_t samples = 1024;
  int d = 2;
  // eval
  std::vector<double> point;
  bool boundary = false;
  // verify
  std::string embed, product, rif;
  std::size_t points = 100;
  std::uint64_t seed = 20240601;
  // plot
  int figure = 0;
  std::vector<double> alpha_list;
};

int fail(int code, const std::string& kind, const std::string& message) {
  json e = {{"error", kind}, {"message", message}, {"exit_code", code}};
  std::cerr << e.dump() << "\n";
  return code;
}

void emit(const Options& o, const std::string& content) {
  if (o.output.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + o.output);
  out << content;
}

void check_grid(const Options& o) {
  if (o.N < 256 || (o.N & (o.N - 1)) != 0) throw SchemaError("N must be a power of two >= 256");
  if (o.K < 1) throw SchemaError("K must be at least 1");
}

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw SchemaError("unsupported format \"" + o.format + "\" for this subcommand");
}

Complex boundary_complex(const BoundaryValue& b) {
  if (b.kind == BoundaryValue::Kind::Zero) return 0.0;
  if (b.kind == BoundaryValue::Kind::Undefined) return {std::nan(""), std::nan("")};
  return b.value;
}

enum class InputKind { Function, Product, Rif };

InputKind kind_of(const json& j) {
  if (j.is_object() && j.contains("p1")) return InputKind::Rif;
  if (j.is_object() && j.contains("phi")) return InputKind::Product;
  return InputKind::Function;
}

int run_eval(const Options& o) {
  json spec = load_json_file(o.input);
  InputKind kind = kind_of(spec);
  const std::size_t dim = kind == InputKind::Function ? 1 : 2;
  const std::size_t per = o.boundary ? dim : 2 * dim;
  if (o.point.empty() || o.point.size() % per != 0)
    throw SchemaError("--point needs " + std::to_string(per) + " numbers per point");
  std::vector<std::vector<Complex>> pts;
  for (std::size_t i = 0; i < o.point.size(); i += per) {
    std::vector<Complex> z;
    for (std::size_t c = 0; c < dim; ++c)
      z.push_back(o.boundary ? std::polar(1.0, o.point[i + c]) : Complex(o.point[i + 2 * c], o.point[i + 2 * c + 1]));
    pts.push_back(z);
  }
  json values = json::array();
  auto put = [&](Complex v) {
    if (std::isfinite(v.real()) && std::isfinite(v.imag()))
      values.push_back(complex_to_json(v));
    else
      values.push_back(nullptr);
  };
  switch (kind) {
    case InputKind::Function: {
      InnerFunction1D f = parse_function(spec);
      for (const auto& z : pts) {
        if (!o.boundary) require_disk(z[0]);
        put(o.boundary ? boundary_complex(f.boundary_value(z[0])) : f.eval(z[0]));
      }
      break;
    }
    case InputKind::Product: {
      ProductInner P = parse_product(spec);
      for (const auto& z : pts) {
        if (!o.boundary) require_disk(z[0]), require_disk(z[1]);
        put(o.boundary ? boundary_complex(P.boundary_value(z[0], z[1])) : P.eval(z[0], z[1]));
      }
      break;
    }
    case InputKind::Rif: {
      RIF_n1 R = parse_rif(spec);
      for (const auto& z : pts) {
        if (!o.boundary) require_disk(z[0]), require_disk(z[1]);
        put(o.boundary ? R.boundary_value(z[0], z[1]) : R.eval(z[0], z[1]));
      }
      break;
    }
  }
  emit(o, json{{"values", values}}.dump(2) + "\n");
  return 0;
}

int run_measure1d(const Options& o) {
  check_format(o, {"json"});
  if (o.K < 1) throw SchemaError("K must be at least 1");
  InnerFunction1D f = parse_function(load_json_file(o.input));
  auto mu = clark_measure1d(f, UnimodularConstant::from_angle(o.alpha), o.K);
  emit(o, measure1d_to_json(mu).dump(2) + "\n");
  return 0;
}

int run_embed(const Options& o) {
  check_format(o, {"json", "csv", "svg"});
  if (o.K < 1) throw SchemaError("K must be at least 1");
  if (o.d < 2 || o.d > kMaxEmbedDimension) throw SchemaError("d must lie in 2..4");
  InnerFunction1D f = parse_function(load_json_file(o.input));
  auto alpha = UnimodularConstant::from_angle(o.alpha);
  auto em = embed_clark_nd(f, alpha, o.d, o.K);
  if (o.format == "json") {
    emit(o, json{{"dimension", em.dimension}, {"base", measure1d_to_json(em.base)}}.dump(2) + "\n");
    return 0;
  }
  if (o.d != 2) throw SchemaError("csv/svg output needs d = 2");
  std::vector<CurveSample> rows;
  for (std::size_t a = 0; a < em.base.atoms.size(); ++a) {
    const auto& at = em.base.atoms[a];
    for (std::size_t j = 0; j < o.samples; ++j) {
      double t = kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(o.samples);
      rows.push_back({"alpha0_anti" + std::to_string(a), t, TorusPoint(at.point.theta - t).theta, at.weight});
    }
  }
  emit(o, o.format == "csv" ? to_csv(rows) : to_svg(rows, false));
  return 0;
}

int run_product(const Options& o) {
  check_format(o, {"json", "csv", "svg"});
  check_grid(o);
  ProductInner P = parse_product(load_json_file(o.input));
  ProductClarkMeasure mu(P, UnimodularConstant::from_angle(o.alpha), o.K, Orientation::Fiberwise);
  std::vector<Complex> pts;
  std::vector<double> w;
  std::vector<CurveSample> rows;
  json fibers = json::array();
  for (std::size_t j = 0; j < o.samples; ++j) {
    double t = kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(o.samples);
    if (!mu.psi_fiber(std::polar(1.0, t), pts, w)) continue;
    json atoms = json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      double t2 = TorusPoint::from_complex(pts[i]).theta;
      rows.push_back({"alpha0_atom" + std::to_string(i), t, t2, w[i]});
      atoms.push_back({{"angle", t2}, {"weight", w[i]}});
    }
    fibers.push_back({{"theta1", t}, {"atoms", atoms}});
  }
  if (o.format == "json")
    emit(o, json{{"alpha", o.alpha}, {"K", o.K}, {"tail_bound", mu.tail_bound()}, {"fibers", fibers}}.dump(2) + "\n");
  else
    emit(o, o.format == "csv" ? to_csv(rows) : to_svg(rows, false));
  return 0;
}

json poly_json(const Poly1& p) {
  json a = json::array();
  for (Complex c : p.coeffs()) a.push_back(complex_to_json(c));
  return a;
}

int run_rif(const Options& o) {
  check_format(o, {"json", "csv", "svg"});
  RIF_n1 R = parse_rif(load_json_file(o.input));
  auto alpha = UnimodularConstant::from_angle(o.alpha);
  if (o.format != "json") {
    auto rows = sample_rif_curves(R, {o.alpha}, o.samples);
    emit(o, o.format == "csv" ? to_csv(rows) : to_svg(rows, false));
    return 0;
  }
  json j;
  j["p1_tilde"] = poly_json(R.p1_tilde());
  j["p2_tilde"] = poly_json(R.p2_tilde());
  j["singularities"] = json::array();
  for (const auto& s : R.singularities())
    j["singularities"].push_back({complex_to_json(s.z1), complex_to_json(s.z2)});
  j["exceptional_values"] = json::array();
  for (const auto& e : exceptional_values(R)) j["exceptional_values"].push_back(e.alpha.nu);
  auto B = b_alpha(R, alpha);
  j["b_alpha"] = {{"numerator", poly_json(B.num)}, {"denominator", poly_json(B.den)}};
  auto mu = rif_clark_measure(R, alpha);
  j["lines"] = json::array();
  for (const auto& l : mu.lines) j["lines"].push_back({{"tau", l.tau.theta}, {"constant", l.constant}});
  emit(o, j.dump(2) + "\n");
  return 0;
}

int run_verify(const Options& o) {
  check_grid(o);
  int chosen = !o.embed.empty() + !o.product.empty() + !o.rif.empty();
  if (chosen != 1) throw SchemaError("verify needs exactly one of --embed, --product, --rif");
  auto alpha = UnimodularConstant::from_angle(o.alpha);
  QuadratureGrid grid(o.N);
  CheckOptions opt;
  opt.test_points = o.points;
  opt.seed = o.seed;
  VerificationReport rep;
  if (!o.embed.empty()) {
    InnerFunction1D f = parse_function(load_json_file(o.embed));
    auto Phi = [f](std::span<const Complex> z) {
      Complex p = 1.0;
      for (Complex c : z) p *= c;
      return f.eval(p);
    };
    if (o.d == 2) {
      ClarkMeasure2D mu = embed_clark2d(f, alpha, o.K);
      auto boundary = [f](std::span<const Complex> z) { return boundary_complex(f.boundary_value(z[0] * z[1])); };
      opt.identity_relative = 1e-6;
      rep = full_check(ClarkMeasureView(mu), Phi, boundary, alpha, embed_exemptions(f, 1e-8), grid, opt);
    } else {
      if (o.d > kMaxEmbedDimension) throw SchemaError("d must lie in 2..4");
      auto em = embed_clark_nd(f, alpha, o.d, o.K);
      rep = poisson_identity_check(em, Phi, alpha, sample_test_points(o.d, o.points, o.seed), grid, 1e-5);
      rep.seed = o.seed;
    }
  } else if (!o.product.empty()) {
    ProductInner P = parse_product(load_json_file(o.product));
    ProductClarkMeasure mu(P, alpha, o.K);
    auto Phi = [P](std::span<const Complex> z) { return P.eval(z[0], z[1]); };
    auto boundary = [P](std::span<const Complex> z) { return boundary_complex(P.boundary_value(z[0], z[1])); };
    opt.identity_relative = 1e-5;
    rep = full_check(mu, Phi, boundary, alpha, product_exemptions(P, 1e-8), grid, opt);
  } else {
    RIF_n1 R = parse_rif(load_json_file(o.rif));
    ClarkMeasure2D mu = rif_clark_measure(R, alpha);
    auto Phi = [&R](std::span<const Complex> z) { return R.eval(z[0], z[1]); };
    auto boundary = [&R](std::span<const Complex> z) { return R.boundary_value(z[0], z[1]); };
    opt.identity_relative = 1e-8;
    rep = full_check(ClarkMeasureView(mu), Phi, boundary, alpha, rif_exemptions(R, 1e-8), grid, opt);
  }
  json j = report_to_json(rep);
  if (!o.output.empty()) emit(o, j.dump(2) + "\n");
  json summary = {{"passed", rep.passed},
                  {"seed", rep.seed},
                  {"identity_points", rep.identity_residuals.size()},
                  {"max_identity_excess", rep.max_identity_excess()},
                  {"max_fourier_modulus", rep.max_fourier_modulus()},
                  {"max_support_distance", rep.max_support_distance()}};
  if (rep.mass) summary["mass"] = j["mass"];
  std::cout << summary.dump(2) << "\n";
  return rep.passed ? 0 : kExitVerification;
}

int run_plot(const Options& o) {
  check_format(o, {"csv", "svg"});
  std::vector<CurveSample> rows;
  bool weights = false;
  if (o.figure != 0) {
    if (o.figure < 1 || o.figure > kFigureCount) throw SchemaError("figure must be 1..5");
    rows = figure_data(o.figure, o.samples);
    weights = figure_shows_weights(o.figure);
  } else if (!o.rif.empty()) {
    RIF_n1 R = parse_rif(load_json_file(o.rif));
    auto angles = snap_to_exceptional(R, o.alpha_list.empty() ? std::vector<double>{o.alpha} : o.alpha_list);
    rows = sample_rif_curves(R, angles, o.samples);
  } else {
    throw SchemaError("plot needs --figure or --rif");
  }
  emit(o, o.format == "csv" ? to_csv(rows) : to_svg(rows, weights));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clark measures of inner functions on the disc, bidisc and polydisc"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* s, bool input_required) {
    auto* in = s->add_option("--input", o.input, "JSON function spec");
    if (input_required) in->required()->check(CLI::ExistingFile);
    s->add_option("--alpha", o.alpha, "alpha = e^{i nu}; the angle nu in radians");
    s->add_option("--N", o.N, "quadrature nodes (power of two >= 256)");
    s->add_option("--K", o.K, "truncation order for infinite atom families");
    s->add_option("--output", o.output, "output path (default stdout)");
    s->add_option("--format", o.format, "csv, svg or json");
    s->add_option("--samples", o.samples, "samples per curve component");
  };

  auto* eval = app.add_subcommand("eval", "evaluate a function, product or RIF");
  common(eval, true);
  eval->add_option("--point", o.point, "re,im per coordinate (angles with --boundary)")->delimiter(',')->required();
  eval->add_flag("--boundary", o.boundary, "evaluate boundary values at the given angles");

  auto* m1 = app.add_subcommand("measure1d", "Clark measure of a one-variable inner function");
  common(m1, true);

  auto* emb = app.add_subcommand("embed", "Clark measure of phi(z1 ... zd)");
  common(emb, true);
  emb->add_option("--d", o.d, "dimension");

  auto* prod = app.add_subcommand("product", "Clark measure of phi(z1) psi(z2)");
  common(prod, true);

  auto* rif = app.add_subcommand("rif", "bidegree (n,1) rational inner function");
  common(rif, true);

  auto* ver = app.add_subcommand("verify", "check a measure against the Poisson identity");
  common(ver, false);
  ver->add_option("--embed", o.embed, "function spec for phi(z1 z2)")->check(CLI::ExistingFile);
  ver->add_option("--product", o.product, "product spec")->check(CLI::ExistingFile);
  ver->add_option("--rif", o.rif, "RIF spec")->check(CLI::ExistingFile);
  ver->add_option("--d", o.d, "embedding dimension");
  ver->add_option("--points", o.points, "random test points");
  ver->add_option("--seed", o.seed, "test point seed");

  auto* plot = app.add_subcommand("plot", "level-curve and weight data");
  common(plot, false);
  plot->add_option("--figure", o.figure, "reference figure 1..5");
  plot->add_option("--rif", o.rif, "RIF spec")->check(CLI::ExistingFile);
  plot->add_option("--alpha-list", o.alpha_list, "comma-separated angles")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kExitSchema, "schema", e.what());
  }
  if (plot->parsed() && plot->get_option("--format")->count() == 0) o.format = "csv";

  try {
    if (eval->parsed()) return run_eval(o);
    if (m1->parsed()) return run_measure1d(o);
    if (emb->parsed()) return run_embed(o);
    if (prod->parsed()) return run_product(o);
    if (rif->parsed()) return run_rif(o);
    if (ver->parsed()) return run_verify(o);
    if (plot->parsed()) return run_plot(o);
  } catch (const SchemaError& e) {
    return fail(kExitSchema, "schema", e.what());
  } catch (const json::exception& e) {
    return fail(kExitSchema, "schema", e.what());
  } catch (const std::exception& e) {
    return fail(kExitComputation, "computation", e.what());
  }
  return fail(kExitSchema, "schema", "no subcommand");
}
