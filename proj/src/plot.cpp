#include "clark/plot.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "clark/io.hpp"

namespace clark {

namespace {

Complex sample_point(std::size_t j, std::size_t n) {
  return std::polar(1.0, kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(n));
}

double angle_of(Complex z) { return TorusPoint::from_complex(z).theta; }

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

std::vector<CurveSample> sample_rif_curves(const RIF_n1& R, const std::vector<double>& alpha_angles,
                                           std::size_t samples) {
  std::vector<CurveSample> rows;
  for (std::size_t i = 0; i < alpha_angles.size(); ++i) {
    auto alpha = UnimodularConstant::from_angle(alpha_angles[i]);
    const std::string prefix = "alpha" + std::to_string(i);
    ClarkMeasure2D mu = rif_clark_measure(R, alpha);
    for (std::size_t c = 0; c < mu.curves.size(); ++c) {
      const auto& g = std::get<GraphCurve>(mu.curves[c]);
      for (std::size_t j = 0; j < samples; ++j) {
        Complex z = sample_point(j, samples);
        Complex v = g.g(z);
        double w = g.weight(z);
        if (!finite(v) || !std::isfinite(w)) continue;
        rows.push_back({prefix + "_graph" + std::to_string(c), angle_of(z), angle_of(v), w});
      }
    }
    for (std::size_t l = 0; l < mu.lines.size(); ++l)
      for (std::size_t j = 0; j < samples; ++j)
        rows.push_back({prefix + "_line" + std::to_string(l), mu.lines[l].tau.theta,
                        angle_of(sample_point(j, samples)), mu.lines[l].constant});
  }
  return rows;
}

std::vector<double> snap_to_exceptional(const RIF_n1& R, std::vector<double> alpha_angles, double tol) {
  const auto ex = exceptional_values(R);
  for (double& a : alpha_angles)
    for (const auto& e : ex)
      if (angular_distance(a, e.alpha.nu) <= tol) a = e.alpha.nu;
  return alpha_angles;
}

std::vector<CurveSample> sample_expexp_curves(double nu, const std::vector<long>& ks, std::size_t samples) {
  std::vector<CurveSample> rows;
  for (long k : ks) {
    ExpExpBranch br = expexp_branches(nu, k);
    for (std::size_t j = 0; j < samples; ++j) {
      Complex z = sample_point(j, samples);
      rows.push_back({"alpha0_branch" + std::to_string(k), angle_of(z), angle_of(br.g(z)), br.weight(z)});
    }
  }
  return rows;
}

std::vector<CurveSample> sample_blaschke_exp_curves(Complex lambda, double nu, std::size_t samples) {
  BlaschkeExpBranches br = blaschke_exp_branches(lambda, nu);
  QuadratureGrid grid(samples);
  auto traced = trace_blaschke_exp(br, grid);
  std::vector<CurveSample> rows;
  for (int b = 0; b < 2; ++b)
    for (std::size_t j = 0; j < grid.size(); ++j) {
      Complex g = traced[b][j];
      if (!finite(g)) continue;
      rows.push_back({"alpha0_branch" + std::to_string(b + 1), grid.angle(j), angle_of(g), br.weight(g)});
    }
  return rows;
}

std::vector<CurveSample> figure_data(int figure, std::size_t samples) {
  switch (figure) {
    case 1:
      return sample_rif_curves(quadratic_rif(), {0.0, kPi / 4.0, kPi / 2.0, kPi}, samples);
    case 2:
    case 3:
      return sample_blaschke_exp_curves(Complex(0.0, 0.5), kPi / 4.0, samples);
    case 4:
    case 5:
      return sample_expexp_curves(0.0, {-1, 0, 2}, samples);
    default:
      throw std::invalid_argument("figure must be 1..5");
  }
}

bool figure_shows_weights(int figure) { return figure == 3 || figure == 5; }

std::string to_csv(const std::vector<CurveSample>& rows) {
  std::string out = "component_id,theta1,theta2,weight\n";
  for (const auto& r : rows) {
    out += r.component_id;
    out += ',';
    out += format_double(r.theta1);
    out += ',';
    out += format_double(r.theta2);
    out += ',';
    out += format_double(r.weight);
    out += '\n';
  }
  return out;
}

namespace {

std::string colour_key(const std::string& id) {
  if (id.find("_branch") != std::string::npos) return id;
  return id.substr(0, id.find('_'));
}

const char* kPalette[] = {"#000000", "#808080", "#ff8c00", "#d62728", "#1f77b4", "#2ca02c"};

}  // namespace

std::string to_svg(const std::vector<CurveSample>& rows, bool weights) {
  const double size = 512.0, pad = 32.0;
  std::map<std::string, std::vector<const CurveSample*>> comps;
  std::vector<std::string> order;
  std::map<std::string, std::size_t> classes;
  double wmax = 0.0;
  for (const auto& r : rows) {
    if (!comps.count(r.component_id)) order.push_back(r.component_id);
    comps[r.component_id].push_back(&r);
    std::string key = colour_key(r.component_id);
    if (!classes.count(key)) classes.emplace(key, classes.size());
    wmax = std::max(wmax, r.weight);
  }
  if (wmax <= 0.0) wmax = 1.0;
  auto x_of = [&](double t) { return pad + size * t / kTwoPi; };
  auto y_of = [&](const CurveSample& r) {
    double v = weights ? r.weight / wmax : r.theta2 / kTwoPi;
    return pad + size * (1.0 - v);
  };

  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * pad << "\" height=\""
    << size + 2 * pad << "\">\n<style>\n";
  for (const auto& [key, idx] : classes)
    s << "." << key << " { stroke: " << kPalette[idx % std::size(kPalette)] << "; fill: none; stroke-width: 1.5; }\n";
  s << "</style>\n<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << size << "\" height=\"" << size
    << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

  for (const auto& id : order) {
    const auto& pts = comps[id];
    const std::string cls = colour_key(id);
    // Runs of 16 points share one opacity; runs also break where the curve wraps.
    std::size_t start = 0;
    while (start < pts.size()) {
      std::size_t end = start + 1;
      while (end < pts.size() && end - start < 16 && std::fabs(pts[end]->theta1 - pts[end - 1]->theta1) < kPi &&
             (weights || std::fabs(pts[end]->theta2 - pts[end - 1]->theta2) < kPi))
        ++end;
      double w = 0.0;
      for (std::size_t i = start; i < end; ++i) w += pts[i]->weight;
      w /= static_cast<double>(end - start) * wmax;
      s << "<polyline class=\"" << cls << "\" data-id=\"" << id << "\" stroke-opacity=\""
        << format_double(std::clamp(w, 0.15, 1.0)) << "\" points=\"";
      for (std::size_t i = start; i < end; ++i)
        s << (i > start ? " " : "") << format_double(x_of(pts[i]->theta1)) << ','
          << format_double(y_of(*pts[i]));
      s << "\"/>\n";
      // Overlap consecutive runs unless the curve wrapped.
      start = (end < pts.size() && end - start == 16) ? end - 1 : end;
    }
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace clark
