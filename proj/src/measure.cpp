#include "clark/measure.hpp"

#include <algorithm>
#include <cmath>

namespace clark {

double DiscreteMeasure1D::listed_mass() const {
  std::vector<double> w;
  w.reserve(atoms.size());
  for (const auto& a : atoms) w.push_back(a.weight);
  return pairwise_sum(w);
}

void DiscreteMeasure1D::validate() const {
  if (!(tail_bound >= 0.0) || !std::isfinite(tail_bound))
    throw std::invalid_argument("tail bound must be finite and nonnegative");
  std::vector<double> angles;
  for (const auto& a : atoms) {
    if (!(a.weight > 0.0) || !std::isfinite(a.weight))
      throw std::invalid_argument("atom weights must be finite and positive");
    angles.push_back(a.point.theta);
  }
  std::sort(angles.begin(), angles.end());
  for (std::size_t i = 1; i < angles.size(); ++i)
    if (angles[i] - angles[i - 1] < kAngleTol) throw std::invalid_argument("atoms are not distinct");
  if (angles.size() > 1 && angles.front() + kTwoPi - angles.back() < kAngleTol)
    throw std::invalid_argument("atoms are not distinct");
}

void ClarkMeasure2D::validate() const {
  if (!(tail_bound >= 0.0) || !std::isfinite(tail_bound))
    throw std::invalid_argument("tail bound must be finite and nonnegative");
  for (const auto& c : curves) {
    if (const auto* a = std::get_if<AntidiagonalCurve>(&c)) {
      if (!(a->weight >= 0.0) || !std::isfinite(a->weight))
        throw std::invalid_argument("antidiagonal weight must be finite and nonnegative");
    } else {
      const auto& g = std::get<GraphCurve>(c);
      if (!g.g || !g.weight) throw std::invalid_argument("graph component is missing a rule");
    }
  }
  for (const auto& l : lines)
    if (!(l.constant > 0.0) || !std::isfinite(l.constant))
      throw std::invalid_argument("line constants must be finite and positive");
}

NodeFiber& NodeFibers::add(FiberAxis axis, Complex outer) {
  if (used_ == store_.size()) store_.emplace_back();
  NodeFiber& f = store_[used_++];
  f.axis = axis;
  f.outer = outer;
  f.points.clear();
  f.weights.clear();
  return f;
}

ClarkMeasureView::ClarkMeasureView(const ClarkMeasure2D& mu) : mu_(mu) {
  mu_.validate();
  for (std::size_t i = 0; i < mu_.curves.size(); ++i) {
    if (const auto* a = std::get_if<AntidiagonalCurve>(&mu_.curves[i])) {
      if (a->weight > 0.0) {
        anti_eta_.push_back(a->eta.value());
        anti_weight_.push_back(a->weight);
      }
    } else {
      graph_index_.push_back(i);
    }
  }
}

void ClarkMeasureView::node_fibers(Complex zeta, NodeFibers& out) const {
  if (!anti_eta_.empty() || !graph_index_.empty()) {
    NodeFiber& f = out.add(FiberAxis::Second, zeta);
    Complex cz = std::conj(zeta);
    f.points.reserve(anti_eta_.size() + graph_index_.size());
    for (std::size_t k = 0; k < anti_eta_.size(); ++k) {
      f.points.push_back(anti_eta_[k] * cz);
      f.weights.push_back(anti_weight_[k]);
    }
    for (std::size_t idx : graph_index_) {
      const auto& g = std::get<GraphCurve>(mu_.curves[idx]);
      Complex v = g.g(zeta);
      double w = g.weight(zeta);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || !std::isfinite(w)) {
        out.undefined.push_back(idx);
        continue;
      }
      if (w > 0.0) {
        f.points.push_back(v);
        f.weights.push_back(w);
      }
    }
  }
  if (!mu_.lines.empty()) {
    NodeFiber& f = out.add(FiberAxis::First, zeta);
    for (const auto& l : mu_.lines) {
      f.points.push_back(l.tau.value());
      f.weights.push_back(l.constant);
    }
  }
}

std::vector<TorusPoint2> ClarkMeasureView::support_samples(std::size_t per_component) const {
  std::vector<TorusPoint2> s;
  auto sample = [per_component](std::size_t j) {
    return std::polar(1.0, kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(per_component));
  };
  for (const auto& c : mu_.curves) {
    for (std::size_t j = 0; j < per_component; ++j) {
      Complex z = sample(j);
      if (const auto* a = std::get_if<AntidiagonalCurve>(&c)) {
        if (a->weight > 0.0) s.push_back({z, a->eta.value() * std::conj(z)});
      } else {
        const auto& g = std::get<GraphCurve>(c);
        Complex v = g.g(z);
        double w = g.weight(z);
        if (std::isfinite(v.real()) && std::isfinite(v.imag()) && w > 0.0) s.push_back({z, v});
      }
    }
  }
  for (const auto& l : mu_.lines)
    for (std::size_t j = 0; j < per_component; ++j) s.push_back({l.tau.value(), sample(j)});
  return s;
}

void TestFamily2D::accumulate(const NodeFiber& fiber, std::span<Complex> out) const {
  std::vector<Complex> tmp(size());
  for (std::size_t j = 0; j < fiber.points.size(); ++j) {
    if (fiber.axis == FiberAxis::Second)
      eval(fiber.outer, fiber.points[j], tmp);
    else
      eval(fiber.points[j], fiber.outer, tmp);
    for (std::size_t i = 0; i < tmp.size(); ++i) out[i] += fiber.weights[j] * tmp[i];
  }
}

PoissonFamily2D::PoissonFamily2D(std::vector<TorusPoint2> centres) : z_(std::move(centres)) {
  for (const auto& z : z_) {
    require_disk(z[0], "Poisson kernel centre");
    require_disk(z[1], "Poisson kernel centre");
  }
}

void PoissonFamily2D::eval(Complex z1, Complex z2, std::span<Complex> out) const {
  for (std::size_t i = 0; i < z_.size(); ++i)
    out[i] = (1.0 - std::norm(z_[i][0])) / std::norm(z1 - z_[i][0]) *
             ((1.0 - std::norm(z_[i][1])) / std::norm(z2 - z_[i][1]));
}

void PoissonFamily2D::accumulate(const NodeFiber& fiber, std::span<Complex> out) const {
  const int outer_axis = fiber.axis == FiberAxis::Second ? 0 : 1;
  const int inner_axis = 1 - outer_axis;
  for (std::size_t i = 0; i < z_.size(); ++i) {
    Complex zo = z_[i][outer_axis];
    Complex zi = z_[i][inner_axis];
    double p_outer = (1.0 - std::norm(zo)) / std::norm(fiber.outer - zo);
    out[i] += p_outer * poisson_weighted_sum(fiber.points, fiber.weights, zi);
  }
}

std::vector<double> PoissonFamily2D::sup_norms() const {
  std::vector<double> s;
  for (const auto& z : z_) s.push_back(poisson_sup(z[0]) * poisson_sup(z[1]));
  return s;
}

FourierFamily2D::FourierFamily2D(std::vector<std::array<int, 2>> modes) : modes_(std::move(modes)) {
  for (const auto& m : modes_) kmax_ = std::max({kmax_, std::abs(m[0]), std::abs(m[1])});
}

namespace {

// table[k + kmax] = conj(z)^k for unimodular z, k in [-kmax, kmax].
void power_table(Complex z, int kmax, std::vector<Complex>& table) {
  table.assign(2 * kmax + 1, Complex(1.0, 0.0));
  Complex cz = std::conj(z);
  for (int k = 1; k <= kmax; ++k) {
    table[kmax + k] = table[kmax + k - 1] * cz;
    table[kmax - k] = table[kmax - k + 1] * z;
  }
}

}  // namespace

void FourierFamily2D::eval(Complex z1, Complex z2, std::span<Complex> out) const {
  std::vector<Complex> t1, t2;
  power_table(z1, kmax_, t1);
  power_table(z2, kmax_, t2);
  for (std::size_t i = 0; i < modes_.size(); ++i)
    out[i] = t1[modes_[i][0] + kmax_] * t2[modes_[i][1] + kmax_];
}

void FourierFamily2D::accumulate(const NodeFiber& fiber, std::span<Complex> out) const {
  const std::size_t width = 2 * kmax_ + 1;
  std::vector<Complex> sums(width, Complex(0.0, 0.0));
  std::vector<Complex> table;
  for (std::size_t j = 0; j < fiber.points.size(); ++j) {
    power_table(fiber.points[j], kmax_, table);
    for (std::size_t k = 0; k < width; ++k) sums[k] += fiber.weights[j] * table[k];
  }
  std::vector<Complex> outer;
  power_table(fiber.outer, kmax_, outer);
  const int outer_axis = fiber.axis == FiberAxis::Second ? 0 : 1;
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    int ko = modes_[i][outer_axis] + kmax_;
    int ki = modes_[i][1 - outer_axis] + kmax_;
    out[i] += outer[ko] * sums[ki];
  }
}

FunctionFamily2D::FunctionFamily2D(std::vector<Fn> fs, std::vector<double> sups)
    : fs_(std::move(fs)), sups_(std::move(sups)) {
  if (sups_.empty()) {
    QuadratureGrid g(256);
    for (const auto& f : fs_) {
      double m = 0.0;
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b) m = std::max(m, std::abs(f(g.node(a), g.node(b))));
      sups_.push_back(m);
    }
  }
  if (sups_.size() != fs_.size()) throw std::invalid_argument("one sup norm per function expected");
}

void FunctionFamily2D::eval(Complex z1, Complex z2, std::span<Complex> out) const {
  for (std::size_t i = 0; i < fs_.size(); ++i) out[i] = fs_[i](z1, z2);
}

std::vector<IntegralEstimate> integrate(const TorusMeasure2D& mu, const TestFamily2D& family,
                                        const QuadratureGrid& grid) {
  const std::size_t n = grid.size();
  const std::size_t nf = family.size();
  std::vector<Complex> values(nf * n);
  std::vector<std::vector<std::size_t>> undefined(n);

  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    NodeFibers fibers;
    std::vector<Complex> acc(nf);
    for (std::size_t j = begin; j < end; ++j) {
      fibers.clear();
      mu.node_fibers(grid.node(j), fibers);
      std::fill(acc.begin(), acc.end(), Complex(0.0, 0.0));
      for (const auto& f : fibers.fibers()) family.accumulate(f, acc);
      for (std::size_t i = 0; i < nf; ++i) values[i * n + j] = acc[i];
      undefined[j] = fibers.undefined;
    }
  });

  std::size_t skipped = 0;
  std::vector<std::vector<std::size_t>> per_component(mu.component_count());
  for (std::size_t j = 0; j < n; ++j) {
    if (!undefined[j].empty()) ++skipped;
    for (std::size_t c : undefined[j]) per_component.at(c).push_back(j);
  }
  for (std::size_t c = 0; c < per_component.size(); ++c)
    if (per_component[c].size() > grid.max_undefined())
      throw QuadratureError("component " + std::to_string(c) + " is undefined at too many nodes",
                            per_component[c], static_cast<long>(c));

  const std::vector<double> sups = family.sup_norms();
  std::vector<IntegralEstimate> out(nf);
  std::vector<Complex> even(n / 2);
  for (std::size_t i = 0; i < nf; ++i) {
    std::span<const Complex> row(values.data() + i * n, n);
    Complex full = pairwise_sum(row) / static_cast<double>(n);
    for (std::size_t j = 0; j < n / 2; ++j) even[j] = row[2 * j];
    Complex half = pairwise_sum(even) / static_cast<double>(n / 2);
    out[i].value = full;
    out[i].quadrature_term = std::abs(full - half);
    out[i].tail_term = mu.tail_bound() * sups[i];
    out[i].skipped_nodes = skipped;
  }
  return out;
}

IntegralEstimate integrate(const TorusMeasure2D& mu, const FunctionFamily2D::Fn& f,
                           const QuadratureGrid& grid) {
  return integrate(mu, FunctionFamily2D({f}), grid).front();
}

std::vector<IntegralEstimate> integrate_measure2d(const ClarkMeasure2D& mu,
                                                  const TestFamily2D& family,
                                                  const QuadratureGrid& grid) {
  ClarkMeasureView view(mu);
  return integrate(view, family, grid);
}

IntegralEstimate integrate_measure2d(const ClarkMeasure2D& mu, const FunctionFamily2D::Fn& f,
                                     const QuadratureGrid& grid) {
  ClarkMeasureView view(mu);
  return integrate(view, f, grid);
}

}  // namespace clark
