#include "clark/embed.hpp"

#include <cmath>

namespace clark {

std::vector<CurveComponent> embed_level_set(const InnerFunction1D& phi, UnimodularConstant alpha, int K) {
  DiscreteMeasure1D mu = clark_measure1d(phi, alpha, K);
  std::vector<CurveComponent> out;
  out.reserve(mu.atoms.size() + mu.accumulation_points.size());
  for (const auto& a : mu.atoms) out.emplace_back(AntidiagonalCurve{a.point, a.weight});
  for (const auto& p : mu.accumulation_points) out.emplace_back(AntidiagonalCurve{p, 0.0});
  return out;
}

ClarkMeasure2D embed_clark2d(const InnerFunction1D& phi, UnimodularConstant alpha, int K) {
  DiscreteMeasure1D mu = clark_measure1d(phi, alpha, K);
  ClarkMeasure2D out;
  out.curves.reserve(mu.atoms.size());
  for (const auto& a : mu.atoms) out.curves.emplace_back(AntidiagonalCurve{a.point, a.weight});
  out.tail_bound = mu.tail_bound;
  return out;
}

EmbeddedClarkND embed_clark_nd(const InnerFunction1D& phi, UnimodularConstant alpha, int d, int K) {
  if (d < 2) throw std::invalid_argument("embedding dimension must be at least 2");
  if (d > kMaxEmbedDimension) throw std::invalid_argument("embedding dimension above 4 is not supported");
  return {clark_measure1d(phi, alpha, K), d};
}

void TestFamilyND::accumulate_last(std::span<const Complex> prefix, std::span<const Complex> last,
                                   std::span<const double> w, std::span<Complex> out) const {
  std::vector<Complex> point(prefix.begin(), prefix.end());
  point.push_back(0.0);
  std::vector<Complex> tmp(size());
  for (std::size_t j = 0; j < last.size(); ++j) {
    point.back() = last[j];
    eval(point, tmp);
    for (std::size_t i = 0; i < tmp.size(); ++i) out[i] += w[j] * tmp[i];
  }
}

PoissonFamilyND::PoissonFamilyND(std::vector<std::vector<Complex>> centres) : z_(std::move(centres)) {
  if (z_.empty()) throw std::invalid_argument("empty Poisson family");
  d_ = static_cast<int>(z_.front().size());
  for (const auto& z : z_) {
    if (static_cast<int>(z.size()) != d_) throw std::invalid_argument("mixed dimensions in Poisson family");
    for (Complex c : z) require_disk(c, "Poisson kernel centre");
  }
}

void PoissonFamilyND::eval(std::span<const Complex> zeta, std::span<Complex> out) const {
  for (std::size_t i = 0; i < z_.size(); ++i) out[i] = poisson_kernel_nd(z_[i], zeta);
}

void PoissonFamilyND::accumulate_last(std::span<const Complex> prefix, std::span<const Complex> last,
                                      std::span<const double> w, std::span<Complex> out) const {
  for (std::size_t i = 0; i < z_.size(); ++i) {
    double p = 1.0;
    for (std::size_t j = 0; j < prefix.size(); ++j)
      p *= (1.0 - std::norm(z_[i][j])) / std::norm(prefix[j] - z_[i][j]);
    out[i] += p * poisson_weighted_sum(last, w, z_[i].back());
  }
}

std::vector<double> PoissonFamilyND::sup_norms() const {
  std::vector<double> s;
  for (const auto& z : z_) {
    double p = 1.0;
    for (Complex c : z) p *= poisson_sup(c);
    s.push_back(p);
  }
  return s;
}

std::vector<IntegralEstimate> integrate_embed_nd(const EmbeddedClarkND& em, const TestFamilyND& family,
                                                 const QuadratureGrid& grid) {
  const int d = em.dimension;
  if (d < 2) throw std::invalid_argument("embedding dimension must be at least 2");
  if (d > kMaxEmbedDimension) throw std::invalid_argument("embedding dimension above 4 is not supported");
  if (family.dimension() != d) throw std::invalid_argument("test family dimension mismatch");
  em.base.validate();

  const QuadratureGrid nested = d == 2 ? grid : QuadratureGrid(grid.size() / 8);
  const std::size_t m = nested.size();
  const std::size_t nf = family.size();
  const int depth = d - 1;  // nested coordinates zeta_1..zeta_{d-1}

  std::vector<Complex> eta;
  std::vector<double> weight;
  for (const auto& a : em.base.atoms) {
    eta.push_back(a.point.value());
    weight.push_back(a.weight);
  }

  std::size_t inner_count = 1;
  for (int k = 1; k < depth; ++k) inner_count *= m;

  // outer_values[i * m + a]: mean over the inner coordinates with zeta_1 = node a.
  std::vector<Complex> outer_values(nf * m);
  parallel_for(m, [&](std::size_t begin, std::size_t end) {
    std::vector<Complex> prefix(depth);
    std::vector<Complex> last(eta.size());
    std::vector<Complex> acc(nf);
    std::vector<Complex> inner(nf * inner_count);
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t t = 0; t < inner_count; ++t) {
        prefix[0] = nested.node(a);
        std::size_t rest = t;
        for (int k = depth - 1; k >= 1; --k) {
          prefix[k] = nested.node(rest % m);
          rest /= m;
        }
        Complex prod = 1.0;
        for (Complex z : prefix) prod *= z;
        Complex cp = std::conj(prod);
        for (std::size_t j = 0; j < eta.size(); ++j) last[j] = eta[j] * cp;
        std::fill(acc.begin(), acc.end(), Complex(0.0, 0.0));
        family.accumulate_last(prefix, last, weight, acc);
        for (std::size_t i = 0; i < nf; ++i) inner[i * inner_count + t] = acc[i];
      }
      for (std::size_t i = 0; i < nf; ++i) {
        std::span<const Complex> row(inner.data() + i * inner_count, inner_count);
        outer_values[i * m + a] = pairwise_sum(row) / static_cast<double>(inner_count);
      }
    }
  });

  const std::vector<double> sups = family.sup_norms();
  std::vector<IntegralEstimate> out(nf);
  std::vector<Complex> even(m / 2);
  for (std::size_t i = 0; i < nf; ++i) {
    std::span<const Complex> row(outer_values.data() + i * m, m);
    Complex full = pairwise_sum(row) / static_cast<double>(m);
    for (std::size_t j = 0; j < m / 2; ++j) even[j] = row[2 * j];
    Complex half = pairwise_sum(even) / static_cast<double>(m / 2);
    out[i].value = full;
    out[i].quadrature_term = std::abs(full - half);
    out[i].tail_term = em.base.tail_bound * sups[i];
  }
  return out;
}

}  // namespace clark
