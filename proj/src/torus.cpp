#include "clark/torus.hpp"

#include <algorithm>
#include <exception>
#include <cmath>
#include <thread>

namespace clark {

double canonical_angle(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("angle is not finite");
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double angular_distance(double a, double b) {
  double d = std::fabs(canonical_angle(a) - canonical_angle(b));
  return std::min(d, kTwoPi - d);
}

bool same_point(TorusPoint a, TorusPoint b, double tol) {
  return angular_distance(a.theta, b.theta) < tol;
}

UnimodularConstant UnimodularConstant::from_angle(double nu) {
  UnimodularConstant u;
  u.nu = canonical_angle(nu);
  u.alpha = std::polar(1.0, u.nu);
  return u;
}

UnimodularConstant UnimodularConstant::from_complex(Complex a) {
  if (std::fabs(std::abs(a) - 1.0) > 1e-12)
    throw std::invalid_argument("constant is not unimodular");
  return from_angle(std::arg(a));
}

void require_disk(Complex z, const char* what) {
  if (!(std::abs(z) < 1.0))
    throw std::domain_error(std::string(what) + " is not in the open unit disc");
}

double poisson_kernel(Complex z, Complex zeta) {
  require_disk(z, "Poisson kernel centre");
  return (1.0 - std::norm(z)) / std::norm(zeta - z);
}

double poisson_kernel_nd(std::span<const Complex> z, std::span<const Complex> zeta) {
  if (z.size() != zeta.size() || z.empty())
    throw std::invalid_argument("poisson_kernel_nd: dimension mismatch");
  double p = 1.0;
  for (std::size_t j = 0; j < z.size(); ++j) p *= poisson_kernel(z[j], zeta[j]);
  return p;
}

double poisson_sup(Complex z) {
  require_disk(z, "Poisson kernel centre");
  double r = std::abs(z);
  return (1.0 + r) / (1.0 - r);
}

double poisson_weighted_sum(std::span<const Complex> p, std::span<const double> w, Complex z) {
  require_disk(z, "Poisson kernel centre");
  const double cr = z.real();
  const double ci = z.imag();
  const std::size_t n = p.size();
  // Four interleaved partial sums; the order is fixed by n alone.
  double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    double a0 = p[j].real() - cr, b0 = p[j].imag() - ci;
    double a1 = p[j + 1].real() - cr, b1 = p[j + 1].imag() - ci;
    double a2 = p[j + 2].real() - cr, b2 = p[j + 2].imag() - ci;
    double a3 = p[j + 3].real() - cr, b3 = p[j + 3].imag() - ci;
    s0 += w[j] / (a0 * a0 + b0 * b0);
    s1 += w[j + 1] / (a1 * a1 + b1 * b1);
    s2 += w[j + 2] / (a2 * a2 + b2 * b2);
    s3 += w[j + 3] / (a3 * a3 + b3 * b3);
  }
  for (; j < n; ++j) {
    double a = p[j].real() - cr, b = p[j].imag() - ci;
    s0 += w[j] / (a * a + b * b);
  }
  return (1.0 - std::norm(z)) * ((s0 + s1) + (s2 + s3));
}

QuadratureGrid::QuadratureGrid(std::size_t n) {
  if (n < 4) throw std::invalid_argument("quadrature grid needs at least 4 nodes");
  nodes_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    // Exact values on the axes keep symmetric integrands symmetric.
    if (4 * j % n == 0) {
      static const Complex axis[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      nodes_[j] = axis[4 * j / n];
    } else {
      nodes_[j] = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(n));
    }
  }
}

double QuadratureGrid::angle(std::size_t j) const {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(nodes_.size());
}

std::size_t QuadratureGrid::max_undefined() const {
  return std::max<std::size_t>(1, nodes_.size() / 1000);
}

namespace {

template <class T>
T pairwise(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() <= 8) {
    T s = v[0];
    for (std::size_t i = 1; i < v.size(); ++i) s += v[i];
    return s;
  }
  std::size_t half = v.size() / 2;
  return pairwise(v.first(half)) + pairwise(v.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> v) { return pairwise(v); }
Complex pairwise_sum(std::span<const Complex> v) { return pairwise(v); }

Complex periodic_quadrature(const std::function<Complex(Complex)>& f, const QuadratureGrid& grid) {
  std::vector<Complex> values(grid.size());
  std::vector<std::size_t> undefined;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    Complex v = f(grid.node(j));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      undefined.push_back(j);
      v = 0.0;
    }
    values[j] = v;
  }
  if (undefined.size() > grid.max_undefined())
    throw QuadratureError("too many undefined quadrature nodes", undefined);
  return pairwise_sum(values) / static_cast<double>(grid.size());
}

RadialLimit radial_limit(const std::function<Complex(double)>& h) {
  constexpr int m_first = 4;
  constexpr int m_last = 24;
  std::vector<Complex> a;
  for (int m = m_first; m <= m_last; ++m) {
    Complex v = h(1.0 - std::ldexp(1.0, -m));
    a.push_back(v);
    if (!std::isfinite(std::abs(v)) || std::abs(v) > 1e12) return {v, 0.0, true};
  }
  // The error is O(1 - r) and 1 - r halves per step.
  std::size_t n = a.size();
  Complex last = 2.0 * a[n - 1] - a[n - 2];
  Complex prev = 2.0 * a[n - 2] - a[n - 3];
  RadialLimit out{last, std::abs(last - prev), false};
  if (std::abs(last) > 1e12) out.diverged = true;
  return out;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 64));
  if (threads <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    std::size_t b = t * chunk;
    std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&body, &errors, t, b, e] {
      try {
        body(b, e);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace clark
