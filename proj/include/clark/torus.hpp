#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace clark {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Canonical comparator tolerance for points on the circle (radians).
inline constexpr double kAngleTol = 1e-14;

class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when too many quadrature nodes are undefined.
class QuadratureError : public ComputationError {
 public:
  QuadratureError(const std::string& what, std::vector<std::size_t> nodes, long component = -1)
      : ComputationError(what), nodes_(std::move(nodes)), component_(component) {}
  const std::vector<std::size_t>& nodes() const { return nodes_; }
  long component() const { return component_; }

 private:
  std::vector<std::size_t> nodes_;
  long component_;
};

double canonical_angle(double theta);

// Distance on the circle, in [0, pi].
double angular_distance(double a, double b);

struct TorusPoint {
  double theta = 0.0;

  TorusPoint() = default;
  explicit TorusPoint(double angle) : theta(canonical_angle(angle)) {}
  static TorusPoint from_complex(Complex z) { return TorusPoint(std::arg(z)); }
  Complex value() const { return std::polar(1.0, theta); }
};

bool same_point(TorusPoint a, TorusPoint b, double tol = kAngleTol);

// alpha = e^{i nu}, nu in [0, 2pi).
struct UnimodularConstant {
  double nu = 0.0;
  Complex alpha{1.0, 0.0};

  static UnimodularConstant from_angle(double nu);
  // Accepts |a| within 1e-12 of 1 and renormalizes.
  static UnimodularConstant from_complex(Complex a);
};

void require_disk(Complex z, const char* what = "point");

// P_z(zeta) = (1-|z|^2)/|zeta-z|^2.
double poisson_kernel(Complex z, Complex zeta);
double poisson_kernel_nd(std::span<const Complex> z, std::span<const Complex> zeta);
// sum_j w_j P_z(p_j)
double poisson_weighted_sum(std::span<const Complex> p, std::span<const double> w, Complex z);
// sup over the circle of P_z, (1+|z|)/(1-|z|).
double poisson_sup(Complex z);

class QuadratureGrid {
 public:
  explicit QuadratureGrid(std::size_t n = 4096);

  std::size_t size() const { return nodes_.size(); }
  double angle(std::size_t j) const;
  Complex node(std::size_t j) const { return nodes_[j]; }
  const std::vector<Complex>& nodes() const { return nodes_; }
  // Undefined nodes tolerated before a quadrature is declared failed.
  std::size_t max_undefined() const;

 private:
  std::vector<Complex> nodes_;
};

// Fixed-shape pairwise summation; the tree depends only on the length.
double pairwise_sum(std::span<const double> v);
Complex pairwise_sum(std::span<const Complex> v);

// Trapezoid rule for dm = dtheta/2pi. A non-finite value marks the node undefined.
Complex periodic_quadrature(const std::function<Complex(Complex)>& f, const QuadratureGrid& grid);

struct IntegralEstimate {
  Complex value;
  double tail_term = 0.0;        // tail_bound * sup|f|
  double quadrature_term = 0.0;  // |I_N - I_{N/2}|
  std::size_t skipped_nodes = 0;

  double error_bound() const { return tail_term + quadrature_term; }
};

struct RadialLimit {
  Complex value;
  double spread = 0.0;  // difference of the last two extrapolants
  bool diverged = false;
};

// lim_{r->1-} h(r) from samples at r_m = 1 - 2^-m, m = 4..24, one Richardson step.
RadialLimit radial_limit(const std::function<Complex(double)>& h);

// Runs body(begin, end) over [0, n) split across hardware threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace clark
