#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "clark/torus.hpp"

namespace clark {

struct Atom {
  TorusPoint point;
  double weight = 0.0;
};

struct DiscreteMeasure1D {
  std::vector<Atom> atoms;
  double tail_bound = 0.0;
  // Non-empty when a closed-form family produces atoms beyond the listed ones.
  std::string generator_id;
  // Zero-weight members of the level set (limits of atoms).
  std::vector<TorusPoint> accumulation_points;

  double listed_mass() const;
  // Positive weights, finite tail, pairwise distinct atoms.
  void validate() const;
};

struct AntidiagonalCurve {
  TorusPoint eta;  // zeta -> (zeta, eta * conj(zeta))
  double weight = 0.0;
};

struct GraphCurve {
  // zeta -> (zeta, g(zeta)); a non-finite value marks zeta undefined.
  std::function<Complex(Complex)> g;
  std::function<double(Complex)> weight;
};

using CurveComponent = std::variant<AntidiagonalCurve, GraphCurve>;

struct LineComponent {
  TorusPoint tau;  // the line {zeta_1 = tau}
  double constant = 0.0;
};

// Curves and lines only; point masses are not representable.
struct ClarkMeasure2D {
  std::vector<CurveComponent> curves;
  std::vector<LineComponent> lines;
  double tail_bound = 0.0;

  void validate() const;
};

using TorusPoint2 = std::array<Complex, 2>;

enum class FiberAxis { Second, First };

// Weighted points on one coordinate fibre through a quadrature node:
// Second means points (outer, p_j), First means points (p_j, outer).
struct NodeFiber {
  FiberAxis axis = FiberAxis::Second;
  Complex outer;
  std::vector<Complex> points;
  std::vector<double> weights;
};

class NodeFibers {
 public:
  NodeFiber& add(FiberAxis axis, Complex outer);
  void clear() { used_ = 0; undefined.clear(); }
  std::span<const NodeFiber> fibers() const { return {store_.data(), used_}; }

  // Components whose value at this node is undefined.
  std::vector<std::size_t> undefined;

 private:
  std::vector<NodeFiber> store_;
  std::size_t used_ = 0;
};

// A measure on T^2 presented through its restriction to quadrature nodes:
// integral f dmu = int sum over node fibres dm(zeta).
class TorusMeasure2D {
 public:
  virtual ~TorusMeasure2D() = default;
  virtual void node_fibers(Complex zeta, NodeFibers& out) const = 0;
  virtual double tail_bound() const = 0;
  virtual std::size_t component_count() const = 0;
  // Points on positive-weight components, used by support checks.
  virtual std::vector<TorusPoint2> support_samples(std::size_t per_component) const = 0;
};

class ClarkMeasureView : public TorusMeasure2D {
 public:
  explicit ClarkMeasureView(const ClarkMeasure2D& mu);

  void node_fibers(Complex zeta, NodeFibers& out) const override;
  double tail_bound() const override { return mu_.tail_bound; }
  std::size_t component_count() const override { return mu_.curves.size() + mu_.lines.size(); }
  std::vector<TorusPoint2> support_samples(std::size_t per_component) const override;

 private:
  const ClarkMeasure2D& mu_;
  std::vector<Complex> anti_eta_;
  std::vector<double> anti_weight_;
  std::vector<std::size_t> graph_index_;
};

// A finite family of test functions f_i on T^2 evaluated together.
class TestFamily2D {
 public:
  virtual ~TestFamily2D() = default;
  virtual std::size_t size() const = 0;
  virtual void eval(Complex z1, Complex z2, std::span<Complex> out) const = 0;
  // out[i] += sum_j w_j f_i(fibre point j)
  virtual void accumulate(const NodeFiber& fiber, std::span<Complex> out) const;
  virtual std::vector<double> sup_norms() const = 0;
};

class PoissonFamily2D : public TestFamily2D {
 public:
  explicit PoissonFamily2D(std::vector<TorusPoint2> centres);

  std::size_t size() const override { return z_.size(); }
  void eval(Complex z1, Complex z2, std::span<Complex> out) const override;
  void accumulate(const NodeFiber& fiber, std::span<Complex> out) const override;
  std::vector<double> sup_norms() const override;

 private:
  std::vector<TorusPoint2> z_;
};

// f(z1, z2) = conj(z1^k1 z2^k2)
class FourierFamily2D : public TestFamily2D {
 public:
  explicit FourierFamily2D(std::vector<std::array<int, 2>> modes);

  std::size_t size() const override { return modes_.size(); }
  const std::vector<std::array<int, 2>>& modes() const { return modes_; }
  void eval(Complex z1, Complex z2, std::span<Complex> out) const override;
  void accumulate(const NodeFiber& fiber, std::span<Complex> out) const override;
  std::vector<double> sup_norms() const override { return std::vector<double>(modes_.size(), 1.0); }

 private:
  std::vector<std::array<int, 2>> modes_;
  int kmax_ = 0;
};

class FunctionFamily2D : public TestFamily2D {
 public:
  using Fn = std::function<Complex(Complex, Complex)>;
  // Sup norms are estimated on a 256 x 256 grid when not given.
  explicit FunctionFamily2D(std::vector<Fn> fs, std::vector<double> sups = {});

  std::size_t size() const override { return fs_.size(); }
  void eval(Complex z1, Complex z2, std::span<Complex> out) const override;
  std::vector<double> sup_norms() const override { return sups_; }

 private:
  std::vector<Fn> fs_;
  std::vector<double> sups_;
};

std::vector<IntegralEstimate> integrate(const TorusMeasure2D& mu, const TestFamily2D& family,
                                        const QuadratureGrid& grid);
IntegralEstimate integrate(const TorusMeasure2D& mu, const FunctionFamily2D::Fn& f,
                           const QuadratureGrid& grid);

std::vector<IntegralEstimate> integrate_measure2d(const ClarkMeasure2D& mu,
                                                  const TestFamily2D& family,
                                                  const QuadratureGrid& grid);
IntegralEstimate integrate_measure2d(const ClarkMeasure2D& mu, const FunctionFamily2D::Fn& f,
                                     const QuadratureGrid& grid);

}  // namespace clark
