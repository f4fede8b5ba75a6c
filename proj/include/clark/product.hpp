#pragma once

#include <array>
#include <optional>
#include <vector>

#include "clark/clark1d.hpp"
#include "clark/measure.hpp"

namespace clark {

// Psi(z1, z2) = phi(z1) psi(z2)
struct ProductInner {
  InnerFunction1D phi;
  InnerFunction1D psi;

  Complex eval(Complex z1, Complex z2) const { return phi.eval(z1) * psi.eval(z2); }
  BoundaryValue boundary_value(Complex zeta1, Complex zeta2) const;
};

// Example families with closed-form branches.
ProductInner exp_exp_product();                     // exp(-(1+z1)/(1-z1)) exp(-(1+z2)/(1-z2))
ProductInner blaschke_exp_product(Complex lambda);  // exp(-(1+z1)/(1-z1)) z2 (lambda-z2)/(1-conj(lambda) z2)

// The psi-fibre over zeta1: Clark measure of psi at beta = alpha conj(phi*(zeta1)).
// Empty when phi*(zeta1) = 0.
std::optional<DiscreteMeasure1D> fiber_measure(const ProductInner& P, Complex zeta1,
                                               UnimodularConstant alpha, int K = kDefaultTruncation);

// Exp x exp: zeta2 = g_k(zeta1) solves the level equation with s = nu + 2 pi k.
struct ExpExpBranch {
  double nu = 0.0;
  long k = 0;

  Complex g(Complex zeta) const;
  // 1/|psi'(g_k(zeta))| = 2|zeta-1|^2/|s(zeta-1) + 2i zeta|^2
  double weight(Complex zeta) const;
};

ExpExpBranch expexp_branches(double nu, long k);

// Blaschke x exp: the two roots of z^2 - (lambda + E conj(lambda)) z + E = 0 with
// E = alpha exp((1+zeta)/(1-zeta)).
struct BlaschkeExpBranches {
  Complex lambda;
  double nu = 0.0;

  // {+sqrt, -sqrt} with the principal square root; NaN at zeta = 1.
  std::array<Complex, 2> roots(Complex zeta) const;
  // |1 - conj(lambda) g|^2 / |lambda - 2g + conj(lambda) g^2|
  double weight(Complex g) const;
};

BlaschkeExpBranches blaschke_exp_branches(Complex lambda, double nu);

// Branch values on every grid node, labelled from the node nearest zeta = -1 and
// continued by nearest-neighbour matching. Undefined nodes hold NaN.
std::array<std::vector<Complex>, 2> trace_blaschke_exp(const BlaschkeExpBranches& b,
                                                       const QuadratureGrid& grid);

enum class Orientation {
  Balanced,   // psi-fibres over zeta1 plus phi-fibres over zeta2, split 1/(|phi'|+|psi'|)
  Fiberwise,  // psi-fibres over zeta1 with weights 1/|psi'|
};

enum class FiberSource { Solver, ExpExpClosedForm, BlaschkeExpClosedForm };

class ProductClarkMeasure : public TorusMeasure2D {
 public:
  ProductClarkMeasure(ProductInner P, UnimodularConstant alpha, int K = kDefaultTruncation,
                      Orientation orientation = Orientation::Balanced,
                      FiberSource source = FiberSource::Solver);

  void node_fibers(Complex zeta, NodeFibers& out) const override;
  double tail_bound() const override { return tail_; }
  std::size_t component_count() const override { return 1; }
  std::vector<TorusPoint2> support_samples(std::size_t per_component) const override;

  const ProductInner& function() const { return P_; }
  UnimodularConstant alpha() const { return alpha_; }
  Orientation orientation() const { return orientation_; }

  // psi-fibre atoms (points, weights 1/|psi'|) over zeta1; false when phi*(zeta1) = 0.
  bool psi_fiber(Complex zeta1, std::vector<Complex>& points, std::vector<double>& weights) const;

 private:
  bool phi_fiber(Complex zeta2, std::vector<Complex>& points, std::vector<double>& weights) const;

  ProductInner P_;
  UnimodularConstant alpha_;
  int K_;
  Orientation orientation_;
  FiberSource source_;
  double tail_ = 0.0;
  Complex lambda_;
};

}  // namespace clark
