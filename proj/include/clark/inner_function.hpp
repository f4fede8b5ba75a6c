#pragma once

#include <vector>

#include "clark/torus.hpp"

namespace clark {

struct SingularAtom {
  TorusPoint xi;
  double mass = 0.0;
};

struct BoundaryValue {
  enum class Kind { Unimodular, Zero, Undefined };
  Kind kind = Kind::Undefined;
  Complex value;

  bool unimodular() const { return kind == Kind::Unimodular; }
};

// phi(z) = e^{ia} z^k prod_j (a_j - z)/(1 - conj(a_j) z) exp(-sum_j c_j (xi_j + z)/(xi_j - z))
class InnerFunction1D {
 public:
  InnerFunction1D() : InnerFunction1D(0.0, 1, {}, {}) {}
  InnerFunction1D(double unimodular_angle, int monomial_power, std::vector<Complex> zeros,
                  std::vector<SingularAtom> atoms);

  static InnerFunction1D monomial(int k) { return {0.0, k, {}, {}}; }
  static InnerFunction1D blaschke(std::vector<Complex> zeros, int monomial_power = 0) {
    return {0.0, monomial_power, std::move(zeros), {}};
  }
  // exp(-mass (xi + z)/(xi - z))
  static InnerFunction1D singular_atom(double xi_angle = 0.0, double mass = 1.0) {
    return {0.0, 0, {}, {SingularAtom{TorusPoint(xi_angle), mass}}};
  }

  double unimodular_angle() const { return a_; }
  int monomial_power() const { return k_; }
  const std::vector<Complex>& zeros() const { return zeros_; }
  const std::vector<SingularAtom>& singular_atoms() const { return atoms_; }

  // k + number of Blaschke zeros
  int blaschke_degree() const { return k_ + static_cast<int>(zeros_.size()); }
  bool is_blaschke_type() const { return atoms_.empty() && blaschke_degree() >= 1; }
  bool is_single_atom_singular() const { return atoms_.size() == 1 && blaschke_degree() == 0; }
  bool is_constant() const { return atoms_.empty() && blaschke_degree() == 0; }

  Complex eval(Complex z) const;
  Complex derivative(Complex z) const;
  BoundaryValue boundary_value(Complex zeta) const;
  BoundaryValue boundary_value(TorusPoint zeta) const { return boundary_value(zeta.value()); }

  // |phi'(zeta)| on the circle, k + sum P_{a_j}(zeta) + sum 2 c_j/|xi_j - zeta|^2.
  double boundary_derivative_modulus(Complex zeta) const;
  // |phi'(zeta)| as the radial limit of |phi'(r zeta)|; +infinity when it diverges.
  double angular_derivative_modulus(Complex zeta) const;

  // Continuous argument of phi(e^{i theta}) for Blaschke-type phi; strictly increasing,
  // total increase 2 pi * blaschke_degree() over one turn.
  double lifted_phase(double theta) const;

 private:
  double a_;
  int k_;
  std::vector<Complex> zeros_;
  std::vector<SingularAtom> atoms_;
};

}  // namespace clark
