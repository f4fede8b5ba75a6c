#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "clark/embed.hpp"
#include "clark/measure.hpp"
#include "clark/product.hpp"
#include "clark/rif.hpp"

namespace clark {

// Phi on the open polydisc, and its boundary values on the torus (NaN where undefined).
using InteriorFn = std::function<Complex(std::span<const Complex>)>;
using BoundaryFn = std::function<Complex(std::span<const Complex>)>;

// (1 - |phi|^2)/|alpha - phi|^2 for a value phi in the open disc.
double herglotz_rhs(Complex phi, UnimodularConstant alpha);
double herglotz_rhs(const InteriorFn& Phi, UnimodularConstant alpha, std::span<const Complex> z);

// count points of D^d: per-coordinate radius uniform in [0, rmax], angle uniform.
std::vector<std::vector<Complex>> sample_test_points(int d, std::size_t count, std::uint64_t seed,
                                                     double rmax = 0.95);

struct IdentityResidual {
  std::vector<Complex> z;
  double lhs = 0.0;
  double rhs = 0.0;
  double relative_error = 0.0;
  double allowed = 0.0;  // relative tolerance plus tail term over rhs
};

struct MassResult {
  double computed = 0.0;
  double expected = 0.0;
  double error = 0.0;
  double allowed = 0.0;
};

struct FourierEntry {
  std::array<int, 2> k{};
  double modulus = 0.0;
  double allowed = 0.0;
};

struct SupportEntry {
  TorusPoint2 point{};
  double distance = 0.0;  // |Phi*(s) - alpha|
  bool exempt = false;
};

struct Tolerances {
  double identity_relative = 1e-8;
  double mass_relative = 1e-8;
  double fourier_absolute = 1e-8;
  double support = 1e-8;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<IdentityResidual> identity_residuals;
  std::optional<MassResult> mass;
  std::vector<FourierEntry> fourier;
  std::vector<SupportEntry> support;
  bool passed = true;
  Tolerances tolerances;

  // Recomputes passed from the recorded entries.
  void finalize();
  void merge(const VerificationReport& other);
  double max_identity_excess() const;  // max of relative_error - allowed
  double max_fourier_modulus() const;
  double max_support_distance() const;  // over non-exempt samples
};

VerificationReport poisson_identity_check(const TorusMeasure2D& mu, const InteriorFn& Phi,
                                          UnimodularConstant alpha,
                                          const std::vector<std::vector<Complex>>& points,
                                          const QuadratureGrid& grid, double relative_tol);
VerificationReport poisson_identity_check(const EmbeddedClarkND& mu, const InteriorFn& Phi,
                                          UnimodularConstant alpha,
                                          const std::vector<std::vector<Complex>>& points,
                                          const QuadratureGrid& grid, double relative_tol);

MassResult total_mass_check(const TorusMeasure2D& mu, const InteriorFn& Phi, UnimodularConstant alpha,
                            const QuadratureGrid& grid, double relative_tol);

// A declared neighbourhood where Phi* is undefined or too ill-conditioned to evaluate to the
// support tolerance in double precision.
struct Exemption {
  enum class Kind {
    Point,         // max_i |s_i - a_i| <= radius
    FirstLine,     // |s_1 - a_1| <= radius
    SecondLine,    // |s_2 - a_2| <= radius
    Antidiagonal,  // |s_1 s_2 - a_1| <= radius
  };
  Kind kind = Kind::Point;
  TorusPoint2 at{};
  double radius = 0.0;
  bool contains(const TorusPoint2& s) const;
};

// Distance from a singular atom of the given mass inside which evaluating exp(-c (xi+w)/(xi-w))
// loses more than tol: |phi'(w)| ~ 2c/|xi - w|^2 times a few ulps of w.
double singular_exemption_radius(double mass, double tol);

std::vector<Exemption> embed_exemptions(const InnerFunction1D& phi, double tol);
std::vector<Exemption> product_exemptions(const ProductInner& P, double tol);
// Neighbourhood of a boundary singularity where Phi* cannot be resolved to tol at rounded points,
// from the vanishing order of the boundary gap there.
double rif_exemption_radius(const RIF_n1& R, const SingularPoint& s, double tol);
std::vector<Exemption> rif_exemptions(const RIF_n1& R, double tol);

// Positive-weight samples must satisfy |Phi*(s) - alpha| <= tol unless inside a declared exemption.
std::vector<SupportEntry> support_inclusion_check(const TorusMeasure2D& mu, const BoundaryFn& Phi,
                                                  UnimodularConstant alpha,
                                                  std::size_t samples_per_component,
                                                  const std::vector<Exemption>& exempt);

// All mixed-sign modes with |k_i| <= kmax; allowed = tol + tail bound.
std::vector<FourierEntry> fourier_rp_check(const TorusMeasure2D& mu, int kmax, const QuadratureGrid& grid,
                                           double tol = 1e-8);

struct CheckOptions {
  std::size_t test_points = 100;
  std::uint64_t seed = 20240601;
  double identity_relative = 1e-8;
  int fourier_kmax = 8;
  std::size_t support_per_component = 64;
};

// Identity, mass, Fourier and support checks together.
VerificationReport full_check(const TorusMeasure2D& mu, const InteriorFn& Phi, const BoundaryFn& boundary,
                              UnimodularConstant alpha, const std::vector<Exemption>& exempt,
                              const QuadratureGrid& grid, const CheckOptions& options);

}  // namespace clark
