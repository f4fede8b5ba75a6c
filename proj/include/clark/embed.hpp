#pragma once

#include <span>
#include <vector>

#include "clark/clark1d.hpp"
#include "clark/measure.hpp"

namespace clark {

// Antidiagonals through every level point, including zero-weight ones through
// accumulation points.
std::vector<CurveComponent> embed_level_set(const InnerFunction1D& phi, UnimodularConstant alpha,
                                            int K = kDefaultTruncation);

// Clark measure of phi(z1 z2): positive-weight antidiagonals only.
ClarkMeasure2D embed_clark2d(const InnerFunction1D& phi, UnimodularConstant alpha,
                             int K = kDefaultTruncation);

struct EmbeddedClarkND {
  DiscreteMeasure1D base;
  int dimension = 2;
};

inline constexpr int kMaxEmbedDimension = 4;

EmbeddedClarkND embed_clark_nd(const InnerFunction1D& phi, UnimodularConstant alpha, int d,
                               int K = kDefaultTruncation);

class TestFamilyND {
 public:
  virtual ~TestFamilyND() = default;
  virtual std::size_t size() const = 0;
  virtual int dimension() const = 0;
  virtual void eval(std::span<const Complex> zeta, std::span<Complex> out) const = 0;
  // out[i] += sum_j w_j f_i(prefix..., last_j)
  virtual void accumulate_last(std::span<const Complex> prefix, std::span<const Complex> last,
                               std::span<const double> w, std::span<Complex> out) const;
  virtual std::vector<double> sup_norms() const = 0;
};

class PoissonFamilyND : public TestFamilyND {
 public:
  explicit PoissonFamilyND(std::vector<std::vector<Complex>> centres);

  std::size_t size() const override { return z_.size(); }
  int dimension() const override { return d_; }
  void eval(std::span<const Complex> zeta, std::span<Complex> out) const override;
  void accumulate_last(std::span<const Complex> prefix, std::span<const Complex> last,
                       std::span<const double> w, std::span<Complex> out) const override;
  std::vector<double> sup_norms() const override;

 private:
  std::vector<std::vector<Complex>> z_;
  int d_ = 0;
};

class ConstantFamilyND : public TestFamilyND {
 public:
  explicit ConstantFamilyND(int d) : d_(d) {}
  std::size_t size() const override { return 1; }
  int dimension() const override { return d_; }
  void eval(std::span<const Complex>, std::span<Complex> out) const override { out[0] = 1.0; }
  std::vector<double> sup_norms() const override { return {1.0}; }

 private:
  int d_;
};

// Iterated trapezoid rule over zeta_1..zeta_{d-1} with the atom sum innermost.
// d = 2 uses the grid as given; d >= 3 uses N/8 nodes per nested coordinate.
std::vector<IntegralEstimate> integrate_embed_nd(const EmbeddedClarkND& em,
                                                 const TestFamilyND& family,
                                                 const QuadratureGrid& grid);

}  // namespace clark
