#pragma once

#include <vector>

#include "clark/inner_function.hpp"
#include "clark/measure.hpp"

namespace clark {

inline constexpr int kDefaultTruncation = 10000;

// Finite Blaschke product times monomial: exactly n atoms, no tail.
DiscreteMeasure1D clark_blaschke(const InnerFunction1D& phi, UnimodularConstant alpha);

// exp(-c (xi + z)/(xi - z)): atoms for |k| <= K in closed form, analytic tail bound.
DiscreteMeasure1D clark_atomic_singular(double c, TorusPoint xi, UnimodularConstant alpha, int K);

// Bound on the weight of the omitted atoms of the single-atom family, sum_{|k|>K}.
double atomic_singular_tail_bound(double c, int K);

// Dispatch over the supported classes (Blaschke-type, or e^{ia} times one singular atom).
DiscreteMeasure1D clark_measure1d(const InnerFunction1D& phi, UnimodularConstant alpha,
                                  int K = kDefaultTruncation);

// Atom locations and weights of clark_measure1d as complex points, without the
// angle bookkeeping; used on hot paths.
void clark_fiber_atoms(const InnerFunction1D& phi, UnimodularConstant alpha, int K,
                       std::vector<Complex>& points, std::vector<double>& weights);

bool clark1d_supported(const InnerFunction1D& phi);

struct LevelPoints {
  std::vector<TorusPoint> points;
  std::vector<TorusPoint> accumulation;  // zero-weight limit points
};

LevelPoints level_points(const InnerFunction1D& phi, UnimodularConstant alpha,
                         int K = kDefaultTruncation);

// (1-|phi(0)|^2)/|alpha-phi(0)|^2
double clark_total_mass(const InnerFunction1D& phi, UnimodularConstant alpha);

}  // namespace clark
