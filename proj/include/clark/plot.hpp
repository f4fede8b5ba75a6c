#pragma once

#include <string>
#include <vector>

#include "clark/product.hpp"
#include "clark/rif.hpp"

namespace clark {

struct CurveSample {
  std::string component_id;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double weight = 0.0;
};

// Graph and line components of the RIF Clark measures, ids "alpha<i>_graph0" and "alpha<i>_line<k>".
std::vector<CurveSample> sample_rif_curves(const RIF_n1& R, const std::vector<double>& alpha_angles,
                                           std::size_t samples);

// Branches (zeta, g_k(zeta)) of exp x exp for the listed k, ids "alpha0_branch<k>".
std::vector<CurveSample> sample_expexp_curves(double nu, const std::vector<long>& ks, std::size_t samples);

// The two traced branches of Blaschke x exp, ids "alpha0_branch1" and "alpha0_branch2".
std::vector<CurveSample> sample_blaschke_exp_curves(Complex lambda, double nu, std::size_t samples);

// Replaces each angle lying within tol radians of an exceptional value of R by that value's
// angle, so that rounded command-line input such as 3.141593 selects alpha = -1.
std::vector<double> snap_to_exceptional(const RIF_n1& R, std::vector<double> alpha_angles, double tol = 1e-6);

inline constexpr int kFigureCount = 5;

// Parameter sets of the five reference figures:
//   1  RIF p1 = 4 - 3z + z^2, p2 = -1 - z, alpha in {1, e^{i pi/4}, i, -1}
//   2, 3  Blaschke x exp, lambda = i/2, alpha = e^{i pi/4} (level curves, weights)
//   4, 5  exp x exp, alpha = 1, k in {-1, 0, 2} (level curves, weights)
std::vector<CurveSample> figure_data(int figure, std::size_t samples = 1024);
bool figure_shows_weights(int figure);

std::string to_csv(const std::vector<CurveSample>& rows);

// Level curves on [0, 2pi)^2, or weight against theta1; one colour class per alpha/branch prefix,
// stroke opacity from the weight.
std::string to_svg(const std::vector<CurveSample>& rows, bool weights);

}  // namespace clark
