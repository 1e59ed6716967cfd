// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <Eigen/Dense>

namespace gsn {

/// Joint pmf on a finite grid. pmf(i, j) = P(X = grid_x[i], Y = grid_y[j]).
struct DiscretizedJoint {
  std::vector<double> grid_x;
  std::vector<double> grid_y;
  Eigen::MatrixXd pmf;
};

/// Midpoint-rule discretization of the standard bivariate normal with
/// correlation rho on [-half_width, half_width]^2, n bins per axis,
/// renormalized to total mass 1.
DiscretizedJoint discretize_bivariate_gaussian(double rho, int n = 64, double half_width = 4.0);

struct MaximalCorrelation {
  double rho_star = 0.0;
  /// Largest singular value of Q; 1 for any valid joint.
  double leading_singular_value = 0.0;
  /// Optimal f and g on the retained bins, zero mean and unit variance
  /// under the marginals.
  Eigen::VectorXd f;
  Eigen::VectorXd g;
  /// Retained bins (marginal mass >= 1e-15) and their marginals.
  std::vector<double> grid_x;
  std::vector<double> grid_y;
  Eigen::VectorXd p_x;
  Eigen::VectorXd p_y;
};

/// HGR maximal correlation: the second singular value of
/// Q(i, j) = pmf(i, j) / sqrt(p_x(i) p_y(j)).
MaximalCorrelation maximal_correlation(const DiscretizedJoint& joint);

/// Squared correlation between f and the grid values under the weights.
/// 1 means f is an affine function of the grid.
double linearity_score(const Eigen::VectorXd& f, const std::vector<double>& grid,
                       const Eigen::VectorXd& weights);

/// Joint of two independent pairs: X = (X1, X2), Y = (Y1, Y2), with bins in
/// row-major order. Grid values are the first coordinate.
DiscretizedJoint tensor_product(const DiscretizedJoint& a, const DiscretizedJoint& b);

}  // namespace gsn
