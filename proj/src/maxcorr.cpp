// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#include "gsn/maxcorr.hpp"

#include <cmath>

#include <Eigen/SVD>
#include <fmt/format.h>

#include "gsn/error.hpp"

namespace gsn {
namespace {

constexpr double kPruneMass = 1e-15;

void validate_joint(const DiscretizedJoint& joint) {
  const auto& pmf = joint.pmf;
  if (pmf.rows() != static_cast<Eigen::Index>(joint.grid_x.size()) ||
      pmf.cols() != static_cast<Eigen::Index>(joint.grid_y.size())) {
    throw Error(ErrorCode::InvalidArgument, "pmf shape does not match the grids");
  }
  if (pmf.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty pmf");
  if (!pmf.allFinite() || pmf.minCoeff() < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "pmf entries must be finite and >= 0");
  }
  if (std::abs(pmf.sum() - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("pmf mass {:.17g} is not 1", pmf.sum()));
  }
}

// Rescales a singular vector v (defined on sqrt-marginal coordinates) to a
// function with zero mean and unit variance under the marginal.
Eigen::VectorXd to_function(const Eigen::VectorXd& v, const Eigen::VectorXd& marginal) {
  Eigen::VectorXd f = v.array() / marginal.array().sqrt();
  const double mean = marginal.dot(f);
  f.array() -= mean;
  const double var = marginal.dot(f.cwiseProduct(f));
  if (var > 0.0) f /= std::sqrt(var);
  return f;
}

}  // namespace

DiscretizedJoint discretize_bivariate_gaussian(double rho, int n, double half_width) {
  if (!(std::abs(rho) < 1.0)) throw Error(ErrorCode::DegenerateCorrelation, "|rho| must be < 1");
  if (n < 8) throw Error(ErrorCode::InvalidArgument, "need at least 8 bins");
  if (!(half_width > 0.0)) throw Error(ErrorCode::InvalidArgument, "half_width must be > 0");

  DiscretizedJoint joint;
  const double width = 2.0 * half_width / n;
  joint.grid_x.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) joint.grid_x[static_cast<std::size_t>(i)] = -half_width + (i + 0.5) * width;
  joint.grid_y = joint.grid_x;

  const double denom = 2.0 * (1.0 - rho * rho);
  joint.pmf.resize(n, n);
  for (int i = 0; i < n; ++i) {
    const double x = joint.grid_x[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      const double y = joint.grid_y[static_cast<std::size_t>(j)];
      // Grouped so that swapping x and y gives the identical double.
      joint.pmf(i, j) = std::exp(-((x * x + y * y) - 2.0 * rho * (x * y)) / denom);
    }
  }
  joint.pmf /= joint.pmf.sum();
  return joint;
}

MaximalCorrelation maximal_correlation(const DiscretizedJoint& joint) {
  validate_joint(joint);
  const Eigen::VectorXd px_all = joint.pmf.rowwise().sum();
  const Eigen::VectorXd py_all = joint.pmf.colwise().sum().transpose();

  std::vector<Eigen::Index> rows, cols;
  MaximalCorrelation out;
  for (Eigen::Index i = 0; i < px_all.size(); ++i) {
    if (px_all(i) >= kPruneMass) {
      rows.push_back(i);
      out.grid_x.push_back(joint.grid_x[static_cast<std::size_t>(i)]);
    }
  }
  for (Eigen::Index j = 0; j < py_all.size(); ++j) {
    if (py_all(j) >= kPruneMass) {
      cols.push_back(j);
      out.grid_y.push_back(joint.grid_y[static_cast<std::size_t>(j)]);
    }
  }
  if (rows.empty() || cols.empty()) throw Error(ErrorCode::DegenerateMarginal, "no bin has positive mass");

  const auto nr = static_cast<Eigen::Index>(rows.size());
  const auto nc = static_cast<Eigen::Index>(cols.size());
  out.p_x = px_all(rows);
  out.p_y = py_all(cols);
  if (out.p_x.minCoeff() <= 0.0 || out.p_y.minCoeff() <= 0.0) {
    throw Error(ErrorCode::DegenerateMarginal, "retained bin with zero marginal mass");
  }

  Eigen::MatrixXd Q(nr, nc);
  for (Eigen::Index i = 0; i < nr; ++i) {
    for (Eigen::Index j = 0; j < nc; ++j) {
      Q(i, j) = joint.pmf(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]) /
                std::sqrt(out.p_x(i) * out.p_y(j));
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(Q, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  out.leading_singular_value = sv(0);
  if (sv.size() < 2) {
    out.rho_star = 0.0;
    out.f = Eigen::VectorXd::Zero(nr);
    out.g = Eigen::VectorXd::Zero(nc);
    return out;
  }
  out.rho_star = sv(1);
  out.f = to_function(svd.matrixU().col(1), out.p_x);
  out.g = to_function(svd.matrixV().col(1), out.p_y);
  // Singular vectors carry an arbitrary joint sign; make f increase with x on average.
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(out.grid_x.data(), nr);
  if (out.p_x.dot(out.f.cwiseProduct(x)) < 0.0) {
    out.f = -out.f;
    out.g = -out.g;
  }
  return out;
}

double linearity_score(const Eigen::VectorXd& f, const std::vector<double>& grid,
                       const Eigen::VectorXd& weights) {
  if (f.size() != static_cast<Eigen::Index>(grid.size()) || f.size() != weights.size()) {
    throw Error(ErrorCode::InvalidArgument, "f, grid and weights must have equal length");
  }
  const Eigen::VectorXd w = weights / weights.sum();
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(grid.data(), f.size());
  x.array() -= w.dot(x);
  Eigen::VectorXd fc = f;
  fc.array() -= w.dot(fc);
  const double sxx = w.dot(x.cwiseProduct(x));
  const double sff = w.dot(fc.cwiseProduct(fc));
  if (sxx <= 0.0 || sff <= 0.0) return 0.0;
  const double sxf = w.dot(x.cwiseProduct(fc));
  return std::clamp(sxf * sxf / (sxx * sff), 0.0, 1.0);
}

DiscretizedJoint tensor_product(const DiscretizedJoint& a, const DiscretizedJoint& b) {
  DiscretizedJoint out;
  const auto ax = a.pmf.rows(), ay = a.pmf.cols();
  const auto bx = b.pmf.rows(), by = b.pmf.cols();
  out.pmf.resize(ax * bx, ay * by);
  for (Eigen::Index i1 = 0; i1 < ax; ++i1) {
    for (Eigen::Index i2 = 0; i2 < bx; ++i2) {
      for (Eigen::Index j1 = 0; j1 < ay; ++j1) {
        for (Eigen::Index j2 = 0; j2 < by; ++j2) {
          out.pmf(i1 * bx + i2, j1 * by + j2) = a.pmf(i1, j1) * b.pmf(i2, j2);
        }
      }
    }
  }
  for (Eigen::Index i1 = 0; i1 < ax; ++i1) {
    for (Eigen::Index i2 = 0; i2 < bx; ++i2) out.grid_x.push_back(a.grid_x[static_cast<std::size_t>(i1)]);
  }
  for (Eigen::Index j1 = 0; j1 < ay; ++j1) {
    for (Eigen::Index j2 = 0; j2 < by; ++j2) out.grid_y.push_back(a.grid_y[static_cast<std::size_t>(j1)]);
  }
  // Products of two unit masses drift by a few ulps.
  out.pmf /= out.pmf.sum();
  return out;
}

}  // namespace gsn
