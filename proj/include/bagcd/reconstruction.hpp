#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bagcd/bernstein.hpp"

namespace bagcd {

// Linear conditions on the relative perturbations dp_i (so that the new
// coefficients are p_i (1 + dp_i)) forcing each target root to the requested
// multiplicity. Columns of zero coefficients are dropped; those coefficients
// stay zero.
struct PerturbationSystem {
  Eigen::MatrixXd matrix;     // rows x columns.size()
  Eigen::VectorXd rhs;
  std::vector<int> columns;   // coefficient index of each matrix column
  std::vector<int> zero_mask; // coefficient indices with p_i == 0
  int degree = 0;
};

/// One row per derivative order k < d of each target: the k-th derivative of
/// sum_i p_i dp_i B_i at the root equals -P^(k)(root). A complex root
/// contributes its real and imaginary parts as two rows; its conjugate, if
/// also listed, adds nothing further, so conjugate-closed targets give
/// exactly sum d_j rows.
PerturbationSystem build_perturbation_system(const BernsteinPoly& p,
                                             std::span<const RootCluster> targets);

/// Least-squares solution of minimal weighted 2-norm via the SVD, in the
/// rescaled unknowns u_i = w_i dp_i. Singular values below 1e-12 * s_max are
/// treated as zero. Returns dp for all n+1 coefficients.
Eigen::VectorXd solve_min_norm(const PerturbationSystem& system, const NormSpec& spec = {});

struct RootResidual {
  Complex root;
  int order = 0;       // derivative order k
  double value = 0.0;  // |P~^(k)(root)|
  double scale = 0.0;  // componentwise magnitude of the same evaluation
  bool ok = true;
};

/// |(D^k P)(root)| for every target and k < multiplicity, with the scale
/// sum_i |p_i| * sum_j |(D^k e_i)_j| |B_j(root)|.
std::vector<RootResidual> derivative_residuals(const BernsteinPoly& p,
                                               std::span<const RootCluster> targets,
                                               double tol = 1e-8);

struct Reconstruction {
  BernsteinPoly poly;
  Eigen::VectorXd relative_perturbation;
  std::vector<RootResidual> residuals;
  bool verified = true;
};

Reconstruction reconstruct(const BernsteinPoly& p, std::span<const RootCluster> targets,
                           const NormSpec& spec = {}, double residual_tol = 1e-8);

/// Nearby polynomial sum p_i (1 + dp_i) B_i that has every target as a root
/// of at least the requested multiplicity.
BernsteinPoly approximate_polynomial(const BernsteinPoly& p, std::span<const RootCluster> targets,
                                     const NormSpec& spec = {});

}  // namespace bagcd
