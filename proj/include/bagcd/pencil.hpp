#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bagcd/bernstein.hpp"

namespace bagcd {

// Companion pencil (A, B) of a degree-n Bernstein polynomial on [0, 1]:
// det(x B - A) is proportional to p(x), so the roots of p are the
// generalized eigenvalues of the pair.
struct CompanionPencil {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;

  int degree() const { return static_cast<int>(a.rows()); }
};

CompanionPencil build_companion_pencil(std::span<const double> coefficients);
CompanionPencil build_companion_pencil(const BernsteinPoly& p);

// Eigenvalue alpha / beta; beta == 0 marks an infinite eigenvalue.
struct EigenPair {
  Complex alpha;
  double beta = 0.0;

  Complex value() const { return alpha / beta; }
};

/// Solves the dense generalized eigenproblem with the real QZ iteration.
/// Returns one pair per eigenvalue with beta >= 0.
std::vector<EigenPair> generalized_eigenvalues(const CompanionPencil& pencil);

struct RootOptions {
  double infinite_threshold = 1e-10;  // beta <= threshold * max(max beta, |alpha|) is infinite
  double residual_tol = 1e-8;         // |p(z)| <= tol * sum |c_k B_k(z)|
  double imag_cleanup = 1e-10;        // |Im z| <= cleanup * (1 + |z|) becomes real
};

struct RootList {
  std::vector<Complex> roots;        // sorted by (real, imag)
  std::vector<double> residuals;     // relative residual of each root
  std::vector<bool> residual_ok;
  int discarded_count = 0;           // eigenvalues classified as infinite

  bool all_verified() const;
};

/// Roots of p through its companion pencil. General intervals are reduced to
/// [0, 1] by the affine change of variable and mapped back afterwards.
RootList roots(const BernsteinPoly& p, const RootOptions& options = {});

}  // namespace bagcd
