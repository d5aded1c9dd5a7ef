#pragma once

#include <vector>

#include "bagcd/bernstein.hpp"
#include "bagcd/matching.hpp"
#include "bagcd/pencil.hpp"
#include "bagcd/reconstruction.hpp"

namespace bagcd {

struct AgcdOptions {
  double sigma = 0.0;
  double edge_factor = 2.0;
  NormSpec norm;                   // coefficient distances and reconstruction
  double residual_tol = 1e-8;
  bool cluster_before_matching = true;
  // Also keep unmatched clusters of each input as roots of its perturbed
  // polynomial. Off by default: only the common roots are imposed.
  bool enforce_unmatched_roots = false;
  RootOptions root_options;
};

struct AgcdDistances {
  double coefficient_p = 0.0;  // ||P - P~||
  double coefficient_q = 0.0;  // ||Q - Q~||
  double root_p = 0.0;         // rho(P, P~)
  double root_q = 0.0;         // rho(Q, Q~)
};

struct AgcdResult {
  std::vector<RootCluster> agcd_roots;  // (z_s, t_s)
  BernsteinPoly agcd_poly;              // monic product of (x - z_s)^t_s
  BernsteinPoly p_tilde;
  BernsteinPoly q_tilde;
  AgcdDistances distances;
  int degree = 0;                       // sum of t_s

  // Intermediate stages, kept for reports and tests.
  RootList p_roots;
  RootList q_roots;
  std::vector<RootCluster> p_clusters;
  std::vector<RootCluster> q_clusters;
  RootGraph graph;
  Matching matching;
  std::vector<RootResidual> p_residuals;
  std::vector<RootResidual> q_residuals;
  bool verified = true;                 // every imposed root met residual_tol
};

/// Root-matching approximate GCD: roots from the companion pencil, pivot
/// clustering, a root graph with edges up to edge_factor * sigma, a maximum
/// matching, pair means as common roots, and minimal relative perturbations
/// of both inputs that make those roots exact.
AgcdResult agcd(const BernsteinPoly& p, const BernsteinPoly& q, const AgcdOptions& options);

}  // namespace bagcd
