#include "bagcd/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "bagcd/clustering.hpp"
#include "bagcd/error.hpp"

namespace bagcd {

namespace {

std::vector<RootCluster> as_singletons(const std::vector<Complex>& roots) {
  std::vector<RootCluster> out;
  out.reserve(roots.size());
  for (const Complex& z : roots) out.push_back({z, 1});
  return out;
}

// Means of conjugate partner pairs are averaged jointly so the product of
// the common roots stays real.
void symmetrize_conjugates(std::vector<RootCluster>& roots, double tolerance) {
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i] || !(roots[i].center.imag() > 0.0)) continue;
    std::size_t best = roots.size();
    double best_distance = tolerance;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j] || !(roots[j].center.imag() < 0.0)) continue;
      const double dist = std::abs(std::conj(roots[j].center) - roots[i].center);
      if (dist <= best_distance) {
        best = j;
        best_distance = dist;
      }
    }
    if (best == roots.size()) continue;
    const Complex mean = 0.5 * (roots[i].center + std::conj(roots[best].center));
    const int t = std::min(roots[i].multiplicity, roots[best].multiplicity);
    roots[i] = {mean, t};
    roots[best] = {std::conj(mean), t};
    used[i] = used[best] = true;
  }
}

// Whatever complex root is still unpaired: a root close to the axis (as when
// a complex center was matched with a real one) is made real; otherwise its
// conjugate is added, since real P~ and Q~ vanish there anyway.
void close_under_conjugation(std::vector<RootCluster>& roots, double snap) {
  std::vector<RootCluster> added;
  for (RootCluster& r : roots) {
    if (r.center.imag() == 0.0) continue;
    const Complex partner = std::conj(r.center);
    const bool paired = std::any_of(roots.begin(), roots.end(), [&](const RootCluster& o) {
      return o.center == partner && o.multiplicity == r.multiplicity;
    });
    if (paired) continue;
    if (std::abs(r.center.imag()) <= snap) {
      r.center.imag(0.0);
    } else {
      added.push_back({partner, r.multiplicity});
    }
  }
  roots.insert(roots.end(), added.begin(), added.end());
}

double root_distance(const RootList& original, const BernsteinPoly& perturbed, const NormSpec& norm,
                     const RootOptions& root_options) {
  const RootList moved = roots(perturbed, root_options);
  const auto assignment = bottleneck_assignment(original.roots, moved.roots);
  const NormSpec unit(norm.exponent());
  return root_semimetric(original.roots, moved.roots, assignment, unit);
}

void sort_roots(std::vector<RootCluster>& roots) {
  std::sort(roots.begin(), roots.end(), [](const RootCluster& l, const RootCluster& r) {
    const Complex a = l.center;
    const Complex b = r.center;
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
}

}  // namespace

AgcdResult agcd(const BernsteinPoly& p, const BernsteinPoly& q, const AgcdOptions& options) {
  if (!(options.sigma > 0.0)) throw Error(ErrorCode::invalid_argument, "sigma must be > 0");
  if (!(options.edge_factor > 0.0)) throw Error(ErrorCode::invalid_argument, "edge factor must be > 0");
  if (p.degree() < 1 || q.degree() < 1) {
    throw Error(ErrorCode::invalid_argument, "both polynomials need degree >= 1");
  }
  if (!(p.interval() == q.interval())) {
    throw Error(ErrorCode::invalid_argument, "both polynomials must use the same interval");
  }
  const Interval iv = p.interval();

  AgcdResult result;
  result.agcd_poly = BernsteinPoly({1.0}, iv);
  result.p_tilde = p;
  result.q_tilde = q;

  // Step 1: roots.
  result.p_roots = roots(p, options.root_options);
  result.q_roots = roots(q, options.root_options);

  if (options.cluster_before_matching) {
    result.p_clusters = cluster_roots(result.p_roots.roots, options.sigma);
    result.q_clusters = cluster_roots(result.q_roots.roots, options.sigma);
  } else {
    result.p_clusters = as_singletons(result.p_roots.roots);
    result.q_clusters = as_singletons(result.q_roots.roots);
  }

  // Steps 2 and 3: root graph and maximum matching.
  result.graph = build_root_graph(result.p_clusters, result.q_clusters, options.sigma, options.edge_factor);
  result.matching = hopcroft_karp(result.graph);
  if (result.matching.empty()) return result;

  // Step 4: common roots as pair means.
  std::vector<bool> p_matched(result.p_clusters.size(), false);
  std::vector<bool> q_matched(result.q_clusters.size(), false);
  for (const MatchedPair& m : result.matching.pairs) {
    const Complex z = 0.5 * (result.graph.left[static_cast<std::size_t>(m.left)].center +
                             result.graph.right[static_cast<std::size_t>(m.right)].center);
    result.agcd_roots.push_back({z, m.multiplicity});
    p_matched[static_cast<std::size_t>(m.left)] = true;
    q_matched[static_cast<std::size_t>(m.right)] = true;
  }
  symmetrize_conjugates(result.agcd_roots, options.edge_factor * options.sigma);
  close_under_conjugation(result.agcd_roots, 0.5 * options.edge_factor * options.sigma);
  sort_roots(result.agcd_roots);
  for (const RootCluster& r : result.agcd_roots) result.degree += r.multiplicity;
  result.agcd_poly = poly_from_roots(result.agcd_roots, 1.0, iv);

  // Step 5: nearby polynomials with the common roots made exact.
  auto targets_for = [&](const std::vector<RootCluster>& clusters, const std::vector<bool>& matched) {
    std::vector<RootCluster> targets = result.agcd_roots;
    if (options.enforce_unmatched_roots) {
      for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (!matched[i]) targets.push_back(clusters[i]);
      }
    }
    return targets;
  };
  const Reconstruction p_rec =
      reconstruct(p, targets_for(result.p_clusters, p_matched), options.norm, options.residual_tol);
  const Reconstruction q_rec =
      reconstruct(q, targets_for(result.q_clusters, q_matched), options.norm, options.residual_tol);
  result.p_tilde = p_rec.poly;
  result.q_tilde = q_rec.poly;
  result.p_residuals = p_rec.residuals;
  result.q_residuals = q_rec.residuals;

  bool agcd_ok = true;
  for (const RootCluster& r : result.agcd_roots) {
    const double value = std::abs(eval_decasteljau(result.agcd_poly, r.center));
    agcd_ok = agcd_ok && value <= options.residual_tol * eval_magnitude(result.agcd_poly, r.center);
  }
  result.verified = agcd_ok && p_rec.verified && q_rec.verified;

  result.distances.coefficient_p = coefficient_distance(p, result.p_tilde, options.norm);
  result.distances.coefficient_q = coefficient_distance(q, result.q_tilde, options.norm);
  result.distances.root_p = root_distance(result.p_roots, result.p_tilde, options.norm, options.root_options);
  result.distances.root_q = root_distance(result.q_roots, result.q_tilde, options.norm, options.root_options);
  return result;
}

}  // namespace bagcd
