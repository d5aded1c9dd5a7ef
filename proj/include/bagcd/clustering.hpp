#pragma once

#include <span>
#include <vector>

#include "bagcd/bernstein.hpp"

namespace bagcd {

enum class ScanOrder {
  sorted,    // scan by (real, imag); deterministic across eigensolvers
  as_given,  // scan in the order supplied
};

/// Greedy pivot clustering. Each unconsumed root becomes a pivot and absorbs
/// every later root within sigma of the pivot (not of the growing cluster).
/// The cluster is reported as (mean of absorbed roots, count).
std::vector<RootCluster> cluster_roots(std::span<const Complex> roots, double sigma,
                                       ScanOrder order = ScanOrder::sorted);

}  // namespace bagcd
