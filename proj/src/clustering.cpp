#include "bagcd/clustering.hpp"

#include <algorithm>

#include "bagcd/error.hpp"

namespace bagcd {

std::vector<RootCluster> cluster_roots(std::span<const Complex> roots, double sigma,
                                       ScanOrder order) {
  if (roots.empty()) throw Error(ErrorCode::invalid_argument, "cannot cluster an empty root list");
  if (!(sigma > 0.0)) throw Error(ErrorCode::invalid_argument, "sigma must be > 0");

  std::vector<Complex> pending(roots.begin(), roots.end());
  if (order == ScanOrder::sorted) {
    std::stable_sort(pending.begin(), pending.end(), [](const Complex& l, const Complex& r) {
      return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
    });
  }

  std::vector<RootCluster> clusters;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const Complex pivot = pending[i];
    Complex sum = pivot;
    int count = 1;
    std::size_t j = i + 1;
    while (j < pending.size()) {
      if (std::abs(pivot - pending[j]) <= sigma) {
        sum += pending[j];
        ++count;
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(j));
      } else {
        ++j;
      }
    }
    clusters.push_back({sum / static_cast<double>(count), count});
  }
  return clusters;
}

}  // namespace bagcd
