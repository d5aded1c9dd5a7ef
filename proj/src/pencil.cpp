#include "bagcd/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "bagcd/error.hpp"

namespace bagcd {

CompanionPencil build_companion_pencil(std::span<const double> coefficients) {
  const int n = static_cast<int>(coefficients.size()) - 1;
  if (n < 1) {
    throw Error(ErrorCode::invalid_argument, "a constant polynomial has no companion pencil");
  }
  CompanionPencil pencil{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
  for (int col = 0; col < n; ++col) {
    const double entry = -coefficients[static_cast<std::size_t>(n - 1 - col)];
    pencil.a(0, col) = entry;
    pencil.b(0, col) = entry;
  }
  pencil.b(0, 0) += coefficients[static_cast<std::size_t>(n)] / n;
  // Rows 2..n (1-based): subdiagonal ones; B carries j / (n - j + 1) on the diagonal.
  for (int row = 1; row < n; ++row) {
    pencil.a(row, row - 1) = 1.0;
    pencil.b(row, row - 1) = 1.0;
    pencil.b(row, row) = static_cast<double>(row + 1) / (n - row);
  }
  return pencil;
}

CompanionPencil build_companion_pencil(const BernsteinPoly& p) {
  return build_companion_pencil(p.coefficients());
}

std::vector<EigenPair> generalized_eigenvalues(const CompanionPencil& pencil) {
  const int n = pencil.degree();
  std::vector<EigenPair> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    // QZ on a 1x1 pencil is the pencil itself.
    double alpha = pencil.a(0, 0);
    double beta = pencil.b(0, 0);
    if (beta < 0.0) {
      alpha = -alpha;
      beta = -beta;
    }
    pairs.push_back({Complex(alpha, 0.0), beta});
    return pairs;
  }

  Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> solver;
  solver.setMaxIterations(40 * n);
  solver.compute(pencil.a, pencil.b, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::no_convergence,
                "QZ iteration did not converge within " + std::to_string(40 * n) + " sweeps");
  }
  const Eigen::VectorXcd alphas = solver.alphas();
  const Eigen::VectorXd betas = solver.betas();
  for (int k = 0; k < n; ++k) {
    Complex alpha = alphas(k);
    double beta = betas(k);
    if (beta < 0.0) {
      alpha = -alpha;
      beta = -beta;
    }
    pairs.push_back({alpha, beta});
  }
  return pairs;
}

bool RootList::all_verified() const {
  return std::all_of(residual_ok.begin(), residual_ok.end(), [](bool ok) { return ok; });
}

RootList roots(const BernsteinPoly& p, const RootOptions& options) {
  if (p.degree() < 1) {
    throw Error(ErrorCode::invalid_argument, "root finding needs degree >= 1");
  }
  if (p.is_zero()) {
    throw Error(ErrorCode::identically_zero, "polynomial is identically zero");
  }
  // Same coefficients on [0, 1] in the local parameter t.
  const std::vector<EigenPair> pairs = generalized_eigenvalues(build_companion_pencil(p.coefficients()));
  double max_beta = 0.0;
  for (const EigenPair& e : pairs) max_beta = std::max(max_beta, e.beta);

  RootList out;
  const Interval& iv = p.interval();
  for (const EigenPair& e : pairs) {
    // Relative to the largest beta, and to the pair's own alpha so that a
    // pencil whose eigenvalues are all infinite is still recognised.
    if (e.beta <= options.infinite_threshold * max_beta ||
        e.beta <= options.infinite_threshold * std::abs(e.alpha)) {
      ++out.discarded_count;
      continue;
    }
    Complex z = iv.a + iv.width() * e.value();
    if (std::abs(z.imag()) <= options.imag_cleanup * (1.0 + std::abs(z))) z.imag(0.0);
    out.roots.push_back(z);
  }
  if (out.roots.empty()) {
    throw Error(ErrorCode::no_finite_roots, "all generalized eigenvalues are infinite; no finite roots");
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Complex& l, const Complex& r) {
    return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
  });
  for (const Complex& z : out.roots) {
    const double scale = eval_magnitude(p, z);
    const double value = std::abs(eval_decasteljau(p, z));
    const double relative = scale > 0.0 ? value / scale : value;
    out.residuals.push_back(relative);
    out.residual_ok.push_back(relative <= options.residual_tol);
  }
  return out;
}

}  // namespace bagcd
