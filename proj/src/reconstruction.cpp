#include "bagcd/reconstruction.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "bagcd/error.hpp"

namespace bagcd {

namespace {

Complex eval_column(const Eigen::MatrixXd& m, Eigen::Index col, Interval iv, Complex x) {
  const Eigen::VectorXd c = m.col(col);
  return decasteljau(std::span<const double>(c.data(), static_cast<std::size_t>(c.size())),
                     (x - iv.a) / iv.width());
}

// Targets whose conjugate partner is already listed contribute no rows.
std::vector<bool> redundant_conjugates(std::span<const RootCluster> targets) {
  std::vector<bool> redundant(targets.size(), false);
  std::vector<bool> used(targets.size(), false);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Complex z = targets[i].center;
    if (!(z.imag() > 0.0)) continue;
    const double tol = 1e-10 * (1.0 + std::abs(z));
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if (used[j] || !(targets[j].center.imag() < 0.0)) continue;
      if (targets[j].multiplicity == targets[i].multiplicity &&
          std::abs(std::conj(targets[j].center) - z) <= tol) {
        used[j] = true;
        redundant[j] = true;
        break;
      }
    }
  }
  return redundant;
}

}  // namespace

PerturbationSystem build_perturbation_system(const BernsteinPoly& p,
                                             std::span<const RootCluster> targets) {
  if (targets.empty()) throw Error(ErrorCode::invalid_argument, "no target roots given");
  if (p.is_zero()) throw Error(ErrorCode::identically_zero, "polynomial is identically zero");
  const int n = p.degree();
  int total = 0;
  for (const RootCluster& t : targets) {
    if (t.multiplicity < 1) throw Error(ErrorCode::invalid_argument, "multiplicity must be >= 1");
    total += t.multiplicity;
  }
  if (total > n) {
    throw Error(ErrorCode::over_constrained,
                "over-constrained: total multiplicity " + std::to_string(total) +
                    " exceeds degree " + std::to_string(n));
  }

  PerturbationSystem sys;
  sys.degree = n;
  for (int i = 0; i <= n; ++i) {
    (p.coefficient(i) == 0.0 ? sys.zero_mask : sys.columns).push_back(i);
  }

  const Interval iv = p.interval();
  const Eigen::MatrixXd d = differentiation_matrix(n, iv);
  const Eigen::Map<const Eigen::VectorXd> coeffs(p.coefficients().data(), n + 1);
  const std::vector<bool> redundant = redundant_conjugates(targets);

  std::vector<Eigen::VectorXd> rows;
  std::vector<double> rhs;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (redundant[t]) continue;
    const Complex alpha = targets[t].center;
    const bool is_complex = alpha.imag() != 0.0;
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n + 1, n + 1);
    for (int k = 0; k < targets[t].multiplicity; ++k) {
      Eigen::VectorXcd row(static_cast<Eigen::Index>(sys.columns.size()));
      for (std::size_t c = 0; c < sys.columns.size(); ++c) {
        const int i = sys.columns[c];
        row(static_cast<Eigen::Index>(c)) = p.coefficient(i) * eval_column(power, i, iv, alpha);
      }
      const Eigen::VectorXd derived = power * coeffs;
      const Complex value = decasteljau(
          std::span<const double>(derived.data(), static_cast<std::size_t>(derived.size())),
          (alpha - iv.a) / iv.width());
      rows.push_back(row.real());
      rhs.push_back(-value.real());
      if (is_complex) {
        rows.push_back(row.imag());
        rhs.push_back(-value.imag());
      }
      power = d * power;
    }
  }

  sys.matrix.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(sys.columns.size()));
  sys.rhs.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    sys.matrix.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
    sys.rhs(static_cast<Eigen::Index>(r)) = rhs[r];
  }
  return sys;
}

Eigen::VectorXd solve_min_norm(const PerturbationSystem& system, const NormSpec& spec) {
  const int n = system.degree;
  const std::vector<double> weights = spec.weights_for(static_cast<std::size_t>(n + 1));
  Eigen::VectorXd delta = Eigen::VectorXd::Zero(n + 1);
  if (system.matrix.rows() == 0 || system.columns.empty()) return delta;

  // Rescale to u_i = w_i dp_i, and equilibrate rows (which leaves the
  // solution set of a consistent system unchanged).
  Eigen::MatrixXd m = system.matrix;
  Eigen::VectorXd b = system.rhs;
  for (std::size_t c = 0; c < system.columns.size(); ++c) {
    m.col(static_cast<Eigen::Index>(c)) /= weights[static_cast<std::size_t>(system.columns[c])];
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const double s = m.row(r).cwiseAbs().maxCoeff();
    if (s > 0.0) {
      m.row(r) /= s;
      b(r) /= s;
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? 1e-12 * sv(0) : 0.0;
  Eigen::VectorXd projected = svd.matrixU().transpose() * b;
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > cutoff && sv(k) > 0.0) {
      projected(k) /= sv(k);
      ++rank;
    } else {
      projected(k) = 0.0;
    }
  }
  if (rank == 0 && b.cwiseAbs().maxCoeff() > 0.0) {
    throw Error(ErrorCode::infeasible_constraints,
                "infeasible constraints: the perturbation system has numerical rank 0");
  }
  const Eigen::VectorXd u = svd.matrixV() * projected;
  for (std::size_t c = 0; c < system.columns.size(); ++c) {
    const int i = system.columns[c];
    delta(i) = u(static_cast<Eigen::Index>(c)) / weights[static_cast<std::size_t>(i)];
  }
  return delta;
}

std::vector<RootResidual> derivative_residuals(const BernsteinPoly& p,
                                               std::span<const RootCluster> targets, double tol) {
  std::vector<RootResidual> out;
  const int n = p.degree();
  const Interval iv = p.interval();
  const Eigen::Map<const Eigen::VectorXd> coeffs(p.coefficients().data(), n + 1);
  const Eigen::MatrixXd d = n >= 1 ? differentiation_matrix(n, iv) : Eigen::MatrixXd::Zero(1, 1);
  for (const RootCluster& t : targets) {
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n + 1, n + 1);
    for (int k = 0; k < t.multiplicity; ++k) {
      RootResidual r{t.center, k, 0.0, 0.0, true};
      const Eigen::VectorXd derived = power * coeffs;
      r.value = std::abs(decasteljau(
          std::span<const double>(derived.data(), static_cast<std::size_t>(derived.size())),
          (t.center - iv.a) / iv.width()));
      for (int i = 0; i <= n; ++i) {
        const Eigen::VectorXd col = power.col(i);
        r.scale += std::abs(p.coefficient(i)) *
                   eval_magnitude(std::span<const double>(col.data(), static_cast<std::size_t>(col.size())),
                                  iv, t.center);
      }
      r.ok = r.value <= tol * r.scale;
      out.push_back(r);
      power = d * power;
    }
  }
  return out;
}

Reconstruction reconstruct(const BernsteinPoly& p, std::span<const RootCluster> targets,
                           const NormSpec& spec, double residual_tol) {
  const PerturbationSystem sys = build_perturbation_system(p, targets);
  Eigen::VectorXd delta = solve_min_norm(sys, spec);
  std::vector<double> coeffs(p.coefficients().begin(), p.coefficients().end());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i] *= 1.0 + delta(static_cast<Eigen::Index>(i));
  }
  Reconstruction out{BernsteinPoly(std::move(coeffs), p.interval()), std::move(delta), {}, true};
  out.residuals = derivative_residuals(out.poly, targets, residual_tol);
  out.verified = std::all_of(out.residuals.begin(), out.residuals.end(),
                             [](const RootResidual& r) { return r.ok; });
  return out;
}

BernsteinPoly approximate_polynomial(const BernsteinPoly& p, std::span<const RootCluster> targets,
                                     const NormSpec& spec) {
  return reconstruct(p, targets, spec).poly;
}

}  // namespace bagcd
