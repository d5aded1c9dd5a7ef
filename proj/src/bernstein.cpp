#include "bagcd/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bagcd/error.hpp"

namespace bagcd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::incompatible_weights: return "incompatible_weights";
    case ErrorCode::identically_zero: return "identically_zero";
    case ErrorCode::no_finite_roots: return "no_finite_roots";
    case ErrorCode::no_convergence: return "no_convergence";
    case ErrorCode::nothing_to_match: return "nothing_to_match";
    case ErrorCode::over_constrained: return "over_constrained";
    case ErrorCode::infeasible_constraints: return "infeasible_constraints";
    case ErrorCode::not_conjugate_closed: return "not_conjugate_closed";
    case ErrorCode::invalid_input: return "invalid_input";
  }
  return "unknown";
}

namespace {

void check_interval(const Interval& interval) {
  if (!(std::isfinite(interval.a) && std::isfinite(interval.b) && interval.a < interval.b)) {
    throw Error(ErrorCode::invalid_argument, "interval must satisfy a < b with finite ends");
  }
}

template <typename T>
double weighted_norm_impl(std::span<const T> v, const NormSpec& spec) {
  const std::vector<double> w = spec.weights_for(v.size());
  if (spec.is_infinity()) {
    double m = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) m = std::max(m, std::abs(w[k] * v[k]));
    return m;
  }
  if (spec.exponent() == 1) {
    double s = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) s += std::abs(w[k] * v[k]);
    return s;
  }
  if (spec.exponent() == 2) {
    double s = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const double a = std::abs(w[k] * v[k]);
      s += a * a;
    }
    return std::sqrt(s);
  }
  const double r = spec.exponent();
  double s = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) s += std::pow(std::abs(w[k] * v[k]), r);
  return std::pow(s, 1.0 / r);
}

}  // namespace

BernsteinPoly::BernsteinPoly() : coefficients_{0.0} {}

BernsteinPoly::BernsteinPoly(std::vector<double> coefficients, Interval interval)
    : coefficients_(std::move(coefficients)), interval_(interval) {
  if (coefficients_.empty()) {
    throw Error(ErrorCode::invalid_argument, "a Bernstein polynomial needs at least one coefficient");
  }
  for (double c : coefficients_) {
    if (!std::isfinite(c)) throw Error(ErrorCode::invalid_argument, "coefficients must be finite");
  }
  check_interval(interval_);
}

bool BernsteinPoly::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](double c) { return c == 0.0; });
}

double BernsteinPoly::operator()(double x) const { return eval_decasteljau(*this, x); }
Complex BernsteinPoly::operator()(Complex x) const { return eval_decasteljau(*this, x); }

double eval_decasteljau(const BernsteinPoly& p, double x) {
  const Interval& iv = p.interval();
  return decasteljau(p.coefficients(), (x - iv.a) / iv.width());
}

Complex eval_decasteljau(const BernsteinPoly& p, Complex x) {
  const Interval& iv = p.interval();
  return decasteljau(p.coefficients(), (x - iv.a) / iv.width());
}

double eval_magnitude(std::span<const double> coefficients, Interval interval, Complex x) {
  const Complex t = (x - interval.a) / interval.width();
  const double u = std::abs(1.0 - t);
  const double v = std::abs(t);
  std::vector<double> work(coefficients.size());
  std::transform(coefficients.begin(), coefficients.end(), work.begin(),
                 [](double c) { return std::abs(c); });
  for (std::size_t level = 1; level < work.size(); ++level) {
    for (std::size_t j = 0; j + level < work.size(); ++j) {
      work[j] = u * work[j] + v * work[j + 1];
    }
  }
  return work.empty() ? 0.0 : work[0];
}

double eval_magnitude(const BernsteinPoly& p, Complex x) {
  return eval_magnitude(p.coefficients(), p.interval(), x);
}

Eigen::MatrixXd differentiation_matrix(int n, Interval interval) {
  if (n < 1) {
    throw Error(ErrorCode::invalid_argument,
                "differentiation matrix needs degree >= 1; the derivative of a constant is zero");
  }
  check_interval(interval);
  // Lowering derivative: d_k = n (c_{k+1} - c_k), k = 0..n-1.
  Eigen::MatrixXd lower = Eigen::MatrixXd::Zero(n, n + 1);
  for (int k = 0; k < n; ++k) {
    lower(k, k) = -n;
    lower(k, k + 1) = n;
  }
  // Elevation from degree n-1 back to n.
  Eigen::MatrixXd elevate = Eigen::MatrixXd::Zero(n + 1, n);
  elevate(0, 0) = 1.0;
  elevate(n, n - 1) = 1.0;
  for (int k = 1; k < n; ++k) {
    elevate(k, k - 1) = static_cast<double>(k) / n;
    elevate(k, k) = 1.0 - static_cast<double>(k) / n;
  }
  return (elevate * lower) / interval.width();
}

BernsteinPoly derivative(const BernsteinPoly& p) {
  if (p.degree() == 0) return BernsteinPoly({0.0}, p.interval());
  const Eigen::Map<const Eigen::VectorXd> c(p.coefficients().data(), p.degree() + 1);
  const Eigen::VectorXd d = differentiation_matrix(p.degree(), p.interval()) * c;
  return BernsteinPoly(std::vector<double>(d.data(), d.data() + d.size()), p.interval());
}

NormSpec::NormSpec(int exponent, std::vector<double> weights)
    : exponent_(exponent), weights_(std::move(weights)) {
  if (exponent_ < 1) throw Error(ErrorCode::invalid_argument, "norm exponent must be >= 1 or infinity");
  for (double w : weights_) {
    if (!(std::isfinite(w) && w > 0.0)) {
      throw Error(ErrorCode::invalid_argument, "weights must be finite and positive");
    }
  }
}

std::vector<double> NormSpec::weights_for(std::size_t length) const {
  if (weights_.empty()) return std::vector<double>(length, 1.0);
  if (weights_.size() != length) {
    throw Error(ErrorCode::incompatible_weights,
                "weight vector has length " + std::to_string(weights_.size()) +
                    " but the measured vector has length " + std::to_string(length));
  }
  return weights_;
}

double weighted_norm(std::span<const double> v, const NormSpec& spec) {
  return weighted_norm_impl(v, spec);
}

double weighted_norm(std::span<const Complex> v, const NormSpec& spec) {
  return weighted_norm_impl(v, spec);
}

double coefficient_distance(const BernsteinPoly& p, const BernsteinPoly& q, const NormSpec& spec) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorCode::invalid_argument, "coefficient distance needs equal degrees");
  }
  if (!(p.interval() == q.interval())) {
    throw Error(ErrorCode::invalid_argument, "coefficient distance needs equal intervals");
  }
  std::vector<double> diff(p.coefficients().size());
  for (std::size_t k = 0; k < diff.size(); ++k) {
    diff[k] = p.coefficients()[k] - q.coefficients()[k];
  }
  return weighted_norm(std::span<const double>(diff), spec);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

BernsteinPoly bernstein_multiply(const BernsteinPoly& p, const BernsteinPoly& q) {
  if (!(p.interval() == q.interval())) {
    throw Error(ErrorCode::invalid_argument, "cannot multiply polynomials on different intervals");
  }
  const int m = p.degree();
  const int n = q.degree();
  std::vector<double> out(static_cast<std::size_t>(m + n + 1), 0.0);
  for (int i = 0; i <= m; ++i) {
    const double wi = binomial(m, i) * p.coefficient(i);
    if (wi == 0.0) continue;
    for (int j = 0; j <= n; ++j) {
      out[static_cast<std::size_t>(i + j)] +=
          wi * binomial(n, j) * q.coefficient(j) / binomial(m + n, i + j);
    }
  }
  return BernsteinPoly(std::move(out), p.interval());
}

BernsteinPoly poly_from_roots(std::span<const RootCluster> roots, double scale, Interval interval) {
  check_interval(interval);
  std::vector<RootCluster> lower_half;
  for (const RootCluster& r : roots) {
    if (r.multiplicity < 1) throw Error(ErrorCode::invalid_argument, "multiplicity must be >= 1");
    if (r.center.imag() < 0.0) lower_half.push_back(r);
  }

  BernsteinPoly result({scale}, interval);
  auto multiply_power = [&](const BernsteinPoly& factor, int times) {
    for (int k = 0; k < times; ++k) result = bernstein_multiply(result, factor);
  };

  for (const RootCluster& r : roots) {
    const Complex z = r.center;
    if (z.imag() == 0.0) {
      multiply_power(BernsteinPoly({interval.a - z.real(), interval.b - z.real()}, interval),
                     r.multiplicity);
      continue;
    }
    if (z.imag() < 0.0) continue;
    // Consume the conjugate partners for this upper-half-plane root.
    int remaining = r.multiplicity;
    const double tol = 1e-10 * (1.0 + std::abs(z));
    for (RootCluster& partner : lower_half) {
      if (remaining == 0) break;
      if (partner.multiplicity == 0 || std::abs(std::conj(partner.center) - z) > tol) continue;
      const int used = std::min(remaining, partner.multiplicity);
      partner.multiplicity -= used;
      remaining -= used;
    }
    if (remaining != 0) {
      throw Error(ErrorCode::not_conjugate_closed,
                  "complex roots must appear in conjugate pairs for a real polynomial");
    }
    const Complex la = interval.a - z;
    const Complex lb = interval.b - z;
    const BernsteinPoly quadratic({std::norm(la), (la * std::conj(lb)).real(), std::norm(lb)},
                                  interval);
    multiply_power(quadratic, r.multiplicity);
  }
  for (const RootCluster& partner : lower_half) {
    if (partner.multiplicity != 0) {
      throw Error(ErrorCode::not_conjugate_closed,
                  "complex roots must appear in conjugate pairs for a real polynomial");
    }
  }
  return result;
}

}  // namespace bagcd
