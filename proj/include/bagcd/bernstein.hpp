#pragma once

#include <complex>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace bagcd {

using Complex = std::complex<double>;

struct Interval {
  double a = 0.0;
  double b = 1.0;

  double width() const { return b - a; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// A root (or cluster of roots) together with its multiplicity.
struct RootCluster {
  Complex center;
  int multiplicity = 1;
};

// Polynomial of degree n stored as n+1 coefficients in the Bernstein basis
// of [a, b]:  p(x) = sum_k c_k * C(n,k) (x-a)^k (b-x)^(n-k) / (b-a)^n.
class BernsteinPoly {
 public:
  BernsteinPoly();
  explicit BernsteinPoly(std::vector<double> coefficients, Interval interval = {});

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const Interval& interval() const { return interval_; }
  std::span<const double> coefficients() const { return coefficients_; }
  double coefficient(int k) const { return coefficients_[static_cast<std::size_t>(k)]; }
  bool is_zero() const;

  double operator()(double x) const;
  Complex operator()(Complex x) const;

  friend bool operator==(const BernsteinPoly&, const BernsteinPoly&) = default;

 private:
  std::vector<double> coefficients_;
  Interval interval_;
};

// Triangular de Casteljau recurrence in the local parameter t of [0, 1].
// Valid for any t, including values outside the unit interval.
template <typename T>
T decasteljau(std::span<const double> coefficients, T t) {
  std::vector<T> work(coefficients.begin(), coefficients.end());
  const T one_minus_t = T(1) - t;
  for (std::size_t level = 1; level < work.size(); ++level) {
    for (std::size_t j = 0; j + level < work.size(); ++j) {
      work[j] = one_minus_t * work[j] + t * work[j + 1];
    }
  }
  return work.empty() ? T(0) : work[0];
}

double eval_decasteljau(const BernsteinPoly& p, double x);
Complex eval_decasteljau(const BernsteinPoly& p, Complex x);

/// Sum of |c_k| * |B_k^n(x)|, the componentwise magnitude of an evaluation.
/// Used as the scale for relative residual checks.
double eval_magnitude(std::span<const double> coefficients, Interval interval, Complex x);
double eval_magnitude(const BernsteinPoly& p, Complex x);

/// Matrix D with D*c = coefficients of p' in the same degree-n basis.
/// Built as degree elevation composed with the degree-lowering derivative,
/// so every column has at most three nonzeros. Requires n >= 1.
Eigen::MatrixXd differentiation_matrix(int n, Interval interval = {});

/// Coefficients of p' in the degree-n basis. Constants map to the zero
/// polynomial of degree 0.
BernsteinPoly derivative(const BernsteinPoly& p);

class NormSpec {
 public:
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  NormSpec() = default;
  // Empty weights mean unit weights of whatever length is being measured.
  explicit NormSpec(int exponent, std::vector<double> weights = {});

  int exponent() const { return exponent_; }
  bool is_infinity() const { return exponent_ == kInfinity; }
  bool has_unit_weights() const { return weights_.empty(); }
  std::span<const double> weights() const { return weights_; }

  // Weights resolved for a vector of the given length.
  std::vector<double> weights_for(std::size_t length) const;

 private:
  int exponent_ = 2;
  std::vector<double> weights_;
};

double weighted_norm(std::span<const double> v, const NormSpec& spec);
double weighted_norm(std::span<const Complex> v, const NormSpec& spec);

/// Weighted norm of the coefficient difference. Degrees and intervals must
/// agree; no implicit degree elevation is performed.
double coefficient_distance(const BernsteinPoly& p, const BernsteinPoly& q,
                            const NormSpec& spec = {});

BernsteinPoly bernstein_multiply(const BernsteinPoly& p, const BernsteinPoly& q);

/// Expands scale * prod (x - z)^m over the given roots by repeated Bernstein
/// multiplication. Complex roots must come in conjugate pairs of equal
/// multiplicity so that the product is real.
BernsteinPoly poly_from_roots(std::span<const RootCluster> roots, double scale = 1.0,
                              Interval interval = {});

double binomial(int n, int k);

}  // namespace bagcd
