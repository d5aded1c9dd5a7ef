#include "bagcd/planted.hpp"

#include <algorithm>
#include <cmath>

#include "bagcd/error.hpp"

namespace bagcd {

namespace {

class RootSampler {
 public:
  RootSampler(const PlantedConfig& config, std::mt19937_64& rng) : config_(config), rng_(rng) {}

  // Draws `count` roots, closed under conjugation, each at least
  // min_separation from everything drawn so far by this sampler.
  std::vector<Complex> draw(int count) {
    std::vector<Complex> out;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> re(config_.real_min, config_.real_max);
    std::uniform_real_distribution<double> im(0.5 * config_.min_separation,
                                              std::max(config_.imag_max, 0.5 * config_.min_separation));
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
      if (++attempts > 100000) {
        throw Error(ErrorCode::invalid_argument,
                    "cannot place planted roots with the requested separation");
      }
      const int remaining = count - static_cast<int>(out.size());
      std::vector<Complex> candidate;
      if (remaining >= 2 && unit(rng_) < config_.complex_fraction) {
        const Complex z(re(rng_), im(rng_));
        candidate = {z, std::conj(z)};
      } else {
        candidate = {Complex(re(rng_), 0.0)};
      }
      const bool separated = std::all_of(candidate.begin(), candidate.end(), [&](const Complex& c) {
        return std::all_of(taken_.begin(), taken_.end(),
                           [&](const Complex& t) { return std::abs(c - t) >= config_.min_separation; });
      });
      if (!separated) continue;
      for (const Complex& c : candidate) {
        out.push_back(c);
        taken_.push_back(c);
      }
    }
    return out;
  }

 private:
  const PlantedConfig& config_;
  std::mt19937_64& rng_;
  std::vector<Complex> taken_;
};

BernsteinPoly expand(const std::vector<Complex>& roots, Interval interval) {
  std::vector<RootCluster> clusters;
  for (const Complex& z : roots) clusters.push_back({z, 1});
  return poly_from_roots(clusters, 1.0, interval);
}

BernsteinPoly add_noise(const BernsteinPoly& p, double noise, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(p.coefficients().begin(), p.coefficients().end());
  for (double& v : c) v *= 1.0 + noise * u(rng);
  return BernsteinPoly(std::move(c), p.interval());
}

}  // namespace

PlantedPair generate_planted_pair(const PlantedConfig& config, std::mt19937_64& rng) {
  if (config.gcd_degree < 0 || config.p_cofactor_degree < 0 || config.q_cofactor_degree < 0) {
    throw Error(ErrorCode::invalid_argument, "planted degrees must be non-negative");
  }
  if (config.gcd_degree + config.p_cofactor_degree < 1 || config.gcd_degree + config.q_cofactor_degree < 1) {
    throw Error(ErrorCode::invalid_argument, "planted polynomials need degree >= 1");
  }
  if (!(config.min_separation > 0.0) || !(config.noise >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "min_separation must be > 0 and noise >= 0");
  }
  RootSampler sampler(config, rng);
  PlantedPair pair;
  pair.common_roots = sampler.draw(config.gcd_degree);
  pair.p_only_roots = sampler.draw(config.p_cofactor_degree);
  pair.q_only_roots = sampler.draw(config.q_cofactor_degree);

  std::vector<Complex> p_roots = pair.common_roots;
  p_roots.insert(p_roots.end(), pair.p_only_roots.begin(), pair.p_only_roots.end());
  std::vector<Complex> q_roots = pair.common_roots;
  q_roots.insert(q_roots.end(), pair.q_only_roots.begin(), pair.q_only_roots.end());

  pair.p = add_noise(expand(p_roots, config.interval), config.noise, rng);
  pair.q = add_noise(expand(q_roots, config.interval), config.noise, rng);
  return pair;
}

void validate(const TableConfig& config) {
  if (config.count < 1) throw Error(ErrorCode::invalid_argument, "--count must be >= 1");
  if (config.max_degree < 1) throw Error(ErrorCode::invalid_argument, "--max-degree must be >= 1");
  if (config.gcd_degree < 1 || config.gcd_degree > config.max_degree) {
    throw Error(ErrorCode::invalid_argument, "--gcd-degree must be between 1 and --max-degree");
  }
  if (!(config.noise >= 0.0)) throw Error(ErrorCode::invalid_argument, "--noise must be >= 0");
  if (!(config.sigma > 0.0)) throw Error(ErrorCode::invalid_argument, "--sigma must be > 0");
  if (!(config.min_separation > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "--min-separation must be > 0");
  }
  if (!(config.complex_fraction >= 0.0 && config.complex_fraction <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "--complex-fraction must lie in [0, 1]");
  }
}

std::vector<TableRow> run_table(const TableConfig& config) {
  validate(config);
  std::mt19937_64 rng(config.seed);
  const int free_degree = config.max_degree - config.gcd_degree;
  std::vector<TableRow> rows;
  for (int k = 0; k < config.count; ++k) {
    PlantedConfig planted;
    planted.gcd_degree = config.gcd_degree;
    planted.p_cofactor_degree = free_degree;
    planted.q_cofactor_degree = std::uniform_int_distribution<int>(0, free_degree)(rng);
    planted.noise = config.noise;
    planted.min_separation = config.min_separation;
    planted.complex_fraction = config.complex_fraction;
    const PlantedPair pair = generate_planted_pair(planted, rng);

    AgcdOptions options;
    options.sigma = config.sigma;
    const AgcdResult result = agcd(pair.p, pair.q, options);
    rows.push_back({std::max(pair.p.degree(), pair.q.degree()), result.degree,
                    result.distances.coefficient_p, result.distances.root_p,
                    result.distances.coefficient_q, result.distances.root_q});
  }
  return rows;
}

}  // namespace bagcd
