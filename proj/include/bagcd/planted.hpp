#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bagcd/bernstein.hpp"
#include "bagcd/pipeline.hpp"

namespace bagcd {

// Random pairs P = G*A, Q = G*B with a known common factor G.
struct PlantedConfig {
  int gcd_degree = 1;
  int p_cofactor_degree = 1;
  int q_cofactor_degree = 1;
  double noise = 0.0;            // relative coefficient noise, c_k *= 1 + noise*U(-1,1)
  double min_separation = 0.15;  // between any two planted roots, conjugates included
  double complex_fraction = 0.7; // chance of drawing a conjugate pair when two slots remain
  double real_min = 0.0;
  double real_max = 1.0;
  double imag_max = 1.0;
  Interval interval;
};

struct PlantedPair {
  BernsteinPoly p;
  BernsteinPoly q;
  std::vector<Complex> common_roots;
  std::vector<Complex> p_only_roots;
  std::vector<Complex> q_only_roots;
};

PlantedPair generate_planted_pair(const PlantedConfig& config, std::mt19937_64& rng);

struct TableConfig {
  int count = 5;
  int max_degree = 4;
  int gcd_degree = 1;
  double noise = 0.0;
  double sigma = 1e-2;
  std::uint64_t seed = 0;
  double min_separation = 0.15;
  double complex_fraction = 0.7;
};

struct TableRow {
  int max_degree = 0;
  int agcd_degree = 0;
  double coefficient_p = 0.0;
  double root_p = 0.0;
  double coefficient_q = 0.0;
  double root_q = 0.0;
};

/// Throws Error(invalid_argument) on inconsistent settings.
void validate(const TableConfig& config);

/// Rows in generation order. P always has degree max_degree; the degree of
/// Q is drawn between gcd_degree and max_degree.
std::vector<TableRow> run_table(const TableConfig& config);

}  // namespace bagcd
