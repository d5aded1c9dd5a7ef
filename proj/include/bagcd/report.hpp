#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "bagcd/bernstein.hpp"
#include "bagcd/pipeline.hpp"
#include "bagcd/planted.hpp"

namespace bagcd {

// Polynomial file:
//   {"basis": "bernstein", "interval": [a, b], "coefficients": [c0, ..., cn]}
BernsteinPoly polynomial_from_json(const nlohmann::json& doc);
nlohmann::json polynomial_to_json(const BernsteinPoly& p);
BernsteinPoly read_polynomial_file(const std::filesystem::path& path);

struct ReportRoot {
  double re = 0.0;
  double im = 0.0;
  int multiplicity = 1;
  friend bool operator==(const ReportRoot&, const ReportRoot&) = default;
};

struct ReportResidual {
  double re = 0.0;
  double im = 0.0;
  int order = 0;
  double value = 0.0;
  double scale = 0.0;
  bool ok = true;
  friend bool operator==(const ReportResidual&, const ReportResidual&) = default;
};

struct ReportPair {
  int p_cluster = 0;
  int q_cluster = 0;
  int multiplicity = 1;
  friend bool operator==(const ReportPair&, const ReportPair&) = default;
};

struct AgcdReport {
  // inputs and options
  BernsteinPoly p;
  BernsteinPoly q;
  double sigma = 0.0;
  double edge_factor = 2.0;
  int norm_r = 2;  // NormSpec::kInfinity serialises as "inf"
  std::vector<double> weights;
  double residual_tol = 1e-8;
  bool raw_root_matching = false;
  bool enforce_unmatched_roots = false;

  // result
  int agcd_degree = 0;
  std::vector<ReportRoot> agcd_roots;
  BernsteinPoly agcd_poly;
  BernsteinPoly p_tilde;
  BernsteinPoly q_tilde;
  double coefficient_p = 0.0;
  double root_p = 0.0;
  double coefficient_q = 0.0;
  double root_q = 0.0;

  // diagnostics
  bool verified = true;
  std::vector<ReportRoot> p_roots;
  std::vector<ReportRoot> q_roots;
  std::vector<ReportRoot> p_clusters;
  std::vector<ReportRoot> q_clusters;
  std::vector<ReportPair> matching;
  std::vector<ReportResidual> p_residuals;
  std::vector<ReportResidual> q_residuals;
  int p_discarded = 0;
  int q_discarded = 0;
  double elapsed_ms = 0.0;

  friend bool operator==(const AgcdReport&, const AgcdReport&) = default;
};

AgcdReport make_report(const BernsteinPoly& p, const BernsteinPoly& q, const AgcdOptions& options,
                       const AgcdResult& result, double elapsed_ms);

void to_json(nlohmann::json& j, const AgcdReport& report);
void from_json(const nlohmann::json& j, AgcdReport& report);

std::string format_report_text(const AgcdReport& report);

nlohmann::json table_to_json(const TableConfig& config, const std::vector<TableRow>& rows);
std::string format_table_text(const std::vector<TableRow>& rows);

}  // namespace bagcd
