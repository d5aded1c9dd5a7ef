#include "bagcd/cli.hpp"

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bagcd/error.hpp"
#include "bagcd/pipeline.hpp"
#include "bagcd/planted.hpp"
#include "bagcd/report.hpp"

namespace bagcd {

namespace {

int fail(std::ostream& err, int status, std::string_view kind, const std::string& message) {
  const nlohmann::json doc = {{"error", {{"kind", kind}, {"message", message}, {"exit_code", status}}}};
  err << doc.dump() << "\n";
  return status;
}

int parse_norm_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity") return NormSpec::kInfinity;
  std::size_t used = 0;
  int r = 0;
  try {
    r = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || r < 1) {
    throw Error(ErrorCode::invalid_argument, "--norm-r must be a positive integer or 'inf'");
  }
  return r;
}

struct AgcdFlags {
  std::string p_file;
  std::string q_file;
  double sigma = 0.0;
  double edge_factor = 2.0;
  std::string norm_r = "2";
  std::vector<double> weights;
  bool raw_root_matching = false;
  bool enforce_unmatched = false;
  double residual_tol = 1e-8;
  bool text = false;
};

struct TableFlags {
  TableConfig config;
  bool text = false;
};

int run_agcd(const AgcdFlags& flags, std::ostream& out, std::ostream& err) {
  AgcdOptions options;
  try {
    if (!(flags.sigma > 0.0)) throw Error(ErrorCode::invalid_argument, "--sigma must be > 0 (sigma > 0 is required)");
    if (!(flags.edge_factor > 0.0)) throw Error(ErrorCode::invalid_argument, "--edge-factor must be > 0");
    if (!(flags.residual_tol > 0.0)) throw Error(ErrorCode::invalid_argument, "--residual-tol must be > 0");
    options.sigma = flags.sigma;
    options.edge_factor = flags.edge_factor;
    options.norm = NormSpec(parse_norm_exponent(flags.norm_r), flags.weights);
    options.residual_tol = flags.residual_tol;
    options.root_options.residual_tol = flags.residual_tol;
    options.cluster_before_matching = !flags.raw_root_matching;
    options.enforce_unmatched_roots = flags.enforce_unmatched;
  } catch (const Error& e) {
    return fail(err, kExitBadFlags, to_string(e.code()), e.what());
  }

  BernsteinPoly p;
  BernsteinPoly q;
  try {
    p = read_polynomial_file(flags.p_file);
    q = read_polynomial_file(flags.q_file);
  } catch (const Error& e) {
    return fail(err, kExitBadInput, to_string(e.code()), e.what());
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const AgcdResult result = agcd(p, q, options);
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const AgcdReport report = make_report(p, q, options, result, elapsed);
    if (flags.text) {
      out << format_report_text(report);
    } else {
      out << nlohmann::json(report).dump(2) << "\n";
    }
  } catch (const Error& e) {
    return fail(err, kExitPipelineError, to_string(e.code()), e.what());
  }
  return kExitOk;
}

int run_table_command(const TableFlags& flags, std::ostream& out, std::ostream& err) {
  try {
    validate(flags.config);
  } catch (const Error& e) {
    return fail(err, kExitBadFlags, to_string(e.code()), e.what());
  }
  try {
    const std::vector<TableRow> rows = run_table(flags.config);
    if (flags.text) {
      out << format_table_text(rows);
    } else {
      out << table_to_json(flags.config, rows).dump(2) << "\n";
    }
  } catch (const Error& e) {
    return fail(err, kExitPipelineError, to_string(e.code()), e.what());
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate GCD of polynomials in Bernstein bases"};
  app.require_subcommand(1);

  AgcdFlags agcd_flags;
  CLI::App* agcd_cmd = app.add_subcommand("agcd", "Approximate GCD of two polynomial files");
  agcd_cmd->add_option("p", agcd_flags.p_file, "Polynomial file for P")->required();
  agcd_cmd->add_option("q", agcd_flags.q_file, "Polynomial file for Q")->required();
  agcd_cmd->add_option("--sigma", agcd_flags.sigma, "Root tolerance sigma (> 0)")->required();
  agcd_cmd->add_option("--edge-factor", agcd_flags.edge_factor, "Root graph edges join centers within factor*sigma");
  agcd_cmd->add_option("--norm-r", agcd_flags.norm_r, "Norm exponent: positive integer or 'inf'");
  agcd_cmd->add_option("--weights", agcd_flags.weights, "Coefficient weights (default: all ones)");
  agcd_cmd->add_flag("--raw-root-matching", agcd_flags.raw_root_matching, "Match raw roots without clustering");
  agcd_cmd->add_flag("--enforce-unmatched", agcd_flags.enforce_unmatched,
                     "Also keep unmatched clusters as roots of the perturbed polynomials");
  agcd_cmd->add_option("--residual-tol", agcd_flags.residual_tol, "Relative residual tolerance");
  auto* agcd_json = agcd_cmd->add_flag("--json", "JSON report (default)");
  agcd_cmd->add_flag("--text", agcd_flags.text, "Human-readable report")->excludes(agcd_json);

  TableFlags table_flags;
  CLI::App* table_cmd = app.add_subcommand("table", "Distance table over seeded random planted-gcd pairs");
  table_cmd->add_option("--count", table_flags.config.count, "Number of random pairs");
  table_cmd->add_option("--max-degree", table_flags.config.max_degree, "Degree of P (the larger input)");
  table_cmd->add_option("--gcd-degree", table_flags.config.gcd_degree, "Degree of the planted common factor");
  table_cmd->add_option("--noise", table_flags.config.noise, "Relative coefficient noise");
  table_cmd->add_option("--sigma", table_flags.config.sigma, "Root tolerance sigma (> 0)")->required();
  table_cmd->add_option("--seed", table_flags.config.seed, "Random seed");
  table_cmd->add_option("--min-separation", table_flags.config.min_separation, "Minimum distance between planted roots");
  table_cmd->add_option("--complex-fraction", table_flags.config.complex_fraction,
                        "Probability of drawing a conjugate pair");
  auto* table_json = table_cmd->add_flag("--json", "JSON output (default)");
  table_cmd->add_flag("--text", table_flags.text, "Plain-text table")->excludes(table_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(err, kExitBadFlags, "invalid_flags", e.what());
  }

  if (agcd_cmd->parsed()) return run_agcd(agcd_flags, out, err);
  return run_table_command(table_flags, out, err);
}

}  // namespace bagcd
