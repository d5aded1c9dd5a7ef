#include "bagcd/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "bagcd/error.hpp"

namespace bagcd {

using nlohmann::json;

namespace {

[[noreturn]] void bad_input(const std::string& message) { throw Error(ErrorCode::invalid_input, message); }

double finite_number(const json& v, const std::string& what) {
  if (!v.is_number()) bad_input(what + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) bad_input(what + " must be finite");
  return x;
}

json root_to_json(const ReportRoot& r, bool with_multiplicity) {
  json j = {{"re", r.re}, {"im", r.im}};
  if (with_multiplicity) j["multiplicity"] = r.multiplicity;
  return j;
}

ReportRoot root_from_json(const json& j) {
  ReportRoot r;
  r.re = j.at("re").get<double>();
  r.im = j.at("im").get<double>();
  r.multiplicity = j.contains("multiplicity") ? j.at("multiplicity").get<int>() : 1;
  return r;
}

json roots_to_json(const std::vector<ReportRoot>& roots, bool with_multiplicity) {
  json arr = json::array();
  for (const ReportRoot& r : roots) arr.push_back(root_to_json(r, with_multiplicity));
  return arr;
}

std::vector<ReportRoot> roots_from_json(const json& arr) {
  std::vector<ReportRoot> out;
  for (const json& j : arr) out.push_back(root_from_json(j));
  return out;
}

json residuals_to_json(const std::vector<ReportResidual>& residuals) {
  json arr = json::array();
  for (const ReportResidual& r : residuals) {
    arr.push_back({{"re", r.re}, {"im", r.im}, {"order", r.order},
                   {"value", r.value}, {"scale", r.scale}, {"ok", r.ok}});
  }
  return arr;
}

std::vector<ReportResidual> residuals_from_json(const json& arr) {
  std::vector<ReportResidual> out;
  for (const json& j : arr) {
    out.push_back({j.at("re").get<double>(), j.at("im").get<double>(), j.at("order").get<int>(),
                   j.at("value").get<double>(), j.at("scale").get<double>(), j.at("ok").get<bool>()});
  }
  return out;
}

std::vector<ReportRoot> convert(const std::vector<RootCluster>& clusters) {
  std::vector<ReportRoot> out;
  for (const RootCluster& c : clusters) out.push_back({c.center.real(), c.center.imag(), c.multiplicity});
  return out;
}

std::vector<ReportRoot> convert(const std::vector<Complex>& roots) {
  std::vector<ReportRoot> out;
  for (const Complex& z : roots) out.push_back({z.real(), z.imag(), 1});
  return out;
}

std::vector<ReportResidual> convert(const std::vector<RootResidual>& residuals) {
  std::vector<ReportResidual> out;
  for (const RootResidual& r : residuals) {
    out.push_back({r.root.real(), r.root.imag(), r.order, r.value, r.scale, r.ok});
  }
  return out;
}

std::string format_complex(double re, double im) {
  std::ostringstream os;
  os << std::setprecision(10) << re;
  if (im != 0.0) os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return os.str();
}

std::string format_coefficients(const BernsteinPoly& p) {
  std::ostringstream os;
  os << std::setprecision(10) << "[";
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    os << (k ? ", " : "") << p.coefficients()[k];
  }
  os << "]";
  return os.str();
}

}  // namespace

BernsteinPoly polynomial_from_json(const json& doc) {
  if (!doc.is_object()) bad_input("polynomial document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "basis" && key != "interval" && key != "coefficients") bad_input("unknown field '" + key + "'");
  }
  if (!doc.contains("basis") || doc["basis"] != "bernstein") bad_input("field 'basis' must be \"bernstein\"");
  if (!doc.contains("interval") || !doc["interval"].is_array() || doc["interval"].size() != 2) {
    bad_input("field 'interval' must be an array [a, b]");
  }
  const Interval iv{finite_number(doc["interval"][0], "interval.a"),
                    finite_number(doc["interval"][1], "interval.b")};
  if (!(iv.a < iv.b)) bad_input("interval must satisfy a < b");
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array() || doc["coefficients"].empty()) {
    bad_input("field 'coefficients' must be a non-empty array");
  }
  std::vector<double> coeffs;
  for (const json& c : doc["coefficients"]) coeffs.push_back(finite_number(c, "coefficient"));
  return BernsteinPoly(std::move(coeffs), iv);
}

json polynomial_to_json(const BernsteinPoly& p) {
  return {{"basis", "bernstein"},
          {"interval", {p.interval().a, p.interval().b}},
          {"coefficients", std::vector<double>(p.coefficients().begin(), p.coefficients().end())}};
}

BernsteinPoly read_polynomial_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad_input("cannot read polynomial file '" + path.string() + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    bad_input("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  try {
    return polynomial_from_json(doc);
  } catch (const Error& e) {
    bad_input("'" + path.string() + "': " + e.what());
  }
}

AgcdReport make_report(const BernsteinPoly& p, const BernsteinPoly& q, const AgcdOptions& options,
                       const AgcdResult& result, double elapsed_ms) {
  AgcdReport r;
  r.p = p;
  r.q = q;
  r.sigma = options.sigma;
  r.edge_factor = options.edge_factor;
  r.norm_r = options.norm.exponent();
  r.weights.assign(options.norm.weights().begin(), options.norm.weights().end());
  r.residual_tol = options.residual_tol;
  r.raw_root_matching = !options.cluster_before_matching;
  r.enforce_unmatched_roots = options.enforce_unmatched_roots;

  r.agcd_degree = result.degree;
  r.agcd_roots = convert(result.agcd_roots);
  r.agcd_poly = result.agcd_poly;
  r.p_tilde = result.p_tilde;
  r.q_tilde = result.q_tilde;
  r.coefficient_p = result.distances.coefficient_p;
  r.root_p = result.distances.root_p;
  r.coefficient_q = result.distances.coefficient_q;
  r.root_q = result.distances.root_q;

  r.verified = result.verified;
  r.p_roots = convert(result.p_roots.roots);
  r.q_roots = convert(result.q_roots.roots);
  r.p_clusters = convert(result.p_clusters);
  r.q_clusters = convert(result.q_clusters);
  for (const MatchedPair& m : result.matching.pairs) r.matching.push_back({m.left, m.right, m.multiplicity});
  r.p_residuals = convert(result.p_residuals);
  r.q_residuals = convert(result.q_residuals);
  r.p_discarded = result.p_roots.discarded_count;
  r.q_discarded = result.q_roots.discarded_count;
  r.elapsed_ms = elapsed_ms;
  return r;
}

void to_json(json& j, const AgcdReport& r) {
  json matching = json::array();
  for (const ReportPair& m : r.matching) {
    matching.push_back({{"p_cluster", m.p_cluster}, {"q_cluster", m.q_cluster}, {"multiplicity", m.multiplicity}});
  }
  j = {
      {"input", {{"p", polynomial_to_json(r.p)}, {"q", polynomial_to_json(r.q)}}},
      {"options",
       {{"sigma", r.sigma},
        {"edge_factor", r.edge_factor},
        {"norm_r", r.norm_r == NormSpec::kInfinity ? json("inf") : json(r.norm_r)},
        {"weights", r.weights},
        {"residual_tol", r.residual_tol},
        {"raw_root_matching", r.raw_root_matching},
        {"enforce_unmatched_roots", r.enforce_unmatched_roots}}},
      {"agcd",
       {{"degree", r.agcd_degree},
        {"roots", roots_to_json(r.agcd_roots, true)},
        {"polynomial", polynomial_to_json(r.agcd_poly)}}},
      {"p_tilde", polynomial_to_json(r.p_tilde)},
      {"q_tilde", polynomial_to_json(r.q_tilde)},
      {"distances",
       {{"coefficient_p", r.coefficient_p},
        {"root_p", r.root_p},
        {"coefficient_q", r.coefficient_q},
        {"root_q", r.root_q}}},
      {"diagnostics",
       {{"verified", r.verified},
        {"p_roots", roots_to_json(r.p_roots, false)},
        {"q_roots", roots_to_json(r.q_roots, false)},
        {"p_clusters", roots_to_json(r.p_clusters, true)},
        {"q_clusters", roots_to_json(r.q_clusters, true)},
        {"matching", matching},
        {"residuals", {{"p", residuals_to_json(r.p_residuals)}, {"q", residuals_to_json(r.q_residuals)}}},
        {"discarded", {{"p", r.p_discarded}, {"q", r.q_discarded}}}}},
      {"timing", {{"elapsed_ms", r.elapsed_ms}}},
  };
}

void from_json(const json& j, AgcdReport& r) {
  r.p = polynomial_from_json(j.at("input").at("p"));
  r.q = polynomial_from_json(j.at("input").at("q"));
  const json& o = j.at("options");
  r.sigma = o.at("sigma").get<double>();
  r.edge_factor = o.at("edge_factor").get<double>();
  r.norm_r = o.at("norm_r").is_string() ? NormSpec::kInfinity : o.at("norm_r").get<int>();
  r.weights = o.at("weights").get<std::vector<double>>();
  r.residual_tol = o.at("residual_tol").get<double>();
  r.raw_root_matching = o.at("raw_root_matching").get<bool>();
  r.enforce_unmatched_roots = o.at("enforce_unmatched_roots").get<bool>();

  const json& a = j.at("agcd");
  r.agcd_degree = a.at("degree").get<int>();
  r.agcd_roots = roots_from_json(a.at("roots"));
  r.agcd_poly = polynomial_from_json(a.at("polynomial"));
  r.p_tilde = polynomial_from_json(j.at("p_tilde"));
  r.q_tilde = polynomial_from_json(j.at("q_tilde"));
  const json& d = j.at("distances");
  r.coefficient_p = d.at("coefficient_p").get<double>();
  r.root_p = d.at("root_p").get<double>();
  r.coefficient_q = d.at("coefficient_q").get<double>();
  r.root_q = d.at("root_q").get<double>();

  const json& g = j.at("diagnostics");
  r.verified = g.at("verified").get<bool>();
  r.p_roots = roots_from_json(g.at("p_roots"));
  r.q_roots = roots_from_json(g.at("q_roots"));
  r.p_clusters = roots_from_json(g.at("p_clusters"));
  r.q_clusters = roots_from_json(g.at("q_clusters"));
  r.matching.clear();
  for (const json& m : g.at("matching")) {
    r.matching.push_back({m.at("p_cluster").get<int>(), m.at("q_cluster").get<int>(), m.at("multiplicity").get<int>()});
  }
  r.p_residuals = residuals_from_json(g.at("residuals").at("p"));
  r.q_residuals = residuals_from_json(g.at("residuals").at("q"));
  r.p_discarded = g.at("discarded").at("p").get<int>();
  r.q_discarded = g.at("discarded").at("q").get<int>();
  r.elapsed_ms = j.at("timing").at("elapsed_ms").get<double>();
}

std::string format_report_text(const AgcdReport& r) {
  std::ostringstream os;
  os << "agcd degree: " << r.agcd_degree << "\n";
  for (const ReportRoot& z : r.agcd_roots) {
    os << "  root " << format_complex(z.re, z.im) << "  multiplicity " << z.multiplicity << "\n";
  }
  os << "agcd coefficients: " << format_coefficients(r.agcd_poly) << "\n";
  os << "P~ coefficients:   " << format_coefficients(r.p_tilde) << "\n";
  os << "Q~ coefficients:   " << format_coefficients(r.q_tilde) << "\n";
  os << std::setprecision(6);
  os << "||P - P~|| = " << r.coefficient_p << "   rho(P, P~) = " << r.root_p << "\n";
  os << "||Q - Q~|| = " << r.coefficient_q << "   rho(Q, Q~) = " << r.root_q << "\n";
  os << "residuals verified: " << (r.verified ? "yes" : "no") << "\n";
  return os.str();
}

json table_to_json(const TableConfig& config, const std::vector<TableRow>& rows) {
  json out = {{"config",
               {{"count", config.count},
                {"max_degree", config.max_degree},
                {"gcd_degree", config.gcd_degree},
                {"noise", config.noise},
                {"sigma", config.sigma},
                {"seed", config.seed},
                {"min_separation", config.min_separation},
                {"complex_fraction", config.complex_fraction}}},
              {"rows", json::array()}};
  for (const TableRow& row : rows) {
    out["rows"].push_back({{"max_degree", row.max_degree},
                           {"agcd_degree", row.agcd_degree},
                           {"coefficient_p", row.coefficient_p},
                           {"root_p", row.root_p},
                           {"coefficient_q", row.coefficient_q},
                           {"root_q", row.root_q}});
  }
  return out;
}

std::string format_table_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "maxdeg" << std::setw(8) << "agcd" << std::setw(16) << "||P-P~||_2"
     << std::setw(16) << "rho(P,P~)" << std::setw(16) << "||Q-Q~||_2" << "rho(Q,Q~)\n";
  os << std::setprecision(6);
  for (const TableRow& row : rows) {
    os << std::setw(8) << row.max_degree << std::setw(8) << row.agcd_degree << std::setw(16) << row.coefficient_p
       << std::setw(16) << row.root_p << std::setw(16) << row.coefficient_q << row.root_q << "\n";
  }
  return os.str();
}

}  // namespace bagcd
