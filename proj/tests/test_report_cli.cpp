#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bagcd/cli.hpp"
#include "bagcd/error.hpp"
#include "bagcd/report.hpp"

using namespace bagcd;
using nlohmann::json;

namespace {

const std::string kData = BAGCD_TEST_DATA;

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "bagcd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path scratch_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("bagcd_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

json error_of(const CliRun& r) { return json::parse(r.err).at("error"); }

}  // namespace

TEST_CASE("polynomial files") {
  const BernsteinPoly p = read_polynomial_file(kData + "/example_p.json");
  CHECK(p.degree() == 4);
  CHECK(p.coefficient(0) == 5.887134);
  CHECK(p.interval() == Interval{0.0, 1.0});

  const json doc = polynomial_to_json(BernsteinPoly({1.0, 2.0}, Interval{-1.0, 3.0}));
  CHECK(doc.at("basis") == "bernstein");
  CHECK(polynomial_from_json(doc) == BernsteinPoly({1.0, 2.0}, Interval{-1.0, 3.0}));

  const json bad_docs[] = {
      json::parse(R"({"basis": "power", "interval": [0, 1], "coefficients": [1]})"),
      json::parse(R"({"basis": "bernstein", "interval": [1, 0], "coefficients": [1]})"),
      json::parse(R"({"basis": "bernstein", "interval": [0], "coefficients": [1]})"),
      json::parse(R"({"basis": "bernstein", "interval": [0, 1], "coefficients": []})"),
      json::parse(R"({"basis": "bernstein", "interval": [0, 1], "coefficients": ["x"]})"),
      json::parse(R"({"basis": "bernstein", "interval": [0, 1], "coefficients": [1], "extra": 0})"),
      json::parse(R"({"interval": [0, 1], "coefficients": [1]})"),
      json::parse(R"([1, 2])"),
  };
  for (const json& d : bad_docs) {
    try {
      polynomial_from_json(d);
      FAIL("accepted " << d.dump());
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_input);
    }
  }
  CHECK_THROWS_AS(read_polynomial_file(kData + "/missing.json"), Error);
  CHECK_THROWS_AS(read_polynomial_file(scratch_file("garbage.json", "{not json")), Error);
}

TEST_CASE("report round trip and schema") {
  const BernsteinPoly p = read_polynomial_file(kData + "/example_p.json");
  const BernsteinPoly q = read_polynomial_file(kData + "/example_q.json");
  AgcdOptions options;
  options.sigma = 0.7;
  const AgcdReport report = make_report(p, q, options, agcd(p, q, options), 1.5);

  const json doc = report;
  CHECK(doc.at("agcd").at("degree") == 2);
  std::vector<std::string> keys;
  for (const auto& [key, value] : doc.items()) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  CHECK(keys == std::vector<std::string>{"agcd", "diagnostics", "distances", "input", "options", "p_tilde",
                                         "q_tilde", "timing"});
  CHECK(doc.at("options").at("norm_r") == 2);

  const AgcdReport back = json::parse(doc.dump()).get<AgcdReport>();
  CHECK(back == report);

  AgcdOptions inf = options;
  inf.norm = NormSpec(NormSpec::kInfinity);
  const AgcdReport inf_report = make_report(p, q, inf, agcd(p, q, inf), 0.0);
  const json inf_doc = inf_report;
  CHECK(inf_doc.at("options").at("norm_r") == "inf");
  CHECK(inf_doc.get<AgcdReport>() == inf_report);

  const std::string text = format_report_text(report);
  CHECK(text.find("agcd degree: 2") != std::string::npos);
}

TEST_CASE("agcd subcommand") {
  const std::string p = kData + "/example_p.json";
  const std::string q = kData + "/example_q.json";

  const CliRun ok = run({"agcd", p, q, "--sigma", "0.7"});
  CHECK(ok.status == kExitOk);
  CHECK(ok.err.empty());
  const json doc = json::parse(ok.out);
  CHECK(doc.at("agcd").at("degree") == 2);
  CHECK(doc.at("distances").at("coefficient_p").get<double>() == doctest::Approx(0.32).epsilon(0.05));

  const CliRun text = run({"agcd", p, q, "--sigma", "0.7", "--text"});
  CHECK(text.status == kExitOk);
  CHECK(text.out.find("agcd degree: 2") != std::string::npos);

  const CliRun inf = run({"agcd", p, q, "--sigma", "0.7", "--norm-r", "inf", "--enforce-unmatched"});
  CHECK(inf.status == kExitOk);
  CHECK(json::parse(inf.out).at("options").at("enforce_unmatched_roots") == true);
}

TEST_CASE("agcd subcommand failures") {
  const std::string p = kData + "/example_p.json";
  const std::string q = kData + "/example_q.json";

  SUBCASE("bad flags") {
    const CliRun no_sigma = run({"agcd", p, q});
    CHECK(no_sigma.status == kExitBadFlags);
    CHECK(error_of(no_sigma).at("exit_code") == 1);

    const CliRun zero = run({"agcd", p, q, "--sigma", "0"});
    CHECK(zero.status == kExitBadFlags);
    CHECK(error_of(zero).at("message").get<std::string>().find("sigma > 0 is required") != std::string::npos);

    CHECK(run({"agcd", p, q, "--sigma", "0.7", "--norm-r", "0"}).status == kExitBadFlags);
    CHECK(run({"agcd", p, q, "--sigma", "0.7", "--norm-r", "two"}).status == kExitBadFlags);
    CHECK(run({"agcd", p, q, "--sigma", "0.7", "--weights", "1", "-2"}).status == kExitBadFlags);
    CHECK(run({"agcd", p, q, "--sigma", "0.7", "--json", "--text"}).status == kExitBadFlags);
    CHECK(run({"frobnicate"}).status == kExitBadFlags);
    CHECK(run({}).status == kExitBadFlags);
  }

  SUBCASE("bad input") {
    const CliRun missing = run({"agcd", kData + "/missing.json", q, "--sigma", "0.7"});
    CHECK(missing.status == kExitBadInput);
    CHECK(error_of(missing).at("kind") == "invalid_input");
    const auto garbage = scratch_file("bad_basis.json", R"({"basis": "power", "interval": [0, 1], "coefficients": [1, 2]})");
    CHECK(run({"agcd", p, garbage.string(), "--sigma", "0.7"}).status == kExitBadInput);
  }

  SUBCASE("pipeline errors") {
    const auto zero = scratch_file("zero.json", R"({"basis": "bernstein", "interval": [0, 1], "coefficients": [0, 0, 0]})");
    const CliRun r = run({"agcd", p, zero.string(), "--sigma", "0.7"});
    CHECK(r.status == kExitPipelineError);
    CHECK(error_of(r).at("kind") == "identically_zero");

    const auto other = scratch_file("other_interval.json",
                                    R"({"basis": "bernstein", "interval": [0, 2], "coefficients": [1, -1]})");
    CHECK(run({"agcd", p, other.string(), "--sigma", "0.7"}).status == kExitPipelineError);
    CHECK(run({"agcd", p, q, "--sigma", "0.7", "--weights", "1", "1"}).status == kExitPipelineError);
  }
}

TEST_CASE("help goes to the output stream") {
  const CliRun help = run({"--help"});
  CHECK(help.status == kExitOk);
  CHECK(help.out.find("agcd") != std::string::npos);
}

TEST_CASE("table subcommand") {
  const std::vector<std::string> args{"table", "--count", "5", "--max-degree", "10", "--gcd-degree", "5",
                                      "--sigma", "1e-2", "--seed", "42"};
  const CliRun first = run(args);
  const CliRun second = run(args);
  REQUIRE(first.status == kExitOk);
  CHECK(first.out == second.out);

  const json doc = json::parse(first.out);
  REQUIRE(doc.at("rows").size() == 5);
  for (const json& row : doc.at("rows")) {
    CHECK(row.at("max_degree") == 10);
    CHECK(row.at("agcd_degree") == 5);
  }

  auto other_seed = args;
  other_seed.back() = "43";
  CHECK(run(other_seed).out != first.out);

  const CliRun text = run({"table", "--count", "2", "--sigma", "1e-2", "--text"});
  CHECK(text.status == kExitOk);
  CHECK(text.out.find("rho(P,P~)") != std::string::npos);

  CHECK(run({"table", "--count", "2"}).status == kExitBadFlags);
  CHECK(run({"table", "--count", "0", "--sigma", "1e-2"}).status == kExitBadFlags);
  CHECK(run({"table", "--gcd-degree", "5", "--max-degree", "4", "--sigma", "1e-2"}).status == kExitBadFlags);
}

TEST_CASE("noiseless table rows recover the inputs") {
  TableConfig cfg;
  cfg.count = 3;
  cfg.max_degree = 5;
  cfg.gcd_degree = 2;
  cfg.seed = 9;
  for (const TableRow& row : run_table(cfg)) {
    CHECK(row.agcd_degree == 2);
    CHECK(row.coefficient_p <= 1e-9);
    CHECK(row.coefficient_q <= 1e-9);
    CHECK(row.root_p <= 1e-6);
    CHECK(row.root_q <= 1e-6);
  }
}
