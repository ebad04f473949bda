#include "roughstat/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "roughstat/runner.hpp"
#include "roughstat/util.hpp"

namespace roughstat {

namespace {

bool write_file(const std::filesystem::path& path, const std::string& content,
                std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err << "cannot write " << path.string() << "\n";
    return false;
  }
  out << content;
  return true;
}

// Emits the report (and CSVs) either to --out DIR or to the stream.
int emit_output(const RunOutput& result, const std::string& out_dir,
                const std::string& format, std::ostream& out, std::ostream& err) {
  const std::string json_body = result.report.dump(2) + "\n";
  const bool want_json = format == "json" || format == "both";
  const bool want_csv = format == "csv" || format == "both";
  if (out_dir.empty()) {
    if (want_json) out << json_body;
    if (want_csv) {
      for (const auto& [name, content] : result.csv_files) {
        out << "# " << name << "\n" << content;
      }
    }
    return result.exit_code;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    err << "cannot create output directory " << out_dir << ": " << ec.message() << "\n";
    return kExitConfigError;
  }
  const std::filesystem::path dir(out_dir);
  if (want_json && !write_file(dir / "report.json", json_body, err)) {
    return kExitConfigError;
  }
  if (want_csv) {
    for (const auto& [name, content] : result.csv_files) {
      if (!write_file(dir / name, content, err)) return kExitConfigError;
    }
  }
  return result.exit_code;
}

std::vector<double> axiom_sample(const PartialMetricSpace& space, unsigned samples) {
  std::vector<double> points;
  points.reserve(samples);
  for (unsigned i = 0; i < samples; ++i) {
    if (space.kind() == SpaceKind::MaxOnRPlus) {
      points.push_back(0.75 * static_cast<double>(i));
    } else {
      points.push_back(-3.0 + 0.5 * static_cast<double>(i));
    }
  }
  return points;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"roughstat: partial-metric sequence convergence analysis"};
  app.footer(config_key_reference());
  app.require_subcommand(1);

  // run
  std::string config_path;
  std::string out_dir;
  std::string format = "json";
  std::int64_t seed_override = -1;
  CLI::App* run = app.add_subcommand("run", "run an experiment from a config file");
  run->add_option("config", config_path, "experiment config file")->required();
  run->add_option("--out", out_dir, "write report.json (and CSVs) into this directory");
  run->add_option("--format", format, "json | csv | both")
      ->check(CLI::IsMember({"json", "csv", "both"}));
  run->add_option("--seed", seed_override, "override the config seed");

  // suite
  std::uint64_t suite_n = 0;
  std::string suite_tau;
  std::string suite_out;
  CLI::App* suite = app.add_subcommand("suite", "run every theorem check on the default instances");
  suite->add_option("--n", suite_n, "override the prefix length for all checks");
  suite->add_option("--tau", suite_tau, "density threshold, decimal or P/Q");
  suite->add_option("--out", suite_out, "write report.json into this directory");

  // check-axioms
  std::string space_name;
  std::string space_a;
  unsigned samples = 12;
  std::string axioms_out;
  CLI::App* axioms = app.add_subcommand("check-axioms", "verify the partial metric axioms on a sample");
  axioms->add_option("space", space_name, "max_rplus | shifted_euclidean")->required();
  axioms->add_option("--a", space_a, "self-distance constant (shifted_euclidean)");
  axioms->add_option("--samples", samples, "number of sample points (default 12)");
  axioms->add_option("--out", axioms_out, "write report.json into this directory");

  std::vector<const char*> argv;
  argv.push_back("roughstat");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, msg, msg);
    const std::string text = msg.str();
    (code == 0 ? out : err) << text;
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (run->parsed()) {
      std::ifstream in(config_path, std::ios::binary);
      if (!in) {
        err << "cannot read config file " << config_path << "\n";
        return kExitConfigError;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      ParseResult parsed = parse_config(buf.str());
      if (!parsed.ok()) {
        for (const ParseError& e : parsed.errors) {
          err << config_path << ":" << e.line << ": " << e.message << "\n";
        }
        return kExitConfigError;
      }
      ExperimentConfig cfg = *parsed.config;
      if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
      const RunOutput result = run_experiment(cfg);
      return emit_output(result, out_dir, format, out, err);
    }

    if (suite->parsed()) {
      ExperimentConfig cfg;
      cfg.mode = RunMode::Suite;
      if (suite_n > 0) {
        cfg.n_terms = suite_n;
        cfg.n_explicit = true;
      }
      if (!suite_tau.empty()) {
        cfg.tau = Rational::parse(suite_tau);
        if (!(Rational(0, 1) < cfg.tau && cfg.tau < Rational(1, 5))) {
          err << "tau must satisfy 0 < tau < 1/5\n";
          return kExitConfigError;
        }
        cfg.tau_explicit = true;
      }
      const RunOutput result = run_experiment(cfg);
      return emit_output(result, suite_out, "json", out, err);
    }

    // check-axioms
    PartialMetricSpace space = PartialMetricSpace::max_rplus();
    if (space_name == "shifted_euclidean") {
      if (space_a.empty()) {
        err << "shifted_euclidean requires an explicit --a\n";
        return kExitConfigError;
      }
      space = PartialMetricSpace::shifted_euclidean(Rational::parse(space_a).to_double());
    } else if (space_name != "max_rplus") {
      err << "unknown space '" << space_name << "'\n";
      return kExitConfigError;
    }
    if (samples < 1) {
      err << "--samples must be at least 1\n";
      return kExitConfigError;
    }
    const std::vector<double> sample = axiom_sample(space, samples);
    const AxiomReport report = axiom_check(space, sample);
    ordered_json sample_json = ordered_json::array();
    for (double p : sample) sample_json.push_back(json_real(p));
    ordered_json body{{"config", ordered_json{{"space", to_json(space)},
                                              {"samples", samples},
                                              {"sample", sample_json}}},
                      {"results", to_json(report)},
                      {"discrepancies", ordered_json::array()},
                      {"version", kVersion}};
    RunOutput result;
    result.report = body;
    result.exit_code = report.ok() ? kExitOk : kExitCheckFailed;
    return emit_output(result, axioms_out, "json", out, err);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitConfigError;
  }
}

}  // namespace roughstat
