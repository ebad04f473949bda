#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roughstat/analysis.hpp"
#include "roughstat/report.hpp"

namespace roughstat {

enum class RunMode {
  RoughStat,
  Rough,
  LimitSet,
  RoughLimitSet,
  Bounded,
  Cauchy,
  Clusters,
  Theorem,
  Suite
};

const char* to_string(RunMode m);

struct ParseError {
  int line = 0;
  std::string message;
};

// A fully-resolved experiment: every missing key filled with its documented
// default. Numeric parameters are parsed as exact decimals.
struct ExperimentConfig {
  RunMode mode = RunMode::Suite;
  std::string theorem_id;  // for mode Theorem

  PartialMetricSpace space = PartialMetricSpace::max_rplus();
  std::optional<Sequence> sequence;
  std::optional<Sequence> sequence2;

  double x = 0.0;
  double u = 0.0;
  double c = 0.0;
  double r = 0.0;
  std::uint64_t n_terms = 100000;
  Rational tau{1, 100};
  EpsSchedule schedule = EpsSchedule::defaults();
  Grid grid = Grid::make(Rational(0, 1), Rational(5, 1), Rational(1, 20));
  Rational tail_fraction{1, 2};
  std::vector<double> m_grid{1.0, 2.0, 3.0, 5.0, 10.0};
  std::vector<double> r_grid{0.0, 1.0, 2.0};
  std::vector<std::uint64_t> m_candidates{1, 2};
  std::vector<double> l_grid{0.0, 1.0, 2.0};
  std::optional<std::vector<double>> candidates;  // clusters mode; defaults to grid
  std::optional<IndexPredicate> selection;
  double bound_c = 1.0;
  double bound_d = 1.0;
  std::uint64_t seed = 0;

  // Whether n / tau were given explicitly (suite mode only overrides the
  // per-instance defaults for explicit values).
  bool n_explicit = false;
  bool tau_explicit = false;

  ordered_json echo() const;
};

struct ParseResult {
  std::optional<ExperimentConfig> config;
  std::vector<ParseError> errors;
  bool ok() const { return errors.empty(); }
};

// Line-oriented "key = value" document; '#' starts a comment. Reports every
// validation error with its line number (line 0 for document-level issues).
ParseResult parse_config(const std::string& text);

// Shared token parsers (also used by the CLI flags).
Sequence parse_sequence_token(const std::string& token);
IndexPredicate parse_predicate_token(const std::string& token);

// Key reference for --help and the README.
std::string config_key_reference();

}  // namespace roughstat
