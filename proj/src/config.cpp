#include "roughstat/config.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "roughstat/util.hpp"

namespace roughstat {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

double parse_decimal(const std::string& v) { return Rational::parse(v).to_double(); }

std::uint64_t parse_uint(const std::string& v) {
  const Rational r = Rational::parse(v);
  if (r.den() != 1 || r.num() < 0) {
    throw std::invalid_argument("expected a nonnegative integer, got '" + v + "'");
  }
  return static_cast<std::uint64_t>(r.num());
}

std::vector<double> parse_decimal_list(const std::string& v) {
  std::vector<double> out;
  for (const std::string& item : split(v, ',')) out.push_back(parse_decimal(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<std::uint64_t> parse_uint_list(const std::string& v) {
  std::vector<std::uint64_t> out;
  for (const std::string& item : split(v, ',')) out.push_back(parse_uint(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

RunMode parse_mode(const std::string& v, std::string& theorem_id) {
  if (v == "rough_stat") return RunMode::RoughStat;
  if (v == "rough") return RunMode::Rough;
  if (v == "limit_set") return RunMode::LimitSet;
  if (v == "rough_limit_set") return RunMode::RoughLimitSet;
  if (v == "bounded") return RunMode::Bounded;
  if (v == "cauchy") return RunMode::Cauchy;
  if (v == "clusters") return RunMode::Clusters;
  if (v == "suite") return RunMode::Suite;
  if (v.rfind("theorem:", 0) == 0) {
    theorem_id = v.substr(8);
    static const char* known[] = {"2.1", "2.2", "2.3", "2.4", "2.5",
                                  "2.6", "2.7", "2.8", "2.9", "cor-2.1"};
    for (const char* id : known) {
      if (theorem_id == id) return RunMode::Theorem;
    }
    throw std::invalid_argument("unknown theorem id '" + theorem_id + "'");
  }
  throw std::invalid_argument("unknown mode '" + v + "'");
}

}  // namespace

const char* to_string(RunMode m) {
  switch (m) {
    case RunMode::RoughStat:
      return "rough_stat";
    case RunMode::Rough:
      return "rough";
    case RunMode::LimitSet:
      return "limit_set";
    case RunMode::RoughLimitSet:
      return "rough_limit_set";
    case RunMode::Bounded:
      return "bounded";
    case RunMode::Cauchy:
      return "cauchy";
    case RunMode::Clusters:
      return "clusters";
    case RunMode::Theorem:
      return "theorem";
    case RunMode::Suite:
      return "suite";
  }
  return "?";
}

Sequence parse_sequence_token(const std::string& token) {
  const std::vector<std::string> parts = split(token, ':');
  const std::string& name = parts[0];
  auto arg = [&](std::size_t i, double fallback) {
    return parts.size() > i ? parse_decimal(parts[i]) : fallback;
  };
  if (name == "example_2_1" || name == "example-2.1") {
    return Sequence(paper_example_sequence());
  }
  if (name == "constant") {
    if (parts.size() < 2) throw std::invalid_argument("constant sequence needs a value");
    return Sequence(constant_sequence(arg(1, 0.0)));
  }
  if (name == "reciprocal") return Sequence(reciprocal_sequence(arg(1, 1.0)));
  if (name == "alternating") {
    if (parts.size() < 2) throw std::invalid_argument("alternating sequence needs an amplitude");
    return Sequence(alternating_sequence(arg(1, 1.0)));
  }
  if (name == "linear") return Sequence(linear_sequence());
  throw std::invalid_argument("unknown sequence '" + token + "'");
}

IndexPredicate parse_predicate_token(const std::string& token) {
  if (token == "perfect_square") return IndexPredicate::perfect_square();
  if (token == "not_perfect_square") {
    return IndexPredicate::negate(IndexPredicate::perfect_square());
  }
  if (token == "even") return IndexPredicate::even();
  if (token == "odd") return IndexPredicate::odd();
  if (token == "all") return IndexPredicate::all();
  if (token.rfind("residue:", 0) == 0) {
    const std::vector<std::string> args = split(token.substr(8), ',');
    if (args.size() != 2) {
      throw std::invalid_argument("residue predicate needs 'residue:<m>,<rem>'");
    }
    return IndexPredicate::residue(parse_uint(args[0]), parse_uint(args[1]));
  }
  throw std::invalid_argument("unknown selection predicate '" + token + "'");
}

ParseResult parse_config(const std::string& text) {
  ParseResult result;
  ExperimentConfig cfg;

  bool have_mode = false;
  bool have_space = false;
  bool have_sequence = false;
  std::string space_name;
  std::optional<Rational> space_a;
  std::optional<Rational> grid_lo, grid_hi, grid_step;
  int space_line = 0, grid_line = 0;

  auto error = [&result](int line, const std::string& msg) {
    result.errors.push_back({line, msg});
  };

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      error(line_no, "expected 'key = value'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      error(line_no, "missing key before '='");
      continue;
    }
    if (value.empty()) {
      error(line_no, "missing value for '" + key + "'");
      continue;
    }

    try {
      if (key == "mode") {
        cfg.mode = parse_mode(value, cfg.theorem_id);
        have_mode = true;
      } else if (key == "space") {
        if (value != "max_rplus" && value != "shifted_euclidean") {
          throw std::invalid_argument("unknown space '" + value + "'");
        }
        space_name = value;
        space_line = line_no;
        have_space = true;
      } else if (key == "a") {
        space_a = Rational::parse(value);
        if (space_line == 0) space_line = line_no;
      } else if (key == "sequence") {
        cfg.sequence = parse_sequence_token(value);
        have_sequence = true;
      } else if (key == "sequence2") {
        cfg.sequence2 = parse_sequence_token(value);
      } else if (key == "x") {
        cfg.x = parse_decimal(value);
      } else if (key == "u") {
        cfg.u = parse_decimal(value);
      } else if (key == "c") {
        cfg.c = parse_decimal(value);
      } else if (key == "r") {
        cfg.r = parse_decimal(value);
        if (cfg.r < 0.0) throw std::invalid_argument("roughness degree must be >= 0");
      } else if (key == "n") {
        cfg.n_terms = parse_uint(value);
        if (cfg.n_terms < 2) throw std::invalid_argument("n must be at least 2");
        cfg.n_explicit = true;
      } else if (key == "grid_lo" || key == "lo") {
        grid_lo = Rational::parse(value);
        grid_line = line_no;
      } else if (key == "grid_hi" || key == "hi") {
        grid_hi = Rational::parse(value);
        grid_line = line_no;
      } else if (key == "grid_step" || key == "step") {
        grid_step = Rational::parse(value);
        if (!(Rational(0, 1) < *grid_step)) {
          throw std::invalid_argument("grid step must be positive");
        }
        grid_line = line_no;
      } else if (key == "schedule") {
        std::vector<double> values = parse_decimal_list(value);
        for (std::size_t i = 1; i < values.size(); ++i) {
          if (!(values[i] < values[i - 1])) {
            throw std::invalid_argument("schedule must be strictly decreasing");
          }
        }
        cfg.schedule = EpsSchedule::from(std::move(values));
      } else if (key == "tau") {
        cfg.tau = Rational::parse(value);
        if (!(Rational(0, 1) < cfg.tau && cfg.tau < Rational(1, 5))) {
          throw std::invalid_argument("tau must satisfy 0 < tau < 1/5");
        }
        cfg.tau_explicit = true;
      } else if (key == "tail_fraction") {
        cfg.tail_fraction = Rational::parse(value);
        if (!(Rational(0, 1) < cfg.tail_fraction && cfg.tail_fraction < Rational(1, 1))) {
          throw std::invalid_argument("tail_fraction must lie strictly between 0 and 1");
        }
      } else if (key == "m_grid") {
        cfg.m_grid = parse_decimal_list(value);
      } else if (key == "r_grid") {
        cfg.r_grid = parse_decimal_list(value);
      } else if (key == "m_candidates") {
        cfg.m_candidates = parse_uint_list(value);
      } else if (key == "l_grid") {
        cfg.l_grid = parse_decimal_list(value);
      } else if (key == "candidates") {
        cfg.candidates = parse_decimal_list(value);
      } else if (key == "selection") {
        cfg.selection = parse_predicate_token(value);
      } else if (key == "bound_c") {
        cfg.bound_c = parse_decimal(value);
      } else if (key == "bound_d") {
        cfg.bound_d = parse_decimal(value);
      } else if (key == "seed") {
        cfg.seed = parse_uint(value);
      } else {
        error(line_no, "unknown key '" + key + "'");
      }
    } catch (const std::exception& ex) {
      error(line_no, ex.what());
    }
  }

  // Cross-field validation.
  if (!have_mode) error(0, "missing required key 'mode'");
  if (have_space) {
    if (space_name == "shifted_euclidean") {
      if (!space_a) {
        error(space_line, "shifted_euclidean requires an explicit 'a'");
      } else {
        try {
          cfg.space = PartialMetricSpace::shifted_euclidean(space_a->to_double());
        } catch (const std::exception& ex) {
          error(space_line, ex.what());
        }
      }
    } else {
      if (space_a) error(space_line, "'a' is only meaningful for shifted_euclidean");
      cfg.space = PartialMetricSpace::max_rplus();
    }
  }
  if (grid_lo || grid_hi || grid_step) {
    const Rational lo = grid_lo.value_or(cfg.grid.lo);
    const Rational hi = grid_hi.value_or(cfg.grid.hi);
    const Rational step = grid_step.value_or(cfg.grid.step);
    try {
      cfg.grid = Grid::make(lo, hi, step);
    } catch (const std::exception& ex) {
      error(grid_line, ex.what());
    }
  }
  const bool needs_space_and_sequence =
      have_mode && cfg.mode != RunMode::Suite;
  if (needs_space_and_sequence) {
    if (!have_space) error(0, "missing required key 'space'");
    if (!have_sequence) error(0, "missing required key 'sequence'");
  }
  if (have_mode && cfg.mode == RunMode::Theorem &&
      (cfg.theorem_id == "2.7" || cfg.theorem_id == "2.8") && !cfg.sequence2) {
    error(0, "theorem " + cfg.theorem_id + " needs 'sequence2'");
  }
  if (have_mode && cfg.mode == RunMode::Theorem && cfg.theorem_id == "2.6" &&
      !cfg.selection) {
    error(0, "theorem 2.6 needs 'selection'");
  }

  if (result.errors.empty()) {
    result.config = std::move(cfg);
  } else {
    std::sort(result.errors.begin(), result.errors.end(),
              [](const ParseError& a, const ParseError& b) { return a.line < b.line; });
  }
  return result;
}

ordered_json ExperimentConfig::echo() const {
  ordered_json j;
  j["mode"] = to_string(mode);
  if (mode == RunMode::Theorem) j["theorem"] = theorem_id;
  j["space"] = to_json(space);
  if (sequence) j["sequence"] = sequence->describe();
  if (sequence2) j["sequence2"] = sequence2->describe();
  j["x"] = json_real(x);
  j["u"] = json_real(u);
  j["c"] = json_real(c);
  j["r"] = json_real(r);
  j["n"] = n_terms;
  j["tau"] = tau.str();
  ordered_json sched = ordered_json::array();
  for (double e : schedule.values) sched.push_back(json_real(e));
  j["schedule"] = sched;
  j["grid"] = to_json(grid);
  j["tail_fraction"] = tail_fraction.str();
  auto real_list = [](const std::vector<double>& v) {
    ordered_json arr = ordered_json::array();
    for (double d : v) arr.push_back(json_real(d));
    return arr;
  };
  j["m_grid"] = real_list(m_grid);
  j["r_grid"] = real_list(r_grid);
  ordered_json mc = ordered_json::array();
  for (std::uint64_t m : m_candidates) mc.push_back(m);
  j["m_candidates"] = mc;
  j["l_grid"] = real_list(l_grid);
  if (candidates) j["candidates"] = real_list(*candidates);
  if (selection) j["selection"] = selection->describe();
  j["bound_c"] = json_real(bound_c);
  j["bound_d"] = json_real(bound_d);
  j["seed"] = seed;
  return j;
}

std::string config_key_reference() {
  return
      "experiment config: one 'key = value' per line, '#' starts a comment\n"
      "\n"
      "  mode          rough_stat | rough | limit_set | rough_limit_set | bounded |\n"
      "                cauchy | clusters | theorem:<2.1..2.9|cor-2.1> | suite\n"
      "  space         max_rplus | shifted_euclidean   (required unless mode=suite)\n"
      "  a             self-distance constant, required for shifted_euclidean\n"
      "  sequence      example_2_1 | constant:<c> | reciprocal[:<scale>] |\n"
      "                alternating:<amp> | linear     (required unless mode=suite)\n"
      "  sequence2     second sequence for theorem:2.7 / theorem:2.8\n"
      "  x / u / c     candidate limit, boundedness base point, cluster candidate\n"
      "  r             roughness degree (default 0)\n"
      "  n             prefix length (default 100000)\n"
      "  grid_lo, grid_hi, grid_step   candidate grid (default 0, 5, 0.05);\n"
      "                lo / hi / step are accepted aliases\n"
      "  schedule      eps values, strictly decreasing (default 1, 0.5, 0.1, 0.05, 0.01)\n"
      "  tau           density threshold in (0, 1/5), decimal or p/q (default 1/100)\n"
      "  tail_fraction tail window start fraction (default 1/2)\n"
      "  m_grid        bound candidates for mode=bounded (default 1, 2, 3, 5, 10)\n"
      "  r_grid        roughness search grid for theorem:2.5 (default 0, 1, 2)\n"
      "  m_candidates  anchor indices for mode=cauchy (default 1, 2)\n"
      "  l_grid        offsets for mode=cauchy (default 0, 1, 2)\n"
      "  candidates    explicit candidate list for mode=clusters (default: grid points)\n"
      "  selection     perfect_square | not_perfect_square | even | odd | all |\n"
      "                residue:<m>,<rem>   (theorem:2.6 subsequence selection)\n"
      "  bound_c, bound_d   self-distance bounds for theorem:2.8 (default 1)\n"
      "  seed          echoed into reports (default 0)\n"
      "\n"
      "All decimals are parsed exactly; densities are reported as exact count/N\n"
      "fractions and metric values with 12 significant digits.\n";
}

}  // namespace roughstat
