#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "projent/grassmann.hpp"
#include "projent/lab.hpp"
#include "projent/oracle.hpp"
#include "projent/random.hpp"
#include "projent/segre.hpp"
#include "projent/state.hpp"

namespace projent::cli {

namespace {

using nlohmann::ordered_json;

// Unwinds a finished command with its exit status.
struct Finished {
  int code;
};

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      dims.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument, "bad dimension list '" + text + "'");
    }
  }
  if (dims.empty()) throw Error(ErrorCode::invalid_argument, "empty dimension list");
  return dims;
}

std::pair<int, int> parse_shape(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::invalid_argument, "shape must look like RxD, got '" + text + "'");
  }
}

ordered_json config_json(const RunConfig& c) {
  return {{"command", c.command}, {"suite", c.suite},         {"input", c.input},
          {"output", c.output},   {"kind", c.kind},           {"dims", c.dims},
          {"shape", c.shape},     {"norm_const", c.norm_const}, {"seed", c.seed},
          {"trials", c.trials},   {"tolerance", c.tolerance}, {"slack", c.slack},
          {"party", c.party},     {"observe_party", c.observe_party}, {"row_pairs", c.row_pairs},
          {"force", c.force},     {"normalize", c.normalize}};
}

// Temp file plus rename, so readers never see a partial report.
void write_atomic(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::io_error, "cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw Error(ErrorCode::io_error, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw Error(ErrorCode::io_error, "cannot rename onto " + path + ": " + ec.message());
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::io_error, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

PureState load_state(const RunConfig& c) {
  if (c.input.empty()) throw Error(ErrorCode::invalid_argument, "--input is required");
  return state_from_json(read_file(c.input), c.normalize);
}

// Report files carry the payload plus the full run configuration.
void emit_report(const RunConfig& c, ordered_json payload, std::ostream& out) {
  payload["config"] = config_json(c);
  const std::string text = payload.dump(2) + "\n";
  if (c.output.empty()) {
    out << text;
  } else {
    write_atomic(c.output, text);
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::too_many_coordinates: return kResourceCap;
    case ErrorCode::invalid_argument:
    case ErrorCode::io_error: return kUsage;
    default: return kShape;
  }
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void cmd_gen(const RunConfig& c, std::ostream& out) {
  const auto dims = parse_dims(c.dims);
  const PureState state = c.kind == "random"
                              ? random_state(dims, c.seed)
                              : named_state(parse_named_kind(c.kind), static_cast<int>(dims.size()), dims);
  const std::string text = to_json(state);
  if (c.output.empty()) {
    out << text;
  } else {
    write_atomic(c.output, text);
  }
}

void cmd_measure(const RunConfig& c, std::ostream& out) {
  const PureState state = load_state(c);
  const MeasureKind kind = parse_measure_kind(c.kind);
  MeasureReport report;
  switch (kind) {
    case MeasureKind::segre: report = segre_measure(state, c.norm_const); break;
    case MeasureKind::pluecker_qubit:
      report = multiqubit_measure(state, c.norm_const, c.row_pairs == "first" ? RowPairs::first : RowPairs::all,
                                  c.force);
      break;
    case MeasureKind::pluecker_general: report = general_measure(state, c.norm_const, c.force); break;
  }
  if (!c.output.empty()) emit_report(c, to_json(report), out);
  out << "E = " << format_value(report.total) << "\n";
}

int finish_verify(const RunConfig& c, ordered_json payload, bool pass, std::ostream& out) {
  payload["suite"] = c.suite;
  payload["pass"] = pass;
  emit_report(c, std::move(payload), out);
  out << c.suite << ": " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kOk : kVerificationFailed;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  if (c.suite == "relations") {
    const auto [r, d] = parse_shape(c.shape);
    const auto report = relation_suite(r, d, c.trials, c.seed, c.tolerance);
    return finish_verify(c, to_json(report), report.pass, out);
  }
  if (c.suite == "lu") {
    const auto report = lu_invariance(load_state(c), parse_measure_kind(c.kind), c.trials, c.seed, c.tolerance);
    return finish_verify(c, to_json(report), report.pass, out);
  }
  if (c.suite == "sl") {
    std::optional<int> observe;
    if (c.observe_party > 0) observe = c.observe_party;
    const auto report =
        sl_term_invariance(load_state(c), c.party, parse_measure_kind(c.kind), c.trials, c.seed, c.tolerance, observe);
    return finish_verify(c, to_json(report), report.pass, out);
  }
  if (c.suite == "coincidence") {
    const auto report = oracle::coincidence_check(load_state(c));
    ordered_json parties = ordered_json::array();
    for (const auto& e : report.parties) {
      ordered_json entry{{"party", e.party}, {"d", e.d}, {"expected", e.expected}};
      entry["ratio"] = e.ratio ? ordered_json(*e.ratio) : ordered_json(nullptr);
      parties.push_back(std::move(entry));
    }
    const bool pass = report.pass(c.tolerance);
    return finish_verify(c, {{"parties", parties}, {"max_rel_dev", report.max_rel_dev}, {"tol", c.tolerance}}, pass,
                         out);
  }
  if (c.suite == "purity") {
    std::vector<PureState> states;
    if (!c.input.empty()) {
      states.push_back(load_state(c));
    } else {
      const auto dims = parse_dims(c.dims);
      for (int t = 0; t < c.trials; ++t) states.push_back(random_state(dims, derive_seed(c.seed, t)));
    }
    double worst = 0.0;
    for (const auto& s : states) {
      for (int j = 1; j <= s.party_count(); ++j) worst = std::max(worst, oracle::purity_identity_residual(s, j));
    }
    const bool pass = worst < c.tolerance;
    return finish_verify(
        c, {{"states", states.size()}, {"max_residual", worst}, {"tol", c.tolerance}}, pass, out);
  }
  throw Error(ErrorCode::invalid_argument, "unknown verify suite '" + c.suite + "'");
}

void cmd_experiment(const RunConfig& c, std::ostream& out) {
  const auto report = monotonicity_experiment(load_state(c), parse_measure_kind(c.kind), c.trials, c.seed, c.slack);
  emit_report(c, to_json(report), out);
  out << "violations = " << report.violations << " / " << report.trials << " (rate "
      << format_value(static_cast<double>(report.violations) / report.trials) << ")\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Segre and Pluecker entanglement measures for pure multipartite states", "projent"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Write a named or random state file");
  gen->add_option("--kind", c.kind, "bell, ghz, w, product or random")->required();
  gen->add_option("--dims", c.dims, "Comma-separated party dimensions")->required();
  gen->add_option("--seed", c.seed, "Seed for random states");
  gen->add_option("-o,--output", c.output, "Output file (stdout when omitted)");

  auto* measure = app.add_subcommand("measure", "Evaluate a measure on a state file");
  measure->add_option("-i,--input", c.input, "State file")->required();
  measure->add_option("--kind", c.kind, "segre, pluecker-qubit or pluecker-general");
  measure->add_option("--norm-const", c.norm_const, "Normalization constant")->check(CLI::PositiveNumber);
  measure->add_option("--row-pairs", c.row_pairs, "pluecker-qubit rows: all or first")
      ->check(CLI::IsMember({"all", "first"}));
  measure->add_flag("--force", c.force, "Lift the 10^6 Pluecker coordinate cap");
  measure->add_flag("--normalize", c.normalize, "Rescale the input to unit norm");
  measure->add_option("-o,--output", c.output, "Report file");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", c.suite, "relations, lu, sl, coincidence or purity")
      ->required()
      ->check(CLI::IsMember({"relations", "lu", "sl", "coincidence", "purity"}));
  verify->add_option("-i,--input", c.input, "State file");
  verify->add_option("--kind", c.kind, "Measure kind");
  verify->add_option("--shape", c.shape, "Matrix shape RxD for the relations suite");
  verify->add_option("--dims", c.dims, "Random-state dimensions for the purity suite");
  verify->add_option("--trials", c.trials, "Trial count")->check(CLI::PositiveNumber);
  verify->add_option("--seed", c.seed, "Seed");
  verify->add_option("--tol", c.tolerance, "Pass tolerance");
  verify->add_option("--party", c.party, "Party acted on (sl suite)");
  verify->add_option("--observe-party", c.observe_party, "Party whose term is compared (sl negative control)");
  verify->add_flag("--normalize", c.normalize, "Rescale the input to unit norm");
  verify->add_option("-o,--output", c.output, "Report file (stdout when omitted)");

  auto* experiment = app.add_subcommand("experiment", "Monotonicity under random local filters");
  experiment->add_option("-i,--input", c.input, "State file")->required();
  experiment->add_option("--kind", c.kind, "Measure kind");
  experiment->add_option("--trials", c.trials, "Trial count")->check(CLI::PositiveNumber);
  experiment->add_option("--seed", c.seed, "Seed");
  experiment->add_option("--slack", c.slack, "Additive violation slack");
  experiment->add_flag("--normalize", c.normalize, "Rescale the input to unit norm");
  experiment->add_option("-o,--output", c.output, "Report file (stdout when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*gen) {
      c.command = "gen";
      cmd_gen(c, out);
      return kOk;
    }
    if (*measure) {
      c.command = "measure";
      cmd_measure(c, out);
      return kOk;
    }
    if (*verify) {
      c.command = "verify";
      if (c.suite == "relations" && c.shape.empty()) c.shape = "2x4";
      if (verify->count("--tol") == 0) {
        c.tolerance = (c.suite == "relations" || c.suite == "coincidence" || c.suite == "purity") ? 1e-10 : 1e-9;
      }
      return cmd_verify(c, out);
    }
    c.command = "experiment";
    if (experiment->count("--trials") == 0) c.trials = 500;
    cmd_experiment(c, out);
    return kOk;
  } catch (const Error& e) {
    ordered_json error{{"error", to_string(e.code())}, {"message", e.what()}, {"parties", e.parties()}};
    err << error.dump() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace projent::cli
