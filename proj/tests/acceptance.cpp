// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "cli.hpp"
#include "projent/grassmann.hpp"
#include "projent/lab.hpp"
#include "projent/oracle.hpp"
#include "projent/random.hpp"
#include "projent/segre.hpp"

using namespace projent;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  std::string name;
  double time_limit_s;
  std::function<Outcome()> body;
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::vector<int> qubits(int m) { return std::vector<int>(static_cast<std::size_t>(m), 2); }

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

Outcome exact_fixtures() {
  Outcome o;
  const auto check = [&](const std::string& name, const PureState& s, double expected) {
    const double total = segre_measure(s, 1.0).total;
    double brute = 0.0;
    for (int j = 1; j <= s.party_count(); ++j) brute += oracle::brute_minor_sum(flatten(s, j));
    o.require(std::abs(total - expected) < 1e-12, name + " E=" + fmt(total));
    o.require(std::abs(std::sqrt(brute) - expected) < 1e-12, name + " brute=" + fmt(std::sqrt(brute)));
  };
  check("bell", named_state(NamedKind::bell, 2, {2, 2}), 1.0 / std::sqrt(2.0));
  check("ghz3", named_state(NamedKind::ghz, 3, qubits(3)), std::sqrt(3.0) / 2.0);
  check("w3", named_state(NamedKind::w, 3, qubits(3)), std::sqrt(2.0 / 3.0));
  check("ghz-qutrit-pair", named_state(NamedKind::ghz, 2, {3, 3}), std::sqrt(2.0 / 3.0));
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2}, {2, 2, 2}, {2, 3, 4}}) {
    check("product", named_state(NamedKind::product_basis, static_cast<int>(dims.size()), dims), 0.0);
  }
  return o;
}

Outcome purity_suite() {
  Outcome o;
  double worst = 0.0;
  const std::vector<std::vector<int>> shapes{{2, 2}, {2, 2, 2}, {2, 3}, {3, 3, 2}, {2, 2, 2, 2}};
  for (const auto& dims : shapes) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto s = random_state(dims, derive_seed(2024, seed));
      for (int j = 1; j <= s.party_count(); ++j) worst = std::max(worst, oracle::purity_identity_residual(s, j));
    }
  }
  o.require(worst < 1e-10, "max residual " + fmt(worst));
  o.detail = o.detail.empty() ? "max residual " + fmt(worst) : o.detail;
  return o;
}

Outcome relation_vanishing() {
  Outcome o;
  std::string summary;
  for (const auto& [r, d] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
    const auto rep = relation_suite(r, d, 200, 1, 1e-10);
    o.require(rep.pass, std::to_string(r) + "x" + std::to_string(d) + " residual " + fmt(rep.max_scaled_residual));
    summary += std::to_string(r) + "x" + std::to_string(d) + ":" + fmt(rep.max_scaled_residual) + " ";
  }
  if (o.pass) o.detail = "max scaled residuals " + summary;
  return o;
}

Outcome coincidence() {
  Outcome o;
  double worst = 0.0;
  for (int m : {3, 4}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto rep = oracle::coincidence_check(random_state(qubits(m), derive_seed(77, seed)));
      for (const auto& e : rep.parties) o.require(e.ratio.has_value(), "vanishing Segre term on a random state");
      worst = std::max(worst, rep.max_rel_dev);
    }
  }
  o.require(worst < 1e-10, "max relative deviation " + fmt(worst));
  if (o.pass) o.detail = "ratios mult(2,4)=14, mult(2,8)=90; max rel dev " + fmt(worst);
  return o;
}

Outcome invariance() {
  Outcome o;
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2, 2}, {2, 3, 4}}) {
    for (std::uint64_t seed : {1, 2}) {
      const auto rep = lu_invariance(random_state(dims, seed), MeasureKind::segre, 100, seed, 1e-9);
      o.require(rep.pass, "lu segre rel dev " + fmt(rep.max_rel_dev));
    }
  }
  for (int m : {3, 4}) {
    const auto s = random_state(qubits(m), 10 + static_cast<std::uint64_t>(m));
    for (int j = 1; j <= m; ++j) {
      const auto rep = sl_term_invariance(s, j, MeasureKind::pluecker_qubit, 100, 5, 1e-9);
      o.require(rep.pass, "SL(2) party " + std::to_string(j) + " rel dev " + fmt(rep.max_rel_dev));
    }
  }
  for (const auto& s : {random_state({3, 3, 3}, 3), named_state(NamedKind::ghz, 3, {3, 3, 3})}) {
    for (int j = 1; j <= 3; ++j) {
      const auto rep = sl_term_invariance(s, j, MeasureKind::pluecker_general, 100, 6, 1e-9);
      o.require(rep.pass, "SL(3) party " + std::to_string(j) + " rel dev " + fmt(rep.max_rel_dev));
    }
  }
  return o;
}

Outcome monotonicity() {
  Outcome o;
  std::vector<PureState> qubit_states{named_state(NamedKind::bell, 2, {2, 2}),
                                      named_state(NamedKind::ghz, 3, qubits(3)),
                                      named_state(NamedKind::w, 3, qubits(3))};
  for (std::uint64_t seed = 0; seed < 20; ++seed) qubit_states.push_back(random_state(qubits(3), 300 + seed));
  int violations = 0;
  for (std::size_t i = 0; i < qubit_states.size(); ++i) {
    violations += monotonicity_experiment(qubit_states[i], MeasureKind::segre, 500, i, 1e-9).violations;
  }
  o.require(violations == 0, std::to_string(violations) + " qubit violations");

  // Non-qubit shapes: reported, compared against the frozen regression counts.
  const auto a = monotonicity_experiment(random_state({2, 3, 2}, 1), MeasureKind::segre, 500, 1, 1e-9);
  const auto b = monotonicity_experiment(random_state({3, 3}, 1), MeasureKind::segre, 500, 1, 1e-9);
  o.require(a.violations == 0, "[2,3,2] regression count changed to " + std::to_string(a.violations));
  o.require(b.violations == 0, "[3,3] regression count changed to " + std::to_string(b.violations));
  if (o.pass) {
    o.detail = "qubit violations 0/" + std::to_string(500 * qubit_states.size()) + "; [2,3,2] rate " +
               fmt(a.violations / 500.0) + ", [3,3] rate " + fmt(b.violations / 500.0);
  }
  return o;
}

struct Scratch {
  std::filesystem::path dir;
  Scratch() {
    dir = std::filesystem::temp_directory_path() / ("projent_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
  }
  ~Scratch() { std::filesystem::remove_all(dir); }
  std::string file(const std::string& name) const { return (dir / name).string(); }
};

Outcome degenerate_shapes() {
  Outcome o;
  try {
    general_measure(named_state(NamedKind::ghz, 2, {3, 3}));
    o.require(false, "no DegenerateShape on [3,3]");
  } catch (const Error& e) {
    o.require(e.code() == ErrorCode::degenerate_shape, "wrong error on [3,3]");
    o.require(e.parties() == std::vector<int>{1, 2}, "DegenerateShape does not name parties 1 and 2");
  }
  try {
    general_measure(named_state(NamedKind::ghz, 13, qubits(13)));
    o.require(false, "no TooManyCoordinates on 13 qubits");
  } catch (const Error& e) {
    o.require(e.code() == ErrorCode::too_many_coordinates, "wrong error on 13 qubits");
  }

  Scratch tmp;
  cli_run({"gen", "--kind", "ghz", "--dims", "3,3", "-o", tmp.file("q.json")});
  o.require(cli_run({"measure", "-i", tmp.file("q.json"), "--kind", "pluecker-general"}) == cli::kShape,
            "CLI exit code for DegenerateShape");
  cli_run({"gen", "--kind", "ghz", "--dims", "2,2,2,2,2,2,2,2,2,2,2,2,2", "-o", tmp.file("big.json")});
  o.require(cli_run({"measure", "-i", tmp.file("big.json"), "--kind", "pluecker-general"}) == cli::kResourceCap,
            "CLI exit code for TooManyCoordinates");
  return o;
}

Outcome determinism() {
  Outcome o;
  Scratch tmp;
  const auto ghz = tmp.file("ghz3.json");
  const auto rnd = tmp.file("r333.json");
  cli_run({"gen", "--kind", "ghz", "--dims", "2,2,2", "-o", ghz});
  cli_run({"gen", "--kind", "random", "--dims", "3,3,3", "--seed", "4", "-o", rnd});
  const auto report = tmp.file("report.json");
  const std::vector<std::vector<std::string>> commands{
      {"verify", "relations", "--shape", "3x6", "--trials", "50", "--seed", "3"},
      {"verify", "lu", "-i", ghz, "--trials", "50", "--seed", "3"},
      {"verify", "sl", "-i", rnd, "--kind", "pluecker-general", "--party", "2", "--seed", "3"},
      {"verify", "coincidence", "-i", ghz},
      {"verify", "purity", "--dims", "3,3,2", "--trials", "30", "--seed", "3"},
      {"experiment", "-i", ghz, "--trials", "200", "--seed", "3"},
      {"experiment", "-i", rnd, "--kind", "pluecker-general", "--trials", "50", "--seed", "3"},
  };
  for (auto args : commands) {
    args.push_back("-o");
    args.push_back(report);
    const int first_code = cli_run(args);
    const std::string first = slurp(report);
    std::filesystem::remove(report);
    const int second_code = cli_run(args);
    o.require(first_code == second_code && !first.empty() && first == slurp(report),
              "report differs for '" + args[0] + " " + args[1] + "'");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1 exact fixtures", 1.0, exact_fixtures},
      {"AC2 purity identity", 10.0, purity_suite},
      {"AC3 Pluecker relations", 10.0, relation_vanishing},
      {"AC4 Segre/Pluecker coincidence", 30.0, coincidence},
      {"AC5 LU and SL invariance", 60.0, invariance},
      {"AC6 monotonicity", 120.0, monotonicity},
      {"AC7 degenerate shapes and coordinate cap", 60.0, degenerate_shapes},
      {"AC8 determinism", 60.0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds < c.time_limit_s, "runtime " + fmt(seconds) + " s over " + fmt(c.time_limit_s) + " s");
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.name.c_str(), seconds,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
