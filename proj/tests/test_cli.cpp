#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "helpers.hpp"

using namespace projent;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("projent_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen writes canonical state files") {
  TempDir tmp;
  const auto path = tmp.file("ghz3.json");
  REQUIRE(run({"gen", "--kind", "ghz", "--dims", "2,2,2", "-o", path}).code == 0);
  const auto s = state_from_json(slurp(path));
  CHECK(s.size() == 8);
  int nonzero = 0;
  for (const auto& a : s.amps()) nonzero += a != Complex{0.0};
  CHECK(nonzero == 2);

  const auto a = run({"gen", "--kind", "random", "--dims", "2,3", "--seed", "5"});
  const auto b = run({"gen", "--kind", "random", "--dims", "2,3", "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  CHECK(run({"gen", "--kind", "w", "--dims", "3,3"}).code == cli::kShape);
  CHECK(run({"gen", "--kind", "ghz", "--dims", "2,x"}).code == cli::kUsage);
  CHECK(run({"gen", "--dims", "2,2"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
}

TEST_CASE("measure prints E and writes a report") {
  TempDir tmp;
  const auto bell = tmp.file("bell.json");
  const auto ghz = tmp.file("ghz.json");
  run({"gen", "--kind", "bell", "--dims", "2,2", "-o", bell});
  run({"gen", "--kind", "ghz", "--dims", "2,2,2", "-o", ghz});

  CHECK(run({"measure", "-i", bell}).out == "E = 0.707106781187\n");
  const auto report = tmp.file("report.json");
  const auto r = run({"measure", "-i", ghz, "--kind", "segre", "--norm-const", "1.0", "-o", report});
  CHECK(r.code == 0);
  CHECK(r.out == "E = 0.866025403784\n");
  const auto doc = nlohmann::json::parse(slurp(report));
  CHECK(doc["kind"] == "segre");
  CHECK(doc["norm_const"] == 1.0);
  CHECK(doc["per_flattening"].size() == 3);
  CHECK(doc["per_flattening"][0]["party"] == 1);
  CHECK(doc["per_flattening"][0]["value"].get<double>() == doctest::Approx(0.25));
  CHECK(doc["total"].get<double>() == doctest::Approx(std::sqrt(0.75)));
  CHECK(doc["config"]["command"] == "measure");
  CHECK_FALSE(std::filesystem::exists(report + ".tmp"));

  CHECK(run({"measure", "-i", ghz, "--norm-const", "0"}).code == cli::kUsage);
  CHECK(run({"measure", "-i", tmp.file("missing.json")}).code == cli::kUsage);
}

TEST_CASE("measure exit codes for degenerate shapes and the coordinate cap") {
  TempDir tmp;
  const auto qutrits = tmp.file("qutrits.json");
  run({"gen", "--kind", "ghz", "--dims", "3,3", "-o", qutrits});
  const auto r = run({"measure", "-i", qutrits, "--kind", "pluecker-general"});
  CHECK(r.code == cli::kShape);
  const auto err = nlohmann::json::parse(r.err);
  CHECK(err["error"] == "DegenerateShape");
  CHECK(err["parties"] == nlohmann::json::array({1, 2}));

  const auto big = tmp.file("big.json");
  run({"gen", "--kind", "ghz", "--dims", "2,2,2,2,2,2,2,2,2,2,2,2,2", "-o", big});
  const auto capped = run({"measure", "-i", big, "--kind", "pluecker-general"});
  CHECK(capped.code == cli::kResourceCap);
  CHECK(nlohmann::json::parse(capped.err)["error"] == "TooManyCoordinates");
}

TEST_CASE("verify suites") {
  TempDir tmp;
  const auto ghz = tmp.file("ghz.json");
  const auto w3 = tmp.file("w3.json");
  run({"gen", "--kind", "ghz", "--dims", "2,2,2", "-o", ghz});
  run({"gen", "--kind", "w", "--dims", "2,2,2", "-o", w3});

  CHECK(run({"verify", "relations", "--shape", "2x4", "--trials", "200", "--seed", "1"}).code == 0);
  const auto coincidence = tmp.file("coincidence.json");
  CHECK(run({"verify", "coincidence", "--input", ghz, "-o", coincidence}).code == 0);
  const auto doc = nlohmann::json::parse(slurp(coincidence));
  CHECK(doc["pass"] == true);
  CHECK(doc["parties"][0]["expected"] == 14);
  CHECK(run({"verify", "lu", "--input", w3, "--trials", "100", "--tol", "1e-9"}).code == 0);
  CHECK(run({"verify", "sl", "--input", ghz, "--kind", "pluecker-qubit", "--party", "1"}).code == 0);
  CHECK(run({"verify", "sl", "--input", ghz, "--kind", "pluecker-qubit", "--party", "1", "--observe-party", "2"})
            .code == cli::kVerificationFailed);
  CHECK(run({"verify", "purity", "--dims", "3,3,2", "--trials", "20"}).code == 0);
  CHECK(run({"verify", "purity", "--input", w3}).code == 0);
  CHECK(run({"verify", "bogus"}).code == cli::kUsage);
  CHECK(run({"verify", "relations", "--shape", "2by4"}).code == cli::kUsage);
}

TEST_CASE("experiment is deterministic") {
  TempDir tmp;
  const auto bell = tmp.file("bell.json");
  run({"gen", "--kind", "bell", "--dims", "2,2", "-o", bell});
  const auto path = tmp.file("report.json");
  const auto r = run({"experiment", "-i", bell, "--kind", "segre", "--trials", "500", "--seed", "1", "-o", path});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("violations = 0 / 500", 0) == 0);
  const std::string first = slurp(path);
  run({"experiment", "-i", bell, "--kind", "segre", "--trials", "500", "--seed", "1", "-o", path});
  CHECK(slurp(path) == first);
  CHECK(nlohmann::json::parse(first)["config"]["trials"] == 500);
}
