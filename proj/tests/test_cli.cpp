#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "doctest.h"
#include "hgnoise/csv.hpp"

using namespace hgnoise;
using namespace hgnoise::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("hgnoise_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int n = 0;
    return n;
  }
  std::string write(const std::string& name, const std::string& text) const {
    const auto file = path / name;
    std::ofstream(file) << text;
    return file.string();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<double> row;
    for (auto f : split(line, ',')) row.push_back(f.empty() ? std::nan("") : parse_number(f));
    rows.push_back(row);
  }
  return rows;
}

const char* kFourQubit = "# four qubits\n4\n0 3\n1 2\n0 2 3\n1 2 3\n";

}  // namespace

TEST_CASE("state command") {
  TempDir dir;
  std::ostringstream out, err;
  CHECK(cmd_state(dir.write("g.hg", kFourQubit), out, err) == kOk);
  CHECK(out.str() == "n=4\nN=16\nsigns=++++++-++-+++--+\nl1_coherence=15\n");

  std::ostringstream out2, err2;
  CHECK(cmd_state(dir.write("e.hg", "2\n"), out2, err2) == kOk);
  CHECK(out2.str() == "n=2\nN=4\nsigns=++++\nl1_coherence=3\n");
}

TEST_CASE("state command errors") {
  TempDir dir;
  std::ostringstream out, err;
  CHECK(cmd_state(dir.write("bad.hg", "3\n0 1\n1 5\n"), out, err) == kInputError);
  CHECK(err.str().find("line 3") != std::string::npos);
  CHECK(out.str().empty());

  std::ostringstream out2, err2;
  CHECK(cmd_state((dir.path / "missing.hg").string(), out2, err2) == kIoError);
}

TEST_CASE("model construction") {
  CHECK(std::get<AdcNonMarkovian>(make_model(ChannelTag::adc, {{"t", 2}})).coupling == 0.01);
  CHECK(std::get<NmDephasing>(make_model(ChannelTag::nm_dephasing, {{"p", 0.2}})).frequency == 40);
  CHECK_THROWS_AS(make_model(ChannelTag::dit_flip, {{"alpha", 1}}), ParameterError);
  CHECK(grid_point(0, 1, 3, 1) == 0.5);
  CHECK(grid_point(0, 0.3, 7, 6) == 0.3);
}

TEST_CASE("phase flip sweep endpoints") {
  TempDir dir;
  SweepSpec spec;
  spec.hypergraph_path = dir.write("g.hg", kFourQubit);
  spec.channel = ChannelTag::phase_flip;
  spec.param = "p";
  spec.from = 0;
  spec.to = 1;
  spec.steps = 2;
  std::ostringstream out, err;
  REQUIRE(cmd_sweep(spec, out, err) == kOk);
  CHECK(out.str().rfind(std::string(kSweepHeader) + "\n", 0) == 0);
  const auto rows = csv_rows(out.str());
  REQUIRE(rows.size() == 2);
  const std::vector<double> first{0, 1, 1, 15, 15}, last{1, 0, 0, 1, 1};
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(std::abs(rows[0][k] - first[k]) < 1e-12);
    CHECK(std::abs(rows[1][k] - last[k]) < 1e-12);
  }
}

TEST_CASE("adc sweeps show the two regimes") {
  TempDir dir;
  SweepSpec spec;
  spec.hypergraph_path = dir.write("g.hg", "3\n0 1\n1 2\n0 1 2\n");
  spec.channel = ChannelTag::adc;
  spec.param = "t";
  spec.from = 0;
  spec.to = 10;
  spec.steps = 200;
  spec.fixed = {{"g", 1}, {"gamma", 0.01}};

  std::ostringstream markov, err;
  REQUIRE(cmd_sweep(spec, markov, err) == kOk);
  auto rows = csv_rows(markov.str());
  REQUIRE(rows.size() == 200);
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k][1] <= rows[k - 1][1]);
  for (const auto& r : rows) CHECK(std::abs(r[1] - r[2]) < 1e-10);

  spec.fixed["gamma"] = 20;
  std::ostringstream nonmarkov;
  REQUIRE(cmd_sweep(spec, nonmarkov, err) == kOk);
  rows = csv_rows(nonmarkov.str());
  double low = rows[0][1];
  double best_rise = 0;
  for (const auto& r : rows) {
    low = std::min(low, r[1]);
    best_rise = std::max(best_rise, r[1] - low);
  }
  CHECK(best_rise >= 1e-4);
}

TEST_CASE("sweep metric selection and oracle switch") {
  TempDir dir;
  SweepSpec spec;
  spec.hypergraph_path = dir.write("g.hg", kFourQubit);
  spec.channel = ChannelTag::depolarizing;
  spec.param = "p";
  spec.steps = 3;
  spec.coherence = false;
  spec.oracle = false;
  std::ostringstream out, err;
  REQUIRE(cmd_sweep(spec, out, err) == kOk);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  CHECK(line == "0,1,,,");
}

TEST_CASE("sweep argument errors") {
  TempDir dir;
  SweepSpec base;
  base.hypergraph_path = dir.write("g.hg", kFourQubit);
  base.channel = ChannelTag::dit_flip;
  base.param = "p";
  base.steps = 5;

  auto code = [](const SweepSpec& s) {
    std::ostringstream out, err;
    const int c = cmd_sweep(s, out, err);
    if (c != kOk) CHECK(out.str().empty());
    return c;
  };
  SweepSpec s = base;
  s.steps = 1;
  CHECK(code(s) == kInputError);
  s = base;
  s.from = 1;
  s.to = 0;
  CHECK(code(s) == kInputError);
  s = base;
  s.param = "gamma";
  CHECK(code(s) == kInputError);
  s = base;
  s.to = 1.5;  // last grid point leaves [0, 1]
  CHECK(code(s) == kInputError);
  s = base;
  s.fixed = {{"p", 0.2}};
  CHECK(code(s) == kInputError);
  s = base;
  s.hypergraph_path = dir.write("big.hg", "7\n0 1\n");
  CHECK(code(s) == kInputError);
  s.oracle = false;
  CHECK(code(s) == kOk);
  s = base;
  s.out = (dir.path / "no_such_dir" / "out.csv").string();
  CHECK(code(s) == kIoError);
}

TEST_CASE("sweep to file is deterministic") {
  TempDir dir;
  SweepSpec spec;
  spec.hypergraph_path = dir.write("g.hg", kFourQubit);
  spec.channel = ChannelTag::nm_dephasing;
  spec.param = "p";
  spec.from = 0;
  spec.to = 0.5;
  spec.steps = 11;
  std::ostringstream out, err;
  spec.out = (dir.path / "a.csv").string();
  REQUIRE(cmd_sweep(spec, out, err) == kOk);
  spec.out = (dir.path / "b.csv").string();
  REQUIRE(cmd_sweep(spec, out, err) == kOk);
  CHECK(slurp((dir.path / "a.csv").string()) == slurp((dir.path / "b.csv").string()));
  CHECK(out.str().empty());
}

TEST_CASE("verify command") {
  TempDir dir;
  VerifyOptions opts;
  opts.out = (dir.path / "report.csv").string();
  std::ostringstream out, err;
  CHECK(cmd_verify(opts, out, err) == kOk);
  CHECK(out.str().find("failures=0") != std::string::npos);
  const auto first = slurp(opts.out);
  std::ostringstream again;
  CHECK(cmd_verify(opts, again, err) == kOk);
  CHECK(slurp(opts.out) == first);

  VerifyOptions phase;
  phase.channels = {ChannelTag::phase_flip};
  phase.hypergraph_paths = {dir.write("g.hg", kFourQubit)};
  phase.out = "-";
  std::ostringstream csv;
  CHECK(cmd_verify(phase, csv, err) == kOk);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.rfind("phase_flip,", 0) == 0);
  }
  CHECK(rows == 6);

  VerifyOptions unwritable;
  unwritable.channels = {ChannelTag::phase_flip};
  unwritable.out = (dir.path / "missing" / "r.csv").string();
  std::ostringstream o3, e3;
  CHECK(cmd_verify(unwritable, o3, e3) == kIoError);
}

TEST_CASE("embed command") {
  TempDir dir;
  EmbedOptions opts;
  opts.hypergraph_path = dir.write("g.hg", kFourQubit);
  opts.site = 1;
  opts.p = 0;
  std::ostringstream out, err;
  REQUIRE(cmd_embed(opts, out, err) == kOk);
  CHECK(out.str().find("fidelity=1\n") != std::string::npos);
  CHECK(out.str().find("l1_coherence=15\n") != std::string::npos);

  opts.p = 1;
  std::ostringstream full;
  REQUIRE(cmd_embed(opts, full, err) == kOk);
  // X on vertex 1 of this state overlaps it with |<G|X|G>|^2 = 1/4
  CHECK(full.str().find("fidelity=0.25\n") != std::string::npos);
  CHECK(full.str().find("flip_overlap_squared=0.25\n") != std::string::npos);

  opts.site = 4;
  std::ostringstream o2, e2;
  CHECK(cmd_embed(opts, o2, e2) == kInputError);
}

TEST_CASE("executable exit codes") {
  TempDir dir;
  const std::string bin = HGNOISE_CLI_PATH;
  const auto g = dir.write("g.hg", kFourQubit);
  const auto sink = " >" + (dir.path / "o.txt").string() + " 2>&1";
  auto run = [&](const std::string& args) {
    const int status = std::system((bin + " " + args + sink).c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  CHECK(run("state --hypergraph " + g) == 0);
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("sweep --hypergraph " + g + " --channel nope --param p --from 0 --to 1 --steps 3") == 2);
  CHECK(run("sweep --hypergraph " + g + " --channel dit_flip --param p --from 0 --to 1 --steps 3 --fixed p") == 2);
  CHECK(run("sweep --hypergraph " + g + " --channel dit_flip --param p --from 0 --to 1 --steps 3 --metrics speed") == 2);
  CHECK(run("sweep --hypergraph " + g + " --channel dit_flip --param p --from 0 --to 1 --steps 3 --metrics fidelity") == 0);
  CHECK(run("--kernels scalar state --hypergraph " + g) == 0);
  CHECK(run("state --hypergraph " + (dir.path / "none.hg").string()) == 3);
  CHECK(run("embed --hypergraph " + g + " --site 9 --p 0.5") == 2);
  CHECK(run("verify --channel phase_flip --out " + (dir.path / "r.csv").string()) == 0);
  CHECK(run("--help") == 0);
}
