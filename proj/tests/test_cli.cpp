// End-to-end checks of the command-line interface: exit codes, CSV/JSON
// output shape, numeric agreement with the closed forms, and determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qssim/formulas.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string capture =
      (fs::temp_directory_path() / ("qss_cli_" + std::to_string(counter++)))
          .string();
  std::string cmd =
      std::string(QSS_BINARY) + " " + args + " > " + capture + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  fs::remove(capture);
  return r;
}

std::string write_config(const std::string& text) {
  static int counter = 0;
  std::string path =
      (fs::temp_directory_path() / ("qss_cfg_" + std::to_string(counter++) +
                                    ".json"))
          .string();
  std::ofstream(path) << text;
  return path;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (line.size() && line.back() == ',') cells.push_back("");
    rows.push_back(std::move(cells));
  }
  return rows;
}

const char* kDampingExact = R"({
  "parties": 3,
  "noise": {"uniform": {"kind": "damping", "gamma": 0.1}}
})";

}  // namespace

TEST_CASE("run prints the exact error and exits 0") {
  std::string cfg = write_config(kDampingExact);
  RunResult r = run_cli("run --config " + cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.104661382674") != std::string::npos);
}

TEST_CASE("run rejects malformed configs with exit 2") {
  std::string cfg = write_config(R"({"parties": 3, "oops": true})");
  CHECK(run_cli("run --config " + cfg).exit_code == 2);
  CHECK(run_cli("run --config /does/not/exist.json").exit_code == 2);
  CHECK(run_cli("nonsense-subcommand").exit_code == 2);
}

TEST_CASE("Monte Carlo runs are byte-identical for a fixed seed") {
  std::string cfg = write_config(R"({
    "parties": 3,
    "noise": {"uniform": {"kind": "pauli", "p_bit": 0.1, "p_phase": 0.1}},
    "evaluation": {"mode": "monte_carlo", "trials": 20000, "seed": 9}
  })");
  RunResult a = run_cli("run --config " + cfg);
  RunResult b = run_cli("run --config " + cfg);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"seed\": 9") != std::string::npos);
}

TEST_CASE("sweep over p reproduces the three-channel flip law") {
  std::string cfg = write_config(R"({
    "parties": 3,
    "noise": {"uniform": {"kind": "pauli", "p_bit": 0.0, "p_phase": 0.0}}
  })");
  std::string out = (fs::temp_directory_path() / "qss_sweep_p.csv").string();
  RunResult r = run_cli("sweep --config " + cfg +
                        " --vary p --from 0 --to 1 --steps 11 --out " + out);
  REQUIRE(r.exit_code == 0);
  auto rows = read_csv(out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0][0] == "sweep_param");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double p = std::stod(rows[i][1]);
    double analytic = std::stod(rows[i][6]);
    double exact = std::stod(rows[i][7]);
    CHECK(std::abs(analytic - qssim::formulas::e1_flip(p)) < 1e-9);
    CHECK(std::abs(exact - qssim::formulas::e1_flip(p)) < 1e-9);
  }
  CHECK(std::stod(rows[1][7]) < 1e-12);  // p = 0 row
}

TEST_CASE("gamma sweep with repetition beats the plain protocol pointwise") {
  std::string plain_cfg = write_config(kDampingExact);
  std::string rep_cfg = write_config(R"({
    "parties": 3,
    "noise": {"uniform": {"kind": "damping", "gamma": 0.1}},
    "qec": {"scheme": "repetition"}
  })");
  std::string out_plain =
      (fs::temp_directory_path() / "qss_sweep_g0.csv").string();
  std::string out_rep =
      (fs::temp_directory_path() / "qss_sweep_g1.csv").string();
  REQUIRE(run_cli("sweep --config " + plain_cfg +
                  " --vary gamma --from 0 --to 1 --steps 21 --out " +
                  out_plain)
              .exit_code == 0);
  REQUIRE(run_cli("sweep --config " + rep_cfg +
                  " --vary gamma --from 0 --to 1 --steps 21 --out " + out_rep)
              .exit_code == 0);
  auto plain = read_csv(out_plain);
  auto rep = read_csv(out_rep);
  for (std::size_t i = 2; i + 1 < plain.size(); ++i)  // interior points
    CHECK(std::stod(rep[i][7]) < std::stod(plain[i][7]));
}

TEST_CASE("sweep argument validation exits 2") {
  std::string cfg = write_config(kDampingExact);
  CHECK(run_cli("sweep --config " + cfg +
                " --vary p --from 0 --to 1 --steps 11 --out /tmp/x.csv")
            .exit_code == 2);  // p sweep on damping config
  CHECK(run_cli("sweep --config " + cfg +
                " --vary gamma --from 0.5 --to 0.1 --steps 5 --out /tmp/x.csv")
            .exit_code == 2);
  CHECK(run_cli("sweep --config " + cfg +
                " --vary nothing --from 0 --to 1 --steps 5 --out /tmp/x.csv")
            .exit_code == 2);
}

TEST_CASE("tables agree with the closed forms and exit 0") {
  RunResult r = run_cli("tables --gamma 0.3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("prep,op,secret,closed_form,exact_sim,abs_diff") !=
        std::string::npos);
  CHECK(r.output.find("0,I,1,0.3,0.3,") != std::string::npos);
  RunResult triple = run_cli("tables --gamma-a 0.1 --gamma-b 0.2 --gamma-c 0.3");
  CHECK(triple.exit_code == 0);
  CHECK(triple.output.find("0,Y,0,0.37,0.37,") != std::string::npos);
  CHECK(run_cli("tables --gamma 0.3 --gamma-a 0.1").exit_code == 2);
  CHECK(run_cli("tables").exit_code == 2);
  CHECK(run_cli("tables --gamma 1.5").exit_code == 2);
}

TEST_CASE("validate passes at the default tolerance and fails at 1e-15") {
  RunResult ok = run_cli("validate");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("[PASS] tables") != std::string::npos);
  CHECK(ok.output.find("all checks passed") != std::string::npos);
  RunResult strict = run_cli("validate --tolerance 1e-15");
  CHECK(strict.exit_code == 1);
  CHECK(strict.output.find("[FAIL]") != std::string::npos);
  RunResult subset = run_cli("validate --only tables --gamma 0.7");
  CHECK(subset.exit_code == 0);
  CHECK(subset.output.find("flip_grid") == std::string::npos);
  CHECK(run_cli("validate --only bogus").exit_code == 2);
}

TEST_CASE("figure emits one CSV per curve plus a manifest") {
  std::string dir = (fs::temp_directory_path() / "qss_fig2").string();
  fs::remove_all(dir);
  RunResult r = run_cli("figure fig2 --out " + dir + " --steps 6");
  REQUIRE(r.exit_code == 0);
  auto manifest = read_csv(dir + "/manifest.csv");
  CHECK(manifest.size() == 9);  // header + 4n x {analytic, exact}
  for (std::size_t i = 1; i < manifest.size(); ++i) {
    auto curve = read_csv(dir + "/" + manifest[i][0]);
    REQUIRE(curve.size() == 7);
    int n = std::stoi(manifest[i][4]);
    for (std::size_t j = 1; j < curve.size(); ++j) {
      double p = std::stod(curve[j][0]);
      CHECK(std::abs(std::stod(curve[j][1]) -
                     qssim::formulas::e1_flip_nparty(p, n)) < 1e-9);
    }
  }
  CHECK(run_cli("figure fig9 --out " + dir).exit_code == 2);
}

TEST_CASE("figure fig5 shows the published scheme ordering at p = 0.1") {
  std::string dir = (fs::temp_directory_path() / "qss_fig5").string();
  fs::remove_all(dir);
  REQUIRE(run_cli("figure fig5 --out " + dir + " --steps 11 --trials 2000")
              .exit_code == 0);
  auto at = [&dir](const std::string& stem) {
    auto rows = read_csv(dir + "/" + stem + ".csv");
    return std::stod(rows[2][1]);  // row for p = 0.1 on an 11-point grid
  };
  double rep = at("fig5_repetition_exact");
  double none = at("fig5_none_exact");
  double five_ph = at("fig5_five_qubit_per_hop_exact");
  double five_sc = at("fig5_five_qubit_single_cycle_exact");
  CHECK(rep < none);
  CHECK(none < five_ph);
  CHECK(none < five_sc);
}

TEST_CASE("ssqi reports the effectiveness verdict") {
  std::string cfg = write_config(R"({
    "parties": 3,
    "noise": {"uniform": {"kind": "damping", "gamma": 0.2}},
    "qec": {"scheme": "repetition"}
  })");
  RunResult r = run_cli("ssqi --config " + cfg + " --theta 1.0 --phi 0.5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"qec_effective\": true") != std::string::npos);
  CHECK(r.output.find("fidelity_with_qec") != std::string::npos);
  CHECK(run_cli("ssqi --config " + cfg + " --theta 4.0").exit_code == 2);
  CHECK(run_cli("ssqi --config " + cfg + " --phi 6.5").exit_code == 2);
}
