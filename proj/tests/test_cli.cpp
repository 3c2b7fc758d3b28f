// End-to-end checks of the CLI binary: exit codes, JSON shape, file outputs.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DIAMOND_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/diamond_cli_test_") + name;
}

}  // namespace

TEST_CASE("bounds: report, exit codes, and regime") {
  const RunResult ok = run_cli("bounds --n 2 --g 1 --h 1");
  CHECK(ok.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(ok.output);
  CHECK(j["regime"] == "HIGH");
  CHECK(j["thm2_upper"].get<double>() == doctest::Approx(0.7924812503605781));
  CHECK(j["thm1_lower"].get<double>() == doctest::Approx(0.3684827970831031).epsilon(1e-9));
  CHECK(j["additive_gap"].get<double>() == doctest::Approx(0.423998453277475).epsilon(1e-9));

  CHECK(run_cli("bounds --n 2 --g 0 --h 1").exit_code == 1);
  CHECK(run_cli("bounds --n 2 --g nonsense --h 1").exit_code == 1);
  CHECK(run_cli("bounds").exit_code == 1);

  const RunResult ce = run_cli("bounds --n 16 --g 0.176777 --h 0.044194");
  CHECK(ce.exit_code == 0);
  CHECK(nlohmann::json::parse(ce.output)["regime"] == "PRODUCT_HIGH");
}

TEST_CASE("sweep: table file, summary, and grid validation") {
  const std::string out = temp_path("sweep.csv");
  const RunResult r = run_cli(
      "sweep --n-list 2 4 --g-min 0.01 --g-max 1 --g-per-decade 1 "
      "--h-min 0.01 --h-max 1 --h-per-decade 1 --output " + out);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("max additive gap") != std::string::npos);

  std::ifstream table(out);
  REQUIRE(table.good());
  std::string header;
  std::getline(table, header);
  CHECK(header ==
        "n,g,h,regime,r_af,r_bursty_best,delta_star,thm1_lower,df_rate,bc_mac,"
        "independent_cuts,simplified_cutset,rho_cutset,rho_star,thm2_upper,"
        "additive_gap,mult_ratio");
  int rows = 0;
  for (std::string line; std::getline(table, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 2 * 3 * 3);
  std::remove(out.c_str());

  // empty grid -> usage error
  CHECK(run_cli("sweep --g-min 1 --g-max 0.01 --output " + temp_path("x.csv")).exit_code == 1);
  // unwritable output path -> usage error
  CHECK(run_cli("sweep --n-list 2 --g-min 1 --g-max 1 --h-min 1 --h-max 1 "
                "--output /nonexistent-dir/out.csv").exit_code == 1);
}

TEST_CASE("sweep: a single-point sweep row matches the bounds report") {
  const std::string out = temp_path("sweep_single.csv");
  const RunResult sweep = run_cli(
      "sweep --n-list 2 --g-min 1 --g-max 1 --h-min 1 --h-max 1 --output " + out);
  CHECK(sweep.exit_code == 0);
  std::ifstream table(out);
  REQUIRE(table.good());
  std::string header, row;
  std::getline(table, header);
  std::getline(table, row);
  std::remove(out.c_str());

  std::vector<std::string> cols;
  for (size_t pos = 0; pos != std::string::npos;) {
    const size_t comma = row.find(',', pos);
    cols.push_back(row.substr(pos, comma == std::string::npos ? comma : comma - pos));
    pos = comma == std::string::npos ? comma : comma + 1;
  }
  REQUIRE(cols.size() == 17);

  const nlohmann::json j =
      nlohmann::json::parse(run_cli("bounds --n 2 --g 1 --h 1").output);
  CHECK(cols[0] == "2");
  CHECK(cols[3] == j["regime"]);
  CHECK(std::stod(cols[4]) == j["r_af"].get<double>());
  CHECK(std::stod(cols[7]) == j["thm1_lower"].get<double>());
  CHECK(std::stod(cols[12]) == j["rho_cutset"].get<double>());
  CHECK(std::stod(cols[14]) == j["thm2_upper"].get<double>());
  CHECK(std::stod(cols[16]) == j["multiplicative_ratio"].get<double>());
}

TEST_CASE("sweep: json format and svg plot") {
  const std::string out = temp_path("sweep.json");
  const std::string svg = temp_path("sweep.svg");
  const RunResult r = run_cli(
      "sweep --n-list 2 --g-min 0.1 --g-max 1 --g-per-decade 1 "
      "--h-min 0.1 --h-max 1 --h-per-decade 1 --format json --output " + out +
      " --svg " + svg);
  CHECK(r.exit_code == 0);
  std::ifstream table(out);
  REQUIRE(table.good());
  nlohmann::json doc;
  table >> doc;
  CHECK(doc["summary"]["rows"] == 4);
  CHECK(doc["rows"].size() == 4);
  std::ifstream svg_in(svg);
  REQUIRE(svg_in.good());
  std::string first_line;
  std::getline(svg_in, first_line);
  CHECK(first_line.find("<svg") != std::string::npos);
  std::remove(out.c_str());
  std::remove(svg.c_str());
}

TEST_CASE("counterexample tables") {
  const RunResult add = run_cli("counterexample --family additive --n-list 2 16");
  CHECK(add.exit_code == 0);
  CHECK(add.output.find("naive_minus_refined") != std::string::npos);
  const RunResult mul = run_cli("counterexample --family multiplicative --n-list 2");
  CHECK(mul.exit_code == 0);
  CHECK(run_cli("counterexample --family additive --n-list 1").exit_code == 1);
  CHECK(run_cli("counterexample --family bogus --n-list 4").exit_code == 1);
}

TEST_CASE("asym: selection report and input validation") {
  const std::string in = temp_path("asym.json");
  {
    std::ofstream f(in);
    f << R"({"g":[1,1],"h":[1,1]})";
  }
  const RunResult r = run_cli("asym --input " + in);
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["selected_class"] == "T1_0");
  CHECK(j["set_count"] == 26);
  CHECK(j["ratio"].get<double>() <= j["ratio_bound"].get<double>());
  std::remove(in.c_str());

  const std::string single = temp_path("asym_single.json");
  {
    std::ofstream f(single);
    f << R"({"g":[1],"h":[1]})";
  }
  CHECK(run_cli("asym --input " + single).exit_code == 1);
  std::remove(single.c_str());

  const std::string bad = temp_path("asym_bad.json");
  {
    std::ofstream f(bad);
    f << "{not json";
  }
  CHECK(run_cli("asym --input " + bad).exit_code == 1);
  std::remove(bad.c_str());

  CHECK(run_cli("asym --input /nonexistent.json").exit_code == 1);
}

TEST_CASE("asym: weak relay is excluded by selection") {
  const std::string in = temp_path("asym_weak.json");
  {
    std::ofstream f(in);
    f << R"({"g":[1,1e-9],"h":[1,1e-9]})";
  }
  const RunResult r = run_cli("asym --input " + in);
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["class_sizes"]["t1"] == 1);
  CHECK(j["selected_class"] == "T1_0");
  CHECK(j["selected_class_size"] == 1);
  std::remove(in.c_str());
}

TEST_CASE("oracle: agreement report and guards") {
  const RunResult r = run_cli("oracle --n 10 --rho 0.5 --g 1 --h 1");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["max_abs_err"].get<double>() <= 1e-9);

  const RunResult boundary = run_cli("oracle --n 4 --rho 1.0");
  CHECK(boundary.exit_code == 0);
  const nlohmann::json jb = nlohmann::json::parse(boundary.output);
  for (const auto& c : jb["eta_checks"]) {
    const int n = c["n"].get<int>();
    if (n > 0 && n < 4) CHECK(c["closed"].get<double>() == 0.0);
  }

  CHECK(run_cli("oracle --n 25 --rho 0.1").exit_code == 1);
  CHECK(run_cli("oracle --n 4 --rho 2.0").exit_code == 1);
}

TEST_CASE("simulate: z-gates, determinism, and power validation") {
  const std::string args =
      "simulate --n 2 --g 1 --h 1 --alpha 0.70710678 --symbols 200000 --seed 42";
  const RunResult a = run_cli(args);
  CHECK(a.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(a.output);
  CHECK(std::abs(j["z_output_snr"].get<double>()) < 6.0);
  CHECK(std::abs(j["z_relay_power"].get<double>()) < 6.0);

  const RunResult b = run_cli(args);
  CHECK(a.output == b.output);  // byte-identical for a repeated seed

  CHECK(run_cli("simulate --n 2 --g 1 --h 1 --alpha 2 --symbols 1000 --seed 1").exit_code ==
        1);
}
