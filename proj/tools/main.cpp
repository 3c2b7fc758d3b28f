// diamond: bounds, certification sweeps, counterexample tables, asymmetric
// relay-selection reports, cut-set oracle checks, and AF link simulation for
// the Gaussian N-relay diamond network.
//
// Exit codes: 0 success, 1 input/usage error, 2 certificate violation.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diamond/achievability.hpp"
#include "diamond/asymmetric.hpp"
#include "diamond/channel_sim.hpp"
#include "diamond/converse.hpp"
#include "diamond/cut_oracle.hpp"
#include "diamond/math_util.hpp"
#include "diamond/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

using nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

// ---------------------------------------------------------------------------
// bounds

int cmd_bounds(int n, double g, double h) {
  const diamond::SymmetricNetwork net(n, g, h);
  const diamond::BoundReport report = diamond::build_bound_report(net);
  std::cout << diamond::report_to_json(report) << "\n";
  const auto violations = diamond::certificate_violations(report);
  for (const auto& msg : violations) std::cerr << "certificate violation: " << msg << "\n";
  return violations.empty() ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepGrid {
  std::vector<int> n_list;
  std::vector<double> g_values;
  std::vector<double> h_values;
};

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  std::vector<double> values;
  if (!(lo > 0.0) || !(hi > 0.0) || per_decade < 1 || lo > hi) return values;
  const double e_lo = std::log10(lo);
  const double e_hi = std::log10(hi);
  const int steps = static_cast<int>(std::round((e_hi - e_lo) * per_decade));
  for (int i = 0; i <= steps; ++i)
    values.push_back(std::pow(10.0, e_lo + static_cast<double>(i) / per_decade));
  return values;
}

void write_svg(const std::string& path, const std::vector<int>& n_list,
               const std::vector<double>& max_gap_per_n,
               const std::vector<double>& max_ratio_per_n) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write SVG file: " + path);
  const double w = 640, hgt = 400, ml = 60, mr = 20, mt = 30, mb = 50;
  const double pw = w - ml - mr, ph = hgt - mt - mb;
  const double gap_cap = diamond::additive_gap_cap();
  const double ratio_cap = diamond::multiplicative_ratio_cap();

  auto x_of = [&](size_t i) {
    return ml + pw * (n_list.size() > 1 ? static_cast<double>(i) / (n_list.size() - 1) : 0.5);
  };
  auto polyline = [&](const std::vector<double>& ys, double y_max, const char* color) {
    std::string pts;
    for (size_t i = 0; i < ys.size(); ++i) {
      const double y = mt + ph * (1.0 - ys[i] / y_max);
      pts += fmt(x_of(i)) + "," + fmt(y) + " ";
    }
    out << "<polyline fill='none' stroke='" << color << "' stroke-width='2' points='"
        << pts << "'/>\n";
  };

  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << hgt
      << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  out << "<line x1='" << ml << "' y1='" << mt + ph << "' x2='" << ml + pw << "' y2='"
      << mt + ph << "' stroke='black'/>\n";
  out << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << mt + ph
      << "' stroke='black'/>\n";
  polyline(max_gap_per_n, gap_cap, "#1f77b4");
  std::vector<double> ratio_scaled(max_ratio_per_n);
  for (double& v : ratio_scaled) v *= gap_cap / ratio_cap;  // shared axis, scaled
  polyline(ratio_scaled, gap_cap, "#d62728");
  // cap line for the additive gap
  out << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml + pw << "' y2='" << mt
      << "' stroke='#999' stroke-dasharray='4'/>\n";
  for (size_t i = 0; i < n_list.size(); ++i)
    out << "<text x='" << x_of(i) << "' y='" << mt + ph + 18
        << "' font-size='11' text-anchor='middle'>" << n_list[i] << "</text>\n";
  out << "<text x='" << ml + pw / 2 << "' y='" << hgt - 12
      << "' font-size='12' text-anchor='middle'>relay count N</text>\n";
  out << "<text x='" << ml << "' y='" << mt - 10 << "' font-size='12'>max additive gap"
      << " (blue, cap " << fmt(gap_cap) << ") / max ratio (red, scaled, cap "
      << fmt(ratio_cap) << ")</text>\n";
  out << "</svg>\n";
}

int cmd_sweep(const SweepGrid& grid, const std::string& output,
              const std::string& format, const std::string& svg_path) {
  if (grid.n_list.empty() || grid.g_values.empty() || grid.h_values.empty()) {
    std::cerr << "error: empty sweep grid\n";
    return kExitUsage;
  }
  for (int n : grid.n_list)
    if (n < 1) {
      std::cerr << "error: relay counts must be >= 1\n";
      return kExitUsage;
    }

  struct Point {
    int n;
    double g, h;
  };
  std::vector<Point> points;
  for (int n : grid.n_list)
    for (double g : grid.g_values)
      for (double h : grid.h_values) points.push_back({n, g, h});

  // Rows are independent; compute in parallel, write in grid order.
  std::vector<diamond::BoundReport> rows(points.size());
  {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1))
        rows[i] = diamond::build_bound_report(
            diamond::SymmetricNetwork(points[i].n, points[i].g, points[i].h));
    };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < hw; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }

  size_t argmax_gap = 0, argmax_ratio = 0;
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].additive_gap > rows[argmax_gap].additive_gap) argmax_gap = i;
    if (rows[i].multiplicative_ratio > rows[argmax_ratio].multiplicative_ratio)
      argmax_ratio = i;
  }

  std::ofstream out(output, std::ios::binary);  // binary keeps LF endings
  if (!out) {
    std::cerr << "error: cannot write output file: " << output << "\n";
    return kExitUsage;
  }
  if (format == "csv") {
    out << diamond::csv_header() << "\n";
    for (const auto& r : rows) out << diamond::report_csv_row(r) << "\n";
  } else {
    ordered_json doc;
    doc["summary"] = {
        {"rows", rows.size()},
        {"max_additive_gap", rows[argmax_gap].additive_gap},
        {"max_multiplicative_ratio", rows[argmax_ratio].multiplicative_ratio},
        {"additive_gap_cap", diamond::additive_gap_cap()},
        {"multiplicative_ratio_cap", diamond::multiplicative_ratio_cap()},
    };
    doc["rows"] = ordered_json::array();
    for (const auto& r : rows)
      doc["rows"].push_back(ordered_json::parse(diamond::report_to_json(r, -1)));
    out << doc.dump(2) << "\n";
  }
  out.close();

  if (!svg_path.empty()) {
    std::vector<double> max_gap(grid.n_list.size(), 0.0), max_ratio(grid.n_list.size(), 0.0);
    const size_t per_n = grid.g_values.size() * grid.h_values.size();
    for (size_t i = 0; i < rows.size(); ++i) {
      const size_t ni = i / per_n;
      max_gap[ni] = std::max(max_gap[ni], rows[i].additive_gap);
      max_ratio[ni] = std::max(max_ratio[ni], rows[i].multiplicative_ratio);
    }
    write_svg(svg_path, grid.n_list, max_gap, max_ratio);
  }

  const auto& gr = rows[argmax_gap];
  const auto& rr = rows[argmax_ratio];
  std::cout << "rows: " << rows.size() << "\n";
  std::cout << "max additive gap: " << fmt(gr.additive_gap) << " bits at n=" << gr.n_relays
            << " g=" << fmt(gr.g) << " h=" << fmt(gr.h) << "\n";
  std::cout << "max multiplicative ratio: " << fmt(rr.multiplicative_ratio)
            << " at n=" << rr.n_relays << " g=" << fmt(rr.g) << " h=" << fmt(rr.h) << "\n";
  std::cout << "caps: " << fmt(diamond::additive_gap_cap()) << " bits, "
            << fmt(diamond::multiplicative_ratio_cap()) << "\n";

  int violations = 0;
  for (const auto& r : rows) violations += diamond::certificate_violations(r).empty() ? 0 : 1;
  if (violations > 0) {
    std::cerr << "certificate violation at " << violations << " sweep point(s)\n";
    return kExitViolation;
  }
  std::cout << "certificates: OK\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// counterexample

int cmd_counterexample(const std::string& family, const std::vector<int>& n_list) {
  for (int n : n_list)
    if (n < 2) {
      std::cerr << "error: relay counts must be >= 2\n";
      return kExitUsage;
    }
  const bool additive = family == "additive";
  std::cout << "n,g,h,bc_mac,rho_cutset,thm2_upper,naive_minus_refined,naive_over_refined\n";
  for (int n : n_list) {
    const double nd = static_cast<double>(n);
    const double g = additive ? std::pow(nd, -5.0 / 8.0) : std::pow(nd, -2.0);
    const double h = additive ? std::pow(nd, -9.0 / 8.0) : std::pow(nd, -3.0);
    const diamond::SymmetricNetwork net(n, g, h);
    const double bc = diamond::bc_mac_bound(net);
    const double rho = diamond::rho_cutset_bound(net).rate_bits;
    const double thm2 = diamond::certified_upper_bound(net).rate_bits;
    std::cout << n << ',' << fmt(g) << ',' << fmt(h) << ',' << fmt(bc) << ',' << fmt(rho)
              << ',' << fmt(thm2) << ',' << fmt(bc - thm2) << ',' << fmt(bc / thm2) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// asym

int cmd_asym(const std::string& input_path) {
  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "error: cannot read input file: " << input_path << "\n";
    return kExitUsage;
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!doc.contains("g") || !doc.contains("h") || !doc["g"].is_array() ||
      !doc["h"].is_array()) {
    std::cerr << "error: input must be an object with numeric arrays \"g\" and \"h\"\n";
    return kExitUsage;
  }
  std::vector<double> g, h;
  try {
    g = doc["g"].get<std::vector<double>>();
    h = doc["h"].get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  }
  if (g.size() < 2 || h.size() < 2) {
    std::cerr << "error: need at least 2 relays\n";
    return kExitUsage;
  }

  const diamond::AsymmetricNetwork net(std::move(g), std::move(h));
  const diamond::Partition part = diamond::partition_relays(net);
  const diamond::SelectionResult sel = diamond::select_and_rate(net);
  const diamond::RatioCertificate cert = diamond::certified_ratio(net);

  ordered_json j;
  j["n_relays"] = net.n_relays();
  j["levels"] = part.levels;
  j["set_count"] = part.set_count;
  j["g_star"] = part.stars.g_star;
  j["h_star"] = part.stars.h_star;
  ordered_json sizes;
  sizes["t1"] = part.t1.size();
  sizes["t2"] = part.t2.size();
  ordered_json t1_cells = ordered_json::object(), t2_cells = ordered_json::object(),
               s_cells = ordered_json::object();
  for (int l = 0; l <= part.levels; ++l) {
    if (!part.t1_cells[l].empty()) t1_cells["T1_" + std::to_string(l)] = part.t1_cells[l].size();
    if (!part.t2_cells[l].empty()) t2_cells["T2_" + std::to_string(l)] = part.t2_cells[l].size();
    for (int k = 0; k <= part.levels; ++k)
      if (!part.s_cells[l][k].empty())
        s_cells["S_" + std::to_string(l) + "_" + std::to_string(k)] =
            part.s_cells[l][k].size();
  }
  sizes["t1_cells"] = t1_cells;
  sizes["t2_cells"] = t2_cells;
  sizes["s_cells"] = s_cells;
  j["class_sizes"] = sizes;
  j["selected_class"] = diamond::class_label(sel.class_id);
  j["selected_class_size"] = sel.class_size;
  j["delta_star"] = sel.delta;
  j["certified_rate"] = sel.certified_bits;
  j["empirical_rate"] = sel.empirical_bits;
  j["aggregate_upper"] = cert.aggregate_bits;
  j["ratio"] = cert.ratio;
  j["ratio_bound"] = cert.bound;
  j["k_estimate"] =
      cert.ratio / std::pow(std::log2(static_cast<double>(net.n_relays())), 4.0);
  std::cout << j.dump(2) << "\n";

  if (!cert.within_bound) {
    std::cerr << "certificate violation: ratio exceeds 112*Ltilde^2\n";
    return kExitViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// oracle

int cmd_oracle(int n, double rho, double g, double h) {
  if (n < 2 || n > diamond::kMaxBruteForceRelays) {
    std::cerr << "error: oracle requires 2 <= n <= " << diamond::kMaxBruteForceRelays
              << "\n";
    return kExitUsage;
  }
  const diamond::SymmetricNetwork net(n, g, h);

  double max_eta_err = 0.0;
  ordered_json checks = ordered_json::array();
  for (int k = 0; k <= n; ++k) {
    const diamond::EtaCheck c = diamond::oracle_check_eta(n, rho, k);
    const double sm = diamond::schur_quadratic_sherman_morrison(n, rho, k);
    max_eta_err = std::max(max_eta_err, c.abs_err / std::max(1.0, c.closed));
    max_eta_err = std::max(max_eta_err, std::abs(c.numeric - sm));
    checks.push_back({{"n", k},
                      {"closed", c.closed},
                      {"numeric", c.numeric},
                      {"sherman_morrison", sm},
                      {"abs_err", c.abs_err}});
  }

  const diamond::MinCutResult brute = diamond::brute_force_min_cut(net, rho);
  double integer_min = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= n; ++k) {
    const double v = diamond::half_log2_1p((n - k) * net.g) +
                     diamond::half_log2_1p(diamond::eta(rho, k, n) * net.h);
    integer_min = std::min(integer_min, v);
  }
  const double reduction_err = std::abs(brute.rate_bits - integer_min);
  const double max_err = std::max(max_eta_err, reduction_err);

  ordered_json j;
  j["n"] = n;
  j["rho"] = rho;
  j["g"] = g;
  j["h"] = h;
  j["eta_checks"] = checks;
  j["brute_force_bits"] = brute.rate_bits;
  ordered_json members = ordered_json::array();
  for (int m : brute.members) members.push_back(m + 1);  // 1-based for display
  j["min_cut_members"] = members;
  j["integer_min_bits"] = integer_min;
  j["reduction_abs_err"] = reduction_err;
  j["max_abs_err"] = max_err;
  std::cout << j.dump(2) << "\n";

  if (max_err > 1e-9) {
    std::cerr << "oracle mismatch: max abs error " << fmt(max_err) << " > 1e-9\n";
    return kExitViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(int n, double g, double h, double alpha, long symbols,
                 std::uint64_t seed) {
  const diamond::SimConfig cfg(diamond::SymmetricNetwork(n, g, h), alpha, symbols, seed);
  const diamond::SimResult sim = diamond::simulate_af(cfg);
  const double closed_snr = diamond::af_output_snr_closed(cfg.net, alpha);
  const double closed_relay = alpha * alpha * (1.0 + g);

  auto z_of = [](double est, double closed, double se) {
    return se > 0.0 ? (est - closed) / se : 0.0;
  };
  const double z_snr = z_of(sim.est_output_snr, closed_snr, sim.std_errors[0]);
  const double z_relay = z_of(sim.est_relay_power, closed_relay, sim.std_errors[1]);
  const double z_source = z_of(sim.est_source_power, 1.0, sim.std_errors[2]);

  ordered_json j;
  j["n"] = n;
  j["g"] = g;
  j["h"] = h;
  j["alpha"] = alpha;
  j["num_symbols"] = symbols;
  j["seed"] = seed;
  j["est_output_snr"] = sim.est_output_snr;
  j["est_relay_power"] = sim.est_relay_power;
  j["est_source_power"] = sim.est_source_power;
  j["std_errors"] = sim.std_errors;
  j["closed_snr"] = closed_snr;
  j["closed_relay_power"] = closed_relay;
  j["z_output_snr"] = z_snr;
  j["z_relay_power"] = z_relay;
  j["z_source_power"] = z_source;
  std::cout << j.dump(2) << "\n";

  if (std::abs(z_snr) > 6.0 || std::abs(z_relay) > 6.0 || std::abs(z_source) > 6.0) {
    std::cerr << "simulation z-score exceeds 6\n";
    return kExitViolation;
  }
  return kExitOk;
}

std::vector<int> default_sweep_n() {
  std::vector<int> n_list;
  for (int n = 2; n <= 1024; n *= 2) n_list.push_back(n);
  return n_list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds and certificates for the Gaussian N-relay diamond network"};
  app.require_subcommand(1);
  // --h is a channel gain everywhere in this tool; help stays on --help only
  app.set_help_flag("--help", "print help and exit");

  // bounds
  int b_n = 2;
  double b_g = 1.0, b_h = 1.0;
  auto* bounds = app.add_subcommand("bounds", "full bound report for one network");
  bounds->set_help_flag("--help", "print help and exit");
  bounds->add_option("--n", b_n, "relay count")->required();
  bounds->add_option("--g", b_g, "source->relay power gain")->required();
  bounds->add_option("--h", b_h, "relay->destination power gain")->required();

  // sweep
  std::vector<int> s_n = default_sweep_n();
  double s_gmin = 1e-8, s_gmax = 1e8, s_hmin = 1e-8, s_hmax = 1e8;
  int s_gppd = 2, s_hppd = 2;
  std::string s_out = "sweep.csv", s_format = "csv", s_svg;
  auto* sweep = app.add_subcommand("sweep", "gap certification over a parameter grid");
  sweep->set_help_flag("--help", "print help and exit");
  sweep->add_option("--n-list", s_n, "relay counts");
  sweep->add_option("--g-min", s_gmin, "g grid minimum");
  sweep->add_option("--g-max", s_gmax, "g grid maximum");
  sweep->add_option("--g-per-decade", s_gppd, "g grid points per decade");
  sweep->add_option("--h-min", s_hmin, "h grid minimum");
  sweep->add_option("--h-max", s_hmax, "h grid maximum");
  sweep->add_option("--h-per-decade", s_hppd, "h grid points per decade");
  sweep->add_option("--output", s_out, "table output path");
  sweep->add_option("--format", s_format, "table format")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--svg", s_svg, "optional SVG plot of per-N maxima");

  // counterexample
  std::string c_family;
  std::vector<int> c_n;
  auto* ce = app.add_subcommand(
      "counterexample", "growth of the naive min-cut gap on the scaling families");
  ce->set_help_flag("--help", "print help and exit");
  ce->add_option("--family", c_family, "additive or multiplicative")
      ->required()
      ->check(CLI::IsMember({"additive", "multiplicative"}));
  ce->add_option("--n-list", c_n, "relay counts")->required();

  // asym
  std::string a_input;
  auto* asym = app.add_subcommand("asym", "relay-selection report for per-relay gains");
  asym->set_help_flag("--help", "print help and exit");
  asym->add_option("--input", a_input, "JSON file with arrays \"g\" and \"h\"")->required();

  // oracle
  int o_n = 4;
  double o_rho = 0.5, o_g = 1.0, o_h = 1.0;
  auto* oracle = app.add_subcommand("oracle", "brute-force cut-set cross-checks");
  oracle->set_help_flag("--help", "print help and exit");
  oracle->add_option("--n", o_n, "relay count (<= 20)")->required();
  oracle->add_option("--rho", o_rho, "relay input correlation")->required();
  oracle->add_option("--g", o_g, "source->relay power gain");
  oracle->add_option("--h", o_h, "relay->destination power gain");

  // simulate
  int m_n = 2;
  double m_g = 1.0, m_h = 1.0, m_alpha = 0.5;
  long m_symbols = 1000000;
  std::uint64_t m_seed = 0;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo AF link validation");
  sim->set_help_flag("--help", "print help and exit");
  sim->add_option("--n", m_n, "relay count")->required();
  sim->add_option("--g", m_g, "source->relay power gain")->required();
  sim->add_option("--h", m_h, "relay->destination power gain")->required();
  sim->add_option("--alpha", m_alpha, "relay amplification")->required();
  sim->add_option("--symbols", m_symbols, "number of symbols");
  sim->add_option("--seed", m_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(b_n, b_g, b_h);
    if (sweep->parsed()) {
      SweepGrid grid{s_n, log_grid(s_gmin, s_gmax, s_gppd), log_grid(s_hmin, s_hmax, s_hppd)};
      return cmd_sweep(grid, s_out, s_format, s_svg);
    }
    if (ce->parsed()) return cmd_counterexample(c_family, c_n);
    if (asym->parsed()) return cmd_asym(a_input);
    if (oracle->parsed()) return cmd_oracle(o_n, o_rho, o_g, o_h);
    if (sim->parsed()) return cmd_simulate(m_n, m_g, m_h, m_alpha, m_symbols, m_seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
