#include "diamond/report.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "diamond/achievability.hpp"
#include "diamond/converse.hpp"

namespace diamond {

namespace {

std::string shortest(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

BoundReport build_bound_report(const SymmetricNetwork& net) {
  BoundReport r;
  r.n_relays = net.n_relays;
  r.g = net.g;
  r.h = net.h;
  r.regime = classify_regime(net);
  r.r_af = af_rate(net);
  const DutySearchResult duty = optimal_duty_cycle(net);
  r.r_bursty_best = duty.rate_bits;
  r.delta_star = duty.delta;
  r.thm1_lower = certified_lower_bound(net).rate_bits;
  r.df_rate = df_rate(net);
  r.bc_mac = bc_mac_bound(net);
  r.independent_cuts = independent_cuts_bound(net);
  r.simplified_cutset = simplified_cutset_bound(net);
  const RhoSearchResult rho = rho_cutset_bound(net);
  r.rho_cutset = rho.rate_bits;
  r.rho_star = rho.rho_star;
  r.thm2_upper = certified_upper_bound(net).rate_bits;
  r.additive_gap = r.thm2_upper - r.thm1_lower;
  r.multiplicative_ratio = r.thm2_upper / r.thm1_lower;
  return r;
}

std::string report_to_json(const BoundReport& r, int indent) {
  nlohmann::ordered_json j;
  j["n_relays"] = r.n_relays;
  j["g"] = r.g;
  j["h"] = r.h;
  j["regime"] = regime_name(r.regime);
  j["r_af"] = r.r_af;
  j["r_bursty_best"] = r.r_bursty_best;
  j["delta_star"] = r.delta_star;
  j["thm1_lower"] = r.thm1_lower;
  j["df_rate"] = r.df_rate;
  j["bc_mac"] = r.bc_mac;
  j["independent_cuts"] = r.independent_cuts;
  j["simplified_cutset"] = r.simplified_cutset;
  j["rho_cutset"] = r.rho_cutset;
  j["rho_star"] = r.rho_star;
  j["thm2_upper"] = r.thm2_upper;
  j["additive_gap"] = r.additive_gap;
  j["multiplicative_ratio"] = r.multiplicative_ratio;
  j["search_resolution"] = {
      {"rho_grid_points", kRhoGridPoints},
      {"rho_refine_tol", kRhoRefineTol},
      {"delta_grid_points", kDeltaGridPoints},
      {"delta_refine_tol", kDeltaRefineTol},
      {"theorem_guarantee", r.n_relays >= 2},
  };
  return j.dump(indent);
}

std::string csv_header() {
  return "n,g,h,regime,r_af,r_bursty_best,delta_star,thm1_lower,df_rate,bc_mac,"
         "independent_cuts,simplified_cutset,rho_cutset,rho_star,thm2_upper,"
         "additive_gap,mult_ratio";
}

std::string report_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << r.n_relays << ',' << shortest(r.g) << ',' << shortest(r.h) << ','
      << regime_name(r.regime) << ',' << shortest(r.r_af) << ','
      << shortest(r.r_bursty_best) << ',' << shortest(r.delta_star) << ','
      << shortest(r.thm1_lower) << ',' << shortest(r.df_rate) << ','
      << shortest(r.bc_mac) << ',' << shortest(r.independent_cuts) << ','
      << shortest(r.simplified_cutset) << ',' << shortest(r.rho_cutset) << ','
      << shortest(r.rho_star) << ',' << shortest(r.thm2_upper) << ','
      << shortest(r.additive_gap) << ',' << shortest(r.multiplicative_ratio);
  return out.str();
}

std::vector<std::string> certificate_violations(const BoundReport& r) {
  std::vector<std::string> v;
  auto check = [&v](bool ok, const std::string& msg) {
    if (!ok) v.push_back(msg);
  };
  const double slack = 1e-9;
  check(r.additive_gap <= additive_gap_cap() + slack,
        "additive gap exceeds 1 + 1/2 log2(3)");
  check(r.multiplicative_ratio <= multiplicative_ratio_cap() + 1e-6,
        "multiplicative ratio exceeds 4/ln(4/3)");
  check(r.thm1_lower <= r.r_bursty_best + slack,
        "certified lower bound exceeds best bursty rate");
  check(r.r_bursty_best <= r.independent_cuts + slack,
        "achievable rate exceeds the independent-cuts bound");
  check(r.independent_cuts <= r.bc_mac + slack,
        "independent-cuts bound exceeds the BC/MAC min-cut");
  check(r.rho_cutset <= r.independent_cuts + slack,
        "refined cut-set value exceeds the independent-cuts bound");
  check(r.rho_cutset <= r.simplified_cutset + slack,
        "refined cut-set value exceeds its simplified form");
  check(r.thm1_lower <= r.thm2_upper + slack,
        "certified lower bound exceeds certified upper bound");
  check(r.thm1_lower <= r.rho_cutset + 1e-6,
        "certified lower bound exceeds the refined cut-set value");
  return v;
}

}  // namespace diamond
