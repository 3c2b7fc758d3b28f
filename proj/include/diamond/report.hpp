// Aggregated bound report for one symmetric network point, with the JSON/CSV
// serialization used by the CLI. Field names and the CSV column order are
// part of the output contract.

#pragma once

#include <string>
#include <vector>

#include "diamond/network.hpp"

namespace diamond {

struct BoundReport {
  int n_relays;
  double g;
  double h;
  Regime regime;
  double r_af;
  double r_bursty_best;
  double delta_star;
  double thm1_lower;
  double df_rate;
  double bc_mac;
  double independent_cuts;
  double simplified_cutset;
  double rho_cutset;
  double rho_star;
  double thm2_upper;
  double additive_gap;          // thm2_upper - thm1_lower
  double multiplicative_ratio;  // thm2_upper / thm1_lower
};

BoundReport build_bound_report(const SymmetricNetwork& net);

// JSON object text, field names as in BoundReport plus search_resolution
// metadata; doubles use shortest round-trip decimals.
std::string report_to_json(const BoundReport& r, int indent = 2);

std::string csv_header();
std::string report_csv_row(const BoundReport& r);

// Empty means every certificate and ordering invariant holds (the CLI exits
// with code 2 otherwise).
std::vector<std::string> certificate_violations(const BoundReport& r);

}  // namespace diamond
