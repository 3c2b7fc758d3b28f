// Asymmetric diamond networks: relay selection over near-symmetric classes.
//
// Star gains g* = max_n min{g_n, N^2 h_n} and h* = max_n min{h_n, g_n} anchor
// a dyadic quantization of the gain pairs. Relays far weaker than the
// strongest one land in the overload sets T1, T2; the rest fall into
// O(log^2 N) cells: T1_l (g-cell l, h_n >= g_n), T2_l (h-cell l,
// g_n >= N^2 h_n), and S_{k,l} (g-cell k, h-cell l). Running bursty AF on the
// best single class, with all other relays silenced, is within a factor
// 112*Ltilde^2 of the parallel-network capacity upper bound.

#pragma once

#include <string>
#include <vector>

#include "diamond/network.hpp"

namespace diamond {

struct StarGains {
  double g_star;
  double h_star;
};

StarGains star_gains(const AsymmetricNetwork& net);

// L = floor(3 log2 N); number of sets Ltilde = (L+1)^2 + 2(L+1) + 2.
int quantization_levels(int n_relays);
int partition_set_count(int n_relays);

struct Partition {
  std::vector<int> t1;                             // g_n <= N^-3 g*
  std::vector<int> t2;                             // h_n <= N^-3 h*, not in t1
  std::vector<std::vector<int>> t1_cells;          // size L+1
  std::vector<std::vector<int>> t2_cells;          // size L+1
  std::vector<std::vector<std::vector<int>>> s_cells;  // (L+1) x (L+1)
  int levels;       // L
  int set_count;    // Ltilde
  StarGains stars;
};

// Disjoint cover of {0,...,N-1}; each set's membership test excludes all
// earlier sets, cells use half-open intervals (2^-l-1 x*, 2^-l x*].
Partition partition_relays(const AsymmetricNetwork& net);

struct ClassId {
  enum class Kind { T1Cell, T2Cell, SCell } kind;
  int k;  // g-cell for SCell, else the single cell index
  int l;  // h-cell for SCell, unused otherwise
};

std::string class_label(const ClassId& id);

struct SelectionResult {
  ClassId class_id;
  int class_size;
  double delta;            // duty cycle achieving the certified rate
  double certified_bits;   // sup_d bursty AF at the class's floor-quantized gains
  double empirical_bits;   // same with the class's true minimum gains
};

// Scans classes in the order T1_0..T1_L, T2_0..T2_L, S_{0,0}..S_{L,L} and
// returns the one with the largest certified rate (lowest id wins ties).
SelectionResult select_and_rate(const AsymmetricNetwork& net);

// Ltilde times the largest class-wise symmetric upper bound, with the
// ceiling-quantized gains and infinite-gain sentinels for the one-sided cells.
// Size-1 classes use the single-relay min-cut.
double aggregate_upper_bound(const AsymmetricNetwork& net);

struct RatioCertificate {
  double ratio;            // aggregate_upper / certified
  double bound;            // 112 * Ltilde^2
  double aggregate_bits;
  double certified_bits;
  int levels;
  int set_count;
  bool within_bound;
};

RatioCertificate certified_ratio(const AsymmetricNetwork& net);

}  // namespace diamond
