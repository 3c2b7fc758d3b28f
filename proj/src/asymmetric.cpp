#include "diamond/asymmetric.hpp"

#include <algorithm>
#include <cmath>

#include "diamond/achievability.hpp"
#include "diamond/converse.hpp"
#include "diamond/math_util.hpp"

namespace diamond {

namespace {

// Index l with x in (2^-l-1 x_star, 2^-l x_star], or -1 if no cell l <= levels
// matches. ldexp keeps the dyadic thresholds exact, so membership is scale
// covariant under power-of-two rescaling.
int dyadic_cell(double x, double x_star, int levels) {
  for (int l = 0; l <= levels; ++l) {
    const double lo = std::ldexp(x_star, -l - 1);
    const double hi = std::ldexp(x_star, -l);
    if (x > lo && x <= hi) return l;
  }
  return -1;
}

double class_min(const std::vector<int>& members, const std::vector<double>& gains) {
  double m = gains[members.front()];
  for (int i : members) m = std::min(m, gains[i]);
  return m;
}

struct ClassGains {
  double g_certified, h_certified;  // floor-quantized
  double g_upper, h_upper;          // ceiling-quantized, may be infinite
};

ClassGains gains_for(const ClassId& id, const StarGains& stars, int n_relays,
                     int set_count) {
  const double n2 = static_cast<double>(n_relays) * n_relays;
  switch (id.kind) {
    case ClassId::Kind::T1Cell: {
      const double gq = std::ldexp(stars.g_star, -id.k - 1);
      return {gq, gq, std::ldexp(stars.g_star, -id.k), kInfiniteGain};
    }
    case ClassId::Kind::T2Cell: {
      const double hq = std::ldexp(stars.h_star, -id.k - 1);
      return {n2 * hq, hq, kInfiniteGain,
              set_count * std::ldexp(stars.h_star, 1 - id.k)};
    }
    case ClassId::Kind::SCell:
      return {std::ldexp(stars.g_star, -id.k - 1), std::ldexp(stars.h_star, -id.l - 1),
              std::ldexp(stars.g_star, -id.k),
              set_count * std::ldexp(stars.h_star, 1 - id.l)};
  }
  throw std::logic_error("unreachable");
}

template <typename Visit>
void for_each_class(const Partition& part, Visit&& visit) {
  for (int l = 0; l <= part.levels; ++l)
    visit(ClassId{ClassId::Kind::T1Cell, l, 0}, part.t1_cells[l]);
  for (int l = 0; l <= part.levels; ++l)
    visit(ClassId{ClassId::Kind::T2Cell, l, 0}, part.t2_cells[l]);
  for (int k = 0; k <= part.levels; ++k)
    for (int l = 0; l <= part.levels; ++l)
      visit(ClassId{ClassId::Kind::SCell, k, l}, part.s_cells[k][l]);
}

}  // namespace

StarGains star_gains(const AsymmetricNetwork& net) {
  const double n2 = static_cast<double>(net.n_relays()) * net.n_relays();
  double g_star = 0.0, h_star = 0.0;
  for (int i = 0; i < net.n_relays(); ++i) {
    g_star = std::max(g_star, std::min(net.g[i], n2 * net.h[i]));
    h_star = std::max(h_star, std::min(net.h[i], net.g[i]));
  }
  return {g_star, h_star};
}

int quantization_levels(int n_relays) {
  return static_cast<int>(std::floor(3.0 * std::log2(static_cast<double>(n_relays))));
}

int partition_set_count(int n_relays) {
  const int l1 = quantization_levels(n_relays) + 1;
  return l1 * l1 + 2 * l1 + 2;
}

Partition partition_relays(const AsymmetricNetwork& net) {
  const int n = net.n_relays();
  if (n < 2) throw std::invalid_argument("partition requires N >= 2");

  Partition part;
  part.stars = star_gains(net);
  part.levels = quantization_levels(n);
  part.set_count = partition_set_count(n);
  part.t1_cells.assign(part.levels + 1, {});
  part.t2_cells.assign(part.levels + 1, {});
  part.s_cells.assign(part.levels + 1,
                      std::vector<std::vector<int>>(part.levels + 1));

  const double n3 = static_cast<double>(n) * n * n;
  const double n2 = static_cast<double>(n) * n;
  const double g_weak = part.stars.g_star / n3;
  const double h_weak = part.stars.h_star / n3;

  for (int i = 0; i < n; ++i) {
    const double g = net.g[i], h = net.h[i];
    if (g <= g_weak) {
      part.t1.push_back(i);
      continue;
    }
    if (h <= h_weak) {
      part.t2.push_back(i);
      continue;
    }
    const int gk = dyadic_cell(g, part.stars.g_star, part.levels);
    const int hl = dyadic_cell(h, part.stars.h_star, part.levels);
    if (gk >= 0 && h >= g) {
      part.t1_cells[gk].push_back(i);
      continue;
    }
    if (hl >= 0 && g >= n2 * h) {
      part.t2_cells[hl].push_back(i);
      continue;
    }
    if (gk >= 0 && hl >= 0) {
      part.s_cells[gk][hl].push_back(i);
      continue;
    }
    throw std::logic_error("relay not covered by the partition");
  }
  return part;
}

std::string class_label(const ClassId& id) {
  switch (id.kind) {
    case ClassId::Kind::T1Cell: return "T1_" + std::to_string(id.k);
    case ClassId::Kind::T2Cell: return "T2_" + std::to_string(id.k);
    case ClassId::Kind::SCell:
      return "S_" + std::to_string(id.k) + "_" + std::to_string(id.l);
  }
  return "?";
}

SelectionResult select_and_rate(const AsymmetricNetwork& net) {
  const Partition part = partition_relays(net);
  const int n = net.n_relays();

  bool found = false;
  SelectionResult best{};
  for_each_class(part, [&](const ClassId& id, const std::vector<int>& members) {
    if (members.empty()) return;
    const ClassGains gains = gains_for(id, part.stars, n, part.set_count);
    const int size = static_cast<int>(members.size());
    const DutySearchResult cert =
        optimal_duty_cycle(SymmetricNetwork(size, gains.g_certified, gains.h_certified));
    const DutySearchResult emp = optimal_duty_cycle(SymmetricNetwork(
        size, class_min(members, net.g), class_min(members, net.h)));
    if (!found || cert.rate_bits > best.certified_bits) {
      found = true;
      best = {id, size, cert.delta, cert.rate_bits, emp.rate_bits};
    }
  });
  if (!found)
    throw std::logic_error("no nonempty quantization class; partition is inconsistent");
  return best;
}

double aggregate_upper_bound(const AsymmetricNetwork& net) {
  const Partition part = partition_relays(net);
  const int n = net.n_relays();

  bool found = false;
  double best = 0.0;
  for_each_class(part, [&](const ClassId& id, const std::vector<int>& members) {
    if (members.empty()) return;
    const ClassGains gains = gains_for(id, part.stars, n, part.set_count);
    const int size = static_cast<int>(members.size());
    // At size 1 the regime closed form reduces to the single-relay min-cut.
    const double ub =
        certified_upper_bound(SymmetricNetwork(size, gains.g_upper, gains.h_upper))
            .rate_bits;
    best = found ? std::max(best, ub) : ub;
    found = true;
  });
  if (!found)
    throw std::logic_error("no nonempty quantization class; partition is inconsistent");
  return part.set_count * best;
}

RatioCertificate certified_ratio(const AsymmetricNetwork& net) {
  const SelectionResult sel = select_and_rate(net);
  const double aggregate = aggregate_upper_bound(net);
  if (!(sel.certified_bits > 0.0))
    throw std::logic_error("selected class certified rate is not positive");
  const int lt = partition_set_count(net.n_relays());
  RatioCertificate cert;
  cert.ratio = aggregate / sel.certified_bits;
  cert.bound = 112.0 * static_cast<double>(lt) * lt;
  cert.aggregate_bits = aggregate;
  cert.certified_bits = sel.certified_bits;
  cert.levels = quantization_levels(net.n_relays());
  cert.set_count = lt;
  cert.within_bound = cert.ratio <= cert.bound;
  return cert;
}

}  // namespace diamond
