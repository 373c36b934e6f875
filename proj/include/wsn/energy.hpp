#pragma once

// First-order radio energy model: transmission cost with a free-space /
// multipath amplifier crossover, per-round cluster-head and member costs,
// and residual-energy debiting.

#include <cstdint>

#include "wsn/core.hpp"

namespace wsn {

struct RadioParams {
  double e_elec = 0.0;  // J/bit, circuitry cost per bit sent or received
  double eps_fs = 0.0;  // J/bit/m^2, free-space amplifier
  double eps_mp = 0.0;  // J/bit/m^4, multipath amplifier
  double e_da = 0.0;    // J/bit, aggregation cost
  double d0 = 0.0;      // meters, amplifier crossover = sqrt(eps_fs/eps_mp)

  static RadioParams from_config(const NetworkConfig& config);
};

// Energy to push `bits` over distance d: circuitry plus the d^2 amplifier up
// to d0 and the d^4 amplifier beyond it (continuous at d0 by construction).
double tx_energy(std::uint64_t bits, double d, const RadioParams& p);

// Energy to receive `bits`: circuitry only.
double rx_energy(std::uint64_t bits, const RadioParams& p);

// One steady round for a cluster head serving g members: receive g frames,
// aggregate them at ratio c, and forward g*c frames to the base station.
// Scales with g, so a head with no members pays nothing here.
double ch_round_energy(std::uint64_t g, std::uint64_t bits, double c, double d_to_bs,
                       const RadioParams& p);

// One steady round for an ordinary member: one frame up to its head.
double member_round_energy(std::uint64_t bits, double d_to_ch, const RadioParams& p);

// Subtract `amount` joules, clamping at zero and marking the node dead when
// it runs out. Returns the joules actually removed (less than `amount` only
// when the node could not cover it), which is what round logs must record
// for conservation checks to balance.
double debit(SensorNode& node, double amount);

}  // namespace wsn
