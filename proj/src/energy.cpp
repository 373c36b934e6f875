#include "wsn/energy.hpp"

#include <cmath>

namespace wsn {

RadioParams RadioParams::from_config(const NetworkConfig& config) {
  RadioParams p;
  p.e_elec = config.e_elec;
  p.eps_fs = config.eps_fs;
  p.eps_mp = config.eps_mp;
  p.e_da = config.e_da;
  p.d0 = std::sqrt(config.eps_fs / config.eps_mp);
  return p;
}

double tx_energy(std::uint64_t bits, double d, const RadioParams& p) {
  const double l = static_cast<double>(bits);
  if (d <= p.d0) return l * p.e_elec + l * p.eps_fs * d * d;
  return l * p.e_elec + l * p.eps_mp * d * d * d * d;
}

double rx_energy(std::uint64_t bits, const RadioParams& p) {
  return static_cast<double>(bits) * p.e_elec;
}

double ch_round_energy(std::uint64_t g, std::uint64_t bits, double c, double d_to_bs,
                       const RadioParams& p) {
  const double gm = static_cast<double>(g);
  return gm * c * tx_energy(bits, d_to_bs, p) +
         gm * (c * static_cast<double>(bits) * p.e_da + rx_energy(bits, p));
}

double member_round_energy(std::uint64_t bits, double d_to_ch, const RadioParams& p) {
  return tx_energy(bits, d_to_ch, p);
}

double debit(SensorNode& node, double amount) {
  if (!node.alive || node.energy <= 0.0) {
    node.energy = 0.0;
    return 0.0;
  }
  if (amount >= node.energy) {
    double applied = node.energy;
    node.energy = 0.0;
    node.alive = false;
    return applied;
  }
  node.energy -= amount;
  return amount;
}

}  // namespace wsn
