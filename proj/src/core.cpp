#include "wsn/core.hpp"

#include <cmath>

#include "wsn/errors.hpp"

namespace wsn {

double distance_sq(const Point2D& a, const Point2D& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double distance(const Point2D& a, const Point2D& b) {
  // sqrt of the explicit sum: correctly rounded and therefore reproducible,
  // unlike hypot which varies by libm.
  return std::sqrt(distance_sq(a, b));
}

void NetworkConfig::validate() const {
  auto fail = [](const std::string& what) { throw ConfigError("config: " + what); };
  if (!(area_width > 0.0) || !(area_height > 0.0)) fail("area must have positive width and height");
  if (n_nodes < 1) fail("n_nodes must be >= 1");
  if (!(initial_energy > 0.0)) fail("initial_energy must be > 0");
  if (packet_bits < 0.0) fail("packet_bits must be >= 0");
  if (control_bits < 0.0) fail("control_bits must be >= 0");
  if (!(e_elec > 0.0)) fail("e_elec must be > 0");
  if (!(eps_fs > 0.0)) fail("eps_fs must be > 0");
  if (!(eps_mp > 0.0)) fail("eps_mp must be > 0");
  if (!(e_da > 0.0)) fail("e_da must be > 0");
  if (!(aggregation_ratio_c > 0.0) || aggregation_ratio_c > 1.0)
    fail("aggregation_ratio_c must be in (0,1]");
  if (!(beta > 0.0)) fail("beta must be > 0");
  if (!(dc_neighbor_fraction > 0.0) || !(dc_neighbor_fraction < 1.0))
    fail("dc_neighbor_fraction must be in (0,1)");
  if (forced_k > n_nodes) fail("forced_k must be <= n_nodes");
  if (reassign_threshold < 0.0 || reassign_threshold > 1.0)
    fail("reassign_threshold must be in [0,1]");
  if (ch_constant < 1) fail("ch_constant must be >= 1");
  if (!(switch_threshold > 0.0) || !(switch_threshold < 1.0))
    fail("switch_threshold must be in (0,1)");
  if (!(convergence_eps > 0.0)) fail("convergence_eps must be > 0");
  if (r_max < 1) fail("r_max must be >= 1");
  if (!(max_comm_range > 0.0)) fail("max_comm_range must be > 0");
  if (!(death_fraction_for_lnd > 0.0) || death_fraction_for_lnd > 1.0)
    fail("death_fraction_for_lnd must be in (0,1]");
  if (max_rounds < 1) fail("max_rounds must be >= 1");
  for (double v : {bs_position.x, bs_position.y})
    if (!std::isfinite(v)) fail("bs_position must be finite");
}

NetworkConfig NetworkConfig::scenario2() {
  NetworkConfig cfg;
  cfg.area_width = 200.0;
  cfg.area_height = 200.0;
  cfg.bs_position = {100.0, 200.0};
  cfg.initial_energy = 1.0;
  cfg.checkpoints = {100, 200, 300, 400, 500, 600};
  return cfg;
}

std::uint64_t Rng::splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t stream_id) {
  return Rng(splitmix64(seed ^ splitmix64(stream_id)));
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw ParameterError("uniform_index: n must be >= 1");
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod n
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v < threshold);
  return static_cast<std::size_t>(v % bound);
}

std::vector<SensorNode> deploy_uniform(const NetworkConfig& config, Rng& rng) {
  config.validate();
  std::vector<SensorNode> nodes(config.n_nodes);
  for (std::size_t i = 0; i < config.n_nodes; ++i) {
    nodes[i].id = static_cast<NodeId>(i);
    nodes[i].position.x = rng.uniform(0.0, config.area_width);
    nodes[i].position.y = rng.uniform(0.0, config.area_height);
    nodes[i].energy = config.initial_energy;
    nodes[i].alive = true;
    nodes[i].role = Role::Member;
  }
  return nodes;
}

std::vector<SensorNode> deploy_uniform(const NetworkConfig& config, std::uint64_t seed) {
  Rng rng = Rng::stream(seed, 0);
  return deploy_uniform(config, rng);
}

const char* protocol_name(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::ISKMeans: return "iskmeans";
    case ProtocolKind::SoftKMeansVanilla: return "soft-kmeans";
    case ProtocolKind::HardKMeans: return "hard-kmeans";
    case ProtocolKind::Leach: return "leach";
  }
  return "unknown";
}

}  // namespace wsn
