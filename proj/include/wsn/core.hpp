#pragma once

// Shared domain types, configuration, deterministic randomness and planar
// geometry. Everything downstream (density analysis, clustering, the radio
// model, the protocol loop) works in terms of these types.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace wsn {

// Node labels are dense 0..n-1 and stable for a whole simulation run; the
// index into the deployed-node vector equals the id.
using NodeId = std::uint32_t;

// Sentinel cluster label for nodes that are dead or not yet clustered.
inline constexpr std::uint32_t kNoCluster = 0xffffffffu;

struct Point2D {
  double x = 0.0;  // meters
  double y = 0.0;  // meters
};

double distance(const Point2D& a, const Point2D& b);
double distance_sq(const Point2D& a, const Point2D& b);

enum class Role { Member, ClusterHead, CandidateCH };

struct SensorNode {
  NodeId id = 0;
  Point2D position;
  double energy = 0.0;  // residual joules, clamped at 0
  bool alive = true;    // alive == (energy > 0)
  Role role = Role::Member;
};

enum class DensityMode { Kde, Cutoff };

// The four protocols the simulator can drive.
enum class ProtocolKind { ISKMeans, SoftKMeansVanilla, HardKMeans, Leach };

// Stable lowercase name used in CLI flags and CSV output.
const char* protocol_name(ProtocolKind kind);

// All values in SI base units (joules, meters, bits). The defaults are the
// 100x100 m / 0.2 J benchmark scenario; scenario2() switches to the larger
// field. Fields map 1:1 onto config-file keys.
struct NetworkConfig {
  double area_width = 100.0;
  double area_height = 100.0;
  Point2D bs_position{50.0, 150.0};
  std::size_t n_nodes = 100;
  double initial_energy = 0.2;
  double packet_bits = 4000.0;
  double control_bits = 100.0;
  double e_elec = 50e-9;        // J/bit
  double eps_fs = 10e-12;       // J/bit/m^2
  double eps_mp = 0.0013e-12;   // J/bit/m^4
  double e_da = 5e-9;           // J/bit
  // Fraction of a member packet that survives aggregation into the CH's
  // upstream traffic; the CH-to-BS load per round is g*c packets.
  double aggregation_ratio_c = 1.0;
  double beta = 0.2;            // membership stiffness
  DensityMode density_mode = DensityMode::Kde;
  double dc_neighbor_fraction = 0.02;
  double kde_bandwidth = 0.0;   // <= 0 selects the rule-of-thumb bandwidth
  std::size_t forced_k = 0;     // 0 selects k from the decision-graph gap
  double reassign_threshold = 0.15;
  std::size_t ch_constant = 10; // cluster members per CH slot
  double switch_threshold = 0.9;
  double convergence_eps = 1e-4;
  std::size_t r_max = 100;      // clustering iteration cap
  double max_comm_range = 250.0;
  bool lone_ch_transmits = true;
  bool ch_counts_self = false;
  double death_fraction_for_lnd = 0.85;
  std::size_t max_rounds = 10000;
  std::uint64_t rng_seed = 1;
  // Rounds at which energy variance is sampled in metrics and batch output.
  std::vector<std::size_t> checkpoints = {200, 400, 600, 800, 1000, 1200, 1400};

  // Throws ConfigError on any out-of-range field.
  void validate() const;

  // 200x200 m field, BS at (100,200), 1 J initial energy, 100-round
  // checkpoint spacing.
  static NetworkConfig scenario2();
};

// Deterministic generator. mt19937_64 is bit-stable across platforms; raw
// engine output is converted to doubles/integers by hand (never through
// std distributions, whose streams are implementation-defined). Independent
// streams are derived from (seed, stream id) with a splitmix64 mix, so the
// node layout stream and the protocol stream never interleave.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static std::uint64_t splitmix64(std::uint64_t x);
  static Rng stream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0,1) with 53-bit resolution.
  double uniform();
  // Uniform in [lo,hi).
  double uniform(double lo, double hi);
  // Unbiased uniform integer in [0,n); n must be >= 1.
  std::size_t uniform_index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

// n_nodes i.i.d.-uniform positions in the area rectangle, ids 0..n-1, full
// initial energy, role Member. Identical (config, seed) gives an identical
// layout; the layout never depends on the protocol being simulated.
std::vector<SensorNode> deploy_uniform(const NetworkConfig& config, std::uint64_t seed);
std::vector<SensorNode> deploy_uniform(const NetworkConfig& config, Rng& rng);

}  // namespace wsn
