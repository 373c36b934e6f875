#pragma once

// The round-driven protocol engine: cluster-head election with reserve
// candidate lists, threshold-based head rotation, steady-state data rounds
// under the radio model, and the full simulation loop for each of the four
// protocols (density-seeded soft k-means, vanilla soft k-means, hard
// k-means, and round-robin threshold self-election).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wsn/clustering.hpp"
#include "wsn/core.hpp"
#include "wsn/metrics.hpp"

namespace wsn {

// Everything the steady phase needs to run rounds until the next
// re-clustering. `assignment` is global: labels are indexed by node id
// (kNoCluster for nodes that were dead at set-up time) and clusters hold
// node ids. ch_lists[v] keeps cluster v's elected heads in selection order;
// active_ch[v] indexes into it; last_round_ch_energy[v] is the residual of
// the active head at the previous round boundary, the baseline for the
// rotation ratio.
struct ClusterState {
  ProtocolKind kind = ProtocolKind::ISKMeans;
  ClusterAssignment assignment;
  std::vector<std::vector<NodeId>> ch_lists;
  std::vector<std::size_t> active_ch;
  std::vector<double> last_round_ch_energy;
  bool needs_restart = false;  // candidate list ran dry; re-cluster next round
  bool direct_to_bs = false;   // no heads elected; every node uplinks itself
  std::size_t k_used = 0;      // cluster count this epoch actually used
};

// Total residual energy of the living nodes in one cluster.
double cluster_energy(const std::vector<SensorNode>& cluster);

// Mean residual energy over the living nodes of one cluster. Throws
// DegenerateClusterError when no member is alive.
double cluster_avg_energy(const std::vector<SensorNode>& cluster);

// Elect ceil(size/ch_constant) heads (at least one) per cluster: walk the
// living members from the center outward, admit those above the cluster's
// mean energy, and fill any remaining slots with the highest-energy
// leftovers (nearer first on ties). The first head in each list is active;
// roles are stamped onto the nodes. A cluster with no living member is
// dropped with a warning pushed to `warnings` (pass nullptr to discard).
ClusterState select_multi_chs(const ClusterAssignment& assignment,
                              std::vector<SensorNode>& nodes, std::size_t ch_constant,
                              std::vector<std::string>* warnings = nullptr);

// End-of-round head check. For each cluster, compare the active head's
// residual against its stint baseline (its energy when it became active):
// ratio below config.switch_threshold hands over to the next living
// candidate (the old head pays one control frame to its farthest living
// member) and emits a Switch event; an exhausted list emits Restart (one
// control frame to the base station) and sets state.needs_restart. A head
// that just died has ratio 0; a zero baseline is skipped. The baseline is
// reset only when a new head takes over.
std::vector<Event> maybe_switch_ch(ClusterState& state, std::vector<SensorNode>& nodes,
                                   const NetworkConfig& config);

// Per-node self-election memory for the round-robin protocol: a node that
// has served as head is barred until every living node has had its turn.
struct LeachElectionState {
  std::uint32_t epoch_round = 0;
  std::vector<std::uint8_t> served;  // indexed by node id
};

struct SetupResult {
  ClusterState state;
  double energy_drawn = 0.0;        // control traffic debited during set-up
  std::vector<Event> events;        // deaths caused by the control traffic
  std::vector<std::string> warnings;
};

// Build fresh clusters over the currently living nodes according to `kind`,
// then charge the set-up control traffic: each active head advertises the
// new cluster once (at the lesser of max_comm_range and the field diagonal)
// and every other living member answers with one join frame to its head; a
// direct-to-BS round carries no control traffic. The kinds:
//   ISKMeans          density-seeded soft k-means + boundary reassignment,
//                     multi-head lists
//   SoftKMeansVanilla soft k-means from random seeds, single head per
//                     cluster (highest energy, nearer the center on ties)
//   HardKMeans        Lloyd's iteration from random seeds, head nearest the
//                     centroid
//   Leach             threshold self-election at expected rate k, members
//                     join the nearest head; zero heads elected means a
//                     direct-to-base-station round
// `rng` drives every random choice (unused by ISKMeans); `leach` carries the
// self-election memory across rounds and may be null for the other kinds.
// When fewer living nodes than the requested k remain, k is clamped with a
// warning. Throws ParameterError when no node is alive.
SetupResult run_setup_phase(std::vector<SensorNode>& nodes, const NetworkConfig& config,
                            ProtocolKind kind, Rng& rng,
                            LeachElectionState* leach = nullptr);

// One steady-state data round: members uplink one frame to their head, each
// head receives, aggregates and forwards to the base station, then the
// rotation check runs. Deaths are marked as debits land; a node that dies
// mid-round still had its frame counted. Returns the round's log (residuals,
// deaths, switches, per-cluster sizes, links longer than max_comm_range).
RoundLog run_steady_round(std::vector<SensorNode>& nodes, ClusterState& state,
                          const NetworkConfig& config, std::uint32_t round);

struct SimulationResult {
  std::vector<RoundLog> logs;
  LifetimeMetrics metrics;
  std::vector<std::string> warnings;
};

// Full run: deploy nodes from (config, seed), cluster, and run steady rounds
// -- re-clustering on restart requests (every round for Leach) -- until the
// death fraction reaches config.death_fraction_for_lnd, everyone is dead, or
// max_rounds elapses. Set-up costs and deaths fold into the following
// round's log, so summed energy_drawn plus final residuals equals the
// initial budget. Identical (config, kind, seed) gives identical output.
SimulationResult simulate(const NetworkConfig& config, ProtocolKind kind, std::uint64_t seed);

}  // namespace wsn
