#pragma once

// Round-by-round logs, lifetime metrics (first/half/last death rounds,
// residual-energy variance), and the multi-run batch aggregator.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wsn/core.hpp"

namespace wsn {

enum class EventType { Switch, Restart, Death };

struct Event {
  EventType type = EventType::Death;
  // Death: the node that died. Switch: the newly active head.
  // Restart: the head that triggered re-clustering.
  NodeId node = 0;
};

// State snapshot at the end of one steady round.
struct RoundLog {
  std::uint32_t round = 0;
  std::vector<double> residual;  // per deployed node, 0 when dead
  std::uint32_t alive_count = 0;
  double energy_drawn = 0.0;  // joules debited this round (set-up costs fold in)
  std::vector<Event> events;
  std::vector<std::uint32_t> per_cluster_sizes;
  std::vector<std::uint32_t> cluster_of;  // kNoCluster when dead/unassigned
  std::vector<Role> role_of;
  std::uint32_t range_violations = 0;  // links longer than max_comm_range
};

struct LifetimeMetrics {
  std::uint32_t fnd = 0;
  std::uint32_t hnd = 0;
  std::uint32_t lnd = 0;
  std::uint32_t total_rounds = 0;
  // A censored metric never occurred; its value is total_rounds.
  bool fnd_censored = false;
  bool hnd_censored = false;
  bool lnd_censored = false;
  // (checkpoint round, variance) pairs; a checkpoint past the run's end
  // freezes at the final logged state.
  std::vector<std::pair<std::uint32_t, double>> ev_by_round;
};

// Population variance of the residual energies across ALL deployed nodes
// (dead nodes enter as 0 J). Empty input yields 0.
double energy_variance(const std::vector<double>& residual);

// Derive lifetime metrics from a completed run's logs.
//   fnd: first round containing a death event
//   hnd: first round with at least ceil(n/2) nodes dead
//   lnd: first round with at least ceil(death_fraction_for_lnd * n) dead
// Metrics that never occur are censored at the last round. Variance
// checkpoints come from config.checkpoints.
LifetimeMetrics lifetime_metrics(const std::vector<RoundLog>& logs,
                                 const NetworkConfig& config);

// ---- batch running ---------------------------------------------------------

struct RunResult {
  ProtocolKind kind = ProtocolKind::ISKMeans;
  std::uint64_t seed = 0;
  LifetimeMetrics metrics;
  bool ok = false;
  std::string error;  // empty when ok
};

struct BatchAggregate {
  ProtocolKind kind = ProtocolKind::ISKMeans;
  std::size_t runs = 0;  // successful runs aggregated
  double fnd_mean = 0.0, fnd_std = 0.0;
  double hnd_mean = 0.0, hnd_std = 0.0;
  double lnd_mean = 0.0, lnd_std = 0.0;
  // indexed like ComparisonTable.checkpoints
  std::vector<double> ev_mean;
  std::vector<double> ev_std;
};

struct ComparisonTable {
  std::vector<std::uint32_t> checkpoints;
  std::vector<BatchAggregate> aggregates;  // one per protocol kind, input order
  std::vector<RunResult> results;          // every (kind, seed) cell, kind-major
};

// Run simulate for every (kind, seed) pair and aggregate mean/stddev of the
// lifetime metrics and per-checkpoint variances. A failing run is recorded
// with its error and skipped by the aggregates; the batch continues.
// Deterministic: cells run in (kind, seed) order, sequentially.
ComparisonTable run_batch(const NetworkConfig& config,
                          const std::vector<ProtocolKind>& kinds,
                          const std::vector<std::uint64_t>& seeds);

}  // namespace wsn
