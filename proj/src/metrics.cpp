#include "wsn/metrics.hpp"

#include <cmath>
#include <exception>
#include <utility>

#include "wsn/errors.hpp"
#include "wsn/protocol.hpp"

namespace wsn {

double energy_variance(const std::vector<double>& residual) {
  const std::size_t n = residual.size();
  if (n == 0) return 0.0;
  double mean = 0.0;
  for (double e : residual) mean += e;
  mean /= static_cast<double>(n);
  double acc = 0.0;
  for (double e : residual) acc += (e - mean) * (e - mean);
  return acc / static_cast<double>(n);
}

LifetimeMetrics lifetime_metrics(const std::vector<RoundLog>& logs,
                                 const NetworkConfig& config) {
  if (logs.empty()) throw ParameterError("lifetime_metrics: no logs");
  const std::size_t n = config.n_nodes;
  const std::size_t half_dead = (n + 1) / 2;
  // subtract a hair before rounding up so 0.85*100 stays 85 despite fp drift
  const auto lnd_dead = static_cast<std::size_t>(
      std::ceil(config.death_fraction_for_lnd * static_cast<double>(n) - 1e-9));

  LifetimeMetrics m;
  m.total_rounds = logs.back().round;
  bool fnd_found = false, hnd_found = false, lnd_found = false;
  for (const auto& log : logs) {
    if (!fnd_found) {
      for (const auto& ev : log.events)
        if (ev.type == EventType::Death) {
          m.fnd = log.round;
          fnd_found = true;
          break;
        }
    }
    const std::size_t dead = n - log.alive_count;
    if (!hnd_found && dead >= half_dead) {
      m.hnd = log.round;
      hnd_found = true;
    }
    if (!lnd_found && dead >= lnd_dead) {
      m.lnd = log.round;
      lnd_found = true;
    }
  }
  if (!fnd_found) m.fnd = m.total_rounds;
  if (!hnd_found) m.hnd = m.total_rounds;
  if (!lnd_found) m.lnd = m.total_rounds;
  m.fnd_censored = !fnd_found;
  m.hnd_censored = !hnd_found;
  m.lnd_censored = !lnd_found;

  // Checkpoint variance: the state at the last logged round <= checkpoint;
  // past the end of the run the final state persists.
  for (std::size_t cp : config.checkpoints) {
    const RoundLog* snapshot = nullptr;
    for (const auto& log : logs) {
      if (log.round <= cp) snapshot = &log;
      else break;
    }
    double ev = snapshot ? energy_variance(snapshot->residual) : 0.0;
    m.ev_by_round.emplace_back(static_cast<std::uint32_t>(cp), ev);
  }
  return m;
}

namespace {

// Mean and population standard deviation; zeros for an empty sample.
void mean_std(const std::vector<double>& xs, double& mean, double& sd) {
  mean = 0.0;
  sd = 0.0;
  if (xs.empty()) return;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double acc = 0.0;
  for (double x : xs) acc += (x - mean) * (x - mean);
  sd = std::sqrt(acc / static_cast<double>(xs.size()));
}

}  // namespace

ComparisonTable run_batch(const NetworkConfig& config, const std::vector<ProtocolKind>& kinds,
                          const std::vector<std::uint64_t>& seeds) {
  ComparisonTable table;
  table.checkpoints.reserve(config.checkpoints.size());
  for (std::size_t cp : config.checkpoints)
    table.checkpoints.push_back(static_cast<std::uint32_t>(cp));

  for (auto kind : kinds) {
    for (auto seed : seeds) {
      RunResult run;
      run.kind = kind;
      run.seed = seed;
      try {
        run.metrics = simulate(config, kind, seed).metrics;
        run.ok = true;
      } catch (const std::exception& e) {
        run.error = e.what();
      }
      table.results.push_back(std::move(run));
    }
  }

  const std::size_t cells = seeds.size();
  for (std::size_t ki = 0; ki < kinds.size(); ++ki) {
    BatchAggregate agg;
    agg.kind = kinds[ki];
    std::vector<double> fnd, hnd, lnd;
    std::vector<std::vector<double>> ev(table.checkpoints.size());
    for (std::size_t si = 0; si < cells; ++si) {
      const auto& run = table.results[ki * cells + si];
      if (!run.ok) continue;
      fnd.push_back(static_cast<double>(run.metrics.fnd));
      hnd.push_back(static_cast<double>(run.metrics.hnd));
      lnd.push_back(static_cast<double>(run.metrics.lnd));
      for (std::size_t c = 0; c < ev.size() && c < run.metrics.ev_by_round.size(); ++c)
        ev[c].push_back(run.metrics.ev_by_round[c].second);
    }
    agg.runs = fnd.size();
    mean_std(fnd, agg.fnd_mean, agg.fnd_std);
    mean_std(hnd, agg.hnd_mean, agg.hnd_std);
    mean_std(lnd, agg.lnd_mean, agg.lnd_std);
    agg.ev_mean.resize(ev.size());
    agg.ev_std.resize(ev.size());
    for (std::size_t c = 0; c < ev.size(); ++c) mean_std(ev[c], agg.ev_mean[c], agg.ev_std[c]);
    table.aggregates.push_back(std::move(agg));
  }
  return table;
}

}  // namespace wsn
