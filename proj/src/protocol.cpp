#include "wsn/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "wsn/density.hpp"
#include "wsn/energy.hpp"
#include "wsn/errors.hpp"

namespace wsn {

namespace {

std::uint64_t bits_of(double bits) { return static_cast<std::uint64_t>(bits); }

std::vector<NodeId> living_ids(const std::vector<SensorNode>& nodes) {
  std::vector<NodeId> ids;
  for (const auto& n : nodes)
    if (n.alive) ids.push_back(n.id);
  return ids;
}

double network_energy(const std::vector<SensorNode>& nodes) {
  double sum = 0.0;
  for (const auto& n : nodes) sum += n.energy;
  return sum;
}

std::vector<Point2D> positions_of(const std::vector<SensorNode>& nodes,
                                  const std::vector<NodeId>& ids) {
  std::vector<Point2D> pos;
  pos.reserve(ids.size());
  for (auto id : ids) pos.push_back(nodes[id].position);
  return pos;
}

// Lift a clustering computed over the living subset back into node-id space.
ClusterAssignment globalize(const ClusterAssignment& local, const std::vector<NodeId>& ids,
                            std::size_t n) {
  ClusterAssignment out;
  out.labels.assign(n, kNoCluster);
  out.clusters.resize(local.clusters.size());
  out.centers = local.centers;
  for (std::size_t v = 0; v < local.clusters.size(); ++v) {
    out.clusters[v].reserve(local.clusters[v].size());
    for (auto j : local.clusters[v]) {
      NodeId id = ids[j];
      out.clusters[v].push_back(id);
      out.labels[id] = static_cast<std::uint32_t>(v);
    }
  }
  return out;
}

// k distinct living nodes as seed centers (partial Fisher-Yates over ids).
std::vector<Point2D> random_node_centers(const std::vector<SensorNode>& nodes,
                                         const std::vector<NodeId>& ids, std::size_t k,
                                         Rng& rng) {
  std::vector<NodeId> pool = ids;
  std::vector<Point2D> centers;
  centers.reserve(k);
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t j = t + rng.uniform_index(pool.size() - t);
    std::swap(pool[t], pool[j]);
    centers.push_back(nodes[pool[t]].position);
  }
  return centers;
}

// Baseline head election: one head per cluster, kept until it dies (hard
// k-means) or the rotation ratio trips (vanilla soft k-means).
ClusterState single_head_state(ClusterAssignment assignment, std::vector<SensorNode>& nodes,
                               bool by_energy) {
  ClusterState state;
  state.assignment = std::move(assignment);
  const std::size_t k = state.assignment.clusters.size();
  state.ch_lists.resize(k);
  state.active_ch.assign(k, 0);
  state.last_round_ch_energy.assign(k, 0.0);
  for (std::size_t v = 0; v < k; ++v) {
    const auto& members = state.assignment.clusters[v];
    const Point2D& center = state.assignment.centers[v];
    NodeId head = members.front();
    for (auto id : members) {
      nodes[id].role = Role::Member;
      if (id == head) continue;
      if (by_energy) {
        // highest energy wins; nearer the center breaks ties
        if (nodes[id].energy > nodes[head].energy ||
            (nodes[id].energy == nodes[head].energy &&
             distance_sq(nodes[id].position, center) < distance_sq(nodes[head].position, center)))
          head = id;
      } else {
        if (distance_sq(nodes[id].position, center) < distance_sq(nodes[head].position, center))
          head = id;
      }
    }
    nodes[head].role = Role::ClusterHead;
    state.ch_lists[v] = {head};
    state.last_round_ch_energy[v] = nodes[head].energy;
  }
  state.k_used = k;
  return state;
}

// Threshold self-election with round-robin eligibility: every living node
// that has not yet served this epoch volunteers with probability
// p / (1 - p * (round-in-epoch)), targeting k heads per round on average.
ClusterState elect_leach(std::vector<SensorNode>& nodes, const std::vector<NodeId>& ids,
                         std::size_t k, Rng& rng, LeachElectionState& memory) {
  const std::size_t n = nodes.size();
  const std::size_t m = ids.size();
  if (memory.served.size() != n) {
    memory.served.assign(n, 0);
    memory.epoch_round = 0;
  }
  bool all_served = true;
  for (auto id : ids)
    if (!memory.served[id]) {
      all_served = false;
      break;
    }
  if (all_served) {
    std::fill(memory.served.begin(), memory.served.end(), 0);
    memory.epoch_round = 0;
  }

  double p = std::min(1.0, static_cast<double>(k) / static_cast<double>(m));
  std::size_t epoch_len = (m + k - 1) / k;
  double denom = 1.0 - p * static_cast<double>(memory.epoch_round % epoch_len);
  double threshold = denom <= 0.0 ? 1.0 : std::min(1.0, p / denom);

  std::vector<NodeId> heads;
  for (auto id : ids) {
    double u = rng.uniform();  // drawn for every living node, keeps the stream aligned
    if (!memory.served[id] && u < threshold) heads.push_back(id);
  }
  for (auto h : heads) memory.served[h] = 1;
  memory.epoch_round += 1;

  ClusterState state;
  state.kind = ProtocolKind::Leach;
  state.assignment.labels.assign(n, kNoCluster);
  if (heads.empty()) {
    // nobody volunteered: everyone uplinks straight to the base station
    state.direct_to_bs = true;
    return state;
  }

  state.assignment.clusters.resize(heads.size());
  state.assignment.centers.reserve(heads.size());
  state.ch_lists.resize(heads.size());
  state.active_ch.assign(heads.size(), 0);
  state.last_round_ch_energy.assign(heads.size(), 0.0);
  for (std::size_t c = 0; c < heads.size(); ++c) {
    state.assignment.centers.push_back(nodes[heads[c]].position);
    state.assignment.labels[heads[c]] = static_cast<std::uint32_t>(c);
    state.assignment.clusters[c].push_back(heads[c]);
    state.ch_lists[c] = {heads[c]};
    state.last_round_ch_energy[c] = nodes[heads[c]].energy;
  }
  for (auto id : ids) {
    if (state.assignment.labels[id] != kNoCluster) continue;  // a head
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < heads.size(); ++c) {
      double d = distance_sq(nodes[id].position, nodes[heads[c]].position);
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    state.assignment.labels[id] = static_cast<std::uint32_t>(best);
    state.assignment.clusters[best].push_back(id);
  }
  for (auto& cluster : state.assignment.clusters) std::sort(cluster.begin(), cluster.end());
  for (auto id : ids) nodes[id].role = Role::Member;
  for (auto h : heads) nodes[h].role = Role::ClusterHead;
  state.k_used = heads.size();
  return state;
}

}  // namespace

double cluster_energy(const std::vector<SensorNode>& cluster) {
  double sum = 0.0;
  for (const auto& n : cluster)
    if (n.alive) sum += n.energy;
  return sum;
}

double cluster_avg_energy(const std::vector<SensorNode>& cluster) {
  double sum = 0.0;
  std::size_t living = 0;
  for (const auto& n : cluster) {
    if (!n.alive) continue;
    sum += n.energy;
    living += 1;
  }
  if (living == 0)
    throw DegenerateClusterError("average energy of a cluster with no living members");
  return sum / static_cast<double>(living);
}

ClusterState select_multi_chs(const ClusterAssignment& assignment,
                              std::vector<SensorNode>& nodes, std::size_t ch_constant,
                              std::vector<std::string>* warnings) {
  if (ch_constant < 1) throw ParameterError("ch_constant must be >= 1");
  if (assignment.centers.size() < assignment.clusters.size())
    throw ParameterError("head election needs one center per cluster");

  ClusterState state;
  const std::size_t n = nodes.size();
  state.assignment.labels.assign(n, kNoCluster);
  std::vector<std::uint8_t> taken(n, 0);

  for (std::size_t v = 0; v < assignment.clusters.size(); ++v) {
    std::vector<NodeId> members;
    for (auto id : assignment.clusters[v])
      if (nodes[id].alive) members.push_back(id);
    if (members.empty()) {
      if (warnings)
        warnings->push_back("cluster " + std::to_string(v) + " has no living members; dropped");
      continue;
    }

    double avg = 0.0;
    for (auto id : members) avg += nodes[id].energy;
    avg /= static_cast<double>(members.size());

    const Point2D& center = assignment.centers[v];
    std::vector<NodeId> order = members;  // walk the cluster from the center outward
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      double da = distance_sq(nodes[a].position, center);
      double db = distance_sq(nodes[b].position, center);
      if (da != db) return da < db;
      return a < b;
    });

    std::size_t p = std::max<std::size_t>(1, (members.size() + ch_constant - 1) / ch_constant);
    std::vector<NodeId> heads;
    for (auto id : order) {
      if (heads.size() == p) break;
      if (nodes[id].energy > avg) {
        heads.push_back(id);
        taken[id] = 1;
      }
    }
    if (heads.size() < p) {
      // not enough above-average members: top up with the highest-energy
      // leftovers, keeping the center-out order on equal energies
      std::vector<NodeId> pool;
      for (auto id : order)
        if (!taken[id]) pool.push_back(id);
      std::stable_sort(pool.begin(), pool.end(),
                       [&](NodeId a, NodeId b) { return nodes[a].energy > nodes[b].energy; });
      for (auto id : pool) {
        if (heads.size() == p) break;
        heads.push_back(id);
        taken[id] = 1;
      }
    }

    for (auto id : members) nodes[id].role = Role::Member;
    for (std::size_t i = 0; i < heads.size(); ++i)
      nodes[heads[i]].role = i == 0 ? Role::ClusterHead : Role::CandidateCH;

    std::uint32_t out_v = static_cast<std::uint32_t>(state.assignment.clusters.size());
    for (auto id : members) state.assignment.labels[id] = out_v;
    state.assignment.clusters.push_back(std::move(members));
    state.assignment.centers.push_back(center);
    state.last_round_ch_energy.push_back(nodes[heads.front()].energy);
    state.ch_lists.push_back(std::move(heads));
    state.active_ch.push_back(0);
  }
  state.k_used = state.assignment.clusters.size();
  return state;
}

std::vector<Event> maybe_switch_ch(ClusterState& state, std::vector<SensorNode>& nodes,
                                   const NetworkConfig& config) {
  std::vector<Event> events;
  const auto params = RadioParams::from_config(config);
  for (std::size_t v = 0; v < state.ch_lists.size(); ++v) {
    const auto& list = state.ch_lists[v];
    if (list.empty()) continue;
    double last = state.last_round_ch_energy[v];
    if (last <= 0.0) continue;  // no defensible baseline for a ratio
    NodeId head = list[state.active_ch[v]];
    double current = nodes[head].alive ? nodes[head].energy : 0.0;
    // the baseline is the head's energy when its stint began, so every head
    // retires after shedding the same fraction of what it started with
    if (current / last >= config.switch_threshold) continue;
    std::size_t next = state.active_ch[v] + 1;
    while (next < list.size() && !nodes[list[next]].alive) next += 1;
    if (next < list.size()) {
      // the retiring head announces the handover across the whole cluster
      double reach = 0.0;
      for (auto id : state.assignment.clusters[v])
        if (nodes[id].alive && id != head)
          reach = std::max(reach, distance(nodes[head].position, nodes[id].position));
      debit(nodes[head], tx_energy(bits_of(config.control_bits), reach, params));
      if (nodes[head].alive) nodes[head].role = Role::Member;
      state.active_ch[v] = next;
      nodes[list[next]].role = Role::ClusterHead;
      state.last_round_ch_energy[v] = nodes[list[next]].energy;
      events.push_back({EventType::Switch, list[next]});
    } else {
      // candidates exhausted: ask the base station for a fresh clustering
      debit(nodes[head], tx_energy(bits_of(config.control_bits),
                                   distance(nodes[head].position, config.bs_position), params));
      state.needs_restart = true;
      events.push_back({EventType::Restart, head});
    }
  }
  return events;
}

namespace {

// Set-up control traffic: each active head advertises the new cluster once
// (at the lesser of its radio range and the field diagonal), and every other
// living cluster member answers with one join frame sent to its head. A
// state with no heads at all (a direct-to-BS round) carries no such traffic.
// Deaths are recorded, and the rotation baselines are refreshed so that they
// reflect the head energies at the first round boundary.
void charge_setup_beacons(std::vector<SensorNode>& nodes, SetupResult& out,
                          const NetworkConfig& config, const RadioParams& params) {
  auto& state = out.state;
  if (state.direct_to_bs) return;
  const std::uint64_t bits = bits_of(config.control_bits);
  double diag = std::sqrt(config.area_width * config.area_width +
                          config.area_height * config.area_height);
  double advert = tx_energy(bits, std::min(config.max_comm_range, diag), params);
  for (std::size_t v = 0; v < state.assignment.clusters.size(); ++v) {
    if (state.ch_lists[v].empty()) continue;
    NodeId head = state.ch_lists[v][state.active_ch[v]];
    if (nodes[head].alive) {
      out.energy_drawn += debit(nodes[head], advert);
      if (!nodes[head].alive) out.events.push_back({EventType::Death, head});
    }
    for (NodeId id : state.assignment.clusters[v]) {
      if (id == head || !nodes[id].alive) continue;
      double d = distance(nodes[id].position, nodes[head].position);
      out.energy_drawn += debit(nodes[id], tx_energy(bits, d, params));
      if (!nodes[id].alive) out.events.push_back({EventType::Death, id});
    }
    state.last_round_ch_energy[v] = nodes[head].alive ? nodes[head].energy : 0.0;
  }
}

}  // namespace

SetupResult run_setup_phase(std::vector<SensorNode>& nodes, const NetworkConfig& config,
                            ProtocolKind kind, Rng& rng, LeachElectionState* leach) {
  SetupResult out;
  const auto params = RadioParams::from_config(config);
  auto ids = living_ids(nodes);
  if (ids.empty()) throw ParameterError("set-up phase requires at least one living node");

  std::size_t k_req = config.forced_k;
  if (k_req > ids.size()) {
    out.warnings.push_back("requested k exceeds the " + std::to_string(ids.size()) +
                           " living nodes; clamped");
    k_req = ids.size();
  }

  auto pos = positions_of(nodes, ids);
  switch (kind) {
    case ProtocolKind::ISKMeans: {
      auto seeds = select_initial_centers(pos, config, k_req);
      auto soft = soft_kmeans(pos, seeds.centers, config.beta, config.convergence_eps,
                              config.r_max);
      auto local = form_clusters(soft.z, soft.centers);
      local = reassign_boundary(local, soft.z, config.reassign_threshold);
      out.state = select_multi_chs(globalize(local, ids, nodes.size()), nodes,
                                   config.ch_constant, &out.warnings);
      break;
    }
    case ProtocolKind::SoftKMeansVanilla: {
      std::size_t k = k_req > 0 ? k_req : select_initial_centers(pos, config, 0).k;
      ClusterAssignment local;
      bool formed = false;
      for (int attempt = 0; attempt < 5 && !formed; ++attempt) {
        auto seeds = random_node_centers(nodes, ids, k, rng);
        try {
          auto soft = soft_kmeans(pos, seeds, config.beta, config.convergence_eps, config.r_max);
          local = form_clusters(soft.z, soft.centers);
          formed = true;
        } catch (const DegenerateClusterError&) {
          out.warnings.push_back("random seeding collapsed a cluster; re-seeding");
        }
      }
      if (!formed)
        throw DegenerateClusterError("random seeding kept collapsing clusters; giving up");
      out.state = single_head_state(globalize(local, ids, nodes.size()), nodes,
                                    /*by_energy=*/true);
      break;
    }
    case ProtocolKind::HardKMeans: {
      std::size_t k = k_req > 0 ? k_req : select_initial_centers(pos, config, 0).k;
      auto seeds = random_node_centers(nodes, ids, k, rng);
      auto local = hard_kmeans(pos, seeds, config.convergence_eps, config.r_max);
      out.state = single_head_state(globalize(local, ids, nodes.size()), nodes,
                                    /*by_energy=*/false);
      break;
    }
    case ProtocolKind::Leach: {
      std::size_t k = k_req > 0 ? k_req : select_initial_centers(pos, config, 0).k;
      LeachElectionState scratch;
      out.state = elect_leach(nodes, ids, std::max<std::size_t>(k, 1), rng,
                              leach != nullptr ? *leach : scratch);
      break;
    }
  }
  out.state.kind = kind;
  charge_setup_beacons(nodes, out, config, params);
  return out;
}

RoundLog run_steady_round(std::vector<SensorNode>& nodes, ClusterState& state,
                          const NetworkConfig& config, std::uint32_t round) {
  const auto params = RadioParams::from_config(config);
  const std::size_t n = nodes.size();
  RoundLog log;
  log.round = round;

  double before = network_energy(nodes);
  std::vector<std::uint8_t> alive_before(n);
  for (std::size_t i = 0; i < n; ++i) alive_before[i] = nodes[i].alive ? 1 : 0;

  const std::uint64_t bits = bits_of(config.packet_bits);
  auto check_range = [&](double d) {
    if (d > config.max_comm_range) log.range_violations += 1;
  };

  if (state.direct_to_bs) {
    for (auto& node : nodes) {
      if (!node.alive) continue;
      double d = distance(node.position, config.bs_position);
      check_range(d);
      debit(node, member_round_energy(bits, d, params));
    }
  } else {
    for (std::size_t v = 0; v < state.ch_lists.size(); ++v) {
      if (state.ch_lists[v].empty()) continue;
      NodeId head = state.ch_lists[v][state.active_ch[v]];
      if (!nodes[head].alive) continue;  // silent round; the rotation check recovers below
      const Point2D head_pos = nodes[head].position;

      std::uint64_t g = 0;
      for (auto id : state.assignment.clusters[v]) {
        if (id == head || !nodes[id].alive) continue;
        g += 1;  // the frame counts even if the sender dies transmitting it
        double d = distance(nodes[id].position, head_pos);
        check_range(d);
        debit(nodes[id], member_round_energy(bits, d, params));
      }

      double d_bs = distance(head_pos, config.bs_position);
      if (g > 0) {
        double cost = ch_round_energy(g, bits, config.aggregation_ratio_c, d_bs, params);
        if (config.ch_counts_self)
          cost += config.aggregation_ratio_c *
                  (tx_energy(bits, d_bs, params) + static_cast<double>(bits) * params.e_da);
        check_range(d_bs);
        debit(nodes[head], cost);
      } else if (config.lone_ch_transmits) {
        check_range(d_bs);
        debit(nodes[head], member_round_energy(bits, d_bs, params));
      }
    }

    if (state.kind == ProtocolKind::ISKMeans || state.kind == ProtocolKind::SoftKMeansVanilla) {
      auto rotation = maybe_switch_ch(state, nodes, config);
      log.events.insert(log.events.end(), rotation.begin(), rotation.end());
    } else if (state.kind == ProtocolKind::HardKMeans) {
      // no rotation for this baseline: a dead head forces re-clustering
      for (std::size_t v = 0; v < state.ch_lists.size(); ++v) {
        if (state.ch_lists[v].empty()) continue;
        NodeId head = state.ch_lists[v][state.active_ch[v]];
        if (!nodes[head].alive) {
          state.needs_restart = true;
          log.events.push_back({EventType::Restart, head});
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    if (alive_before[i] && !nodes[i].alive)
      log.events.push_back({EventType::Death, static_cast<NodeId>(i)});

  log.residual.resize(n);
  log.cluster_of.resize(n);
  log.role_of.resize(n);
  std::uint32_t alive = 0;
  for (std::size_t i = 0; i < n; ++i) {
    log.residual[i] = nodes[i].energy;
    log.role_of[i] = nodes[i].role;
    log.cluster_of[i] = nodes[i].alive ? state.assignment.labels[i] : kNoCluster;
    if (nodes[i].alive) alive += 1;
  }
  log.alive_count = alive;
  if (!state.direct_to_bs) {
    log.per_cluster_sizes.reserve(state.assignment.clusters.size());
    for (const auto& cluster : state.assignment.clusters) {
      std::uint32_t size = 0;
      for (auto id : cluster)
        if (nodes[id].alive) size += 1;
      log.per_cluster_sizes.push_back(size);
    }
  }
  log.energy_drawn = before - network_energy(nodes);
  return log;
}

SimulationResult simulate(const NetworkConfig& config, ProtocolKind kind, std::uint64_t seed) {
  config.validate();
  SimulationResult out;
  auto nodes = deploy_uniform(config, seed);
  Rng proto = Rng::stream(seed, 1);
  LeachElectionState leach;
  NetworkConfig eff = config;  // carries the pinned k for the baselines

  const std::size_t n = nodes.size();
  // same guard against representation drift as the lifetime metrics use
  const auto lnd_dead = static_cast<std::uint32_t>(
      std::ceil(config.death_fraction_for_lnd * static_cast<double>(n) - 1e-9));

  double pending_drawn = 0.0;
  std::vector<Event> pending_events;
  ClusterState state;

  auto do_setup = [&]() {
    auto setup = run_setup_phase(nodes, eff, kind, proto, &leach);
    state = std::move(setup.state);
    pending_drawn += setup.energy_drawn;
    pending_events.insert(pending_events.end(), setup.events.begin(), setup.events.end());
    for (auto& w : setup.warnings) out.warnings.push_back(std::move(w));
    // the baselines keep whatever k their first set-up settled on
    if (kind != ProtocolKind::ISKMeans && eff.forced_k == 0 && state.k_used > 0)
      eff.forced_k = state.k_used;
  };
  do_setup();

  for (std::uint32_t r = 1; r <= config.max_rounds; ++r) {
    auto log = run_steady_round(nodes, state, config, r);
    log.energy_drawn += pending_drawn;  // fold in set-up costs since the last round
    pending_drawn = 0.0;
    if (!pending_events.empty()) {
      log.events.insert(log.events.begin(), pending_events.begin(), pending_events.end());
      pending_events.clear();
    }
    out.logs.push_back(std::move(log));

    const auto& latest = out.logs.back();
    std::uint32_t dead = static_cast<std::uint32_t>(n) - latest.alive_count;
    if (latest.alive_count == 0 || dead >= lnd_dead) break;
    if (r == config.max_rounds) break;  // no point re-clustering after the final round
    if (kind == ProtocolKind::Leach || state.needs_restart) do_setup();
  }

  out.metrics = lifetime_metrics(out.logs, config);
  return out;
}

}  // namespace wsn
