#include "wsn/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "wsn/errors.hpp"

namespace wsn {

namespace {

constexpr double kInvTwoPi = 0.15915494309189535;  // 1/(2*pi)

// Sorted list of all n(n-1)/2 pairwise distances.
std::vector<double> sorted_pairwise(const std::vector<Point2D>& pts) {
  const std::size_t n = pts.size();
  std::vector<double> d;
  d.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d.push_back(distance(pts[i], pts[j]));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

double kde_pdf(const Point2D& query, const std::vector<Point2D>& points, double bandwidth) {
  if (!(bandwidth > 0.0)) throw ParameterError("kde_pdf: bandwidth must be > 0");
  if (points.empty()) throw ParameterError("kde_pdf: empty point set");
  const double inv_h2 = 1.0 / (bandwidth * bandwidth);
  double acc = 0.0;
  for (const auto& p : points) acc += std::exp(-0.5 * distance_sq(p, query) * inv_h2);
  return acc * kInvTwoPi * inv_h2 / static_cast<double>(points.size());
}

double silverman_bandwidth(const std::vector<Point2D>& points) {
  const std::size_t n = points.size();
  if (n < 2) return 1.0;
  double mx = 0.0, my = 0.0;
  for (const auto& p : points) {
    mx += p.x;
    my += p.y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double vx = 0.0, vy = 0.0;
  for (const auto& p : points) {
    vx += (p.x - mx) * (p.x - mx);
    vy += (p.y - my) * (p.y - my);
  }
  vx /= static_cast<double>(n - 1);
  vy /= static_cast<double>(n - 1);
  double sigma = 0.5 * (std::sqrt(vx) + std::sqrt(vy));
  if (!(sigma > 0.0)) sigma = 1e-6;  // fully coincident points
  return sigma * std::pow(static_cast<double>(n), -1.0 / 6.0);
}

std::vector<double> local_density_kde(const std::vector<Point2D>& nodes, double bandwidth) {
  if (!(bandwidth > 0.0)) throw ParameterError("local_density_kde: bandwidth must be > 0");
  std::vector<double> rho(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) rho[i] = kde_pdf(nodes[i], nodes, bandwidth);
  return rho;
}

std::vector<double> local_density_cutoff(const std::vector<Point2D>& nodes, double d_c) {
  if (!(d_c > 0.0)) throw ParameterError("local_density_cutoff: d_c must be > 0");
  const std::size_t n = nodes.size();
  std::vector<double> rho(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double count = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && distance(nodes[i], nodes[j]) < d_c) count += 1.0;
    rho[i] = count;
  }
  return rho;
}

double select_cutoff_dc(const std::vector<Point2D>& nodes, double neighbor_fraction) {
  const std::size_t n = nodes.size();
  if (n < 2) throw ParameterError("select_cutoff_dc: need at least 2 nodes");
  if (!(neighbor_fraction > 0.0) || !(neighbor_fraction < 1.0))
    throw ParameterError("select_cutoff_dc: neighbor_fraction must be in (0,1)");

  auto dist = sorted_pairwise(nodes);
  const std::size_t pair_count = dist.size();
  // mean rho over nodes = 2 * (pairs strictly inside d_c) / n, so the target
  // pair count is fraction * n^2 / 2. The mean is a step function of d_c;
  // admissible cut positions are the boundaries between distinct distances.
  const double target_pairs = neighbor_fraction * static_cast<double>(n) * static_cast<double>(n) / 2.0;

  std::size_t best_cut = 0;
  double best_err = std::numeric_limits<double>::infinity();
  auto consider = [&](std::size_t cut) {
    double err = std::abs(static_cast<double>(cut) - target_pairs);
    if (err < best_err) {
      best_err = err;
      best_cut = cut;
    }
  };
  consider(0);
  for (std::size_t i = 1; i < pair_count; ++i)
    if (dist[i - 1] < dist[i]) consider(i);
  consider(pair_count);

  if (best_cut == 0) return dist.front() / 2.0;
  if (best_cut == pair_count) return dist.back() * 2.0;
  return 0.5 * (dist[best_cut - 1] + dist[best_cut]);
}

std::vector<double> delta_distances(const std::vector<Point2D>& nodes,
                                    const std::vector<double>& rho) {
  const std::size_t n = nodes.size();
  if (rho.size() != n) throw ParameterError("delta_distances: rho/nodes length mismatch");
  std::vector<double> delta(n, 0.0);
  if (n <= 1) return delta;

  std::size_t peak = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (rho[i] > rho[peak]) peak = i;  // ties keep the lower id

  for (std::size_t i = 0; i < n; ++i) {
    if (i == peak) {
      double diameter = 0.0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          diameter = std::max(diameter, distance(nodes[a], nodes[b]));
      delta[i] = diameter;
    } else {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (rho[j] > rho[i] || (rho[j] == rho[i] && j < i))
          best = std::min(best, distance(nodes[i], nodes[j]));
      }
      delta[i] = best;
    }
  }
  return delta;
}

namespace {

std::vector<double> density_by_mode(const std::vector<Point2D>& nodes,
                                    const NetworkConfig& config, double d_c) {
  if (config.density_mode == DensityMode::Cutoff) return local_density_cutoff(nodes, d_c);
  double h = config.kde_bandwidth > 0.0 ? config.kde_bandwidth : silverman_bandwidth(nodes);
  return local_density_kde(nodes, h);
}

}  // namespace

DensityProfile density_profile(const std::vector<Point2D>& nodes, const NetworkConfig& config) {
  DensityProfile prof;
  if (nodes.empty()) return prof;
  if (nodes.size() == 1) {
    double h = config.kde_bandwidth > 0.0 ? config.kde_bandwidth : 1.0;
    prof.rho = config.density_mode == DensityMode::Cutoff
                   ? std::vector<double>{0.0}
                   : std::vector<double>{1.0 / (2.0 * M_PI * h * h)};
    prof.delta = {0.0};
    prof.gamma = {0.0};
    return prof;
  }
  double d_c = select_cutoff_dc(nodes, config.dc_neighbor_fraction);
  prof.rho = density_by_mode(nodes, config, d_c);
  prof.delta = delta_distances(nodes, prof.rho);
  prof.gamma.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) prof.gamma[i] = prof.rho[i] * prof.delta[i];
  return prof;
}

CenterSelection select_initial_centers(const std::vector<Point2D>& nodes,
                                       const NetworkConfig& config, std::size_t forced_k) {
  const std::size_t n = nodes.size();
  if (n == 0) throw ParameterError("select_initial_centers: empty node set");

  CenterSelection sel;
  if (n == 1) {
    sel.centers = {nodes[0]};
    sel.center_ids = {0};
    sel.k = 1;
    return sel;
  }

  const double d_c = select_cutoff_dc(nodes, config.dc_neighbor_fraction);
  const std::vector<double> rho = density_by_mode(nodes, config, d_c);

  // Candidate set: local density maxima within radius d_c (ties toward the
  // lower id, so at least the global peak always survives).
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    bool is_max = true;
    for (std::size_t j = 0; j < n && is_max; ++j) {
      if (j == i) continue;
      if (distance(nodes[i], nodes[j]) < d_c &&
          (rho[j] > rho[i] || (rho[j] == rho[i] && j < i)))
        is_max = false;
    }
    if (is_max) candidates.push_back(i);
  }

  const std::size_t m = candidates.size();
  bool fallback = forced_k > 0 && forced_k > m;
  if (fallback) {
    // Not enough density peaks: rank every node instead.
    candidates.resize(n);
    std::iota(candidates.begin(), candidates.end(), std::size_t{0});
  }

  // delta/gamma over the (possibly restricted) candidate set.
  std::vector<Point2D> sub_pts;
  std::vector<double> sub_rho;
  sub_pts.reserve(candidates.size());
  for (std::size_t idx : candidates) {
    sub_pts.push_back(nodes[idx]);
    sub_rho.push_back(rho[idx]);
  }
  const std::vector<double> sub_delta = delta_distances(sub_pts, sub_rho);

  std::vector<std::size_t> order(candidates.size());  // indices into candidates
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> gamma(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) gamma[i] = sub_rho[i] * sub_delta[i];
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (gamma[a] != gamma[b]) return gamma[a] > gamma[b];
    return candidates[a] < candidates[b];
  });

  std::size_t k;
  if (forced_k > 0) {
    k = std::min(forced_k, candidates.size());
  } else {
    // Knee detection: largest relative gap in the descending gamma sequence.
    const std::size_t window =
        std::min(candidates.size() - 1, (n + 4) / 5);  // ceil(n/5)
    k = 1;
    double best_gap = -1.0;
    for (std::size_t j = 1; j <= window; ++j) {
      double hi = gamma[order[j - 1]];
      double lo = gamma[order[j]];
      double gap = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
      if (gap > best_gap) {  // strict: ties keep the smaller k
        best_gap = gap;
        k = j;
      }
    }
    if (candidates.size() == 1) k = 1;
  }

  sel.k = k;
  sel.used_fallback = fallback;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t node_idx = candidates[order[j]];
    sel.center_ids.push_back(static_cast<NodeId>(node_idx));
    sel.centers.push_back(nodes[node_idx]);
  }
  return sel;
}

}  // namespace wsn
