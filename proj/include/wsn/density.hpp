#pragma once

// Kernel density estimation and density-peaks analysis. Produces the initial
// cluster centers and, when not forced, the cluster count k: nodes are ranked
// by gamma = rho * delta, where rho is a (smooth or cutoff) local density and
// delta the distance to the nearest denser node.

#include <cstddef>
#include <vector>

#include "wsn/core.hpp"

namespace wsn {

struct DensityProfile {
  std::vector<double> rho;    // per-node local density
  std::vector<double> delta;  // meters
  std::vector<double> gamma;  // rho * delta, elementwise
};

struct CenterSelection {
  std::vector<Point2D> centers;  // actual node positions
  std::vector<NodeId> center_ids;
  std::size_t k = 0;
  // True when forced_k exceeded the density-peak candidate set and the
  // selection widened to the full node set.
  bool used_fallback = false;
};

// Product-Gaussian KDE at one query point: (1/(n h^2)) sum_t K((x_t - q)/h)
// with K(u) = phi(u_x) phi(u_y). Throws ParameterError for bandwidth <= 0.
double kde_pdf(const Point2D& query, const std::vector<Point2D>& points, double bandwidth);

// Rule-of-thumb bandwidth for 2-d data: mean per-axis sample standard
// deviation times n^(-1/6).
double silverman_bandwidth(const std::vector<Point2D>& points);

// rho_i = kde_pdf evaluated at every node.
std::vector<double> local_density_kde(const std::vector<Point2D>& nodes, double bandwidth);

// rho_i = number of other nodes strictly within d_c.
std::vector<double> local_density_cutoff(const std::vector<Point2D>& nodes, double d_c);

// Smallest-error cutoff radius: the d_c whose mean neighbor count is closest
// to neighbor_fraction * n, located on the sorted pairwise-distance list.
// Deterministic; scale-equivariant. Requires n >= 2, 0 < fraction < 1.
double select_cutoff_dc(const std::vector<Point2D>& nodes, double neighbor_fraction);

// Per-node delta: the global density peak (ties -> lowest id) takes the
// maximum pairwise distance of the set; everyone else the minimum distance
// to a denser node (equal density + lower id counts as denser). Single node
// yields [0].
std::vector<double> delta_distances(const std::vector<Point2D>& nodes,
                                    const std::vector<double>& rho);

// Full-set (rho, delta, gamma) triple used for decision-graph output; rho
// follows config.density_mode.
DensityProfile density_profile(const std::vector<Point2D>& nodes, const NetworkConfig& config);

// Initial-center selection: compute rho (KDE by default), keep the nodes
// that are local density maxima within radius d_c, compute delta/gamma on
// that restricted set, then take the top-gamma nodes. forced_k = 0 picks k
// at the largest relative gap gamma_(j)/gamma_(j+1) for j in
// 1..min(m-1, ceil(n/5)); ties resolve to the smaller k. forced_k > m falls
// back to ranking all nodes (used_fallback flag set).
CenterSelection select_initial_centers(const std::vector<Point2D>& nodes,
                                       const NetworkConfig& config, std::size_t forced_k = 0);

}  // namespace wsn
