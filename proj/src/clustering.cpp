#include "wsn/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wsn/errors.hpp"

namespace wsn {

MembershipMatrix membership(const std::vector<Point2D>& nodes,
                            const std::vector<Point2D>& centers, double beta) {
  if (centers.empty()) throw ParameterError("membership: no centers");
  if (!(beta > 0.0)) throw ParameterError("membership: beta must be > 0");

  MembershipMatrix m;
  m.k = centers.size();
  m.n = nodes.size();
  m.z.assign(m.k * m.n, 0.0);

  std::vector<double> d2(m.k);
  for (std::size_t j = 0; j < m.n; ++j) {
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < m.k; ++v) {
      d2[v] = distance_sq(nodes[j], centers[v]);
      lo = std::min(lo, d2[v]);
    }
    // Shift by the smallest squared distance so the largest exponent is 0.
    double denom = 0.0;
    for (std::size_t v = 0; v < m.k; ++v) {
      double e = std::exp(-beta * (d2[v] - lo));
      m.at(v, j) = e;
      denom += e;
    }
    for (std::size_t v = 0; v < m.k; ++v) m.at(v, j) /= denom;
  }
  return m;
}

std::vector<Point2D> update_centers(const std::vector<Point2D>& nodes,
                                    const MembershipMatrix& z) {
  if (z.n != nodes.size()) throw ParameterError("update_centers: shape mismatch");
  std::vector<Point2D> centers(z.k);
  for (std::size_t v = 0; v < z.k; ++v) {
    double sw = 0.0, sx = 0.0, sy = 0.0;
    for (std::size_t j = 0; j < z.n; ++j) {
      double w = z.at(v, j);
      sw += w;
      sx += w * nodes[j].x;
      sy += w * nodes[j].y;
    }
    if (!(sw > 0.0))
      throw DegenerateClusterError("update_centers: cluster carries zero total weight");
    centers[v] = {sx / sw, sy / sw};
  }
  return centers;
}

double cost(const std::vector<Point2D>& nodes, const MembershipMatrix& z,
            const std::vector<Point2D>& centers) {
  if (z.n != nodes.size() || z.k != centers.size())
    throw ParameterError("cost: shape mismatch");
  double acc = 0.0;
  for (std::size_t v = 0; v < z.k; ++v)
    for (std::size_t j = 0; j < z.n; ++j)
      acc += z.at(v, j) * distance_sq(nodes[j], centers[v]);
  return acc;
}

SoftKMeansResult soft_kmeans(const std::vector<Point2D>& nodes,
                             const std::vector<Point2D>& initial_centers, double beta,
                             double convergence_eps, std::size_t r_max) {
  if (r_max < 1) throw ParameterError("soft_kmeans: r_max must be >= 1");
  SoftKMeansResult res;
  res.centers = initial_centers;
  res.z = membership(nodes, res.centers, beta);
  res.cost_history.push_back(cost(nodes, res.z, res.centers));

  for (std::size_t t = 1; t <= r_max; ++t) {
    std::vector<Point2D> next = update_centers(nodes, res.z);
    MembershipMatrix zn = membership(nodes, next, beta);

    double dz = 0.0;
    for (std::size_t i = 0; i < zn.z.size(); ++i)
      dz = std::max(dz, std::fabs(zn.z[i] - res.z.z[i]));
    double dc = 0.0;
    for (std::size_t v = 0; v < next.size(); ++v)
      dc = std::max(dc, distance(next[v], res.centers[v]));

    res.centers = std::move(next);
    res.z = std::move(zn);
    res.iterations = t;
    res.cost_history.push_back(cost(nodes, res.z, res.centers));

    if (dz < convergence_eps && dc < convergence_eps) {
      res.converged = true;
      break;
    }
  }
  return res;
}

ClusterAssignment form_clusters(const MembershipMatrix& z, std::vector<Point2D> centers) {
  if (z.k == 0 || z.n == 0) throw ParameterError("form_clusters: empty matrix");
  ClusterAssignment a;
  a.labels.resize(z.n);
  a.clusters.resize(z.k);
  a.centers = std::move(centers);
  for (std::size_t j = 0; j < z.n; ++j) {
    std::size_t best = 0;
    for (std::size_t v = 1; v < z.k; ++v)
      if (z.at(v, j) > z.at(best, j)) best = v;
    a.labels[j] = static_cast<std::uint32_t>(best);
    a.clusters[best].push_back(static_cast<NodeId>(j));
  }
  for (std::size_t v = 0; v < z.k; ++v)
    if (a.clusters[v].empty())
      throw DegenerateClusterError("form_clusters: cluster captured no node");
  return a;
}

ClusterAssignment reassign_boundary(const ClusterAssignment& assignment,
                                    const MembershipMatrix& z, double threshold) {
  if (!(threshold >= 0.0) || !(threshold <= 1.0))
    throw ParameterError("reassign_boundary: threshold must be in [0,1]");
  if (z.n != assignment.labels.size() || z.k != assignment.clusters.size())
    throw ParameterError("reassign_boundary: shape mismatch");

  ClusterAssignment out;
  out.labels = assignment.labels;
  out.centers = assignment.centers;
  if (z.k < 2) {
    out.clusters = assignment.clusters;
    return out;
  }

  std::vector<std::size_t> sizes(z.k, 0);
  for (auto l : out.labels) sizes[l] += 1;

  // Sweep in id order with live counts; repeat until stable so that applying
  // the operation to its own output changes nothing. Each move shrinks the
  // pair's size gap by 2, so the total squared size strictly decreases and
  // the loop terminates.
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t j = 0; j < z.n; ++j) {
      std::size_t top = 0;
      for (std::size_t v = 1; v < z.k; ++v)
        if (z.at(v, j) > z.at(top, j)) top = v;
      std::size_t second = top == 0 ? 1 : 0;
      for (std::size_t v = 0; v < z.k; ++v) {
        if (v == top || v == second) continue;
        if (z.at(v, j) > z.at(second, j)) second = v;
      }
      if (z.at(top, j) - z.at(second, j) >= threshold) continue;

      std::size_t cur = out.labels[j];
      if (cur != top && cur != second) continue;  // hand-labeled elsewhere; skip
      std::size_t other = cur == top ? second : top;
      if (sizes[cur] >= sizes[other] + 2) {
        out.labels[j] = static_cast<std::uint32_t>(other);
        sizes[cur] -= 1;
        sizes[other] += 1;
        moved = true;
      }
    }
  }

  out.clusters.assign(z.k, {});
  for (std::size_t j = 0; j < z.n; ++j)
    out.clusters[out.labels[j]].push_back(static_cast<NodeId>(j));
  return out;
}

namespace {

// Nearest-center labels; a center that captures nothing is re-seeded at the
// node farthest from it and the assignment is redone.
void assign_with_reseed(const std::vector<Point2D>& nodes, std::vector<Point2D>& centers,
                        std::vector<std::uint32_t>& labels) {
  const std::size_t n = nodes.size();
  const std::size_t k = centers.size();
  for (;;) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t best = 0;
      double bd = distance_sq(nodes[j], centers[0]);
      for (std::size_t v = 1; v < k; ++v) {
        double d = distance_sq(nodes[j], centers[v]);
        if (d < bd) {
          bd = d;
          best = v;
        }
      }
      labels[j] = static_cast<std::uint32_t>(best);
    }
    std::vector<std::size_t> count(k, 0);
    for (auto l : labels) count[l] += 1;
    std::size_t empty = k;
    for (std::size_t v = 0; v < k; ++v)
      if (count[v] == 0) {
        empty = v;
        break;
      }
    if (empty == k) return;
    std::size_t far = 0;
    double fd = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      double d = distance_sq(nodes[j], centers[empty]);
      if (d > fd) {
        fd = d;
        far = j;
      }
    }
    centers[empty] = nodes[far];
  }
}

}  // namespace

ClusterAssignment hard_kmeans(const std::vector<Point2D>& nodes,
                              const std::vector<Point2D>& initial_centers,
                              double convergence_eps, std::size_t r_max) {
  if (r_max < 1) throw ParameterError("hard_kmeans: r_max must be >= 1");
  if (initial_centers.empty()) throw ParameterError("hard_kmeans: no centers");
  if (initial_centers.size() > nodes.size())
    throw ParameterError("hard_kmeans: more centers than nodes");

  const std::size_t n = nodes.size();
  const std::size_t k = initial_centers.size();
  std::vector<Point2D> centers = initial_centers;
  std::vector<std::uint32_t> labels(n, 0);
  std::vector<std::uint32_t> prev;

  for (std::size_t t = 0; t < r_max; ++t) {
    assign_with_reseed(nodes, centers, labels);
    if (labels == prev) break;
    prev = labels;

    double disp = 0.0;
    std::vector<double> sx(k, 0.0), sy(k, 0.0);
    std::vector<std::size_t> count(k, 0);
    for (std::size_t j = 0; j < n; ++j) {
      sx[labels[j]] += nodes[j].x;
      sy[labels[j]] += nodes[j].y;
      count[labels[j]] += 1;
    }
    for (std::size_t v = 0; v < k; ++v) {
      Point2D mean{sx[v] / static_cast<double>(count[v]),
                   sy[v] / static_cast<double>(count[v])};
      disp = std::max(disp, distance(mean, centers[v]));
      centers[v] = mean;
    }
    if (disp < convergence_eps) {
      assign_with_reseed(nodes, centers, labels);
      break;
    }
  }

  ClusterAssignment a;
  a.labels = labels;
  a.clusters.assign(k, {});
  for (std::size_t j = 0; j < n; ++j)
    a.clusters[labels[j]].push_back(static_cast<NodeId>(j));
  // Report centroids of the final clusters.
  a.centers.assign(k, {0.0, 0.0});
  std::vector<std::size_t> count(k, 0);
  for (std::size_t j = 0; j < n; ++j) {
    a.centers[labels[j]].x += nodes[j].x;
    a.centers[labels[j]].y += nodes[j].y;
    count[labels[j]] += 1;
  }
  for (std::size_t v = 0; v < k; ++v) {
    a.centers[v].x /= static_cast<double>(count[v]);
    a.centers[v].y /= static_cast<double>(count[v]);
  }
  return a;
}

}  // namespace wsn
