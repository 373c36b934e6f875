#pragma once

// Soft k-means with boundary-node reassignment, plus the plain Lloyd
// iteration used as a baseline.

#include <cstddef>
#include <vector>

#include "wsn/core.hpp"

namespace wsn {

// k×n soft-assignment matrix, row-major. Column j holds the probabilities of
// node j belonging to each of the k clusters; every column sums to 1.
struct MembershipMatrix {
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<double> z;  // k*n entries, cluster-major

  double& at(std::size_t v, std::size_t j) { return z[v * n + j]; }
  double at(std::size_t v, std::size_t j) const { return z[v * n + j]; }
};

// A hard partition: labels and cluster member lists always agree, no cluster
// is empty. centers may be empty when the producer had none to report.
struct ClusterAssignment {
  std::vector<std::uint32_t> labels;          // per-node cluster index
  std::vector<std::vector<NodeId>> clusters;  // per-cluster node ids, ascending
  std::vector<Point2D> centers;

  std::size_t k() const { return clusters.size(); }
};

struct SoftKMeansResult {
  MembershipMatrix z;
  std::vector<Point2D> centers;
  std::size_t iterations = 0;
  bool converged = false;
  // cost after each iteration; [0] is the cost at the initial centers.
  std::vector<double> cost_history;
};

// Softmax over negative beta-scaled squared distances, stabilized per column
// by shifting out the largest exponent. Throws ParameterError on beta <= 0 or
// empty centers.
MembershipMatrix membership(const std::vector<Point2D>& nodes,
                            const std::vector<Point2D>& centers, double beta);

// Per-cluster weighted mean of node positions. A cluster whose weights sum to
// zero has no defensible center: DegenerateClusterError.
std::vector<Point2D> update_centers(const std::vector<Point2D>& nodes,
                                    const MembershipMatrix& z);

// Weighted sum of squared node-to-center distances (m^2).
double cost(const std::vector<Point2D>& nodes, const MembershipMatrix& z,
            const std::vector<Point2D>& centers);

// Alternate membership/update_centers from the given starting centers until
// both the largest membership change and the largest center displacement drop
// below convergence_eps, or r_max iterations elapse (converged = false; the
// caller decides whether to retry with fresh centers).
SoftKMeansResult soft_kmeans(const std::vector<Point2D>& nodes,
                             const std::vector<Point2D>& initial_centers, double beta,
                             double convergence_eps, std::size_t r_max);

// Hard partition by per-column argmax (ties to the lower cluster index).
// A cluster that captures no node at all -> DegenerateClusterError.
// The optional centers are carried into the result untouched.
ClusterAssignment form_clusters(const MembershipMatrix& z,
                                std::vector<Point2D> centers = {});

// Boundary-node smoothing: a node whose two largest membership probabilities
// differ by less than `threshold` migrates from its current cluster to the
// other one of that pair when doing so strictly shrinks the size gap between
// them (i.e. current holds at least two more members). Nodes are visited in
// ascending id order with member counts updated live, and the sweep repeats
// until no node moves, so reapplying the operation is a no-op. Returns a new
// assignment; the input is not modified.
ClusterAssignment reassign_boundary(const ClusterAssignment& assignment,
                                    const MembershipMatrix& z, double threshold);

// Lloyd's iteration: nearest-center assignment (ties to the lower index),
// mean update, until labels repeat, centers move less than convergence_eps,
// or r_max iterations. A center that captures nothing is re-seeded at the
// node farthest from it. Returned centers are the final cluster centroids.
ClusterAssignment hard_kmeans(const std::vector<Point2D>& nodes,
                              const std::vector<Point2D>& initial_centers,
                              double convergence_eps, std::size_t r_max);

}  // namespace wsn
