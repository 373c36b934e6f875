#pragma once

// Shared test utilities: instance generators and independent brute-force
// oracles that the implementations are checked against. The oracles
// deliberately re-derive everything from the printed formulas with plain
// loops; they share no code with src/.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "wsn/core.hpp"

namespace testutil {

inline std::vector<wsn::Point2D> random_layout(wsn::Rng& rng, std::size_t n,
                                               double w = 100.0, double h = 100.0) {
  std::vector<wsn::Point2D> pts(n);
  for (auto& p : pts) {
    p.x = rng.uniform(0.0, w);
    p.y = rng.uniform(0.0, h);
  }
  return pts;
}

// Gaussian blob via Box-Muller on the deterministic generator.
inline std::vector<wsn::Point2D> gaussian_blob(wsn::Rng& rng, std::size_t n,
                                               wsn::Point2D center, double sigma) {
  std::vector<wsn::Point2D> pts(n);
  for (auto& p : pts) {
    double u1 = rng.uniform();
    double u2 = rng.uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    double r = std::sqrt(-2.0 * std::log(u1));
    p.x = center.x + sigma * r * std::cos(2.0 * M_PI * u2);
    p.y = center.y + sigma * r * std::sin(2.0 * M_PI * u2);
  }
  return pts;
}

// ---- density oracles -------------------------------------------------------

// Count of other points strictly within d_c.
inline std::vector<double> oracle_rho_cutoff(const std::vector<wsn::Point2D>& pts, double dc) {
  const std::size_t n = pts.size();
  std::vector<double> rho(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && wsn::distance(pts[i], pts[j]) < dc) rho[i] += 1.0;
  return rho;
}

// Direct evaluation of the product-Gaussian KDE at one query point.
inline double oracle_kde(const wsn::Point2D& q, const std::vector<wsn::Point2D>& pts, double h) {
  const double norm = 1.0 / (2.0 * M_PI);  // phi(u)^2 normalization for d=2
  double acc = 0.0;
  for (const auto& p : pts) {
    double ux = (p.x - q.x) / h;
    double uy = (p.y - q.y) / h;
    acc += norm * std::exp(-0.5 * (ux * ux + uy * uy));
  }
  return acc / (static_cast<double>(pts.size()) * h * h);
}

// Delta rule: the global density peak (ties -> lowest id) takes the maximum
// pairwise distance of the whole set; every other node takes the minimum
// distance to a node of higher density, where "higher" includes equal
// density with a lower id.
inline std::vector<double> oracle_delta(const std::vector<wsn::Point2D>& pts,
                                        const std::vector<double>& rho) {
  const std::size_t n = pts.size();
  std::vector<double> delta(n, 0.0);
  if (n <= 1) return delta;
  std::size_t peak = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (rho[i] > rho[peak]) peak = i;
  double diameter = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      diameter = std::max(diameter, wsn::distance(pts[i], pts[j]));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == peak) {
      delta[i] = diameter;
      continue;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      bool higher = rho[j] > rho[i] || (rho[j] == rho[i] && j < i);
      if (higher) best = std::min(best, wsn::distance(pts[i], pts[j]));
    }
    delta[i] = best;
  }
  return delta;
}

// ---- clustering oracles ----------------------------------------------------

// Membership column by direct (unstabilized) evaluation of the softmax.
inline std::vector<double> oracle_membership_column(const wsn::Point2D& x,
                                                    const std::vector<wsn::Point2D>& centers,
                                                    double beta) {
  std::vector<double> col(centers.size());
  double denom = 0.0;
  for (std::size_t v = 0; v < centers.size(); ++v) {
    col[v] = std::exp(-beta * wsn::distance_sq(x, centers[v]));
    denom += col[v];
  }
  for (auto& e : col) e /= denom;
  return col;
}

// ---- metrics oracles -------------------------------------------------------

// Two-pass population variance in long double.
inline double oracle_variance(const std::vector<double>& xs) {
  long double mean = 0.0L;
  for (double x : xs) mean += x;
  mean /= static_cast<long double>(xs.size());
  long double acc = 0.0L;
  for (double x : xs) {
    long double d = x - mean;
    acc += d * d;
  }
  return static_cast<double>(acc / static_cast<long double>(xs.size()));
}

}  // namespace testutil
