// Python bindings for the clustering and simulation core. Geometry crosses
// the boundary as plain (x, y) tuples, membership matrices as k lists of n
// floats, and results as dicts, so the module needs nothing beyond the
// standard library on the python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wsn/clustering.hpp"
#include "wsn/core.hpp"
#include "wsn/density.hpp"
#include "wsn/energy.hpp"
#include "wsn/io.hpp"
#include "wsn/metrics.hpp"
#include "wsn/protocol.hpp"

namespace py = pybind11;

namespace {

using XY = std::pair<double, double>;

std::vector<wsn::Point2D> to_points(const std::vector<XY>& xs) {
  std::vector<wsn::Point2D> pts(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) pts[i] = {xs[i].first, xs[i].second};
  return pts;
}

std::vector<XY> from_points(const std::vector<wsn::Point2D>& pts) {
  std::vector<XY> xs(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) xs[i] = {pts[i].x, pts[i].y};
  return xs;
}

std::vector<std::vector<double>> matrix_rows(const wsn::MembershipMatrix& z) {
  std::vector<std::vector<double>> rows(z.k, std::vector<double>(z.n));
  for (std::size_t v = 0; v < z.k; ++v)
    for (std::size_t j = 0; j < z.n; ++j) rows[v][j] = z.at(v, j);
  return rows;
}

wsn::MembershipMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
  wsn::MembershipMatrix z;
  z.k = rows.size();
  z.n = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows)
    if (row.size() != z.n)
      throw std::invalid_argument("membership rows must have equal length");
  z.z.resize(z.k * z.n);
  for (std::size_t v = 0; v < z.k; ++v)
    for (std::size_t j = 0; j < z.n; ++j) z.z[v * z.n + j] = rows[v][j];
  return z;
}

py::dict assignment_dict(const wsn::ClusterAssignment& a) {
  py::dict d;
  d["labels"] = a.labels;
  d["clusters"] = a.clusters;
  d["centers"] = from_points(a.centers);
  return d;
}

py::dict metrics_dict(const wsn::LifetimeMetrics& m) {
  py::dict d;
  d["fnd"] = m.fnd;
  d["hnd"] = m.hnd;
  d["lnd"] = m.lnd;
  d["total_rounds"] = m.total_rounds;
  d["fnd_censored"] = m.fnd_censored;
  d["hnd_censored"] = m.hnd_censored;
  d["lnd_censored"] = m.lnd_censored;
  d["ev_by_round"] = m.ev_by_round;
  return d;
}

std::string get_density_mode(const wsn::NetworkConfig& c) {
  return c.density_mode == wsn::DensityMode::Kde ? "kde" : "cutoff";
}

void set_density_mode(wsn::NetworkConfig& c, const std::string& name) {
  if (name == "kde")
    c.density_mode = wsn::DensityMode::Kde;
  else if (name == "cutoff")
    c.density_mode = wsn::DensityMode::Cutoff;
  else
    throw std::invalid_argument("density_mode must be 'kde' or 'cutoff'");
}

}  // namespace

PYBIND11_MODULE(_wsncluster, m) {
  m.doc() = "Deterministic WSN clustering and network-lifetime simulator";

  py::class_<wsn::NetworkConfig>(m, "NetworkConfig")
      .def(py::init<>())
      .def_readwrite("area_width", &wsn::NetworkConfig::area_width)
      .def_readwrite("area_height", &wsn::NetworkConfig::area_height)
      .def_property(
          "bs_position",
          [](const wsn::NetworkConfig& c) { return XY{c.bs_position.x, c.bs_position.y}; },
          [](wsn::NetworkConfig& c, const XY& p) { c.bs_position = {p.first, p.second}; })
      .def_readwrite("n_nodes", &wsn::NetworkConfig::n_nodes)
      .def_readwrite("initial_energy", &wsn::NetworkConfig::initial_energy)
      .def_readwrite("packet_bits", &wsn::NetworkConfig::packet_bits)
      .def_readwrite("control_bits", &wsn::NetworkConfig::control_bits)
      .def_readwrite("e_elec", &wsn::NetworkConfig::e_elec)
      .def_readwrite("eps_fs", &wsn::NetworkConfig::eps_fs)
      .def_readwrite("eps_mp", &wsn::NetworkConfig::eps_mp)
      .def_readwrite("e_da", &wsn::NetworkConfig::e_da)
      .def_readwrite("aggregation_ratio_c", &wsn::NetworkConfig::aggregation_ratio_c)
      .def_readwrite("beta", &wsn::NetworkConfig::beta)
      .def_property("density_mode", &get_density_mode, &set_density_mode)
      .def_readwrite("dc_neighbor_fraction", &wsn::NetworkConfig::dc_neighbor_fraction)
      .def_readwrite("kde_bandwidth", &wsn::NetworkConfig::kde_bandwidth)
      .def_readwrite("forced_k", &wsn::NetworkConfig::forced_k)
      .def_readwrite("reassign_threshold", &wsn::NetworkConfig::reassign_threshold)
      .def_readwrite("ch_constant", &wsn::NetworkConfig::ch_constant)
      .def_readwrite("switch_threshold", &wsn::NetworkConfig::switch_threshold)
      .def_readwrite("convergence_eps", &wsn::NetworkConfig::convergence_eps)
      .def_readwrite("r_max", &wsn::NetworkConfig::r_max)
      .def_readwrite("max_comm_range", &wsn::NetworkConfig::max_comm_range)
      .def_readwrite("lone_ch_transmits", &wsn::NetworkConfig::lone_ch_transmits)
      .def_readwrite("ch_counts_self", &wsn::NetworkConfig::ch_counts_self)
      .def_readwrite("death_fraction_for_lnd", &wsn::NetworkConfig::death_fraction_for_lnd)
      .def_readwrite("max_rounds", &wsn::NetworkConfig::max_rounds)
      .def_readwrite("rng_seed", &wsn::NetworkConfig::rng_seed)
      .def_readwrite("checkpoints", &wsn::NetworkConfig::checkpoints)
      .def("validate", &wsn::NetworkConfig::validate)
      .def_static("scenario2", &wsn::NetworkConfig::scenario2)
      .def_static("from_text",
                  [](const std::string& text) { return wsn::parse_config_text(text); })
      .def_static("from_file",
                  [](const std::string& path) { return wsn::parse_config_file(path); })
      .def("to_text", [](const wsn::NetworkConfig& c) { return wsn::format_config(c); })
      .def("__repr__", [](const wsn::NetworkConfig& c) {
        return "<NetworkConfig " + std::to_string(c.area_width) + "x" +
               std::to_string(c.area_height) + " m, " + std::to_string(c.n_nodes) +
               " nodes>";
      });

  m.def("protocol_names", []() {
    std::vector<std::string> names;
    for (auto kind : {wsn::ProtocolKind::ISKMeans, wsn::ProtocolKind::SoftKMeansVanilla,
                      wsn::ProtocolKind::HardKMeans, wsn::ProtocolKind::Leach})
      names.push_back(wsn::protocol_name(kind));
    return names;
  });

  m.def(
      "crossover_distance",
      [](const wsn::NetworkConfig& cfg) { return wsn::RadioParams::from_config(cfg).d0; },
      py::arg("config"),
      "Distance where the free-space and multipath amplifier costs meet (m)");

  m.def(
      "membership",
      [](const std::vector<XY>& nodes, const std::vector<XY>& centers, double beta) {
        return matrix_rows(wsn::membership(to_points(nodes), to_points(centers), beta));
      },
      py::arg("nodes"), py::arg("centers"), py::arg("beta"),
      "Soft membership probabilities: one row per cluster, one column per node");

  m.def(
      "soft_kmeans",
      [](const std::vector<XY>& nodes, const std::vector<XY>& initial_centers,
         double beta, double convergence_eps, std::size_t r_max) {
        auto res = wsn::soft_kmeans(to_points(nodes), to_points(initial_centers), beta,
                                    convergence_eps, r_max);
        py::dict d;
        d["membership"] = matrix_rows(res.z);
        d["centers"] = from_points(res.centers);
        d["iterations"] = res.iterations;
        d["converged"] = res.converged;
        d["cost_history"] = res.cost_history;
        return d;
      },
      py::arg("nodes"), py::arg("initial_centers"), py::arg("beta") = 0.2,
      py::arg("convergence_eps") = 1e-4, py::arg("r_max") = 100);

  m.def(
      "hard_kmeans",
      [](const std::vector<XY>& nodes, const std::vector<XY>& initial_centers,
         double convergence_eps, std::size_t r_max) {
        return assignment_dict(wsn::hard_kmeans(to_points(nodes),
                                                to_points(initial_centers),
                                                convergence_eps, r_max));
      },
      py::arg("nodes"), py::arg("initial_centers"), py::arg("convergence_eps") = 1e-4,
      py::arg("r_max") = 100);

  m.def(
      "select_initial_centers",
      [](const std::vector<XY>& nodes, const wsn::NetworkConfig& cfg,
         std::size_t forced_k) {
        auto sel = wsn::select_initial_centers(to_points(nodes), cfg, forced_k);
        py::dict d;
        d["centers"] = from_points(sel.centers);
        d["center_ids"] = sel.center_ids;
        d["k"] = sel.k;
        d["used_fallback"] = sel.used_fallback;
        return d;
      },
      py::arg("nodes"), py::arg("config"), py::arg("forced_k") = 0,
      "Density-peak initial centers; forced_k = 0 picks k from the decision graph");

  m.def(
      "density_profile",
      [](const std::vector<XY>& nodes, const wsn::NetworkConfig& cfg) {
        auto prof = wsn::density_profile(to_points(nodes), cfg);
        py::dict d;
        d["rho"] = prof.rho;
        d["delta"] = prof.delta;
        d["gamma"] = prof.gamma;
        return d;
      },
      py::arg("nodes"), py::arg("config"));

  m.def(
      "form_clusters",
      [](const std::vector<std::vector<double>>& membership_rows,
         const std::vector<XY>& centers) {
        return assignment_dict(
            wsn::form_clusters(matrix_from_rows(membership_rows), to_points(centers)));
      },
      py::arg("membership"), py::arg("centers") = std::vector<XY>{});

  m.def(
      "reassign_boundary",
      [](const std::vector<std::vector<double>>& membership_rows,
         const std::vector<XY>& centers, double threshold) {
        auto z = matrix_from_rows(membership_rows);
        auto assignment = wsn::form_clusters(z, to_points(centers));
        return assignment_dict(wsn::reassign_boundary(assignment, z, threshold));
      },
      py::arg("membership"), py::arg("centers") = std::vector<XY>{},
      py::arg("threshold") = 0.15,
      "Argmax partition followed by the boundary-balancing sweep");

  m.def(
      "cluster_pipeline",
      [](const std::vector<XY>& nodes, const wsn::NetworkConfig& cfg,
         std::size_t forced_k) {
        auto pts = to_points(nodes);
        auto sel = wsn::select_initial_centers(pts, cfg, forced_k);
        auto soft = wsn::soft_kmeans(pts, sel.centers, cfg.beta, cfg.convergence_eps,
                                     cfg.r_max);
        auto assignment = wsn::reassign_boundary(
            wsn::form_clusters(soft.z, soft.centers), soft.z, cfg.reassign_threshold);
        py::dict d = assignment_dict(assignment);
        d["k"] = assignment.clusters.size();
        d["membership"] = matrix_rows(soft.z);
        d["iterations"] = soft.iterations;
        d["converged"] = soft.converged;
        return d;
      },
      py::arg("nodes"), py::arg("config"), py::arg("forced_k") = 0,
      "Full clustering pass: density-peak starts, soft k-means, boundary smoothing");

  m.def(
      "simulate",
      [](const wsn::NetworkConfig& cfg, const std::string& protocol, std::uint64_t seed) {
        wsn::ProtocolKind kind = wsn::protocol_from_name(protocol);
        wsn::SimulationResult res;
        {
          py::gil_scoped_release release;
          res = wsn::simulate(cfg, kind, seed);
        }
        py::dict d = metrics_dict(res.metrics);
        d["protocol"] = protocol;
        d["seed"] = seed;
        d["warnings"] = res.warnings;
        return d;
      },
      py::arg("config"), py::arg("protocol"), py::arg("seed"),
      "Run one full lifetime simulation and return its metrics");

  m.def(
      "simulate_rounds_csv",
      [](const wsn::NetworkConfig& cfg, const std::string& protocol, std::uint64_t seed) {
        wsn::ProtocolKind kind = wsn::protocol_from_name(protocol);
        wsn::SimulationResult res;
        {
          py::gil_scoped_release release;
          res = wsn::simulate(cfg, kind, seed);
        }
        return wsn::format_rounds_csv(res.logs);
      },
      py::arg("config"), py::arg("protocol"), py::arg("seed"),
      "Round-by-round log of one simulation as CSV text");

  m.def(
      "run_batch",
      [](const wsn::NetworkConfig& cfg, const std::vector<std::string>& protocols,
         const std::vector<std::uint64_t>& seeds) {
        std::vector<wsn::ProtocolKind> kinds;
        for (const auto& p : protocols) kinds.push_back(wsn::protocol_from_name(p));
        wsn::ComparisonTable table;
        {
          py::gil_scoped_release release;
          table = wsn::run_batch(cfg, kinds, seeds);
        }
        py::dict d;
        d["checkpoints"] = table.checkpoints;
        py::list aggregates;
        for (const auto& a : table.aggregates) {
          py::dict row;
          row["protocol"] = wsn::protocol_name(a.kind);
          row["runs"] = a.runs;
          row["fnd_mean"] = a.fnd_mean;
          row["fnd_std"] = a.fnd_std;
          row["hnd_mean"] = a.hnd_mean;
          row["hnd_std"] = a.hnd_std;
          row["lnd_mean"] = a.lnd_mean;
          row["lnd_std"] = a.lnd_std;
          row["ev_mean"] = a.ev_mean;
          row["ev_std"] = a.ev_std;
          aggregates.append(row);
        }
        d["aggregates"] = aggregates;
        py::list results;
        for (const auto& r : table.results) {
          py::dict row = metrics_dict(r.metrics);
          row["protocol"] = wsn::protocol_name(r.kind);
          row["seed"] = r.seed;
          row["ok"] = r.ok;
          row["error"] = r.error;
          results.append(row);
        }
        d["results"] = results;
        return d;
      },
      py::arg("config"), py::arg("protocols"), py::arg("seeds"),
      "Simulate every (protocol, seed) pair and aggregate the lifetime metrics");
}
