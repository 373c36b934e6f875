#include "wsn/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "wsn/core.hpp"
#include "wsn/errors.hpp"
#include "wsn/metrics.hpp"

using wsn::NetworkConfig;

TEST_CASE("format_double: shortest representation that round-trips") {
  CHECK(wsn::format_double(0.0) == "0");
  CHECK(wsn::format_double(1.0) == "1");
  CHECK(wsn::format_double(0.5) == "0.5");
  CHECK(wsn::format_double(0.1) == "0.1");
  CHECK(wsn::format_double(0.125) == "0.125");
  CHECK(wsn::format_double(50.0) == "50");
  CHECK(wsn::format_double(-3.25) == "-3.25");
  CHECK(wsn::format_double(1e-5) == "1e-05");

  wsn::Rng rng(99);
  for (int i = 0; i < 500; ++i) {
    double v = (rng.uniform() - 0.5) * std::pow(10.0, rng.uniform(-12.0, 12.0));
    std::string s = wsn::format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("parse_config_text: empty text keeps the defaults") {
  auto cfg = wsn::parse_config_text("");
  CHECK(cfg.area_width == 100.0);
  CHECK(cfg.n_nodes == 100);
  CHECK(cfg.initial_energy == 0.2);
  CHECK(cfg.bs_position.x == 50.0);
  CHECK(cfg.bs_position.y == 150.0);
  CHECK(cfg.checkpoints == std::vector<std::size_t>{200, 400, 600, 800, 1000, 1200, 1400});
}

TEST_CASE("parse_config_text: keys, comments, lists, and the auto bandwidth") {
  std::string text =
      "# larger field\n"
      "area_width = 200\n"
      "area_height=200\n"
      "  bs_position = 100 200  \n"
      "\n"
      "n_nodes = 50\n"
      "initial_energy = 1\n"
      "kde_bandwidth = auto\n"
      "density_mode = cutoff\n"
      "checkpoints = 100 200 300\n"
      "lone_ch_transmits = false\n"
      "ch_counts_self = 1\n"
      "forced_k = 6\n"
      "rng_seed = 12345\n";
  auto cfg = wsn::parse_config_text(text);
  CHECK(cfg.area_width == 200.0);
  CHECK(cfg.area_height == 200.0);
  CHECK(cfg.bs_position.x == 100.0);
  CHECK(cfg.bs_position.y == 200.0);
  CHECK(cfg.n_nodes == 50);
  CHECK(cfg.initial_energy == 1.0);
  CHECK(cfg.kde_bandwidth == 0.0);
  CHECK(cfg.density_mode == wsn::DensityMode::Cutoff);
  CHECK(cfg.checkpoints == std::vector<std::size_t>{100, 200, 300});
  CHECK_FALSE(cfg.lone_ch_transmits);
  CHECK(cfg.ch_counts_self);
  CHECK(cfg.forced_k == 6);
  CHECK(cfg.rng_seed == 12345);
  // untouched keys keep their defaults
  CHECK(cfg.packet_bits == 4000.0);
  CHECK(cfg.beta == 0.2);
}

TEST_CASE("parse_config_text: bad input is rejected with context") {
  CHECK_THROWS_AS(wsn::parse_config_text("no_such_key = 1\n"), wsn::ConfigError);
  CHECK_THROWS_AS(wsn::parse_config_text("beta\n"), wsn::ConfigError);
  CHECK_THROWS_AS(wsn::parse_config_text("beta = spicy\n"), wsn::ConfigError);
  CHECK_THROWS_AS(wsn::parse_config_text("bs_position = 5\n"), wsn::ConfigError);
  CHECK_THROWS_AS(wsn::parse_config_text("density_mode = radial\n"), wsn::ConfigError);
  CHECK_THROWS_AS(wsn::parse_config_text("lone_ch_transmits = maybe\n"), wsn::ConfigError);
  CHECK_THROWS_AS(wsn::parse_config_text("checkpoints =\n"), wsn::ConfigError);
}

TEST_CASE("config: format and parse round-trip byte-identically") {
  auto text = wsn::format_config(NetworkConfig{});
  auto cfg = wsn::parse_config_text(text);
  CHECK(wsn::format_config(cfg) == text);

  auto s2 = NetworkConfig::scenario2();
  auto text2 = wsn::format_config(s2);
  auto cfg2 = wsn::parse_config_text(text2);
  CHECK(wsn::format_config(cfg2) == text2);
  CHECK(cfg2.bs_position.y == s2.bs_position.y);
  CHECK(cfg2.initial_energy == s2.initial_energy);
  CHECK(cfg2.checkpoints == s2.checkpoints);

  NetworkConfig custom;
  custom.kde_bandwidth = 2.5;
  custom.eps_mp = 0.0013e-12;
  auto text3 = wsn::format_config(custom);
  CHECK(wsn::parse_config_text(text3).kde_bandwidth == 2.5);
  CHECK(wsn::parse_config_text(text3).eps_mp == 0.0013e-12);
}

TEST_CASE("layout csv: format, parse, and reject malformed input") {
  std::vector<wsn::Point2D> pts = {{12.5, 7.25}, {50.0, 100.0}};
  std::string expected =
      "node_id,x_m,y_m\n"
      "0,12.5,7.25\n"
      "1,50,100\n";
  CHECK(wsn::format_layout_csv(pts) == expected);

  auto parsed = wsn::parse_layout_csv(expected);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].x == 12.5);
  CHECK(parsed[1].y == 100.0);
  CHECK(wsn::format_layout_csv(parsed) == expected);  // byte round-trip

  CHECK_THROWS_AS(wsn::parse_layout_csv("x,y\n0,1\n"), wsn::IoError);
  CHECK_THROWS_AS(wsn::parse_layout_csv("node_id,x_m,y_m\n0,1\n"), wsn::IoError);
  CHECK_THROWS_AS(wsn::parse_layout_csv("node_id,x_m,y_m\n0,1,2\n0,3,4\n"), wsn::IoError);
  CHECK_THROWS_AS(wsn::parse_layout_csv("node_id,x_m,y_m\n5,1,2\n"), wsn::IoError);
  CHECK_THROWS_AS(wsn::parse_layout_csv("node_id,x_m,y_m\n0,one,2\n"), wsn::IoError);
  CHECK_THROWS_AS(wsn::parse_layout_csv(""), wsn::IoError);
}

namespace {

std::vector<wsn::RoundLog> tiny_logs() {
  wsn::RoundLog r1;
  r1.round = 1;
  r1.residual = {0.125, 0.0625};
  r1.alive_count = 2;
  r1.cluster_of = {0, 0};
  r1.role_of = {wsn::Role::ClusterHead, wsn::Role::Member};
  wsn::RoundLog r2;
  r2.round = 2;
  r2.residual = {0.125, 0.0};
  r2.alive_count = 1;
  r2.cluster_of = {0, wsn::kNoCluster};
  r2.role_of = {wsn::Role::ClusterHead, wsn::Role::Member};
  r2.events.push_back({wsn::EventType::Death, 1});
  return {r1, r2};
}

}  // namespace

TEST_CASE("rounds csv: fixed column order, one row per node per round") {
  std::string expected =
      "round,node_id,residual_j,alive,cluster,role\n"
      "1,0,0.125,1,0,ch\n"
      "1,1,0.0625,1,0,member\n"
      "2,0,0.125,1,0,ch\n"
      "2,1,0,0,,member\n";
  CHECK(wsn::format_rounds_csv(tiny_logs()) == expected);
  CHECK(wsn::format_rounds_csv({}) == "round,node_id,residual_j,alive,cluster,role\n");

  auto parsed = wsn::parse_rounds_csv(expected);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].alive_count == 2);
  CHECK(parsed[1].alive_count == 1);
  CHECK(parsed[1].cluster_of[1] == wsn::kNoCluster);
  CHECK(parsed[1].residual[0] == 0.125);
  CHECK(wsn::format_rounds_csv(parsed) == expected);  // byte round-trip
}

TEST_CASE("events csv: one row per event") {
  auto logs = tiny_logs();
  logs[0].events.push_back({wsn::EventType::Switch, 3});
  logs[0].events.push_back({wsn::EventType::Restart, 4});
  std::string expected =
      "round,event,node\n"
      "1,switch,3\n"
      "1,restart,4\n"
      "2,death,1\n";
  CHECK(wsn::format_events_csv(logs) == expected);
  CHECK(wsn::format_events_csv({}) == "round,event,node\n");
}

TEST_CASE("metrics csv: one row per run with checkpoint variance columns") {
  wsn::RunResult run;
  run.kind = wsn::ProtocolKind::ISKMeans;
  run.seed = 7;
  run.ok = true;
  run.metrics.fnd = 10;
  run.metrics.hnd = 50;
  run.metrics.lnd = 80;
  run.metrics.total_rounds = 100;
  run.metrics.ev_by_round = {{200, 0.01}, {400, 0.0025}};
  std::string expected =
      "protocol,seed,fnd,hnd,lnd,total_rounds,fnd_censored,hnd_censored,lnd_censored,"
      "ev_200,ev_400\n"
      "iskmeans,7,10,50,80,100,0,0,0,0.01,0.0025\n";
  CHECK(wsn::format_metrics_csv({run}, {200, 400}) == expected);

  wsn::RunResult failed;
  failed.kind = wsn::ProtocolKind::Leach;
  failed.seed = 8;
  failed.ok = false;
  CHECK(wsn::format_metrics_csv({run, failed}, {200, 400}) == expected);  // failures skipped
}

TEST_CASE("summary csv: one row per protocol") {
  wsn::ComparisonTable table;
  table.checkpoints = {10};
  wsn::BatchAggregate agg;
  agg.kind = wsn::ProtocolKind::ISKMeans;
  agg.runs = 2;
  agg.fnd_mean = 3.5;
  agg.fnd_std = 0.5;
  agg.hnd_mean = 4.0;
  agg.hnd_std = 0.0;
  agg.lnd_mean = 5.0;
  agg.lnd_std = 1.0;
  agg.ev_mean = {0.25};
  agg.ev_std = {0.125};
  table.aggregates.push_back(agg);
  std::string expected =
      "protocol,runs,fnd_mean,fnd_std,hnd_mean,hnd_std,lnd_mean,lnd_std,"
      "ev_10_mean,ev_10_std\n"
      "iskmeans,2,3.5,0.5,4,0,5,1,0.25,0.125\n";
  CHECK(wsn::format_summary_csv(table) == expected);
}

TEST_CASE("decision graph csv: rho, delta, gamma and the selected flag") {
  wsn::DensityProfile profile;
  profile.rho = {2.0, 1.0};
  profile.delta = {5.0, 3.0};
  profile.gamma = {10.0, 3.0};
  std::string expected =
      "node_id,rho,delta,gamma,selected\n"
      "0,2,5,10,1\n"
      "1,1,3,3,0\n";
  CHECK(wsn::format_decision_graph_csv(profile, {0}) == expected);
}

TEST_CASE("assignment csv: node to cluster label") {
  wsn::ClusterAssignment a;
  a.labels = {0, 1, 0};
  std::string expected =
      "node_id,cluster\n"
      "0,0\n"
      "1,1\n"
      "2,0\n";
  CHECK(wsn::format_assignment_csv(a) == expected);
}

TEST_CASE("generic csv: split and join are inverses on emitted tables") {
  std::string text = "a,b,c\n1,,3\n4,5,6\n";
  auto rows = wsn::parse_csv(text);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1] == std::vector<std::string>{"1", "", "3"});
  CHECK(wsn::format_csv(rows) == text);
  CHECK(wsn::parse_csv("").empty());

  for (const std::string& table :
       {wsn::format_rounds_csv(tiny_logs()), wsn::format_events_csv(tiny_logs())})
    CHECK(wsn::format_csv(wsn::parse_csv(table)) == table);
}

TEST_CASE("protocol names map both ways") {
  CHECK(wsn::protocol_from_name("iskmeans") == wsn::ProtocolKind::ISKMeans);
  CHECK(wsn::protocol_from_name("soft-kmeans") == wsn::ProtocolKind::SoftKMeansVanilla);
  CHECK(wsn::protocol_from_name("hard-kmeans") == wsn::ProtocolKind::HardKMeans);
  CHECK(wsn::protocol_from_name("leach") == wsn::ProtocolKind::Leach);
  CHECK_THROWS_AS(wsn::protocol_from_name("pegasis"), wsn::ConfigError);
  for (auto kind : {wsn::ProtocolKind::ISKMeans, wsn::ProtocolKind::SoftKMeansVanilla,
                    wsn::ProtocolKind::HardKMeans, wsn::ProtocolKind::Leach})
    CHECK(wsn::protocol_from_name(wsn::protocol_name(kind)) == kind);
}

TEST_CASE("text files: write, read back, and fail loudly") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "wsn_io_test";
  fs::create_directories(dir);
  std::string path = (dir / "scratch.csv").string();
  wsn::write_text_file(path, "round,node_id\n1,0\n");
  CHECK(wsn::read_text_file(path) == "round,node_id\n1,0\n");

  std::string missing = (dir / "not_there.csv").string();
  try {
    wsn::read_text_file(missing);
    FAIL("expected IoError");
  } catch (const wsn::IoError& e) {
    CHECK(std::string(e.what()).find("not_there.csv") != std::string::npos);
  }
  fs::remove_all(dir);
}
