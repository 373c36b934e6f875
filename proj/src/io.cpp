#include "wsn/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "wsn/errors.hpp"

namespace wsn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool try_parse_double(std::string_view text, double& out) {
  auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

bool try_parse_u64(std::string_view text, std::uint64_t& out) {
  auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) parts.push_back(s.substr(start, i - start));
  }
  return parts;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void config_fail(std::size_t line_no, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line_no) + ": " + what);
}

void apply_config_key(NetworkConfig& cfg, std::string_view key, std::string_view value,
                      std::size_t line_no) {
  auto number = [&](double& field) {
    if (!try_parse_double(value, field))
      config_fail(line_no, "expected a number, got '" + std::string(value) + "'");
  };
  auto count = [&](std::size_t& field) {
    std::uint64_t v = 0;
    if (!try_parse_u64(value, v))
      config_fail(line_no, "expected a non-negative integer, got '" + std::string(value) + "'");
    field = static_cast<std::size_t>(v);
  };
  auto flag = [&](bool& field) {
    if (value == "true" || value == "1") field = true;
    else if (value == "false" || value == "0") field = false;
    else config_fail(line_no, "expected true/false, got '" + std::string(value) + "'");
  };

  if (key == "area_width") number(cfg.area_width);
  else if (key == "area_height") number(cfg.area_height);
  else if (key == "bs_position") {
    auto parts = split_ws(value);
    if (parts.size() != 2 || !try_parse_double(parts[0], cfg.bs_position.x) ||
        !try_parse_double(parts[1], cfg.bs_position.y))
      config_fail(line_no, "bs_position needs two numbers, e.g. '50 150'");
  } else if (key == "n_nodes") count(cfg.n_nodes);
  else if (key == "initial_energy") number(cfg.initial_energy);
  else if (key == "packet_bits") number(cfg.packet_bits);
  else if (key == "control_bits") number(cfg.control_bits);
  else if (key == "e_elec") number(cfg.e_elec);
  else if (key == "eps_fs") number(cfg.eps_fs);
  else if (key == "eps_mp") number(cfg.eps_mp);
  else if (key == "e_da") number(cfg.e_da);
  else if (key == "aggregation_ratio_c") number(cfg.aggregation_ratio_c);
  else if (key == "beta") number(cfg.beta);
  else if (key == "density_mode") {
    if (value == "kde") cfg.density_mode = DensityMode::Kde;
    else if (value == "cutoff") cfg.density_mode = DensityMode::Cutoff;
    else config_fail(line_no, "density_mode must be kde or cutoff");
  } else if (key == "dc_neighbor_fraction") number(cfg.dc_neighbor_fraction);
  else if (key == "kde_bandwidth") {
    if (value == "auto") cfg.kde_bandwidth = 0.0;
    else number(cfg.kde_bandwidth);
  } else if (key == "forced_k") count(cfg.forced_k);
  else if (key == "reassign_threshold") number(cfg.reassign_threshold);
  else if (key == "ch_constant") count(cfg.ch_constant);
  else if (key == "switch_threshold") number(cfg.switch_threshold);
  else if (key == "convergence_eps") number(cfg.convergence_eps);
  else if (key == "r_max") count(cfg.r_max);
  else if (key == "max_comm_range") number(cfg.max_comm_range);
  else if (key == "lone_ch_transmits") flag(cfg.lone_ch_transmits);
  else if (key == "ch_counts_self") flag(cfg.ch_counts_self);
  else if (key == "death_fraction_for_lnd") number(cfg.death_fraction_for_lnd);
  else if (key == "max_rounds") count(cfg.max_rounds);
  else if (key == "rng_seed") {
    if (!try_parse_u64(value, cfg.rng_seed))
      config_fail(line_no, "expected a non-negative integer, got '" + std::string(value) + "'");
  } else if (key == "checkpoints") {
    auto parts = split_ws(value);
    if (parts.empty()) config_fail(line_no, "checkpoints needs at least one round number");
    cfg.checkpoints.clear();
    for (auto part : parts) {
      std::uint64_t cp = 0;
      if (!try_parse_u64(part, cp))
        config_fail(line_no, "bad checkpoint '" + std::string(part) + "'");
      cfg.checkpoints.push_back(static_cast<std::size_t>(cp));
    }
  } else {
    config_fail(line_no, "unknown key '" + std::string(key) + "'");
  }
}

[[noreturn]] void csv_fail(const char* table, std::size_t line_no, const std::string& what) {
  throw IoError(std::string(table) + " line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

const char* role_name(Role role) {
  switch (role) {
    case Role::Member: return "member";
    case Role::ClusterHead: return "ch";
    case Role::CandidateCH: return "candidate";
  }
  return "member";
}

const char* event_name(EventType type) {
  switch (type) {
    case EventType::Switch: return "switch";
    case EventType::Restart: return "restart";
    case EventType::Death: return "death";
  }
  return "death";
}

ProtocolKind protocol_from_name(const std::string& name) {
  for (auto kind : {ProtocolKind::ISKMeans, ProtocolKind::SoftKMeansVanilla,
                    ProtocolKind::HardKMeans, ProtocolKind::Leach})
    if (name == protocol_name(kind)) return kind;
  throw ConfigError("unknown protocol '" + name +
                    "' (expected iskmeans, soft-kmeans, hard-kmeans, or leach)");
}

NetworkConfig parse_config_text(const std::string& text) {
  NetworkConfig cfg;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) config_fail(i + 1, "expected 'key = value'");
    apply_config_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), i + 1);
  }
  return cfg;
}

NetworkConfig parse_config_file(const std::string& path) {
  return parse_config_text(read_text_file(path));
}

std::string format_config(const NetworkConfig& c) {
  std::string out;
  auto emit = [&](const char* key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  emit("area_width", format_double(c.area_width));
  emit("area_height", format_double(c.area_height));
  emit("bs_position", format_double(c.bs_position.x) + " " + format_double(c.bs_position.y));
  emit("n_nodes", std::to_string(c.n_nodes));
  emit("initial_energy", format_double(c.initial_energy));
  emit("packet_bits", format_double(c.packet_bits));
  emit("control_bits", format_double(c.control_bits));
  emit("e_elec", format_double(c.e_elec));
  emit("eps_fs", format_double(c.eps_fs));
  emit("eps_mp", format_double(c.eps_mp));
  emit("e_da", format_double(c.e_da));
  emit("aggregation_ratio_c", format_double(c.aggregation_ratio_c));
  emit("beta", format_double(c.beta));
  emit("density_mode", c.density_mode == DensityMode::Kde ? "kde" : "cutoff");
  emit("dc_neighbor_fraction", format_double(c.dc_neighbor_fraction));
  emit("kde_bandwidth", c.kde_bandwidth <= 0.0 ? "auto" : format_double(c.kde_bandwidth));
  emit("forced_k", std::to_string(c.forced_k));
  emit("reassign_threshold", format_double(c.reassign_threshold));
  emit("ch_constant", std::to_string(c.ch_constant));
  emit("switch_threshold", format_double(c.switch_threshold));
  emit("convergence_eps", format_double(c.convergence_eps));
  emit("r_max", std::to_string(c.r_max));
  emit("max_comm_range", format_double(c.max_comm_range));
  emit("lone_ch_transmits", c.lone_ch_transmits ? "true" : "false");
  emit("ch_counts_self", c.ch_counts_self ? "true" : "false");
  emit("death_fraction_for_lnd", format_double(c.death_fraction_for_lnd));
  emit("max_rounds", std::to_string(c.max_rounds));
  emit("rng_seed", std::to_string(c.rng_seed));
  std::string cps;
  for (std::size_t cp : c.checkpoints) {
    if (!cps.empty()) cps += ' ';
    cps += std::to_string(cp);
  }
  emit("checkpoints", cps);
  return out;
}

std::vector<Point2D> parse_layout_csv(const std::string& text) {
  auto rows = parse_csv(text);
  if (rows.empty()) csv_fail("layout", 1, "missing header");
  if (rows[0] != std::vector<std::string>{"node_id", "x_m", "y_m"})
    csv_fail("layout", 1, "header must be node_id,x_m,y_m");
  const std::size_t n = rows.size() - 1;
  std::vector<Point2D> positions(n);
  std::vector<std::uint8_t> seen(n, 0);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 3) csv_fail("layout", r + 1, "expected 3 fields");
    std::uint64_t id = 0;
    if (!try_parse_u64(row[0], id)) csv_fail("layout", r + 1, "bad node_id '" + row[0] + "'");
    if (id >= n) csv_fail("layout", r + 1, "node_id " + row[0] + " out of range for " +
                                               std::to_string(n) + " rows");
    if (seen[id]) csv_fail("layout", r + 1, "duplicate node_id " + row[0]);
    seen[id] = 1;
    if (!try_parse_double(row[1], positions[id].x) || !try_parse_double(row[2], positions[id].y))
      csv_fail("layout", r + 1, "bad coordinates");
  }
  return positions;
}

std::string format_layout_csv(const std::vector<Point2D>& positions) {
  std::string out = "node_id,x_m,y_m\n";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(positions[i].x);
    out += ',';
    out += format_double(positions[i].y);
    out += '\n';
  }
  return out;
}

std::string format_rounds_csv(const std::vector<RoundLog>& logs) {
  std::string out = "round,node_id,residual_j,alive,cluster,role\n";
  for (const auto& log : logs) {
    for (std::size_t i = 0; i < log.residual.size(); ++i) {
      out += std::to_string(log.round);
      out += ',';
      out += std::to_string(i);
      out += ',';
      out += format_double(log.residual[i]);
      out += log.residual[i] > 0.0 ? ",1," : ",0,";
      std::uint32_t cluster = i < log.cluster_of.size() ? log.cluster_of[i] : kNoCluster;
      if (cluster != kNoCluster) out += std::to_string(cluster);
      out += ',';
      out += role_name(i < log.role_of.size() ? log.role_of[i] : Role::Member);
      out += '\n';
    }
  }
  return out;
}

std::vector<RoundLog> parse_rounds_csv(const std::string& text) {
  auto rows = parse_csv(text);
  if (rows.empty() ||
      rows[0] != std::vector<std::string>{"round", "node_id", "residual_j",
                                          "alive", "cluster", "role"})
    csv_fail("rounds", 1, "header must be round,node_id,residual_j,alive,cluster,role");

  std::vector<RoundLog> logs;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 6) csv_fail("rounds", r + 1, "expected 6 fields");
    std::uint64_t round = 0, node = 0;
    double residual = 0.0;
    if (!try_parse_u64(row[0], round) || !try_parse_u64(row[1], node) ||
        !try_parse_double(row[2], residual))
      csv_fail("rounds", r + 1, "bad round/node/residual");

    if (logs.empty() || logs.back().round != round) {
      if (!logs.empty() && round <= logs.back().round)
        csv_fail("rounds", r + 1, "rounds must be strictly increasing");
      logs.emplace_back();
      logs.back().round = static_cast<std::uint32_t>(round);
    }
    RoundLog& log = logs.back();
    if (node != log.residual.size())
      csv_fail("rounds", r + 1, "node ids must be contiguous from 0 within a round");

    bool alive = false;
    if (row[3] == "1") alive = true;
    else if (row[3] != "0") csv_fail("rounds", r + 1, "alive must be 0 or 1");
    if (alive != (residual > 0.0))
      csv_fail("rounds", r + 1, "alive flag contradicts the residual energy");

    std::uint32_t cluster = kNoCluster;
    if (!row[4].empty()) {
      std::uint64_t c = 0;
      if (!try_parse_u64(row[4], c)) csv_fail("rounds", r + 1, "bad cluster '" + row[4] + "'");
      cluster = static_cast<std::uint32_t>(c);
    }
    Role role = Role::Member;
    if (row[5] == "ch") role = Role::ClusterHead;
    else if (row[5] == "candidate") role = Role::CandidateCH;
    else if (row[5] != "member") csv_fail("rounds", r + 1, "bad role '" + row[5] + "'");

    log.residual.push_back(residual);
    log.cluster_of.push_back(cluster);
    log.role_of.push_back(role);
    if (alive) log.alive_count += 1;
  }
  for (const auto& log : logs)
    if (log.residual.size() != logs.front().residual.size())
      throw IoError("rounds: round " + std::to_string(log.round) +
                    " has a different node count than the first round");
  return logs;
}

std::string format_events_csv(const std::vector<RoundLog>& logs) {
  std::string out = "round,event,node\n";
  for (const auto& log : logs) {
    for (const auto& event : log.events) {
      out += std::to_string(log.round);
      out += ',';
      out += event_name(event.type);
      out += ',';
      out += std::to_string(event.node);
      out += '\n';
    }
  }
  return out;
}

std::string format_metrics_csv(const std::vector<RunResult>& runs,
                               const std::vector<std::uint32_t>& checkpoints) {
  std::string out =
      "protocol,seed,fnd,hnd,lnd,total_rounds,fnd_censored,hnd_censored,lnd_censored";
  for (auto cp : checkpoints) out += ",ev_" + std::to_string(cp);
  out += '\n';
  for (const auto& run : runs) {
    if (!run.ok) continue;
    const auto& m = run.metrics;
    out += protocol_name(run.kind);
    out += ',' + std::to_string(run.seed);
    out += ',' + std::to_string(m.fnd);
    out += ',' + std::to_string(m.hnd);
    out += ',' + std::to_string(m.lnd);
    out += ',' + std::to_string(m.total_rounds);
    out += m.fnd_censored ? ",1" : ",0";
    out += m.hnd_censored ? ",1" : ",0";
    out += m.lnd_censored ? ",1" : ",0";
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
      out += ',';
      if (c < m.ev_by_round.size()) out += format_double(m.ev_by_round[c].second);
    }
    out += '\n';
  }
  return out;
}

std::string format_summary_csv(const ComparisonTable& table) {
  std::string out = "protocol,runs,fnd_mean,fnd_std,hnd_mean,hnd_std,lnd_mean,lnd_std";
  for (auto cp : table.checkpoints) {
    out += ",ev_" + std::to_string(cp) + "_mean";
    out += ",ev_" + std::to_string(cp) + "_std";
  }
  out += '\n';
  for (const auto& agg : table.aggregates) {
    out += protocol_name(agg.kind);
    out += ',' + std::to_string(agg.runs);
    out += ',' + format_double(agg.fnd_mean);
    out += ',' + format_double(agg.fnd_std);
    out += ',' + format_double(agg.hnd_mean);
    out += ',' + format_double(agg.hnd_std);
    out += ',' + format_double(agg.lnd_mean);
    out += ',' + format_double(agg.lnd_std);
    for (std::size_t c = 0; c < table.checkpoints.size(); ++c) {
      out += ',';
      if (c < agg.ev_mean.size()) out += format_double(agg.ev_mean[c]);
      out += ',';
      if (c < agg.ev_std.size()) out += format_double(agg.ev_std[c]);
    }
    out += '\n';
  }
  return out;
}

std::string format_decision_graph_csv(const DensityProfile& profile,
                                      const std::vector<NodeId>& selected) {
  std::vector<std::uint8_t> chosen(profile.rho.size(), 0);
  for (auto id : selected)
    if (id < chosen.size()) chosen[id] = 1;
  std::string out = "node_id,rho,delta,gamma,selected\n";
  for (std::size_t i = 0; i < profile.rho.size(); ++i) {
    out += std::to_string(i);
    out += ',' + format_double(profile.rho[i]);
    out += ',' + format_double(profile.delta[i]);
    out += ',' + format_double(profile.gamma[i]);
    out += chosen[i] ? ",1\n" : ",0\n";
  }
  return out;
}

std::string format_assignment_csv(const ClusterAssignment& assignment) {
  std::string out = "node_id,cluster\n";
  for (std::size_t i = 0; i < assignment.labels.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    if (assignment.labels[i] != kNoCluster) out += std::to_string(assignment.labels[i]);
    out += '\n';
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  for (auto line : split_lines(text)) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string_view::npos) {
        fields.emplace_back(line.substr(pos));
        break;
      }
      fields.emplace_back(line.substr(pos, comma - pos));
      pos = comma + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::string format_csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open for reading");
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError(path + ": read failed");
  return content;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path + ": cannot open for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError(path + ": write failed");
}

}  // namespace wsn
