#pragma once

// Flat-file plumbing: `key = value` config files, CSV emitters/parsers for
// layouts, round logs, events, metrics, batch summaries, decision graphs and
// cluster assignments. All numbers are written as the shortest decimal that
// parses back to the identical double, so emit -> parse -> emit is
// byte-stable. Emitted fields never contain commas or quotes.

#include <cstdint>
#include <string>
#include <vector>

#include "wsn/clustering.hpp"
#include "wsn/core.hpp"
#include "wsn/density.hpp"
#include "wsn/metrics.hpp"

namespace wsn {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

// Stable lowercase names used in CSV cells.
const char* role_name(Role role);        // member / ch / candidate
const char* event_name(EventType type);  // switch / restart / death

// Inverse of protocol_name; throws ConfigError for an unknown name.
ProtocolKind protocol_from_name(const std::string& name);

// ---- configuration ---------------------------------------------------------
// Flat `key = value` lines, one per field, keys matching the NetworkConfig
// field names; '#' starts a comment. Unknown keys, missing '=', malformed
// values -> ConfigError with the offending line. Parsing starts from default
// values and does not range-check (call config.validate() for that).
// kde_bandwidth accepts the word `auto` (emitted for the rule-of-thumb 0).
NetworkConfig parse_config_text(const std::string& text);
NetworkConfig parse_config_file(const std::string& path);
std::string format_config(const NetworkConfig& config);

// ---- node layouts ----------------------------------------------------------
// Columns: node_id,x_m,y_m. Ids must be exactly 0..n-1 (any order); the
// result is indexed by id. Malformed input -> IoError.
std::vector<Point2D> parse_layout_csv(const std::string& text);
std::string format_layout_csv(const std::vector<Point2D>& positions);

// ---- run artifacts ---------------------------------------------------------
// rounds.csv: round,node_id,residual_j,alive,cluster,role; one row per node
// per round; the cluster cell is empty for dead/unassigned nodes.
std::string format_rounds_csv(const std::vector<RoundLog>& logs);
// Rebuilds the CSV-visible log fields (residuals, aliveness, clusters,
// roles); events and energy accounting are not part of this table.
std::vector<RoundLog> parse_rounds_csv(const std::string& text);

// events.csv: round,event,node.
std::string format_events_csv(const std::vector<RoundLog>& logs);

// metrics.csv: one row per successful run with checkpoint-variance columns.
std::string format_metrics_csv(const std::vector<RunResult>& runs,
                               const std::vector<std::uint32_t>& checkpoints);

// summary.csv: one aggregate row per protocol.
std::string format_summary_csv(const ComparisonTable& table);

// decision_graph.csv: node_id,rho,delta,gamma,selected.
std::string format_decision_graph_csv(const DensityProfile& profile,
                                      const std::vector<NodeId>& selected);

// assignment.csv: node_id,cluster.
std::string format_assignment_csv(const ClusterAssignment& assignment);

// ---- generic csv -----------------------------------------------------------
// Plain comma-split rows (no quoting; our tables never need it). format
// terminates every row with '\n'; parse ignores a trailing newline.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);
std::string format_csv(const std::vector<std::vector<std::string>>& rows);

// ---- files -----------------------------------------------------------------
// Whole-file text IO; failures raise IoError naming the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace wsn
