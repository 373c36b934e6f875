#pragma once

// Command-line front end. Subcommands:
//   simulate         one run; writes rounds.csv, events.csv, metrics.csv and
//                    decision_graph.csv into --out-dir
//   batch            a (protocols x seeds) grid; writes summary.csv and
//                    per-run metrics.csv
//   cluster          clustering only, on a node_id,x_m,y_m layout file;
//                    writes assignment.csv and decision_graph.csv
//   validate-config  parse and range-check a config file
// Defaults (no --config) reproduce the 100-node 100x100 m benchmark field.
// Returns 0 on success, nonzero with a diagnostic on stderr otherwise.

namespace wsn {

int cli_main(int argc, char** argv);

}  // namespace wsn
