#pragma once

// Entry points behind the CLI subcommands, callable in-process.

#include <ostream>

#include "ngcl/config.hpp"

namespace ngcl {

/// Builds the dataset and stream, runs the configured arm, writes
/// <out-dir>/<run_id>.csv plus accuracy/time series files, and prints the
/// per-task accuracy table.  Returns a process exit status.
int run_experiment(const ExperimentConfig& cfg, std::ostream& out);

/// Runs both arms (SGD then NGD) on the same stream, writes each arm's
/// artifacts plus a delta series, and prints accuracy deltas and the
/// train-time ratio.
int run_compare(const ExperimentConfig& cfg, std::ostream& out);

/// Prints the class partition the seed produces, without training.
int run_inspect_stream(const ExperimentConfig& cfg, std::ostream& out);

}  // namespace ngcl
