#pragma once

// Experiment configuration: defaults, a line-oriented config file, and
// command-line flags, with flag > file > preset > default precedence.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ngcl/optimizer.hpp"
#include "ngcl/types.hpp"

namespace ngcl {

enum class DatasetKind { Synth, Idx };

struct DatasetSpec {
    DatasetKind kind = DatasetKind::Synth;
    // synth parameters
    int classes = 10;
    int per_class = 100;
    Index dim = 8;
    Scalar spread = 0.5;
    // idx paths
    std::string images_path;
    std::string labels_path;
    // the spec string as given, e.g. "synth:4,100,2,0.3" or "idx:i,l"
    std::string raw = "synth";
};

/// `synth`, `synth:<classes>[,<per_class>[,<dim>[,<spread>]]]`, or
/// `idx:<images_path>,<labels_path>`.
DatasetSpec parse_dataset_spec(const std::string& text);

struct ExperimentConfig {
    DatasetSpec dataset;
    int classes_per_task = 5;
    std::uint64_t seed = 42;
    OptimizerKind optimizer = OptimizerKind::Sgd;
    Scalar eta = 0.05;
    Scalar damping = 1e-4;
    Scalar epsilon = 0.0;
    int epochs = 50;
    int batch_size = 32;
    Index fisher_max_samples = 1000;
    std::vector<Index> hidden_dims = {16};
    std::string out_dir = "out";
    std::string preset;  // "" or "paper" (eta 0.001, epochs 300)
};

/// Parses command-line style arguments (no program name).  `--config
/// <file>` loads a line-oriented `key = value` file with `#` comments;
/// unknown keys, unparsable values, and out-of-range values raise
/// ConfigError naming the key.  Precedence: flag > config-file line >
/// preset > built-in default.
ExperimentConfig parse_config(const std::vector<std::string>& args);

/// Flattened key-value view of the config, used as the per-record
/// snapshot and for comparison-arm matching.
std::map<std::string, std::string> config_snapshot(const ExperimentConfig& cfg);

/// --help text for the shared experiment flags.
std::string config_help();

}  // namespace ngcl
