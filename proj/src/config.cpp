#include "ngcl/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ngcl/errors.hpp"

namespace ngcl {

namespace {

const std::vector<std::string> kKnownKeys = {
    "dataset",   "classes-per-task",   "seed",        "optimizer",
    "eta",       "damping",            "epsilon",     "epochs",
    "batch-size", "fisher-max-samples", "hidden-dims", "out-dir",
    "preset"};

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& expected) {
    throw ConfigError("config: key '" + key + "': expected " + expected +
                      ", got '" + value + "'");
}

long long parse_integer(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(value, &used);
        if (used != value.size()) bad_value(key, value, "an integer");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        bad_value(key, value, "an integer");
    }
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(value, &used);
        if (used != value.size() || value.find('-') != std::string::npos) {
            bad_value(key, value, "a nonnegative integer");
        }
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        bad_value(key, value, "a nonnegative integer");
    }
}

Scalar parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const Scalar v = std::stod(value, &used);
        if (used != value.size()) bad_value(key, value, "a real number");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        bad_value(key, value, "a real number");
    }
}

std::vector<Index> parse_dims(const std::string& key, const std::string& value) {
    if (value == "none") return {};
    std::vector<Index> dims;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        dims.push_back(static_cast<Index>(parse_integer(key, item)));
    }
    if (dims.empty()) bad_value(key, value, "a comma list of widths or 'none'");
    return dims;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Line-oriented `key = value` file; `#` starts a comment.
std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("config: cannot open file " + path);
    }
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config: malformed line '" + line +
                              "' in " + path + " (expected key = value)");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) ==
            kKnownKeys.end()) {
            throw ConfigError("config: unknown key '" + key + "' in " + path);
        }
        entries.emplace_back(key, value);
    }
    return entries;
}

void apply_entry(ExperimentConfig& cfg, const std::string& key,
                 const std::string& value) {
    if (key == "dataset") {
        cfg.dataset = parse_dataset_spec(value);
    } else if (key == "classes-per-task") {
        cfg.classes_per_task = static_cast<int>(parse_integer(key, value));
    } else if (key == "seed") {
        cfg.seed = parse_unsigned(key, value);
    } else if (key == "optimizer") {
        cfg.optimizer = optimizer_kind_from_string(value);
    } else if (key == "eta") {
        cfg.eta = parse_real(key, value);
    } else if (key == "damping") {
        cfg.damping = parse_real(key, value);
    } else if (key == "epsilon") {
        cfg.epsilon = parse_real(key, value);
    } else if (key == "epochs") {
        cfg.epochs = static_cast<int>(parse_integer(key, value));
    } else if (key == "batch-size") {
        cfg.batch_size = static_cast<int>(parse_integer(key, value));
    } else if (key == "fisher-max-samples") {
        cfg.fisher_max_samples = static_cast<Index>(parse_integer(key, value));
    } else if (key == "hidden-dims") {
        cfg.hidden_dims = parse_dims(key, value);
    } else if (key == "out-dir") {
        cfg.out_dir = value;
    } else if (key == "preset") {
        cfg.preset = value;  // applied separately, kept for the snapshot
    } else {
        throw ConfigError("config: unknown key '" + key + "'");
    }
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.classes_per_task < 1) {
        throw ConfigError("config: key 'classes-per-task' out of range: must be >= 1");
    }
    if (!(cfg.eta > 0.0)) {
        throw ConfigError("config: key 'eta' out of range: must be > 0");
    }
    if (!(cfg.damping >= 0.0)) {
        throw ConfigError("config: key 'damping' out of range: must be >= 0");
    }
    if (!(cfg.epsilon >= 0.0)) {
        throw ConfigError("config: key 'epsilon' out of range: must be >= 0");
    }
    if (cfg.epochs < 1) {
        throw ConfigError("config: key 'epochs' out of range: must be >= 1");
    }
    if (cfg.batch_size < 1) {
        throw ConfigError("config: key 'batch-size' out of range: must be >= 1");
    }
    if (cfg.fisher_max_samples < 1) {
        throw ConfigError(
            "config: key 'fisher-max-samples' out of range: must be >= 1");
    }
    for (Index h : cfg.hidden_dims) {
        if (h < 1) {
            throw ConfigError("config: key 'hidden-dims' out of range: widths must be >= 1");
        }
    }
}

struct FlagSet {
    std::unique_ptr<CLI::App> app;
    // Heap-held so the option callbacks stay valid when FlagSet moves.
    std::shared_ptr<std::map<std::string, std::string>> values =
        std::make_shared<std::map<std::string, std::string>>();
    std::shared_ptr<std::string> config_path = std::make_shared<std::string>();
};

FlagSet build_app() {
    FlagSet flags;
    flags.app = std::make_unique<CLI::App>("continual-learning benchmark runner");
    flags.app->get_formatter()->column_width(28);
    auto add = [&flags](const std::string& key, const std::string& help) {
        auto slot = flags.values;
        flags.app
            ->add_option_function<std::string>(
                "--" + key, [slot, key](const std::string& v) { (*slot)[key] = v; },
                help)
            ->type_name("VALUE");
    };
    add("dataset", "synth[:<classes>[,<per_class>[,<dim>[,<spread>]]]] or "
                   "idx:<images>,<labels> (default synth)");
    add("classes-per-task", "classes introduced per task (default 5)");
    add("seed", "seed for dataset, class order, and weight init (default 42)");
    add("optimizer", "sgd or ngd (default sgd)");
    add("eta", "learning rate (default 0.05)");
    add("damping", "added to Fisher entries before inversion (default 1e-4)");
    add("epsilon", "regularization strength (default 0)");
    add("epochs", "epochs per task (default 50)");
    add("batch-size", "examples per step (default 32)");
    add("fisher-max-samples", "sample cap for Fisher estimation (default 1000)");
    add("hidden-dims", "comma list of hidden widths, or 'none' (default 16)");
    add("out-dir", "directory for CSV and series files (default out)");
    add("preset", "named bundle: 'paper' sets eta 0.001, epochs 300");
    flags.app->add_option("--config", *flags.config_path,
                          "line-oriented key = value file");
    return flags;
}

}  // namespace

DatasetSpec parse_dataset_spec(const std::string& text) {
    DatasetSpec spec;
    spec.raw = text;
    const auto colon = text.find(':');
    const std::string scheme = text.substr(0, colon);
    const std::string rest =
        colon == std::string::npos ? "" : text.substr(colon + 1);

    if (scheme == "synth") {
        spec.kind = DatasetKind::Synth;
        if (!rest.empty()) {
            std::vector<std::string> parts;
            std::stringstream ss(rest);
            std::string item;
            while (std::getline(ss, item, ',')) parts.push_back(item);
            if (parts.empty() || parts.size() > 4) {
                bad_value("dataset", text,
                          "synth:<classes>[,<per_class>[,<dim>[,<spread>]]]");
            }
            spec.classes = static_cast<int>(parse_integer("dataset", parts[0]));
            if (parts.size() > 1) {
                spec.per_class = static_cast<int>(parse_integer("dataset", parts[1]));
            }
            if (parts.size() > 2) {
                spec.dim = static_cast<Index>(parse_integer("dataset", parts[2]));
            }
            if (parts.size() > 3) {
                spec.spread = parse_real("dataset", parts[3]);
            }
        }
        if (spec.classes < 1 || spec.per_class < 1 || spec.dim < 1 ||
            !(spec.spread > 0.0)) {
            bad_value("dataset", text, "positive synth parameters");
        }
    } else if (scheme == "idx") {
        spec.kind = DatasetKind::Idx;
        const auto comma = rest.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 == rest.size()) {
            bad_value("dataset", text, "idx:<images_path>,<labels_path>");
        }
        spec.images_path = rest.substr(0, comma);
        spec.labels_path = rest.substr(comma + 1);
    } else {
        bad_value("dataset", text, "scheme 'synth' or 'idx'");
    }
    return spec;
}

ExperimentConfig parse_config(const std::vector<std::string>& args) {
    FlagSet flags = build_app();
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        flags.app->parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw;  // the CLI front end prints help
    } catch (const CLI::ParseError& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    std::vector<std::pair<std::string, std::string>> file_entries;
    if (!flags.config_path->empty()) {
        file_entries = read_config_file(*flags.config_path);
    }

    // Precedence: flag > config-file line > preset > built-in default.
    ExperimentConfig cfg;
    std::string preset;
    for (const auto& [key, value] : file_entries) {
        if (key == "preset") preset = value;
    }
    if (auto it = flags.values->find("preset"); it != flags.values->end()) {
        preset = it->second;
    }
    if (preset == "paper") {
        cfg.eta = 0.001;
        cfg.epochs = 300;
        cfg.preset = preset;
    } else if (!preset.empty()) {
        throw ConfigError("config: key 'preset': unknown preset '" + preset + "'");
    }
    for (const auto& [key, value] : file_entries) {
        if (key != "preset") apply_entry(cfg, key, value);
    }
    for (const auto& [key, value] : *flags.values) {
        if (key != "preset") apply_entry(cfg, key, value);
    }
    validate(cfg);
    return cfg;
}

std::map<std::string, std::string> config_snapshot(const ExperimentConfig& cfg) {
    auto real = [](Scalar v) {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.17g", v);
        return std::string(buffer);
    };
    std::string dims;
    for (std::size_t i = 0; i < cfg.hidden_dims.size(); ++i) {
        if (i) dims += ',';
        dims += std::to_string(cfg.hidden_dims[i]);
    }
    if (dims.empty()) dims = "none";

    return {
        {"dataset", cfg.dataset.raw},
        {"classes-per-task", std::to_string(cfg.classes_per_task)},
        {"seed", std::to_string(cfg.seed)},
        {"optimizer", to_string(cfg.optimizer)},
        {"eta", real(cfg.eta)},
        {"damping", real(cfg.damping)},
        {"epsilon", real(cfg.epsilon)},
        {"epochs", std::to_string(cfg.epochs)},
        {"batch-size", std::to_string(cfg.batch_size)},
        {"fisher-max-samples", std::to_string(cfg.fisher_max_samples)},
        {"hidden-dims", dims},
        {"out-dir", cfg.out_dir},
        {"preset", cfg.preset},
    };
}

std::string config_help() {
    return build_app().app->help();
}

}  // namespace ngcl
