#include "ngcl/run.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>

#include "ngcl/dataset.hpp"
#include "ngcl/errors.hpp"
#include "ngcl/harness.hpp"
#include "ngcl/metrics.hpp"
#include "ngcl/stream.hpp"

namespace ngcl {

namespace {

Dataset build_dataset(const ExperimentConfig& cfg) {
    if (cfg.dataset.kind == DatasetKind::Synth) {
        return synth_blobs(cfg.dataset.classes, cfg.dataset.per_class,
                           cfg.dataset.dim, cfg.dataset.spread, cfg.seed);
    }
    return load_idx(cfg.dataset.images_path, cfg.dataset.labels_path);
}

std::string run_id_for(const ExperimentConfig& cfg, OptimizerKind kind) {
    return to_string(kind) + "-seed" + std::to_string(cfg.seed);
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file " + path.string());
    }
    return out;
}

/// Trains one arm over the stream and writes its CSV and series files.
std::vector<MetricsRecord> run_arm(const ExperimentConfig& cfg,
                                   OptimizerKind kind, Index input_dim,
                                   const TaskStream& stream) {
    ExperimentConfig arm_cfg = cfg;
    arm_cfg.optimizer = kind;

    RunState state =
        make_run_state(input_dim, arm_cfg.hidden_dims, arm_cfg.seed);

    RunPlan plan;
    plan.opt = OptimizerConfig{kind, arm_cfg.eta, arm_cfg.damping};
    plan.eps = RegStrength{arm_cfg.epsilon};
    plan.epochs = arm_cfg.epochs;
    plan.batch_size = arm_cfg.batch_size;
    plan.fisher_max_samples = arm_cfg.fisher_max_samples;
    plan.run_id = run_id_for(arm_cfg, kind);
    plan.config_snapshot = config_snapshot(arm_cfg);
    run_stream(state, stream, plan);

    const std::filesystem::path out_dir(arm_cfg.out_dir);
    std::filesystem::create_directories(out_dir);
    {
        auto csv = open_output(out_dir / (plan.run_id + ".csv"));
        emit_csv(state.metrics, csv);
    }
    std::vector<SeriesPoint> accuracy, train_time;
    for (const MetricsRecord& r : state.metrics) {
        Scalar mean = 0.0;
        for (Scalar a : r.per_task_accuracy) mean += a;
        mean /= static_cast<Scalar>(r.per_task_accuracy.size());
        accuracy.push_back({static_cast<Scalar>(r.task_index), mean});
        train_time.push_back({static_cast<Scalar>(r.task_index), r.train_seconds});
    }
    {
        auto f = open_output(out_dir / (plan.run_id + "_accuracy.dat"));
        emit_series(plan.run_id + " mean accuracy over seen tasks", accuracy, f);
    }
    {
        auto f = open_output(out_dir / (plan.run_id + "_train_seconds.dat"));
        emit_series(plan.run_id + " train seconds per task", train_time, f);
    }
    return std::move(state.metrics);
}

void print_accuracy_table(const std::vector<MetricsRecord>& records,
                          std::ostream& out) {
    const MetricsRecord& final = records.back();
    out << "run " << final.run_id << ": per-task accuracy after task "
        << final.task_index << "\n";
    out << std::fixed << std::setprecision(6);
    for (std::size_t j = 0; j < final.per_task_accuracy.size(); ++j) {
        out << "  task " << j << ": " << final.per_task_accuracy[j] << "\n";
    }
    Scalar train_total = 0.0;
    for (const MetricsRecord& r : records) train_total += r.train_seconds;
    out << "  total train seconds: " << train_total << "\n";
    out.unsetf(std::ios::floatfield);
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg, std::ostream& out) {
    const Dataset dataset = build_dataset(cfg);
    const TaskStream stream =
        build_task_stream(dataset, cfg.classes_per_task, cfg.seed);
    const auto records = run_arm(cfg, cfg.optimizer, dataset.feature_dim, stream);
    print_accuracy_table(records, out);
    out << "wrote " << cfg.out_dir << "/" << records.back().run_id << ".csv\n";
    return 0;
}

int run_compare(const ExperimentConfig& cfg, std::ostream& out) {
    const Dataset dataset = build_dataset(cfg);
    const TaskStream stream =
        build_task_stream(dataset, cfg.classes_per_task, cfg.seed);

    // Arms run sequentially so their wall clocks do not contend.
    const auto sgd = run_arm(cfg, OptimizerKind::Sgd, dataset.feature_dim, stream);
    const auto ngd = run_arm(cfg, OptimizerKind::Ngd, dataset.feature_dim, stream);
    const ComparisonSummary summary = emit_comparison(sgd, ngd);

    print_accuracy_table(sgd, out);
    print_accuracy_table(ngd, out);

    out << std::fixed << std::setprecision(6);
    out << "accuracy delta (ngd - sgd) per task:\n";
    std::vector<SeriesPoint> delta;
    for (std::size_t j = 0; j < summary.accuracy_delta.size(); ++j) {
        out << "  task " << j << ": " << std::showpos
            << summary.accuracy_delta[j] << std::noshowpos << "\n";
        delta.push_back(
            {static_cast<Scalar>(j), summary.accuracy_delta[j]});
    }
    out << "train time ratio (ngd/sgd): " << std::setprecision(4)
        << summary.time_ratio << "\n";
    out.unsetf(std::ios::floatfield);

    const std::filesystem::path out_dir(cfg.out_dir);
    std::filesystem::create_directories(out_dir);
    auto f = open_output(out_dir / "compare_delta_accuracy.dat");
    emit_series("accuracy delta (ngd - sgd) per task", delta, f);
    return 0;
}

int run_inspect_stream(const ExperimentConfig& cfg, std::ostream& out) {
    const Dataset dataset = build_dataset(cfg);
    const TaskStream stream =
        build_task_stream(dataset, cfg.classes_per_task, cfg.seed);
    out << "dataset " << dataset.name << ": " << dataset.num_classes
        << " classes, " << dataset.examples.size() << " examples, seed "
        << cfg.seed << "\n";
    for (const Task& task : stream.tasks) {
        out << "task " << task.task_index << ": global classes ["
            << task.class_ids.front() << ".." << task.class_ids.back()
            << "] <- source classes [";
        for (std::size_t i = 0; i < task.source_class_ids.size(); ++i) {
            if (i) out << ",";
            out << task.source_class_ids[i];
        }
        out << "], train " << task.train_set.size() << ", test "
            << task.test_set.size() << "\n";
    }
    return 0;
}

}  // namespace ngcl
