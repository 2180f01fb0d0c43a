#include "ngcl/metrics.hpp"

#include <cstdio>

#include "ngcl/errors.hpp"

namespace ngcl {

namespace {

std::string fixed6(Scalar v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", v);
    return buffer;
}

std::map<std::string, std::string> snapshot_without_optimizer(
    const MetricsRecord& record) {
    auto snapshot = record.config_snapshot;
    snapshot.erase("optimizer");
    return snapshot;
}

}  // namespace

void emit_csv(std::span<const MetricsRecord> records, std::ostream& out) {
    out << "run_id,optimizer,task_index,eval_task,accuracy,train_seconds,"
           "eval_seconds\n";
    for (const MetricsRecord& record : records) {
        for (std::size_t j = 0; j < record.per_task_accuracy.size(); ++j) {
            out << record.run_id << ',' << to_string(record.optimizer) << ','
                << record.task_index << ',' << j << ','
                << fixed6(record.per_task_accuracy[j]) << ','
                << fixed6(record.train_seconds) << ','
                << fixed6(record.eval_seconds) << '\n';
        }
    }
    if (!out) {
        throw IoError("emit_csv: sink write failure");
    }
}

ComparisonSummary emit_comparison(std::span<const MetricsRecord> records_sgd,
                                  std::span<const MetricsRecord> records_ngd) {
    if (records_sgd.empty() || records_ngd.empty()) {
        throw ComparisonError("emit_comparison: an arm has no records");
    }
    if (records_sgd.size() != records_ngd.size()) {
        throw ComparisonError("emit_comparison: arms cover different task counts");
    }
    for (std::size_t i = 0; i < records_sgd.size(); ++i) {
        const MetricsRecord& a = records_sgd[i];
        const MetricsRecord& b = records_ngd[i];
        if (a.task_index != b.task_index ||
            a.per_task_accuracy.size() != b.per_task_accuracy.size()) {
            throw ComparisonError("emit_comparison: arms cover different tasks");
        }
        if (snapshot_without_optimizer(a) != snapshot_without_optimizer(b)) {
            throw ComparisonError(
                "emit_comparison: arm configs differ beyond the optimizer");
        }
    }

    ComparisonSummary summary;
    const auto& final_sgd = records_sgd.back().per_task_accuracy;
    const auto& final_ngd = records_ngd.back().per_task_accuracy;
    summary.accuracy_delta.reserve(final_sgd.size());
    for (std::size_t i = 0; i < final_sgd.size(); ++i) {
        summary.accuracy_delta.push_back(final_ngd[i] - final_sgd[i]);
    }
    for (const MetricsRecord& r : records_sgd) {
        summary.sgd_train_seconds += r.train_seconds;
        summary.sgd_eval_seconds += r.eval_seconds;
    }
    for (const MetricsRecord& r : records_ngd) {
        summary.ngd_train_seconds += r.train_seconds;
        summary.ngd_eval_seconds += r.eval_seconds;
    }
    summary.time_ratio = summary.ngd_train_seconds / summary.sgd_train_seconds;
    return summary;
}

void emit_series(const std::string& title, std::span<const SeriesPoint> points,
                 std::ostream& out) {
    out << "# " << title << '\n';
    for (const SeriesPoint& p : points) {
        out << fixed6(p.x) << ' ' << fixed6(p.y) << '\n';
    }
    if (!out) {
        throw IoError("emit_series: sink write failure");
    }
}

}  // namespace ngcl
