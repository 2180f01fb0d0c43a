#pragma once

// Per-task accuracy and wall-clock records, CSV emission, and the
// SGD-vs-NGD comparison summary.

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ngcl/optimizer.hpp"
#include "ngcl/types.hpp"

namespace ngcl {

struct MetricsRecord {
    std::string run_id;
    OptimizerKind optimizer = OptimizerKind::Sgd;
    int task_index = 0;
    std::vector<Scalar> per_task_accuracy;  // a_0 .. a_task_index
    Scalar train_seconds = 0.0;
    Scalar eval_seconds = 0.0;
    std::map<std::string, std::string> config_snapshot;
};

/// Header `run_id,optimizer,task_index,eval_task,accuracy,train_seconds,
/// eval_seconds`, then one row per (record, evaluated task).  Reals are
/// printed with 6 decimal places, lines end in \n, and the bytes depend
/// only on the records.
void emit_csv(std::span<const MetricsRecord> records, std::ostream& out);

struct ComparisonSummary {
    std::vector<Scalar> accuracy_delta;  // NGD - SGD per task, after the final task
    Scalar time_ratio = 1.0;             // total NGD train seconds / total SGD
    Scalar sgd_train_seconds = 0.0;
    Scalar ngd_train_seconds = 0.0;
    Scalar sgd_eval_seconds = 0.0;
    Scalar ngd_eval_seconds = 0.0;
};

/// Compares two arms run over identical task streams.  Throws
/// ComparisonError unless the arms' config snapshots match in everything
/// but the optimizer and their records cover the same tasks.
ComparisonSummary emit_comparison(std::span<const MetricsRecord> records_sgd,
                                  std::span<const MetricsRecord> records_ngd);

struct SeriesPoint {
    Scalar x = 0.0;
    Scalar y = 0.0;
};

/// Plot-ready series: a `# title` comment line, then space-separated
/// `x y` pairs, one per line.
void emit_series(const std::string& title, std::span<const SeriesPoint> points,
                 std::ostream& out);

}  // namespace ngcl
