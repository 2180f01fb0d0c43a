#pragma once

// The class-incremental protocol: train task by task, expand the head as
// classes arrive, anchor parameters and Fisher at each boundary, and
// evaluate with argmax over every class seen so far (no task id).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ngcl/metrics.hpp"
#include "ngcl/network.hpp"
#include "ngcl/optimizer.hpp"
#include "ngcl/regularizer.hpp"
#include "ngcl/stream.hpp"

namespace ngcl {

struct RunState {
    Index input_dim = 0;
    std::vector<Index> hidden_dims;
    std::uint64_t net_seed = 0;
    // Absent until the first task arrives; the head is sized by that task.
    std::optional<Network> net;
    std::vector<TaskAnchor> anchors;  // one per completed task
    std::vector<MetricsRecord> metrics;

    int seen_classes() const {
        return net ? static_cast<int>(net->shape.output_dim) : 0;
    }
    int completed_tasks() const { return static_cast<int>(anchors.size()); }
};

RunState make_run_state(Index input_dim, std::vector<Index> hidden_dims,
                        std::uint64_t net_seed);

/// Trains one task in stream order:
///   - re-embeds existing anchors into the expanded parameter layout and
///     grows the head by the task's class count (the first task builds
///     the network, head included);
///   - for each epoch and batch, steps on the batch cross-entropy
///     gradient plus eps times the summed anchor penalty gradients.  NGD
///     preconditions with the previous task's anchored Fisher; on the
///     first task it falls back to plain SGD;
///   - appends a TaskAnchor (theta*, Fisher over this task's train set,
///     capped at fisher_max_samples) and a metrics record holding the
///     task's wall-clock training seconds.
///
/// Throws ProtocolError if the task is out of order.
void train_task(RunState& state, const Task& task, const OptimizerConfig& opt,
                RegStrength eps, int epochs, int batch_size,
                Index fisher_max_samples = 1000);

/// Accuracy on each trained task's test set, argmax over all seen-class
/// logits.  Requires at least one trained task.
std::vector<Scalar> evaluate(const RunState& state, const TaskStream& stream);

/// Orchestration bundle for a full run over a stream.
struct RunPlan {
    OptimizerConfig opt;
    RegStrength eps;
    int epochs = 50;
    int batch_size = 32;
    Index fisher_max_samples = 1000;
    std::string run_id;
    std::map<std::string, std::string> config_snapshot;
};

/// train_task + evaluate over every task in the stream, completing each
/// metrics record with accuracies, eval seconds, run id, and config.
void run_stream(RunState& state, const TaskStream& stream, const RunPlan& plan);

}  // namespace ngcl
