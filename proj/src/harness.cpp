#include "ngcl/harness.hpp"

#include <chrono>
#include <string>

namespace ngcl {

namespace {

using Clock = std::chrono::steady_clock;

Scalar seconds_since(Clock::time_point start) {
    return std::chrono::duration<Scalar>(Clock::now() - start).count();
}

/// Embeds a flat vector laid out for `reference`'s shape into the layout
/// obtained by growing the head by s_new rows; the newborn slots are zero.
Vector embed_into_expanded(const Network& reference, const ConstVectorRef& values,
                           Index s_new) {
    return flatten_params(expand_head(unflatten_params(reference, values), s_new));
}

}  // namespace

RunState make_run_state(Index input_dim, std::vector<Index> hidden_dims,
                        std::uint64_t net_seed) {
    RunState state;
    state.input_dim = input_dim;
    state.hidden_dims = std::move(hidden_dims);
    state.net_seed = net_seed;
    return state;
}

void train_task(RunState& state, const Task& task, const OptimizerConfig& opt,
                RegStrength eps, int epochs, int batch_size,
                Index fisher_max_samples) {
    if (task.task_index != state.completed_tasks()) {
        throw ProtocolError("train_task: task " +
                            std::to_string(task.task_index) +
                            " arrived after " +
                            std::to_string(state.completed_tasks()) +
                            " completed tasks");
    }
    if (epochs < 1 || batch_size < 1) {
        throw ConfigError("train_task: epochs and batch-size must be >= 1");
    }
    const auto started = Clock::now();

    const Index s_new = static_cast<Index>(task.class_ids.size());
    if (!state.net) {
        state.net = make_network(
            NetworkShape{state.input_dim, state.hidden_dims, s_new},
            state.net_seed);
    } else {
        for (TaskAnchor& anchor : state.anchors) {
            anchor.theta_star = embed_into_expanded(*state.net, anchor.theta_star, s_new);
            anchor.fisher.values =
                embed_into_expanded(*state.net, anchor.fisher.values, s_new);
        }
        state.net = expand_head(*state.net, s_new);
    }
    Network& net = *state.net;

    // The preconditioner is frozen at the most recent task boundary; on
    // the first task no Fisher exists and NGD degenerates to plain SGD.
    const FisherDiagonal* precondition = nullptr;
    if (opt.kind == OptimizerKind::Ngd && !state.anchors.empty()) {
        precondition = &state.anchors.back().fisher;
    }
    const bool regularize = eps.epsilon > 0.0 && !state.anchors.empty();

    const auto& train = task.train_set;
    for (int epoch = 0; epoch < epochs; ++epoch) {
        for (std::size_t start = 0; start < train.size();
             start += static_cast<std::size_t>(batch_size)) {
            const std::size_t len = std::min<std::size_t>(
                static_cast<std::size_t>(batch_size), train.size() - start);
            BatchResult batch = batch_backward(
                net, std::span<const LabeledExample>(train.data() + start, len));

            Vector theta = flatten_params(net);
            Vector grad = std::move(batch.gradient);
            if (regularize) {
                for (const TaskAnchor& anchor : state.anchors) {
                    add_penalty_gradient(grad, theta, anchor, eps.epsilon);
                }
            }
            Vector next = precondition
                              ? ngd_step(theta, grad, *precondition, opt.eta,
                                         opt.damping)
                              : sgd_step(theta, grad, opt.eta);
            net = unflatten_params(net, next);
        }
    }

    TaskAnchor anchor;
    anchor.theta_star = flatten_params(net);
    anchor.fisher = estimate_diag_fisher(net, task.train_set, fisher_max_samples);
    anchor.task_index = task.task_index;
    state.anchors.push_back(std::move(anchor));

    MetricsRecord record;
    record.optimizer = opt.kind;
    record.task_index = task.task_index;
    record.train_seconds = seconds_since(started);
    state.metrics.push_back(std::move(record));
}

std::vector<Scalar> evaluate(const RunState& state, const TaskStream& stream) {
    const int trained = state.completed_tasks();
    if (trained < 1 || !state.net) {
        throw ProtocolError("evaluate: no task has been trained");
    }
    if (trained > static_cast<int>(stream.tasks.size())) {
        throw ProtocolError("evaluate: stream has fewer tasks than were trained");
    }
    std::vector<Scalar> accuracies;
    accuracies.reserve(static_cast<std::size_t>(trained));
    for (int j = 0; j < trained; ++j) {
        const Task& task = stream.tasks[static_cast<std::size_t>(j)];
        std::size_t correct = 0;
        for (const LabeledExample& example : task.test_set) {
            if (predict(*state.net, example.features) == example.label) {
                ++correct;
            }
        }
        accuracies.push_back(task.test_set.empty()
                                 ? 0.0
                                 : static_cast<Scalar>(correct) /
                                       static_cast<Scalar>(task.test_set.size()));
    }
    return accuracies;
}

void run_stream(RunState& state, const TaskStream& stream, const RunPlan& plan) {
    for (const Task& task : stream.tasks) {
        train_task(state, task, plan.opt, plan.eps, plan.epochs,
                   plan.batch_size, plan.fisher_max_samples);

        const auto eval_started = Clock::now();
        std::vector<Scalar> accuracies = evaluate(state, stream);
        MetricsRecord& record = state.metrics.back();
        record.eval_seconds = seconds_since(eval_started);
        record.per_task_accuracy = std::move(accuracies);
        record.run_id = plan.run_id;
        record.config_snapshot = plan.config_snapshot;
    }
}

}  // namespace ngcl
