#include "ngcl/stream.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ngcl/errors.hpp"
#include "ngcl/rng.hpp"

namespace ngcl {

TaskStream build_task_stream(const Dataset& dataset, int classes_per_task,
                             std::uint64_t seed,
                             std::optional<Scalar> imbalance_ratio) {
    if (dataset.num_classes < 1) {
        throw ConfigError("build_task_stream: dataset has no classes");
    }
    if (classes_per_task < 1) {
        throw ConfigError("build_task_stream: classes-per-task must be >= 1");
    }
    if (classes_per_task > dataset.num_classes) {
        throw ConfigError("build_task_stream: classes-per-task " +
                          std::to_string(classes_per_task) + " exceeds the " +
                          std::to_string(dataset.num_classes) +
                          " classes in the dataset");
    }
    if (imbalance_ratio && !(*imbalance_ratio > 0.0)) {
        throw ConfigError("build_task_stream: imbalance ratio must be > 0");
    }

    SplitMix64 rng(seed);
    std::vector<int> order(static_cast<std::size_t>(dataset.num_classes));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    const TrainTestSplit split = split_train_test(dataset);
    std::vector<std::vector<const LabeledExample*>> train_by_class(order.size()),
        test_by_class(order.size());
    for (const LabeledExample& e : split.train.examples) {
        train_by_class[static_cast<std::size_t>(e.label)].push_back(&e);
    }
    for (const LabeledExample& e : split.test.examples) {
        test_by_class[static_cast<std::size_t>(e.label)].push_back(&e);
    }

    TaskStream stream;
    stream.total_classes = dataset.num_classes;
    const int num_tasks =
        (dataset.num_classes + classes_per_task - 1) / classes_per_task;
    stream.tasks.reserve(static_cast<std::size_t>(num_tasks));

    int next_global = 0;
    for (int t = 0; t < num_tasks; ++t) {
        Task task;
        task.task_index = t;
        const int begin = t * classes_per_task;
        const int end =
            std::min(dataset.num_classes, begin + classes_per_task);
        const int k = end - begin;

        for (int j = 0; j < k; ++j) {
            const int source = order[static_cast<std::size_t>(begin + j)];
            const int global = next_global++;
            task.source_class_ids.push_back(source);
            task.class_ids.push_back(global);

            const auto& train = train_by_class[static_cast<std::size_t>(source)];
            std::size_t keep = train.size();
            if (imbalance_ratio && k > 1 && !train.empty()) {
                // Geometric keep fractions across the task's classes,
                // normalized so the largest-fraction class keeps everything.
                const Scalar rho = *imbalance_ratio;
                const Scalar factor =
                    std::pow(rho, static_cast<Scalar>(j) / static_cast<Scalar>(k - 1));
                const Scalar fraction = factor / std::max<Scalar>(1.0, rho);
                keep = std::min<std::size_t>(
                    train.size(),
                    std::max<std::size_t>(
                        1, static_cast<std::size_t>(std::llround(
                               fraction * static_cast<Scalar>(train.size())))));
            }
            for (std::size_t i = 0; i < keep; ++i) {
                task.train_set.push_back(LabeledExample{train[i]->features, global});
            }
            for (const LabeledExample* e :
                 test_by_class[static_cast<std::size_t>(source)]) {
                task.test_set.push_back(LabeledExample{e->features, global});
            }
        }
        rng.shuffle(task.train_set);
        stream.tasks.push_back(std::move(task));
    }
    return stream;
}

}  // namespace ngcl
