#pragma once

// Disjoint-class task streams: classes shuffled by seed, chunked into
// equal tasks with the remainder in the last one.

#include <cstdint>
#include <optional>
#include <vector>

#include "ngcl/dataset.hpp"

namespace ngcl {

struct Task {
    int task_index = 0;
    // Global class ids as the network sees them: the k-th class to appear
    // anywhere in the stream has global id k, so each task's ids form a
    // contiguous ascending block.
    std::vector<int> class_ids;
    // Dataset class ids in shuffled order; source_class_ids[i] was
    // remapped to class_ids[i].
    std::vector<int> source_class_ids;
    std::vector<LabeledExample> train_set;  // labels carry global ids
    std::vector<LabeledExample> test_set;
};

struct TaskStream {
    std::vector<Task> tasks;
    int total_classes = 0;
};

/// Shuffles the dataset's classes with SplitMix64(seed), chunks them into
/// tasks of `classes_per_task` (last task holds the remainder), splits
/// each class 80/20 into train/test, and remaps labels to global ids.
/// Each task's train set is shuffled once so batches mix classes.
///
/// If `imbalance_ratio` rho is given, per-class train counts within each
/// task are scaled geometrically so the largest class keeps all its
/// examples and the class counts span a max:min ratio of rho (test sets
/// untouched).
TaskStream build_task_stream(const Dataset& dataset, int classes_per_task,
                             std::uint64_t seed,
                             std::optional<Scalar> imbalance_ratio = {});

}  // namespace ngcl
