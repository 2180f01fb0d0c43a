#pragma once

// Dataset acquisition: seeded synthetic Gaussian blobs and the IDX
// binary image format (big-endian magic/dims header, then raw bytes).

#include <cstdint>
#include <string>
#include <vector>

#include "ngcl/network.hpp"
#include "ngcl/types.hpp"

namespace ngcl {

struct Dataset {
    std::vector<LabeledExample> examples;
    int num_classes = 0;
    Index feature_dim = 0;
    std::string name;
};

/// Class k's examples are drawn from an isotropic Gaussian with standard
/// deviation `spread` around a center sampled uniformly from [-1, 1]^dim.
/// One SplitMix64 stream seeded with `seed` drives everything, in this
/// order: all class centers (dim draws each), then class 0's examples,
/// class 1's examples, ...  Examples are stored class by class.
Dataset synth_blobs(int num_classes, int per_class, Index dim, Scalar spread,
                    std::uint64_t seed);

struct TrainTestSplit {
    Dataset train;
    Dataset test;
};

/// Disjoint per-class 80/20 split: within each class, the first
/// max(1, floor(4n/5)) examples (in dataset order) go to train, the rest
/// to test.
TrainTestSplit split_train_test(const Dataset& dataset);

/// Parses an IDX pair: images with magic 0x00000803 and dims
/// (count, rows, cols), labels with magic 0x00000801 and dim (count).
/// Pixel bytes are scaled to [0, 1]; images flatten row-major to
/// feature_dim = rows * cols.  num_classes = 1 + max label.
Dataset load_idx(const std::string& images_path,
                 const std::string& labels_path);

/// Writes the dataset back out as an IDX pair; pixels are recovered as
/// round(value * 255).  rows * cols must equal the feature dimension.
void write_idx(const Dataset& dataset, Index rows, Index cols,
               const std::string& images_path,
               const std::string& labels_path);

}  // namespace ngcl
