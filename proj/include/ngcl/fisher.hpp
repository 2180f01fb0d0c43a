#pragma once

// Diagonal Fisher information estimated from data: per-parameter
// importance scores I_ii, the mean of squared score-function entries.

#include <cstdint>
#include <span>

#include "ngcl/network.hpp"
#include "ngcl/types.hpp"

namespace ngcl {

struct FisherDiagonal {
    Vector values;          // I_ii >= 0, one per parameter
    Index sample_count = 0; // examples the estimate averaged over
};

/// Which labels enter the score function.  Empirical uses the observed
/// label of each example; ModelSampled draws the label from the model's
/// own predictive distribution.
enum class FisherMode { Empirical, ModelSampled };

/// I_ii = (1/m) sum over the first m = min(max_samples, |data|) examples
/// of (d log p(y|x;theta) / d theta_i)^2, where log p is minus the
/// softmax cross-entropy.  The per-example terms are accumulated in data
/// order, so the result is deterministic.  `sample_seed` only matters in
/// ModelSampled mode.
FisherDiagonal estimate_diag_fisher(const Network& net,
                                    std::span<const LabeledExample> data,
                                    Index max_samples,
                                    FisherMode mode = FisherMode::Empirical,
                                    std::uint64_t sample_seed = 0);

/// Order-fixed sequential mean of elementwise squares.  This is the
/// reduction estimate_diag_fisher performs, exposed so it can be driven
/// with synthetic gradients.
Vector mean_of_squares(std::span<const Vector> grads);

}  // namespace ngcl
