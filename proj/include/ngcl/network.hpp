#pragma once

// Dense feed-forward classifier with analytic softmax cross-entropy
// backpropagation and an output head that grows as new classes arrive.

#include <cstdint>
#include <span>
#include <vector>

#include "ngcl/errors.hpp"
#include "ngcl/types.hpp"

namespace ngcl {

/// Nonlinearity applied to hidden layers.  The output layer is always
/// linear and produces pre-softmax logits.
enum class Activation { Relu, Identity };

struct NetworkShape {
    Index input_dim = 0;
    std::vector<Index> hidden_dims;
    Index output_dim = 0;  // number of classes seen so far

    bool operator==(const NetworkShape&) const = default;
};

struct Layer {
    Matrix weights;  // (fan_out, fan_in)
    Vector bias;     // (fan_out)
};

struct Network {
    NetworkShape shape;
    std::vector<Layer> layers;
    Activation activation = Activation::Relu;
};

struct LabeledExample {
    Vector features;
    int label = 0;
};

/// Widths of the affine chain, input first: [input, hidden..., output].
std::vector<Index> layer_widths(const NetworkShape& shape);

/// Sum over layers of fan_in * fan_out + fan_out.
Index parameter_count(const NetworkShape& shape);
Index parameter_count(const Network& net);

/// Fresh network.  Weights of every layer are drawn uniformly from
/// +-sqrt(6 / (fan_in + fan_out)); biases start at zero.  A single
/// SplitMix64 stream seeded with `seed` supplies the weight draws in
/// canonical flattening order, so a seed fixes the network exactly.
Network make_network(const NetworkShape& shape, std::uint64_t seed,
                     Activation activation = Activation::Relu);

/// All-zero weights and biases.
Network zero_network(const NetworkShape& shape,
                     Activation activation = Activation::Relu);

/// Pre-softmax logits for one input.
Vector forward(const Network& net, const ConstVectorRef& features);

/// Stabilized softmax (max subtraction).
Vector softmax(const ConstVectorRef& logits);

/// -ln softmax(logits)[label], computed as
/// log(sum_j exp(l_j - max)) - (l_label - max).  Never negative.
Scalar softmax_cross_entropy(const ConstVectorRef& logits, int label);

/// d softmax_cross_entropy / d theta for one example, in canonical
/// flattening order.
Vector backward(const Network& net, const LabeledExample& example);

struct BatchResult {
    Scalar loss = 0.0;  // arithmetic mean of per-example losses
    Vector gradient;    // arithmetic mean of per-example gradients
};

/// Mean loss and mean gradient over a batch.
BatchResult batch_backward(const Network& net,
                           std::span<const LabeledExample> batch);

/// Output head grown by `s_new` rows.  Existing weights are preserved
/// bit for bit; the new rows and bias entries start at zero.
Network expand_head(const Network& net, Index s_new);

/// Canonical flattening order, stable across releases: layer 0 weights
/// read row-major, layer 0 bias, layer 1 weights, layer 1 bias, ...
Vector flatten_params(const Network& net);

/// Network of `reference`'s shape carrying `values`; inverse of
/// flatten_params.
Network unflatten_params(const Network& reference, const ConstVectorRef& values);

/// Argmax class over all logits; ties break toward the lowest index.
int predict(const Network& net, const ConstVectorRef& features);

}  // namespace ngcl
