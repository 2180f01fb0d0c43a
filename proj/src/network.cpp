#include "ngcl/network.hpp"

#include <cmath>
#include <string>

#include "ngcl/rng.hpp"

namespace ngcl {

namespace {

void check_shape(const NetworkShape& shape) {
    if (shape.input_dim < 1) {
        throw ShapeError("network shape: input_dim must be >= 1");
    }
    for (Index h : shape.hidden_dims) {
        if (h < 1) throw ShapeError("network shape: hidden dims must be >= 1");
    }
    if (shape.output_dim < 1) {
        throw ShapeError("network shape: output_dim must be >= 1");
    }
}

void check_features(const Network& net, const ConstVectorRef& features) {
    if (features.size() != net.shape.input_dim) {
        throw ShapeError("forward: feature length " +
                         std::to_string(features.size()) +
                         " does not match input_dim " +
                         std::to_string(net.shape.input_dim));
    }
}

Vector apply_activation(const Vector& z, Activation act) {
    return act == Activation::Relu ? z.cwiseMax(0.0).eval() : z;
}

}  // namespace

std::vector<Index> layer_widths(const NetworkShape& shape) {
    std::vector<Index> widths;
    widths.reserve(shape.hidden_dims.size() + 2);
    widths.push_back(shape.input_dim);
    widths.insert(widths.end(), shape.hidden_dims.begin(),
                  shape.hidden_dims.end());
    widths.push_back(shape.output_dim);
    return widths;
}

Index parameter_count(const NetworkShape& shape) {
    const auto widths = layer_widths(shape);
    Index n = 0;
    for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
        n += widths[l] * widths[l + 1] + widths[l + 1];
    }
    return n;
}

Index parameter_count(const Network& net) {
    return parameter_count(net.shape);
}

Network make_network(const NetworkShape& shape, std::uint64_t seed,
                     Activation activation) {
    check_shape(shape);
    Network net{shape, {}, activation};
    const auto widths = layer_widths(shape);
    SplitMix64 rng(seed);
    for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
        const Index fan_in = widths[l];
        const Index fan_out = widths[l + 1];
        const Scalar limit =
            std::sqrt(6.0 / static_cast<Scalar>(fan_in + fan_out));
        Layer layer{Matrix(fan_out, fan_in), Vector::Zero(fan_out)};
        for (Index i = 0; i < fan_out; ++i) {      // row-major draw order
            for (Index j = 0; j < fan_in; ++j) {
                layer.weights(i, j) = rng.uniform(-limit, limit);
            }
        }
        net.layers.push_back(std::move(layer));
    }
    return net;
}

Network zero_network(const NetworkShape& shape, Activation activation) {
    check_shape(shape);
    Network net{shape, {}, activation};
    const auto widths = layer_widths(shape);
    for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
        net.layers.push_back(Layer{Matrix::Zero(widths[l + 1], widths[l]),
                                   Vector::Zero(widths[l + 1])});
    }
    return net;
}

Vector forward(const Network& net, const ConstVectorRef& features) {
    check_features(net, features);
    Vector a = features;
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        Vector z = net.layers[l].weights * a + net.layers[l].bias;
        const bool last = (l + 1 == net.layers.size());
        a = last ? std::move(z) : apply_activation(z, net.activation);
    }
    return a;
}

Vector softmax(const ConstVectorRef& logits) {
    const Scalar m = logits.maxCoeff();
    Vector e = (logits.array() - m).exp();
    return e / e.sum();
}

Scalar softmax_cross_entropy(const ConstVectorRef& logits, int label) {
    if (label < 0 || label >= logits.size()) {
        throw LabelError("softmax_cross_entropy: label " +
                         std::to_string(label) + " out of range [0, " +
                         std::to_string(logits.size()) + ")");
    }
    const Scalar m = logits.maxCoeff();
    const Scalar lse = std::log((logits.array() - m).exp().sum());
    return lse - (logits[label] - m);
}

namespace {

// Backprop for one example; accumulates the flat gradient into `grad`
// (which must be zero-length or parameter_count long) and returns the loss.
Scalar backprop_accumulate(const Network& net, const LabeledExample& example,
                           Vector& grad) {
    check_features(net, example.features);
    const std::size_t L = net.layers.size();

    // Forward, keeping pre-activations and activations.
    std::vector<Vector> zs(L), as(L + 1);
    as[0] = example.features;
    for (std::size_t l = 0; l < L; ++l) {
        zs[l] = net.layers[l].weights * as[l] + net.layers[l].bias;
        as[l + 1] = (l + 1 == L) ? zs[l] : apply_activation(zs[l], net.activation);
    }
    const Vector& logits = as[L];
    const Scalar loss = softmax_cross_entropy(logits, example.label);

    // d loss / d logits = softmax - onehot.
    Vector delta = softmax(logits);
    delta[example.label] -= 1.0;

    if (grad.size() == 0) grad = Vector::Zero(parameter_count(net));

    // Walk the layers backwards, writing each layer's slice directly.
    Index offset = grad.size();
    for (std::size_t l = L; l-- > 0;) {
        const Matrix& w = net.layers[l].weights;
        offset -= w.size() + w.rows();
        // weights row-major, then bias
        grad.segment(offset, w.size()).reshaped<Eigen::RowMajor>(w.rows(), w.cols()) +=
            delta * as[l].transpose();
        grad.segment(offset + w.size(), w.rows()) += delta;
        if (l > 0) {
            Vector da = w.transpose() * delta;
            if (net.activation == Activation::Relu) {
                delta = (zs[l - 1].array() > 0.0).select(da, 0.0);
            } else {
                delta = std::move(da);
            }
        }
    }
    return loss;
}

}  // namespace

Vector backward(const Network& net, const LabeledExample& example) {
    Vector grad;
    backprop_accumulate(net, example, grad);
    return grad;
}

BatchResult batch_backward(const Network& net,
                           std::span<const LabeledExample> batch) {
    if (batch.empty()) {
        throw ShapeError("batch_backward: empty batch");
    }
    BatchResult result;
    result.gradient = Vector::Zero(parameter_count(net));
    for (const LabeledExample& example : batch) {
        result.loss += backprop_accumulate(net, example, result.gradient);
    }
    const Scalar inv = 1.0 / static_cast<Scalar>(batch.size());
    result.loss *= inv;
    result.gradient *= inv;
    return result;
}

Network expand_head(const Network& net, Index s_new) {
    if (s_new < 1) {
        throw ShapeError("expand_head: s_new must be >= 1");
    }
    Network out = net;
    Layer& head = out.layers.back();
    const Index r = head.weights.rows();
    const Index fan_in = head.weights.cols();

    Matrix weights = Matrix::Zero(r + s_new, fan_in);
    weights.topRows(r) = head.weights;
    Vector bias = Vector::Zero(r + s_new);
    bias.head(r) = head.bias;

    head.weights = std::move(weights);
    head.bias = std::move(bias);
    out.shape.output_dim = r + s_new;
    return out;
}

Vector flatten_params(const Network& net) {
    Vector out(parameter_count(net));
    Index offset = 0;
    for (const Layer& layer : net.layers) {
        out.segment(offset, layer.weights.size()) =
            layer.weights.reshaped<Eigen::RowMajor>();
        offset += layer.weights.size();
        out.segment(offset, layer.bias.size()) = layer.bias;
        offset += layer.bias.size();
    }
    return out;
}

Network unflatten_params(const Network& reference, const ConstVectorRef& values) {
    if (values.size() != parameter_count(reference)) {
        throw ShapeError("unflatten_params: expected " +
                         std::to_string(parameter_count(reference)) +
                         " values, got " + std::to_string(values.size()));
    }
    Network out = reference;
    Index offset = 0;
    for (Layer& layer : out.layers) {
        layer.weights.reshaped<Eigen::RowMajor>() =
            values.segment(offset, layer.weights.size());
        offset += layer.weights.size();
        layer.bias = values.segment(offset, layer.bias.size());
        offset += layer.bias.size();
    }
    return out;
}

int predict(const Network& net, const ConstVectorRef& features) {
    const Vector logits = forward(net, features);
    int best = 0;
    for (Index i = 1; i < logits.size(); ++i) {
        if (logits[i] > logits[best]) best = static_cast<int>(i);
    }
    return best;
}

}  // namespace ngcl
