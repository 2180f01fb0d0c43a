#pragma once

// Independent straight-line re-implementations used as oracles.  These
// deliberately avoid Eigen expressions and the library's own code paths:
// plain index loops over the raw coefficients only.

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "ngcl/network.hpp"

namespace ngcl::testing {

/// Naive affine-chain forward pass: nested scalar loops, ReLU on hidden
/// layers, linear output.
inline std::vector<Scalar> naive_forward(const Network& net,
                                         const Vector& features) {
    std::vector<Scalar> a(features.data(), features.data() + features.size());
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        const Matrix& w = net.layers[l].weights;
        std::vector<Scalar> next(static_cast<std::size_t>(w.rows()));
        for (Index i = 0; i < w.rows(); ++i) {
            Scalar sum = net.layers[l].bias[i];
            for (Index j = 0; j < w.cols(); ++j) {
                sum += w(i, j) * a[static_cast<std::size_t>(j)];
            }
            const bool last = (l + 1 == net.layers.size());
            next[static_cast<std::size_t>(i)] =
                (!last && net.activation == Activation::Relu && sum < 0.0) ? 0.0
                                                                           : sum;
        }
        a = std::move(next);
    }
    return a;
}

/// Smallest |pre-activation| over all hidden units for this input.
/// Central differences are only a valid gradient oracle when no ReLU
/// argument sits within the probe's reach of the kink; callers resample
/// inputs below a safety margin.
inline Scalar min_hidden_preactivation_magnitude(const Network& net,
                                                 const Vector& features) {
    Scalar smallest = std::numeric_limits<Scalar>::infinity();
    std::vector<Scalar> a(features.data(), features.data() + features.size());
    for (std::size_t l = 0; l + 1 < net.layers.size(); ++l) {
        const Matrix& w = net.layers[l].weights;
        std::vector<Scalar> next(static_cast<std::size_t>(w.rows()));
        for (Index i = 0; i < w.rows(); ++i) {
            Scalar z = net.layers[l].bias[i];
            for (Index j = 0; j < w.cols(); ++j) {
                z += w(i, j) * a[static_cast<std::size_t>(j)];
            }
            smallest = std::min(smallest, std::abs(z));
            next[static_cast<std::size_t>(i)] =
                (net.activation == Activation::Relu && z < 0.0) ? 0.0 : z;
        }
        a = std::move(next);
    }
    return smallest;
}

/// Naive diagonal-Fisher loop: per example, per coordinate, square and
/// accumulate in plain doubles, then divide by the sample count.
inline Vector naive_diag_fisher(const Network& net,
                                std::span<const LabeledExample> data,
                                Index max_samples) {
    const Index n = parameter_count(net);
    const Index m = std::min<Index>(max_samples, static_cast<Index>(data.size()));
    std::vector<Scalar> acc(static_cast<std::size_t>(n), 0.0);
    for (Index e = 0; e < m; ++e) {
        const Vector g = backward(net, data[static_cast<std::size_t>(e)]);
        for (Index i = 0; i < n; ++i) {
            acc[static_cast<std::size_t>(i)] += g[i] * g[i];
        }
    }
    Vector out(n);
    for (Index i = 0; i < n; ++i) {
        out[i] = acc[static_cast<std::size_t>(i)] / static_cast<Scalar>(m);
    }
    return out;
}

}  // namespace ngcl::testing
