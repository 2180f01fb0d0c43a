#include "ngcl/fisher.hpp"

#include <algorithm>

#include "ngcl/errors.hpp"
#include "ngcl/rng.hpp"

namespace ngcl {

namespace {

int sample_label(const Vector& probabilities, SplitMix64& rng) {
    const double u = rng.next_double();
    double cumulative = 0.0;
    for (Index k = 0; k < probabilities.size(); ++k) {
        cumulative += probabilities[k];
        if (u < cumulative) return static_cast<int>(k);
    }
    return static_cast<int>(probabilities.size() - 1);
}

}  // namespace

FisherDiagonal estimate_diag_fisher(const Network& net,
                                    std::span<const LabeledExample> data,
                                    Index max_samples, FisherMode mode,
                                    std::uint64_t sample_seed) {
    if (data.empty()) {
        throw EstimationError("estimate_diag_fisher: empty data sequence");
    }
    if (max_samples < 1) {
        throw EstimationError("estimate_diag_fisher: max_samples must be >= 1");
    }
    const Index m = std::min<Index>(max_samples, static_cast<Index>(data.size()));

    SplitMix64 rng(sample_seed);
    Vector acc = Vector::Zero(parameter_count(net));
    for (Index i = 0; i < m; ++i) {
        LabeledExample example = data[static_cast<std::size_t>(i)];
        if (mode == FisherMode::ModelSampled) {
            example.label = sample_label(softmax(forward(net, example.features)), rng);
        }
        // d log p / d theta = -d loss / d theta; the sign drops in the square.
        const Vector g = backward(net, example);
        acc.array() += g.array().square();
    }
    acc /= static_cast<Scalar>(m);
    return FisherDiagonal{std::move(acc), m};
}

Vector mean_of_squares(std::span<const Vector> grads) {
    if (grads.empty()) {
        throw EstimationError("mean_of_squares: empty gradient sequence");
    }
    Vector acc = Vector::Zero(grads.front().size());
    for (const Vector& g : grads) {
        if (g.size() != acc.size()) {
            throw ShapeError("mean_of_squares: inconsistent gradient lengths");
        }
        acc.array() += g.array().square();
    }
    return acc / static_cast<Scalar>(grads.size());
}

}  // namespace ngcl
