#include "ngcl/regularizer.hpp"

#include <string>

#include "ngcl/errors.hpp"

namespace ngcl {

namespace {

void check_anchor(const ConstVectorRef& theta, const TaskAnchor& anchor) {
    if (anchor.theta_star.size() != anchor.fisher.values.size()) {
        throw ShapeError("anchor: theta_star and fisher lengths differ");
    }
    if (theta.size() < anchor.theta_star.size()) {
        throw ShapeError("penalty: theta has " + std::to_string(theta.size()) +
                         " coordinates but the anchor has " +
                         std::to_string(anchor.theta_star.size()));
    }
}

}  // namespace

Scalar penalty(const ConstVectorRef& theta, const TaskAnchor& anchor) {
    check_anchor(theta, anchor);
    const Index n = anchor.theta_star.size();
    return (anchor.fisher.values.array() *
            (theta.head(n) - anchor.theta_star).array().square())
        .sum();
}

Vector penalty_gradient(const ConstVectorRef& theta, const TaskAnchor& anchor) {
    Vector grad = Vector::Zero(theta.size());
    add_penalty_gradient(grad, theta, anchor, 1.0);
    return grad;
}

void add_penalty_gradient(VectorRef grad, const ConstVectorRef& theta,
                          const TaskAnchor& anchor, Scalar scale) {
    check_anchor(theta, anchor);
    if (grad.size() != theta.size()) {
        throw ShapeError("add_penalty_gradient: grad/theta length mismatch");
    }
    const Index n = anchor.theta_star.size();
    grad.head(n).array() += scale * 2.0 * anchor.fisher.values.array() *
                            (theta.head(n) - anchor.theta_star).array();
}

Scalar regularized_loss(Scalar original_loss, const ConstVectorRef& theta,
                        std::span<const TaskAnchor> anchors, RegStrength eps) {
    if (eps.epsilon == 0.0 || anchors.empty()) {
        return original_loss;
    }
    Scalar total = 0.0;
    for (const TaskAnchor& anchor : anchors) {
        total += penalty(theta, anchor);
    }
    return original_loss + eps.epsilon * total;
}

}  // namespace ngcl
