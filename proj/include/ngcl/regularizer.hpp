#pragma once

// Importance-weighted quadratic pull toward per-task anchors and its
// analytic gradient.

#include <span>

#include "ngcl/fisher.hpp"
#include "ngcl/types.hpp"

namespace ngcl {

/// Frozen (theta*, Fisher) pair captured at the end of a task.  After a
/// head expansion the harness re-embeds anchors into the new parameter
/// layout; slots for parameters that did not exist when the anchor was
/// taken carry Fisher exactly 0.
struct TaskAnchor {
    Vector theta_star;
    FisherDiagonal fisher;
    int task_index = 0;
};

struct RegStrength {
    Scalar epsilon = 0.0;
};

/// sum_i I_ii (theta_i - theta*_i)^2 over the anchor's coordinates.
/// theta may be longer than the anchor; the tail holds parameters born
/// after the anchor was taken and contributes nothing.
Scalar penalty(const ConstVectorRef& theta, const TaskAnchor& anchor);

/// Coordinate i of the gradient is 2 I_ii (theta_i - theta*_i); zero
/// beyond the anchor's length.
Vector penalty_gradient(const ConstVectorRef& theta, const TaskAnchor& anchor);

/// grad += scale * d penalty(theta, anchor) / d theta, touching only the
/// anchor's coordinates.
void add_penalty_gradient(VectorRef grad, const ConstVectorRef& theta,
                          const TaskAnchor& anchor, Scalar scale);

/// original_loss + eps * sum over anchors of penalty(theta, anchor).
/// With eps == 0 or no anchors the original loss comes back bit-exact.
Scalar regularized_loss(Scalar original_loss, const ConstVectorRef& theta,
                        std::span<const TaskAnchor> anchors, RegStrength eps);

}  // namespace ngcl
