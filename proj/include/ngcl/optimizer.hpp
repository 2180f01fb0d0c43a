#pragma once

// Interchangeable parameter-update rules: plain SGD and natural gradient
// descent through the damped inverse of the diagonal Fisher.

#include <string>

#include "ngcl/fisher.hpp"
#include "ngcl/types.hpp"

namespace ngcl {

enum class OptimizerKind { Sgd, Ngd };

std::string to_string(OptimizerKind kind);
OptimizerKind optimizer_kind_from_string(const std::string& name);

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::Sgd;
    Scalar eta = 0.05;      // learning rate, > 0
    Scalar damping = 1e-4;  // delta added to each Fisher entry before inversion
};

/// theta_i - eta * g_i.
Vector sgd_step(const ConstVectorRef& theta, const ConstVectorRef& grad,
                Scalar eta);

/// Coordinate-wise g_i / (I_ii + damping).  Throws SingularCurvatureError
/// if any damped entry is <= 0; entries are never clamped.
Vector natural_gradient(const ConstVectorRef& grad,
                        const FisherDiagonal& fisher, Scalar damping);

/// theta_i - eta * g_i / (I_ii + damping), evaluated as
/// sgd_step(theta, natural_gradient(grad, fisher, damping), eta), so the
/// unit-Fisher zero-damping case reproduces sgd_step bit for bit.
Vector ngd_step(const ConstVectorRef& theta, const ConstVectorRef& grad,
                const FisherDiagonal& fisher, Scalar eta, Scalar damping);

}  // namespace ngcl
