#include "ngcl/optimizer.hpp"

#include "ngcl/errors.hpp"

namespace ngcl {

std::string to_string(OptimizerKind kind) {
    return kind == OptimizerKind::Sgd ? "sgd" : "ngd";
}

OptimizerKind optimizer_kind_from_string(const std::string& name) {
    if (name == "sgd") return OptimizerKind::Sgd;
    if (name == "ngd") return OptimizerKind::Ngd;
    throw ConfigError("optimizer: expected 'sgd' or 'ngd', got '" + name + "'");
}

namespace {

void check_lengths(Index a, Index b, const char* what) {
    if (a != b) {
        throw ShapeError(std::string(what) + ": length mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

void check_eta(Scalar eta) {
    if (!(eta > 0.0)) {
        throw ConfigError("eta: learning rate must be > 0");
    }
}

}  // namespace

Vector sgd_step(const ConstVectorRef& theta, const ConstVectorRef& grad,
                Scalar eta) {
    check_lengths(theta.size(), grad.size(), "sgd_step");
    check_eta(eta);
    return theta - eta * grad;
}

Vector natural_gradient(const ConstVectorRef& grad,
                        const FisherDiagonal& fisher, Scalar damping) {
    check_lengths(grad.size(), fisher.values.size(), "natural_gradient");
    const Vector damped = fisher.values.array() + damping;
    if (!(damped.array() > 0.0).all()) {
        throw SingularCurvatureError(
            "natural_gradient: a damped Fisher entry is <= 0; the metric "
            "cannot be inverted");
    }
    return grad.cwiseQuotient(damped);
}

Vector ngd_step(const ConstVectorRef& theta, const ConstVectorRef& grad,
                const FisherDiagonal& fisher, Scalar eta, Scalar damping) {
    check_lengths(theta.size(), grad.size(), "ngd_step");
    return sgd_step(theta, natural_gradient(grad, fisher, damping), eta);
}

}  // namespace ngcl
