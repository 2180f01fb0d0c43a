#pragma once

// Central finite differences and the per-coordinate relative comparison
// used by the gradient oracles.

#include <cmath>
#include <functional>

#include "ngcl/types.hpp"

namespace ngcl::testing {

/// Central-difference gradient of f at x with step h.
inline Vector fd_gradient(const std::function<Scalar(const Vector&)>& f,
                          const Vector& x, Scalar h) {
    Vector g(x.size());
    Vector probe = x;
    for (Index i = 0; i < x.size(); ++i) {
        const Scalar saved = probe[i];
        probe[i] = saved + h;
        const Scalar up = f(probe);
        probe[i] = saved - h;
        const Scalar down = f(probe);
        probe[i] = saved;
        g[i] = (up - down) / (2.0 * h);
    }
    return g;
}

/// Relative agreement per coordinate.  Coordinates where both magnitudes
/// are below `floor` are flat directions (dead units, saturated softmax);
/// a relative test is meaningless against finite-difference roundoff
/// there, so they pass on magnitude alone.
inline bool gradients_agree(const Vector& analytic, const Vector& numeric,
                            Scalar rel_tol, Scalar floor = 1e-8) {
    for (Index i = 0; i < analytic.size(); ++i) {
        const Scalar scale = std::max(std::abs(analytic[i]), std::abs(numeric[i]));
        if (scale < floor) continue;
        if (std::abs(analytic[i] - numeric[i]) > rel_tol * scale) return false;
    }
    return true;
}

/// Largest per-coordinate relative error over the non-flat coordinates.
inline Scalar max_relative_error(const Vector& analytic, const Vector& numeric,
                                 Scalar floor = 1e-8) {
    Scalar worst = 0.0;
    for (Index i = 0; i < analytic.size(); ++i) {
        const Scalar scale = std::max(std::abs(analytic[i]), std::abs(numeric[i]));
        if (scale < floor) continue;
        worst = std::max(worst, std::abs(analytic[i] - numeric[i]) / scale);
    }
    return worst;
}

}  // namespace ngcl::testing
