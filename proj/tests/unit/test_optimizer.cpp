#include <doctest.h>

#include "ngcl/optimizer.hpp"
#include "ngcl/rng.hpp"

using namespace ngcl;

namespace {

Vector vec(std::initializer_list<Scalar> values) {
    Vector v(static_cast<Index>(values.size()));
    Index i = 0;
    for (Scalar x : values) v[i++] = x;
    return v;
}

FisherDiagonal fisher_of(Vector values) {
    return FisherDiagonal{std::move(values), 1};
}

}  // namespace

TEST_CASE("sgd_step: zero gradient leaves theta unchanged") {
    const Vector theta = vec({1.0, -2.0, 0.5});
    CHECK(sgd_step(theta, Vector::Zero(3), 0.1) == theta);
}

TEST_CASE("sgd_step: one-step arithmetic") {
    const Vector next = sgd_step(vec({1.0}), vec({2.0}), 0.1);
    CHECK(next[0] == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("sgd_step: two half-steps equal one full step on a fixed gradient") {
    // Dyadic values keep the identity exact.
    const Vector theta = vec({1.0, -0.5});
    const Vector grad = vec({2.0, 4.0});
    const Vector full = sgd_step(theta, grad, 0.5);
    const Vector halves = sgd_step(sgd_step(theta, grad, 0.25), grad, 0.25);
    CHECK(full == halves);

    SplitMix64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        Vector t(4), g(4);
        for (Index i = 0; i < 4; ++i) {
            t[i] = rng.uniform(-1.0, 1.0);
            g[i] = rng.uniform(-1.0, 1.0);
        }
        const Scalar eta = rng.uniform(0.01, 0.5);
        const Vector one = sgd_step(t, g, eta);
        const Vector two = sgd_step(sgd_step(t, g, eta / 2.0), g, eta / 2.0);
        for (Index i = 0; i < 4; ++i) {
            CHECK(two[i] == doctest::Approx(one[i]).epsilon(1e-14));
        }
    }
}

TEST_CASE("sgd_step: validates lengths and eta") {
    CHECK_THROWS_AS(sgd_step(vec({1.0, 2.0}), vec({1.0}), 0.1), ShapeError);
    CHECK_THROWS_AS(sgd_step(vec({1.0}), vec({1.0}), 0.0), ConfigError);
}

TEST_CASE("natural_gradient: unit Fisher with zero damping is the identity") {
    const Vector grad = vec({0.3, -0.7, 2.0});
    const Vector ng = natural_gradient(grad, fisher_of(Vector::Ones(3)), 0.0);
    CHECK(ng == grad);
}

TEST_CASE("natural_gradient: per-coordinate division") {
    // grad [2, 3], fisher [4, 0], damping 1 -> [0.4, 3.0].
    const Vector ng =
        natural_gradient(vec({2.0, 3.0}), fisher_of(vec({4.0, 0.0})), 1.0);
    CHECK(ng[0] == 0.4);
    CHECK(ng[1] == 3.0);
}

TEST_CASE("natural_gradient: doubling fisher and damping halves the output") {
    SplitMix64 rng(52);
    Vector grad(6), fisher(6);
    for (Index i = 0; i < 6; ++i) {
        grad[i] = rng.uniform(-3.0, 3.0);
        fisher[i] = rng.uniform(0.0, 2.0);
    }
    const Scalar damping = 0.25;
    const Vector base = natural_gradient(grad, fisher_of(fisher), damping);
    const Vector halved =
        natural_gradient(grad, fisher_of(2.0 * fisher), 2.0 * damping);
    CHECK(halved == 0.5 * base);
}

TEST_CASE("natural_gradient: singular curvature is an error, never a clamp") {
    const Vector grad = vec({1.0});
    CHECK_THROWS_AS(natural_gradient(grad, fisher_of(vec({0.0})), 0.0),
                    SingularCurvatureError);
    CHECK_THROWS_AS(natural_gradient(grad, fisher_of(vec({-1.0})), 0.5),
                    SingularCurvatureError);
    CHECK_NOTHROW(natural_gradient(grad, fisher_of(vec({0.0})), 1e-12));
}

TEST_CASE("ngd_step: unit Fisher with zero damping reproduces sgd_step bit-exactly") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        Vector theta(8), grad(8);
        for (Index i = 0; i < 8; ++i) {
            theta[i] = rng.uniform(-2.0, 2.0);
            grad[i] = rng.uniform(-2.0, 2.0);
        }
        const Scalar eta = rng.uniform(0.001, 1.0);
        const Vector sgd = sgd_step(theta, grad, eta);
        const Vector ngd = ngd_step(theta, grad, fisher_of(Vector::Ones(8)), eta, 0.0);
        CHECK(sgd == ngd);
    }
}

TEST_CASE("ngd_step: hand value") {
    // theta [1], grad [2], fisher [4], damping 0, eta 0.1 -> 1 - 0.1*2/4.
    const Vector next =
        ngd_step(vec({1.0}), vec({2.0}), fisher_of(vec({4.0})), 0.1, 0.0);
    CHECK(next[0] == doctest::Approx(0.95).epsilon(1e-15));
}

TEST_CASE("ngd_step: zero gradient leaves theta unchanged") {
    const Vector theta = vec({3.0, -1.0});
    const Vector next =
        ngd_step(theta, Vector::Zero(2), fisher_of(vec({0.5, 7.0})), 0.3, 1e-4);
    CHECK(next == theta);
}

TEST_CASE("ngd_step: one eta = 1 step on a quadratic with true curvature hits the optimum") {
    // Loss (1/2) sum c_i theta_i^2 has gradient c_i theta_i; with the
    // Fisher set to the curvature, one unit step lands at zero.
    const Vector curvature = vec({100.0, 1.0, 7.5});
    const Vector theta = vec({0.8, -1.4, 0.3});
    const Vector grad = curvature.cwiseProduct(theta);
    const Vector next = ngd_step(theta, grad, fisher_of(curvature), 1.0, 0.0);
    CHECK(next.norm() < 1e-12);
}

TEST_CASE("optimizer kind strings") {
    CHECK(to_string(OptimizerKind::Sgd) == "sgd");
    CHECK(to_string(OptimizerKind::Ngd) == "ngd");
    CHECK(optimizer_kind_from_string("sgd") == OptimizerKind::Sgd);
    CHECK(optimizer_kind_from_string("ngd") == OptimizerKind::Ngd);
    CHECK_THROWS_AS(optimizer_kind_from_string("adam"), ConfigError);
}
